/**
 * Editable gradient palette for walk-score coloring. The viewer never
 * colors scores itself: edits are sent back with the same subnet request
 * and the service returns the recolored scene, so with unchanged seeds
 * and iterations the only thing that can differ is color.
 */

import type { PaletteWire } from './api.js';

export interface PaletteStop {
  position: number;
  color: [number, number, number, number];
}

export const DEFAULT_PALETTE: PaletteStop[] = [
  { position: 0.0, color: [0, 0, 1, 1] },
  { position: 0.5, color: [1, 1, 1, 1] },
  { position: 1.0, color: [1, 0, 0, 1] },
];

export function validatePalette(stops: PaletteStop[]): string | null {
  if (stops.length < 2) return 'palette needs at least 2 stops';
  for (let i = 1; i < stops.length; i++) {
    if (stops[i].position <= stops[i - 1].position) {
      return 'stop positions must strictly increase';
    }
  }
  if (stops[0].position !== 0 || stops[stops.length - 1].position !== 1) {
    return 'palette must start at 0 and end at 1';
  }
  for (const stop of stops) {
    if (stop.color.length !== 4 || stop.color.some((c) => c < 0 || c > 1)) {
      return 'colors must be RGBA in [0, 1]';
    }
  }
  return null;
}

export function toWire(stops: PaletteStop[]): PaletteWire {
  return stops.map((s) => [s.position, [...s.color] as [number, number, number, number]]);
}

export function hexToRgba(hex: string, alpha = 1): [number, number, number, number] {
  const value = hex.replace('#', '');
  return [
    parseInt(value.slice(0, 2), 16) / 255,
    parseInt(value.slice(2, 4), 16) / 255,
    parseInt(value.slice(4, 6), 16) / 255,
    alpha,
  ];
}

export function rgbaToHex(color: [number, number, number, number]): string {
  const channel = (c: number) =>
    Math.round(c * 255)
      .toString(16)
      .padStart(2, '0');
  return `#${channel(color[0])}${channel(color[1])}${channel(color[2])}`;
}
