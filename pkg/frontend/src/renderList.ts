/**
 * Pure scene-document -> draw-list step, kept free of three.js so the
 * mapping is testable without a GL context. One sphere per node, one
 * line segment per edge with endpoint positions already resolved.
 */

import type { Rgba, SceneDocument, Vec3 } from './sceneDoc.js';

export interface SphereSpec {
  id: number;
  label: string;
  position: Vec3;
  color: Rgba;
  radius: number;
  isSeed: boolean;
  isHighlighted: boolean;
}

export interface SegmentSpec {
  source: number;
  target: number;
  start: Vec3;
  end: Vec3;
  color: Rgba;
  width: number;
  isHighlighted: boolean;
}

export interface RenderList {
  spheres: SphereSpec[];
  segments: SegmentSpec[];
  centroid: Vec3;
}

export function buildRenderList(doc: SceneDocument): RenderList {
  const byId = new Map(doc.nodes.map((n) => [n.id, n]));
  const spheres: SphereSpec[] = doc.nodes.map((n) => ({
    id: n.id,
    label: n.label,
    position: n.position,
    color: n.color,
    radius: n.size,
    isSeed: n.is_seed,
    isHighlighted: n.is_highlighted,
  }));
  const segments: SegmentSpec[] = doc.edges.map((e) => ({
    source: e.source,
    target: e.target,
    start: byId.get(e.source)!.position,
    end: byId.get(e.target)!.position,
    color: e.color,
    width: e.width,
    isHighlighted: e.is_highlighted,
  }));
  const centroid: Vec3 = [0, 0, 0];
  if (spheres.length > 0) {
    for (const s of spheres) {
      centroid[0] += s.position[0];
      centroid[1] += s.position[1];
      centroid[2] += s.position[2];
    }
    centroid[0] /= spheres.length;
    centroid[1] /= spheres.length;
    centroid[2] /= spheres.length;
  }
  return { spheres, segments, centroid };
}
