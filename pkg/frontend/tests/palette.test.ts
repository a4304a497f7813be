import { describe, expect, it } from 'vitest';

import { DEFAULT_PALETTE, hexToRgba, rgbaToHex, toWire, validatePalette } from '../src/palette.js';

describe('palette model', () => {
  it('default palette is valid and matches the service default', () => {
    expect(validatePalette(DEFAULT_PALETTE)).toBeNull();
    expect(toWire(DEFAULT_PALETTE)).toEqual([
      [0, [0, 0, 1, 1]],
      [0.5, [1, 1, 1, 1]],
      [1, [1, 0, 0, 1]],
    ]);
  });

  it('rejects malformed palettes with a reason', () => {
    expect(validatePalette([{ position: 0, color: [0, 0, 1, 1] }])).toMatch(/at least 2/);
    expect(
      validatePalette([
        { position: 0, color: [0, 0, 1, 1] },
        { position: 0, color: [1, 0, 0, 1] },
      ]),
    ).toMatch(/strictly increase/);
    expect(
      validatePalette([
        { position: 0.2, color: [0, 0, 1, 1] },
        { position: 1, color: [1, 0, 0, 1] },
      ]),
    ).toMatch(/start at 0/);
    expect(
      validatePalette([
        { position: 0, color: [0, 0, 2, 1] },
        { position: 1, color: [1, 0, 0, 1] },
      ]),
    ).toMatch(/RGBA/);
  });

  it('hex conversions round-trip', () => {
    expect(hexToRgba('#ff0080')).toEqual([1, 0, 128 / 255, 1]);
    expect(rgbaToHex([1, 0, 128 / 255, 1])).toBe('#ff0080');
    expect(rgbaToHex(hexToRgba('#3fa2c4'))).toBe('#3fa2c4');
  });
});
