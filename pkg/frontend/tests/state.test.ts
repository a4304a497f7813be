import { readFileSync } from 'node:fs';
import { describe, expect, it } from 'vitest';

import { parseSceneDocument } from '../src/sceneDoc.js';
import { ViewerState } from '../src/state.js';

const gbm = parseSceneDocument(
  readFileSync(new URL('./fixtures/gbm.scene.json', import.meta.url), 'utf-8'),
);

describe('ViewerState', () => {
  it('mode toggling never touches the scene document', () => {
    const state = new ViewerState();
    state.loadScene(gbm);
    const before = JSON.stringify(state.scene);
    expect(state.toggleMode()).toBe('first_person');
    expect(state.toggleMode()).toBe('default_viewer');
    expect(state.scene).toBe(gbm);
    expect(JSON.stringify(state.scene)).toBe(before);
  });

  it('selection must reference an existing node', () => {
    const state = new ViewerState();
    state.loadScene(gbm);
    state.select(5);
    expect(state.selection).toBe(5);
    state.select(null);
    expect(state.selection).toBeNull();
    expect(() => state.select(4096)).toThrowError(/not in the scene/);
  });

  it('seed basket toggles and resolves labels in id order', () => {
    const state = new ViewerState();
    state.loadScene(gbm);
    expect(state.toggleSeed(2)).toBe(true);
    expect(state.toggleSeed(0)).toBe(true);
    expect(state.toggleSeed(2)).toBe(false);
    expect(state.seedLabels()).toEqual([gbm.nodes[0].label]);
  });

  it('loading a smaller scene prunes stale selection and seeds', () => {
    const state = new ViewerState();
    state.loadScene(gbm);
    state.select(80);
    state.toggleSeed(81);
    const tiny = parseSceneDocument({
      version: 1,
      metadata: {
        layout_name: 'circular',
        source_file: '',
        created: 'now',
        node_count: 1,
        edge_count: 0,
      },
      nodes: [
        {
          id: 0,
          label: 'A',
          position: [0, 0, 0],
          color: [1, 1, 1, 1],
          size: 1,
          is_seed: false,
          is_highlighted: false,
        },
      ],
      edges: [],
    });
    state.loadScene(tiny);
    expect(state.selection).toBeNull();
    expect(state.seedBasket.size).toBe(0);
  });
});
