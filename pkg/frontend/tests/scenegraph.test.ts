import { readFileSync } from 'node:fs';
import * as THREE from 'three';
import { describe, expect, it } from 'vitest';

import { buildRenderList } from '../src/renderList.js';
import { buildNetworkObjects, pickNode } from '../src/scenegraph.js';
import { parseSceneDocument } from '../src/sceneDoc.js';

const gbm = parseSceneDocument(
  readFileSync(new URL('./fixtures/gbm.scene.json', import.meta.url), 'utf-8'),
);

describe('buildRenderList', () => {
  it('maps the GBM scene to 83 spheres and 106 segments', () => {
    const list = buildRenderList(gbm);
    expect(list.spheres).toHaveLength(83);
    expect(list.segments).toHaveLength(106);
  });

  it('resolves segment endpoints from node positions', () => {
    const list = buildRenderList(gbm);
    const byId = new Map(gbm.nodes.map((n) => [n.id, n.position]));
    for (const segment of list.segments) {
      expect(segment.start).toEqual(byId.get(segment.source));
      expect(segment.end).toEqual(byId.get(segment.target));
    }
  });

  it('centroid is the mean node position', () => {
    const list = buildRenderList(gbm);
    const mean = [0, 0, 0];
    for (const n of gbm.nodes) {
      mean[0] += n.position[0];
      mean[1] += n.position[1];
      mean[2] += n.position[2];
    }
    for (let i = 0; i < 3; i++) {
      expect(list.centroid[i]).toBeCloseTo(mean[i] / gbm.nodes.length, 9);
    }
  });
});

describe('buildNetworkObjects', () => {
  it('creates one mesh per node and one line per edge', () => {
    const objects = buildNetworkObjects(buildRenderList(gbm));
    expect(objects.nodeMeshes).toHaveLength(83);
    expect(objects.edgeLines).toHaveLength(106);
  });

  it('re-rendering the same scene yields an identical draw list', () => {
    const a = buildNetworkObjects(buildRenderList(gbm));
    const b = buildNetworkObjects(buildRenderList(gbm));
    expect(a.nodeMeshes.length).toBe(b.nodeMeshes.length);
    for (let i = 0; i < a.nodeMeshes.length; i++) {
      expect(a.nodeMeshes[i].position.toArray()).toEqual(b.nodeMeshes[i].position.toArray());
      const ca = (a.nodeMeshes[i].material as THREE.MeshLambertMaterial).color.toArray();
      const cb = (b.nodeMeshes[i].material as THREE.MeshLambertMaterial).color.toArray();
      expect(ca).toEqual(cb);
      expect(a.nodeMeshes[i].userData).toEqual(b.nodeMeshes[i].userData);
    }
    for (let i = 0; i < a.edgeLines.length; i++) {
      expect(a.edgeLines[i].userData).toEqual(b.edgeLines[i].userData);
    }
  });

  it('positions meshes relative to the centroid pivot', () => {
    const list = buildRenderList(gbm);
    const objects = buildNetworkObjects(list);
    const first = gbm.nodes[0];
    const mesh = objects.nodeMeshes[0];
    expect(mesh.position.x).toBeCloseTo(first.position[0] - list.centroid[0], 9);
    expect(mesh.position.y).toBeCloseTo(first.position[1] - list.centroid[1], 9);
    expect(mesh.userData.nodeId).toBe(first.id);
    expect(objects.pivot.position.toArray()).toEqual([...list.centroid]);
  });

  it('semi-transparent colors become transparent materials', () => {
    const doc = structuredClone(gbm);
    doc.nodes[0].color = [0.5, 0.5, 0.5, 0.25];
    const objects = buildNetworkObjects(buildRenderList(parseSceneDocument(doc)));
    const material = objects.nodeMeshes[0].material as THREE.MeshLambertMaterial;
    expect(material.transparent).toBe(true);
    expect(material.opacity).toBeCloseTo(0.25, 9);
  });
});

describe('pickNode', () => {
  it('hits the sphere in front of the camera and misses empty space', () => {
    const doc = parseSceneDocument({
      version: 1,
      metadata: {
        layout_name: 'circular',
        source_file: '',
        created: 'now',
        node_count: 2,
        edge_count: 0,
      },
      nodes: [
        {
          id: 0,
          label: 'A',
          position: [0, 0, 0],
          color: [1, 0, 0, 1],
          size: 1,
          is_seed: false,
          is_highlighted: false,
        },
        {
          id: 1,
          label: 'B',
          position: [10, 0, 0],
          color: [0, 1, 0, 1],
          size: 1,
          is_seed: false,
          is_highlighted: false,
        },
      ],
      edges: [],
    });
    const objects = buildNetworkObjects(buildRenderList(doc));
    const world = new THREE.Scene();
    world.add(objects.pivot);
    const camera = new THREE.PerspectiveCamera(50, 1, 0.1, 100);
    camera.position.set(-5, 0, 20); // centroid is (5,0,0); node A sits at (-5,0,0) locally
    camera.lookAt(-5 + 5, 0, 0);
    camera.updateMatrixWorld();
    world.updateMatrixWorld(true);

    // aim straight at node A's world position
    const ndcOfA = new THREE.Vector3(0, 0, 0).project(camera);
    const hit = pickNode(new THREE.Vector2(ndcOfA.x, ndcOfA.y), camera, objects.nodeMeshes);
    expect(hit).toBe(0);

    const miss = pickNode(new THREE.Vector2(0.9, 0.9), camera, objects.nodeMeshes);
    expect(miss).toBeNull();
  });
});
