/**
 * three.js object construction from a render list.
 *
 * The pivot group is positioned at the network centroid with children
 * offset by -centroid, so rotating/scaling the pivot spins the network
 * about its own center. Only object construction happens here; no
 * renderer or GL context is required, which keeps it unit-testable.
 */

import * as THREE from 'three';

import type { RenderList } from './renderList.js';

export interface NetworkObjects {
  /** pivot at the centroid; add this to the scene */
  pivot: THREE.Group;
  nodeMeshes: THREE.Mesh[];
  edgeLines: THREE.Line[];
  labels: THREE.Sprite[];
  centroid: THREE.Vector3;
}

export type LabelTextureFactory = (text: string) => THREE.Texture;

export interface BuildOptions {
  /** supply a canvas-based factory in the browser; omit in tests */
  labelTexture?: LabelTextureFactory;
  labelScale?: number;
  sphereDetail?: number;
}

function toColor(rgba: readonly number[]): THREE.Color {
  return new THREE.Color(rgba[0], rgba[1], rgba[2]);
}

export function buildNetworkObjects(list: RenderList, options: BuildOptions = {}): NetworkObjects {
  const { labelTexture, labelScale = 1.0, sphereDetail = 16 } = options;
  const pivot = new THREE.Group();
  pivot.name = 'network';
  const centroid = new THREE.Vector3(...list.centroid);
  pivot.position.copy(centroid);

  const nodeMeshes: THREE.Mesh[] = [];
  const labels: THREE.Sprite[] = [];
  for (const sphere of list.spheres) {
    const geometry = new THREE.SphereGeometry(sphere.radius, sphereDetail, sphereDetail);
    const material = new THREE.MeshLambertMaterial({
      color: toColor(sphere.color),
      transparent: sphere.color[3] < 1,
      opacity: sphere.color[3],
    });
    const mesh = new THREE.Mesh(geometry, material);
    mesh.position.set(
      sphere.position[0] - centroid.x,
      sphere.position[1] - centroid.y,
      sphere.position[2] - centroid.z,
    );
    mesh.userData.nodeId = sphere.id;
    mesh.userData.label = sphere.label;
    mesh.userData.radius = sphere.radius;
    pivot.add(mesh);
    nodeMeshes.push(mesh);

    if (labelTexture) {
      const sprite = new THREE.Sprite(
        new THREE.SpriteMaterial({ map: labelTexture(sphere.label), depthTest: false }),
      );
      sprite.position.copy(mesh.position);
      sprite.position.y += sphere.radius * 1.6;
      sprite.scale.setScalar(labelScale);
      sprite.userData.nodeId = sphere.id;
      pivot.add(sprite);
      labels.push(sprite);
    }
  }

  const edgeLines: THREE.Line[] = [];
  for (const segment of list.segments) {
    const geometry = new THREE.BufferGeometry().setFromPoints([
      new THREE.Vector3(
        segment.start[0] - centroid.x,
        segment.start[1] - centroid.y,
        segment.start[2] - centroid.z,
      ),
      new THREE.Vector3(
        segment.end[0] - centroid.x,
        segment.end[1] - centroid.y,
        segment.end[2] - centroid.z,
      ),
    ]);
    const material = new THREE.LineBasicMaterial({
      color: toColor(segment.color),
      transparent: segment.color[3] < 1,
      opacity: segment.color[3],
      linewidth: segment.width,
    });
    const line = new THREE.Line(geometry, material);
    line.userData.source = segment.source;
    line.userData.target = segment.target;
    pivot.add(line);
    edgeLines.push(line);
  }

  return { pivot, nodeMeshes, edgeLines, labels, centroid };
}

export function disposeNetworkObjects(objects: NetworkObjects): void {
  for (const mesh of objects.nodeMeshes) {
    mesh.geometry.dispose();
    (mesh.material as THREE.Material).dispose();
  }
  for (const line of objects.edgeLines) {
    line.geometry.dispose();
    (line.material as THREE.Material).dispose();
  }
  for (const sprite of objects.labels) {
    const material = sprite.material as THREE.SpriteMaterial;
    material.map?.dispose();
    material.dispose();
  }
  objects.pivot.clear();
}

/** Node id under the pointer, or null. Expects NDC coordinates. */
export function pickNode(
  ndc: THREE.Vector2,
  camera: THREE.Camera,
  nodeMeshes: THREE.Mesh[],
  raycaster: THREE.Raycaster = new THREE.Raycaster(),
): number | null {
  raycaster.setFromCamera(ndc, camera);
  const hits = raycaster.intersectObjects(nodeMeshes, false);
  for (const hit of hits) {
    const id = hit.object.userData.nodeId;
    if (typeof id === 'number') return id;
  }
  return null;
}
