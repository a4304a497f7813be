/**
 * First-person mode: the network stays fixed and the camera is the
 * user's stand-in. W/S and the arrow keys walk along the view axis,
 * mouse drag looks around, and double-clicking a node teleports the
 * camera next to it, facing it.
 */

import * as THREE from 'three';

export interface FirstPersonState {
  position: THREE.Vector3;
  /** radians, 0 looks down -Z */
  yaw: number;
  /** radians, clamped short of the poles */
  pitch: number;
}

export const LOOK_SPEED = 0.003; // radians per pixel
export const WALK_SPEED = 8.0; // world units per second
const PITCH_LIMIT = Math.PI / 2 - 0.01;
/** teleport stops this many node-radii away from the target sphere */
export const TELEPORT_RADII = 2.5;

export function initialFirstPerson(position = new THREE.Vector3(0, 0, 0)): FirstPersonState {
  return { position: position.clone(), yaw: 0, pitch: 0 };
}

export function viewDirection(state: FirstPersonState): THREE.Vector3 {
  const cp = Math.cos(state.pitch);
  return new THREE.Vector3(
    -Math.sin(state.yaw) * cp,
    Math.sin(state.pitch),
    -Math.cos(state.yaw) * cp,
  );
}

/** W / ArrowUp move forward (positive amount), S / ArrowDown backward. */
export function walk(state: FirstPersonState, amount: number): void {
  state.position.addScaledVector(viewDirection(state), amount);
}

export function look(state: FirstPersonState, dxPixels: number, dyPixels: number): void {
  state.yaw -= dxPixels * LOOK_SPEED;
  state.pitch = Math.max(
    -PITCH_LIMIT,
    Math.min(PITCH_LIMIT, state.pitch - dyPixels * LOOK_SPEED),
  );
}

function faceToward(state: FirstPersonState, target: THREE.Vector3): void {
  const dir = target.clone().sub(state.position);
  if (dir.lengthSq() < 1e-18) return;
  dir.normalize();
  state.pitch = Math.asin(Math.max(-1, Math.min(1, dir.y)));
  state.yaw = Math.atan2(-dir.x, -dir.z);
}

/**
 * Jump next to a node: approach along the current camera->node direction
 * and stop TELEPORT_RADII sphere-radii short, then face the node.
 */
export function teleportToNode(
  state: FirstPersonState,
  nodePosition: THREE.Vector3,
  nodeRadius: number,
): void {
  let approach = nodePosition.clone().sub(state.position);
  if (approach.lengthSq() < 1e-18) {
    approach = new THREE.Vector3(0, 0, -1);
  }
  approach.normalize();
  const standOff = Math.max(TELEPORT_RADII * nodeRadius, 1e-6);
  state.position.copy(nodePosition).addScaledVector(approach, -standOff);
  faceToward(state, nodePosition);
}

export function applyToCamera(state: FirstPersonState, camera: THREE.Camera): void {
  camera.position.copy(state.position);
  const target = state.position.clone().add(viewDirection(state));
  camera.lookAt(target);
}
