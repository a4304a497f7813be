/**
 * Default-viewer interaction model: the camera stays fixed and the
 * network moves. Drag spins the network about its centroid, the wheel
 * scales its distance from the camera, and modifier drags give the
 * MR-style whole-network manipulation (move / resize / rotate).
 *
 * Pure state + apply step, no DOM: unit tests drive it directly.
 */

import * as THREE from 'three';

export interface NetworkTransform {
  rotation: THREE.Quaternion;
  /** multiplicative distance from the camera; 1 = where the layout put it */
  distanceScale: number;
  /** screen-plane translation of the whole network */
  pan: THREE.Vector3;
  /** uniform resize */
  scale: number;
}

export const ROTATE_SPEED = 0.005; // radians per pixel
export const PAN_SPEED = 0.02; // world units per pixel
export const RESIZE_SPEED = 0.002;
export const WHEEL_FACTOR = 1.1; // per wheel notch

export function identityTransform(): NetworkTransform {
  return {
    rotation: new THREE.Quaternion(),
    distanceScale: 1.0,
    pan: new THREE.Vector3(),
    scale: 1.0,
  };
}

export function isIdentity(t: NetworkTransform, tolerance = 1e-12): boolean {
  return (
    Math.abs(1 - Math.abs(t.rotation.w)) <= tolerance &&
    Math.abs(t.distanceScale - 1) <= tolerance &&
    t.pan.lengthSq() <= tolerance &&
    Math.abs(t.scale - 1) <= tolerance
  );
}

const X_AXIS = new THREE.Vector3(1, 0, 0);
const Y_AXIS = new THREE.Vector3(0, 1, 0);
const Z_AXIS = new THREE.Vector3(0, 0, 1);

/** Trackball-style drag: horizontal spins about world Y, vertical about world X. */
export function applyOrbitDrag(t: NetworkTransform, dxPixels: number, dyPixels: number): void {
  const yaw = new THREE.Quaternion().setFromAxisAngle(Y_AXIS, dxPixels * ROTATE_SPEED);
  const pitch = new THREE.Quaternion().setFromAxisAngle(X_AXIS, dyPixels * ROTATE_SPEED);
  t.rotation.premultiply(yaw).premultiply(pitch).normalize();
}

/** Wheel zoom: positive notches push the network away, negative pull it in. */
export function applyScroll(t: NetworkTransform, notches: number): void {
  t.distanceScale *= Math.pow(WHEEL_FACTOR, notches);
}

/** Modifier drag: move the whole network in the screen plane. */
export function applyMove(t: NetworkTransform, dxPixels: number, dyPixels: number): void {
  t.pan.x += dxPixels * PAN_SPEED;
  t.pan.y -= dyPixels * PAN_SPEED;
}

/** Modifier drag: resize the whole network about its centroid. */
export function applyResize(t: NetworkTransform, dyPixels: number): void {
  t.scale *= Math.exp(-dyPixels * RESIZE_SPEED);
}

/** Modifier drag: roll the network about the view axis. */
export function applyRoll(t: NetworkTransform, dxPixels: number): void {
  const roll = new THREE.Quaternion().setFromAxisAngle(Z_AXIS, dxPixels * ROTATE_SPEED);
  t.rotation.premultiply(roll).normalize();
}

/**
 * Push the state onto the network pivot. The camera sits on +Z at
 * cameraDistance looking at the origin; growing distanceScale slides the
 * pivot down -Z, away from it.
 */
export function applyToPivot(
  t: NetworkTransform,
  pivot: THREE.Group,
  cameraDistance: number,
): void {
  pivot.quaternion.copy(t.rotation);
  pivot.scale.setScalar(t.scale);
  pivot.position.set(
    t.pan.x,
    t.pan.y,
    cameraDistance * (1 - t.distanceScale) + t.pan.z,
  );
}
