/**
 * Browser entry point: renderer loop, input routing for the two viewer
 * modes, the side panel (upload, layout, selection parameters, path and
 * subnet forms, palette editor), toasts, and drag-and-drop scene files
 * for offline viewing.
 */

import * as THREE from 'three';

import { ApiError, NetviewClient, RequestGate, type SubnetAlgo, type SubnetRequest } from './api.js';
import { applyToCamera, initialFirstPerson, look, teleportToNode, walk, WALK_SPEED } from './fpcam.js';
import { buildRenderList } from './renderList.js';
import {
  buildNetworkObjects,
  disposeNetworkObjects,
  pickNode,
  type NetworkObjects,
} from './scenegraph.js';
import { parseSceneDocument, SceneFormatError, type SceneDocument } from './sceneDoc.js';
import { selectNode } from './selection.js';
import { ViewerState } from './state.js';
import {
  applyMove,
  applyOrbitDrag,
  applyResize,
  applyRoll,
  applyScroll,
  applyToPivot,
  identityTransform,
} from './transform.js';
import { DEFAULT_PALETTE, hexToRgba, rgbaToHex, toWire, validatePalette, type PaletteStop } from './palette.js';

const CAMERA_DISTANCE = 30;

const canvas = document.getElementById('viewport') as HTMLCanvasElement;
const renderer = new THREE.WebGLRenderer({ canvas, antialias: true });
renderer.setPixelRatio(window.devicePixelRatio);

const world = new THREE.Scene();
world.background = new THREE.Color(0x10141c);
world.add(new THREE.AmbientLight(0xffffff, 0.7));
const keyLight = new THREE.DirectionalLight(0xffffff, 1.4);
keyLight.position.set(12, 20, 16);
world.add(keyLight);

const camera = new THREE.PerspectiveCamera(55, 1, 0.01, 2000);
camera.position.set(0, 0, CAMERA_DISTANCE);
camera.lookAt(0, 0, 0);

const state = new ViewerState();
const transform = identityTransform();
let fp = initialFirstPerson(new THREE.Vector3(0, 0, CAMERA_DISTANCE));
let network: NetworkObjects | null = null;
let palette: PaletteStop[] = DEFAULT_PALETTE.map((s) => ({ ...s, color: [...s.color] as PaletteStop['color'] }));
let lastSubnet: SubnetRequest | null = null;

const client = new NetviewClient(
  (document.getElementById('service-url') as HTMLInputElement).value.replace(/\/$/, ''),
);
const gate = new RequestGate();

// ---- DOM helpers -----------------------------------------------------------

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function toast(message: string, isError = true): void {
  const box = el<HTMLDivElement>('toast');
  box.textContent = message;
  box.className = isError ? 'toast error show' : 'toast show';
  window.setTimeout(() => box.classList.remove('show'), 4000);
}

function banner(message: string | null): void {
  const box = el<HTMLDivElement>('banner');
  box.textContent = message ?? '';
  box.style.display = message ? 'block' : 'none';
}

function showError(err: unknown): void {
  if (err instanceof ApiError) {
    toast(`${err.errorName}: ${err.message}`);
  } else if (err instanceof SceneFormatError) {
    banner(`scene rejected - ${err.message}`);
  } else {
    toast(String(err));
  }
}

// ---- scene display ---------------------------------------------------------

function makeLabelTexture(text: string): THREE.Texture {
  const scale = 4;
  const pad = 8 * scale;
  const font = `${24 * scale}px system-ui, sans-serif`;
  const measure = document.createElement('canvas').getContext('2d')!;
  measure.font = font;
  const width = Math.ceil(measure.measureText(text).width) + pad * 2;
  const height = 40 * scale;
  const surface = document.createElement('canvas');
  surface.width = width;
  surface.height = height;
  const ctx = surface.getContext('2d')!;
  ctx.font = font;
  ctx.fillStyle = 'rgba(255,255,255,0.92)';
  ctx.textBaseline = 'middle';
  ctx.fillText(text, pad, height / 2);
  const texture = new THREE.CanvasTexture(surface);
  texture.needsUpdate = true;
  return texture;
}

function displayScene(doc: SceneDocument): void {
  banner(null);
  if (network) {
    world.remove(network.pivot);
    disposeNetworkObjects(network);
  }
  const labelScale = Number(el<HTMLInputElement>('label-size').value) || 1;
  network = buildNetworkObjects(buildRenderList(doc), {
    labelTexture: makeLabelTexture,
    labelScale: labelScale * 2,
  });
  // recenter so the pivot (centroid) sits at the origin the camera faces
  network.pivot.position.set(0, 0, 0);
  world.add(network.pivot);
  state.loadScene(doc);
  el<HTMLSpanElement>('scene-info').textContent =
    `${doc.nodes.length} nodes, ${doc.edges.length} edges (${doc.metadata.layout_name})`;
  refreshSeedBasket();
}

function loadSceneText(text: string): void {
  try {
    displayScene(parseSceneDocument(text));
  } catch (err) {
    showError(err);
  }
}

// ---- render loop -----------------------------------------------------------

const pressed = new Set<string>();
let lastFrame = performance.now();

function frame(now: number): void {
  const dt = Math.min((now - lastFrame) / 1000, 0.1);
  lastFrame = now;
  if (state.mode === 'first_person') {
    let step = 0;
    if (pressed.has('KeyW') || pressed.has('ArrowUp')) step += 1;
    if (pressed.has('KeyS') || pressed.has('ArrowDown')) step -= 1;
    if (step !== 0) walk(fp, step * WALK_SPEED * dt);
    applyToCamera(fp, camera);
    if (network) {
      network.pivot.quaternion.identity();
      network.pivot.scale.setScalar(1);
      network.pivot.position.set(0, 0, 0);
    }
  } else {
    camera.position.set(0, 0, CAMERA_DISTANCE);
    camera.quaternion.identity();
    camera.lookAt(0, 0, 0);
    if (network) applyToPivot(transform, network.pivot, CAMERA_DISTANCE);
  }
  for (const sprite of network?.labels ?? []) sprite.quaternion.copy(camera.quaternion);
  renderer.render(world, camera);
  requestAnimationFrame(frame);
}

function resize(): void {
  const box = canvas.parentElement!;
  renderer.setSize(box.clientWidth, box.clientHeight, false);
  camera.aspect = box.clientWidth / box.clientHeight;
  camera.updateProjectionMatrix();
}
window.addEventListener('resize', resize);

// ---- pointer input ---------------------------------------------------------

interface DragState {
  x: number;
  y: number;
  moved: boolean;
  button: number;
}
let drag: DragState | null = null;

canvas.addEventListener('pointerdown', (event) => {
  drag = { x: event.clientX, y: event.clientY, moved: false, button: event.button };
  canvas.setPointerCapture(event.pointerId);
});

canvas.addEventListener('pointermove', (event) => {
  if (!drag) return;
  const dx = event.clientX - drag.x;
  const dy = event.clientY - drag.y;
  if (Math.abs(dx) + Math.abs(dy) > 2) drag.moved = true;
  drag.x = event.clientX;
  drag.y = event.clientY;
  if (state.mode === 'first_person') {
    look(fp, dx, dy);
    return;
  }
  if (event.shiftKey) applyMove(transform, dx, dy);
  else if (event.ctrlKey || event.metaKey) applyResize(transform, dy);
  else if (event.altKey) applyRoll(transform, dx);
  else applyOrbitDrag(transform, dx, dy);
});

canvas.addEventListener('pointerup', async (event) => {
  const wasClick = drag !== null && !drag.moved && drag.button === 0;
  drag = null;
  if (!wasClick || !network) return;
  const rect = canvas.getBoundingClientRect();
  const ndc = new THREE.Vector2(
    ((event.clientX - rect.left) / rect.width) * 2 - 1,
    -(((event.clientY - rect.top) / rect.height) * 2 - 1),
  );
  const hit = pickNode(ndc, camera, network.nodeMeshes);
  if (hit === null) {
    state.select(null);
    el<HTMLDivElement>('params-panel').innerHTML = '<em>no selection</em>';
    return;
  }
  if (event.shiftKey) {
    try {
      state.toggleSeed(hit);
      refreshSeedBasket();
    } catch (err) {
      showError(err);
    }
    return;
  }
  if (state.sessionId === null) {
    toast('connect to a service session to inspect nodes', false);
    return;
  }
  try {
    const result = await gate.run('select', () => selectNode(client, state, hit));
    if (!result) return;
    displayScene(result.scene);
    state.select(hit);
    el<HTMLDivElement>('params-panel').innerHTML = [
      `<b>${result.label}</b>`,
      `degree: ${result.params.degree}`,
      `closeness: ${result.params.closeness.toFixed(6)}`,
      `betweenness: ${result.params.betweenness.toFixed(6)}`,
      `neighbors: ${result.neighborLabels.join(', ') || 'none'}`,
    ].join('<br>');
  } catch (err) {
    showError(err);
  }
});

canvas.addEventListener('wheel', (event) => {
  if (state.mode !== 'default_viewer') return;
  event.preventDefault();
  applyScroll(transform, Math.sign(event.deltaY));
});

canvas.addEventListener('dblclick', (event) => {
  if (state.mode !== 'first_person' || !network) return;
  const rect = canvas.getBoundingClientRect();
  const ndc = new THREE.Vector2(
    ((event.clientX - rect.left) / rect.width) * 2 - 1,
    -(((event.clientY - rect.top) / rect.height) * 2 - 1),
  );
  const hit = pickNode(ndc, camera, network.nodeMeshes);
  if (hit === null) return;
  const mesh = network.nodeMeshes.find((m) => m.userData.nodeId === hit)!;
  const position = mesh.getWorldPosition(new THREE.Vector3());
  teleportToNode(fp, position, mesh.userData.radius as number);
});

window.addEventListener('keydown', (event) => pressed.add(event.code));
window.addEventListener('keyup', (event) => pressed.delete(event.code));

// ---- drag & drop scene files ------------------------------------------------

window.addEventListener('dragover', (event) => event.preventDefault());
window.addEventListener('drop', async (event) => {
  event.preventDefault();
  const file = event.dataTransfer?.files?.[0];
  if (!file) return;
  state.sessionId = null; // offline view: no service behind this scene
  loadSceneText(await file.text());
});

// ---- panel actions ----------------------------------------------------------

el<HTMLButtonElement>('mode-toggle').addEventListener('click', () => {
  const mode = state.toggleMode();
  if (mode === 'first_person') {
    fp = initialFirstPerson(new THREE.Vector3(0, 0, CAMERA_DISTANCE));
  }
  el<HTMLButtonElement>('mode-toggle').textContent =
    mode === 'default_viewer' ? 'switch to first-person' : 'switch to default viewer';
  el<HTMLSpanElement>('mode-label').textContent =
    mode === 'default_viewer' ? 'default viewer: drag spins the network' : 'first-person: WASD/arrows walk, drag looks, double-click teleports';
});

el<HTMLInputElement>('network-file').addEventListener('change', async (event) => {
  const file = (event.target as HTMLInputElement).files?.[0];
  if (!file) return;
  try {
    const text = await file.text();
    const uploaded = await client.uploadNetwork(text);
    state.sessionId = uploaded.session_id;
    el<HTMLSpanElement>('session-info').textContent =
      `session ${uploaded.session_id.slice(0, 8)}: ${uploaded.node_count} nodes, ${uploaded.edge_count} edges`;
    const algo = el<HTMLSelectElement>('layout-algo').value as 'force' | 'circular' | 'louvain-circular';
    displayScene(await client.layout(state.sessionId, algo, 0));
  } catch (err) {
    showError(err);
  }
});

el<HTMLButtonElement>('relayout').addEventListener('click', async () => {
  if (state.sessionId === null) return toast('upload a network first', false);
  try {
    const algo = el<HTMLSelectElement>('layout-algo').value as 'force' | 'circular' | 'louvain-circular';
    const seed = Number(el<HTMLInputElement>('layout-seed').value) || 0;
    const doc = await gate.run('layout', () => client.layout(state.sessionId!, algo, seed));
    if (doc) displayScene(doc);
  } catch (err) {
    showError(err);
  }
});

el<HTMLButtonElement>('run-path').addEventListener('click', async () => {
  if (state.sessionId === null) return toast('upload a network first', false);
  try {
    const result = await gate.run('path', () =>
      client.path(
        state.sessionId!,
        el<HTMLInputElement>('path-from').value.trim(),
        el<HTMLInputElement>('path-to').value.trim(),
      ),
    );
    if (!result) return;
    displayScene(result.scene);
    el<HTMLDivElement>('path-result').textContent = result.path.join(' > ');
  } catch (err) {
    showError(err);
  }
});

function refreshSeedBasket(): void {
  const labels = state.seedLabels();
  el<HTMLDivElement>('seed-basket').textContent = labels.length
    ? `seeds: ${labels.join(', ')}`
    : 'seeds: none (shift-click nodes or load a seed file)';
}

let uploadedSeeds: string[] = [];
el<HTMLInputElement>('seed-file').addEventListener('change', async (event) => {
  const file = (event.target as HTMLInputElement).files?.[0];
  if (!file) return;
  const text = await file.text();
  uploadedSeeds = text
    .split('\n')
    .map((line) => line.trim())
    .filter((line) => line && !line.startsWith('#'));
  el<HTMLDivElement>('seed-basket').textContent = `seeds from file: ${uploadedSeeds.join(', ')}`;
});

async function runSubnet(request: SubnetRequest): Promise<void> {
  if (state.sessionId === null) {
    toast('upload a network first', false);
    return;
  }
  try {
    const response = await gate.run('subnet', () => client.subnet(state.sessionId!, request));
    if (!response) return;
    lastSubnet = request;
    displayScene(response.scene);
    const r = response.result;
    el<HTMLDivElement>('subnet-result').textContent =
      `${r.nodes.length} nodes, ${r.edges.length} edges, weight ${r.total_weight}` +
      (r.warning ? ` (${r.warning})` : '');
  } catch (err) {
    showError(err);
  }
}

el<HTMLButtonElement>('run-subnet').addEventListener('click', () => {
  const algo = el<HTMLSelectElement>('subnet-algo').value as SubnetAlgo;
  const seeds = uploadedSeeds.length ? uploadedSeeds : state.seedLabels();
  const request: SubnetRequest = { algo, seed_labels: seeds };
  if (algo === 'rwr') {
    request.iterations = Number(el<HTMLInputElement>('rwr-iters').value) || 50;
    request.restart_prob = Number(el<HTMLInputElement>('rwr-restart').value) || 0.15;
    request.palette = toWire(palette);
  }
  void runSubnet(request);
});

// palette editor: three color wells bound to the default stop layout
function refreshPaletteWells(): void {
  palette.forEach((stop, i) => {
    const well = document.getElementById(`palette-${i}`) as HTMLInputElement | null;
    if (well) well.value = rgbaToHex(stop.color);
  });
}

for (let i = 0; i < DEFAULT_PALETTE.length; i++) {
  const well = document.getElementById(`palette-${i}`) as HTMLInputElement | null;
  well?.addEventListener('change', () => {
    palette = palette.map((stop, j) =>
      j === i ? { ...stop, color: hexToRgba(well.value) } : stop,
    );
    const problem = validatePalette(palette);
    if (problem) return toast(problem);
    // same walk, new gradient: the service recolors, nothing re-runs here
    if (lastSubnet?.algo === 'rwr') {
      void runSubnet({ ...lastSubnet, palette: toWire(palette) });
    }
  });
}

// ---- boot -------------------------------------------------------------------

refreshPaletteWells();
refreshSeedBasket();
resize();
requestAnimationFrame(frame);
fetch('tests/fixtures/gbm.scene.json')
  .then((r) => (r.ok ? r.text() : Promise.reject(new Error('no bundled scene'))))
  .then(loadSceneText)
  .catch(() => banner('drop a .scene.json file here or upload a network'));
