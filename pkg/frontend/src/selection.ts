/**
 * Node selection flow: ask the service for the highlighted scene and the
 * node's parameters, then hand both to the UI. The panel shows exactly
 * what the API returned; nothing is recomputed client-side.
 */

import type { NetviewClient, NodeParamsResponse } from './api.js';
import type { SceneDocument } from './sceneDoc.js';
import type { ViewerState } from './state.js';

export interface SelectionResult {
  scene: SceneDocument;
  params: NodeParamsResponse;
  nodeId: number;
  label: string;
  neighborLabels: string[];
}

export async function selectNode(
  client: NetviewClient,
  state: ViewerState,
  nodeId: number,
): Promise<SelectionResult> {
  if (state.sessionId === null) throw new Error('no active session');
  const [scene, params] = await Promise.all([
    client.highlight(state.sessionId, nodeId),
    client.nodeParams(state.sessionId, nodeId),
  ]);
  state.loadScene(scene);
  state.select(nodeId);
  const byId = new Map(scene.nodes.map((n) => [n.id, n.label]));
  return {
    scene,
    params,
    nodeId,
    label: byId.get(nodeId) ?? String(nodeId),
    neighborLabels: params.neighbors.map((v) => byId.get(v) ?? String(v)),
  };
}
