/**
 * Typed client for the analysis service. Every scene that comes back is
 * run through the document validator, so the viewer only ever renders
 * payloads that satisfy the interchange contract.
 */

import { parseSceneDocument, type SceneDocument } from './sceneDoc.js';

export interface ParseReportWire {
  node_count: number;
  edge_count: number;
  duplicate_lines_dropped: number;
  self_loops_dropped: number;
  malformed_lines: [number, string][];
}

export interface UploadResponse {
  session_id: string;
  node_count: number;
  edge_count: number;
  report: ParseReportWire;
}

export interface StatsResponse {
  node_count: number;
  edge_count: number;
  connected_component_count: number;
}

export interface NodeParamsResponse {
  degree: number;
  closeness: number;
  betweenness: number;
  neighbors: number[];
}

export interface PathResponse {
  path: string[];
  scene: SceneDocument;
}

export interface SubnetResultWire {
  nodes: number[];
  edges: [number, number][];
  seed_ids: number[];
  total_weight: number;
  scores: Record<string, number> | null;
  unreachable_pairs: [number, number][];
  warning: string | null;
}

export interface SubnetResponse {
  result: SubnetResultWire;
  scene: SceneDocument;
}

export type LayoutAlgo = 'force' | 'circular' | 'louvain-circular';
export type SubnetAlgo = 'apsp' | 'steiner' | 'rwr';
export type PaletteWire = [number, [number, number, number, number]][];

export interface SubnetRequest {
  algo: SubnetAlgo;
  seed_labels: string[];
  iterations?: number;
  restart_prob?: number;
  palette?: PaletteWire;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public errorName: string,
    message: string,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function throwApiError(response: Response): Promise<never> {
  let name = 'HttpError';
  let message = `${response.status} ${response.statusText}`;
  try {
    const body = await response.json();
    const detail = body?.detail;
    if (detail && typeof detail === 'object') {
      name = detail.error ?? name;
      message = detail.message ?? message;
    }
  } catch {
    // non-JSON error body; keep the status line
  }
  throw new ApiError(response.status, name, message);
}

export class NetviewClient {
  constructor(
    private baseUrl: string,
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request(method: string, path: string, body?: unknown): Promise<unknown> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method,
      headers: body === undefined ? undefined : { 'Content-Type': 'application/json' },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) await throwApiError(response);
    return response.json();
  }

  async uploadNetwork(text: string, separator?: string): Promise<UploadResponse> {
    const payload: Record<string, unknown> = { text };
    if (separator) payload.separator = separator;
    return (await this.request('POST', '/network', payload)) as UploadResponse;
  }

  async stats(sessionId: string): Promise<StatsResponse> {
    return (await this.request('GET', `/session/${sessionId}/stats`)) as StatsResponse;
  }

  async layout(
    sessionId: string,
    algo: LayoutAlgo,
    seed = 0,
    params?: Record<string, number>,
  ): Promise<SceneDocument> {
    const body: Record<string, unknown> = { algo, seed };
    if (params) body.params = params;
    const doc = await this.request('POST', `/session/${sessionId}/layout`, body);
    return parseSceneDocument(doc);
  }

  async nodeParams(sessionId: string, nodeId: number): Promise<NodeParamsResponse> {
    return (await this.request(
      'GET',
      `/session/${sessionId}/node/${nodeId}/params`,
    )) as NodeParamsResponse;
  }

  async highlight(sessionId: string, nodeId: number): Promise<SceneDocument> {
    const doc = await this.request('POST', `/session/${sessionId}/highlight`, {
      node_id: nodeId,
    });
    return parseSceneDocument(doc);
  }

  async path(sessionId: string, fromLabel: string, toLabel: string): Promise<PathResponse> {
    const body = (await this.request('POST', `/session/${sessionId}/path`, {
      from_label: fromLabel,
      to_label: toLabel,
    })) as { path: string[]; scene: unknown };
    return { path: body.path, scene: parseSceneDocument(body.scene) };
  }

  async subnet(sessionId: string, request: SubnetRequest): Promise<SubnetResponse> {
    const body = (await this.request('POST', `/session/${sessionId}/subnet`, request)) as {
      result: SubnetResultWire;
      scene: unknown;
    };
    return { result: body.result, scene: parseSceneDocument(body.scene) };
  }

  async currentScene(sessionId: string): Promise<SceneDocument> {
    const doc = await this.request('GET', `/session/${sessionId}/scene`);
    return parseSceneDocument(doc);
  }

  async updateSettings(
    sessionId: string,
    settings: Record<string, unknown>,
  ): Promise<SceneDocument> {
    const doc = await this.request('PUT', `/session/${sessionId}/settings`, settings);
    return parseSceneDocument(doc);
  }
}

/**
 * Per-category single-flight guard: responses that were superseded by a
 * newer request in the same category are dropped instead of applied.
 */
export class RequestGate {
  private tickets = new Map<string, number>();

  async run<T>(category: string, task: () => Promise<T>): Promise<T | undefined> {
    const ticket = (this.tickets.get(category) ?? 0) + 1;
    this.tickets.set(category, ticket);
    const result = await task();
    if (this.tickets.get(category) !== ticket) {
      return undefined; // stale: a newer request took over
    }
    return result;
  }
}
