/**
 * Scene document contract (.scene.json, version 1).
 *
 * Mirrors the engine's export schema exactly; anything malformed throws a
 * SceneFormatError with a JSONPath-style location so the UI can show a
 * schema-violation banner instead of rendering garbage.
 */

export type Vec3 = [number, number, number];
export type Rgba = [number, number, number, number];

export interface SceneNodeDoc {
  id: number;
  label: string;
  position: Vec3;
  color: Rgba;
  size: number;
  is_seed: boolean;
  is_highlighted: boolean;
}

export interface SceneEdgeDoc {
  source: number;
  target: number;
  color: Rgba;
  width: number;
  is_highlighted: boolean;
}

export interface SceneMetadataDoc {
  layout_name: string;
  source_file: string;
  created: string;
  node_count: number;
  edge_count: number;
}

export interface SceneDocument {
  version: 1;
  metadata: SceneMetadataDoc;
  nodes: SceneNodeDoc[];
  edges: SceneEdgeDoc[];
}

export class SceneFormatError extends Error {
  constructor(public location: string, message: string) {
    super(`${location}: ${message}`);
    this.name = 'SceneFormatError';
  }
}

const SCENE_VERSION = 1;

function fail(location: string, message: string): never {
  throw new SceneFormatError(location, message);
}

function isObject(value: unknown): value is Record<string, unknown> {
  return typeof value === 'object' && value !== null && !Array.isArray(value);
}

function exactKeys(obj: Record<string, unknown>, expected: string[], location: string): void {
  for (const key of expected) {
    if (!(key in obj)) fail(location, `missing key "${key}"`);
  }
  for (const key of Object.keys(obj)) {
    if (!expected.includes(key)) fail(location, `unexpected key "${key}"`);
  }
}

function asInt(value: unknown, location: string): number {
  if (typeof value !== 'number' || !Number.isInteger(value)) {
    fail(location, `expected an integer, got ${JSON.stringify(value)}`);
  }
  return value;
}

function asReal(value: unknown, location: string): number {
  if (typeof value !== 'number' || !Number.isFinite(value)) {
    fail(location, `expected a finite number, got ${JSON.stringify(value)}`);
  }
  return value;
}

function asString(value: unknown, location: string): string {
  if (typeof value !== 'string') fail(location, `expected a string`);
  return value;
}

function asBool(value: unknown, location: string): boolean {
  if (typeof value !== 'boolean') fail(location, `expected a boolean`);
  return value;
}

function asVec3(value: unknown, location: string): Vec3 {
  if (!Array.isArray(value) || value.length !== 3) fail(location, 'expected [x, y, z]');
  return [asReal(value[0], location), asReal(value[1], location), asReal(value[2], location)];
}

function asRgba(value: unknown, location: string): Rgba {
  if (!Array.isArray(value) || value.length !== 4) fail(location, 'expected [r, g, b, a]');
  const channels = value.map((c, i) => asReal(c, `${location}[${i}]`));
  for (const c of channels) {
    if (c < 0 || c > 1) fail(location, `channel ${c} out of [0, 1]`);
  }
  return channels as Rgba;
}

export function parseSceneDocument(data: string | unknown): SceneDocument {
  let doc: unknown = data;
  if (typeof data === 'string') {
    try {
      doc = JSON.parse(data);
    } catch (err) {
      fail('$', `not valid JSON: ${(err as Error).message}`);
    }
  }
  if (!isObject(doc)) fail('$', 'expected an object');
  exactKeys(doc, ['version', 'metadata', 'nodes', 'edges'], '$');

  const version = asInt(doc.version, '$.version');
  if (version !== SCENE_VERSION) {
    fail('$.version', `unsupported scene version ${version}, expected ${SCENE_VERSION}`);
  }

  const meta = doc.metadata;
  if (!isObject(meta)) fail('$.metadata', 'expected an object');
  exactKeys(meta, ['layout_name', 'source_file', 'created', 'node_count', 'edge_count'], '$.metadata');
  const metadata: SceneMetadataDoc = {
    layout_name: asString(meta.layout_name, '$.metadata.layout_name'),
    source_file: asString(meta.source_file, '$.metadata.source_file'),
    created: asString(meta.created, '$.metadata.created'),
    node_count: asInt(meta.node_count, '$.metadata.node_count'),
    edge_count: asInt(meta.edge_count, '$.metadata.edge_count'),
  };

  if (!Array.isArray(doc.nodes)) fail('$.nodes', 'expected a list');
  const ids = new Set<number>();
  const nodes: SceneNodeDoc[] = doc.nodes.map((raw, i) => {
    const loc = `$.nodes[${i}]`;
    if (!isObject(raw)) fail(loc, 'expected an object');
    exactKeys(raw, ['id', 'label', 'position', 'color', 'size', 'is_seed', 'is_highlighted'], loc);
    const id = asInt(raw.id, `${loc}.id`);
    if (id < 0) fail(`${loc}.id`, 'id must be non-negative');
    if (ids.has(id)) fail(`${loc}.id`, `duplicate node id ${id}`);
    ids.add(id);
    const size = asReal(raw.size, `${loc}.size`);
    if (size <= 0) fail(`${loc}.size`, 'size must be positive');
    return {
      id,
      label: asString(raw.label, `${loc}.label`),
      position: asVec3(raw.position, `${loc}.position`),
      color: asRgba(raw.color, `${loc}.color`),
      size,
      is_seed: asBool(raw.is_seed, `${loc}.is_seed`),
      is_highlighted: asBool(raw.is_highlighted, `${loc}.is_highlighted`),
    };
  });

  if (!Array.isArray(doc.edges)) fail('$.edges', 'expected a list');
  const edges: SceneEdgeDoc[] = doc.edges.map((raw, i) => {
    const loc = `$.edges[${i}]`;
    if (!isObject(raw)) fail(loc, 'expected an object');
    exactKeys(raw, ['source', 'target', 'color', 'width', 'is_highlighted'], loc);
    const source = asInt(raw.source, `${loc}.source`);
    const target = asInt(raw.target, `${loc}.target`);
    for (const endpoint of [source, target]) {
      if (!ids.has(endpoint)) fail(loc, `edge endpoint ${endpoint} is not a node id`);
    }
    const width = asReal(raw.width, `${loc}.width`);
    if (width <= 0) fail(`${loc}.width`, 'width must be positive');
    return {
      source,
      target,
      color: asRgba(raw.color, `${loc}.color`),
      width,
      is_highlighted: asBool(raw.is_highlighted, `${loc}.is_highlighted`),
    };
  });

  if (metadata.node_count !== nodes.length) {
    fail('$.metadata.node_count', `declares ${metadata.node_count} nodes but document has ${nodes.length}`);
  }
  if (metadata.edge_count !== edges.length) {
    fail('$.metadata.edge_count', `declares ${metadata.edge_count} edges but document has ${edges.length}`);
  }
  return { version: SCENE_VERSION, metadata, nodes, edges };
}

export interface SceneDiff {
  colorOnly: boolean;
  changedFields: Set<string>;
}

/** Which fields differ between two documents of the same shape. */
export function diffScenes(a: SceneDocument, b: SceneDocument): SceneDiff {
  const changed = new Set<string>();
  if (a.nodes.length !== b.nodes.length || a.edges.length !== b.edges.length) {
    changed.add('shape');
    return { colorOnly: false, changedFields: changed };
  }
  for (let i = 0; i < a.nodes.length; i++) {
    const na = a.nodes[i];
    const nb = b.nodes[i];
    for (const field of ['id', 'label', 'size', 'is_seed', 'is_highlighted'] as const) {
      if (na[field] !== nb[field]) changed.add(`nodes.${field}`);
    }
    if (na.position.some((c, j) => c !== nb.position[j])) changed.add('nodes.position');
    if (na.color.some((c, j) => c !== nb.color[j])) changed.add('nodes.color');
  }
  for (let i = 0; i < a.edges.length; i++) {
    const ea = a.edges[i];
    const eb = b.edges[i];
    for (const field of ['source', 'target', 'width', 'is_highlighted'] as const) {
      if (ea[field] !== eb[field]) changed.add(`edges.${field}`);
    }
    if (ea.color.some((c, j) => c !== eb.color[j])) changed.add('edges.color');
  }
  const colorful = new Set(['nodes.color', 'edges.color']);
  const colorOnly =
    changed.size > 0 && [...changed].every((field) => colorful.has(field));
  return { colorOnly, changedFields: changed };
}
