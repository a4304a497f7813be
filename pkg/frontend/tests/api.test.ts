import { readFileSync } from 'node:fs';
import { describe, expect, it } from 'vitest';

import { ApiError, NetviewClient, RequestGate } from '../src/api.js';

const gbmText = readFileSync(new URL('./fixtures/gbm.scene.json', import.meta.url), 'utf-8');

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'Content-Type': 'application/json' },
  });
}

function clientWith(
  handler: (url: string, init?: RequestInit) => Response | Promise<Response>,
): { client: NetviewClient; calls: { url: string; init?: RequestInit }[] } {
  const calls: { url: string; init?: RequestInit }[] = [];
  const client = new NetviewClient('http://svc', async (url, init) => {
    calls.push({ url, init });
    return handler(url, init);
  });
  return { client, calls };
}

describe('NetviewClient', () => {
  it('uploads a network and returns the report', async () => {
    const { client, calls } = clientWith(() =>
      jsonResponse(200, {
        session_id: 'abc',
        node_count: 3,
        edge_count: 2,
        report: {
          node_count: 3,
          edge_count: 2,
          duplicate_lines_dropped: 0,
          self_loops_dropped: 0,
          malformed_lines: [],
        },
      }),
    );
    const uploaded = await client.uploadNetwork('A,B\nB,C');
    expect(uploaded.session_id).toBe('abc');
    expect(calls[0].url).toBe('http://svc/network');
    expect(JSON.parse(calls[0].init!.body as string)).toEqual({ text: 'A,B\nB,C' });
  });

  it('validates scenes coming off the wire', async () => {
    const { client } = clientWith(() => jsonResponse(200, JSON.parse(gbmText)));
    const scene = await client.layout('abc', 'force', 4);
    expect(scene.nodes).toHaveLength(83);
  });

  it('rejects corrupted scene payloads', async () => {
    const bad = JSON.parse(gbmText);
    bad.version = 9;
    const { client } = clientWith(() => jsonResponse(200, bad));
    await expect(client.currentScene('abc')).rejects.toThrowError(/unsupported scene version/);
  });

  it('carries the server error name and message verbatim', async () => {
    const { client } = clientWith(() =>
      jsonResponse(422, {
        detail: { error: 'TooFewSeeds', message: 'need at least 2 distinct seeds, got 1' },
      }),
    );
    try {
      await client.subnet('abc', { algo: 'steiner', seed_labels: ['TP53'] });
      expect.unreachable();
    } catch (err) {
      expect(err).toBeInstanceOf(ApiError);
      const apiErr = err as ApiError;
      expect(apiErr.status).toBe(422);
      expect(apiErr.errorName).toBe('TooFewSeeds');
      expect(apiErr.message).toBe('need at least 2 distinct seeds, got 1');
    }
  });

  it('maps 409 ordering violations', async () => {
    const { client } = clientWith(() =>
      jsonResponse(409, { detail: { error: 'NoLayout', message: 'compute a layout first' } }),
    );
    await expect(client.currentScene('abc')).rejects.toMatchObject({
      status: 409,
      errorName: 'NoLayout',
    });
  });

  it('sends node params requests to the right path', async () => {
    const { client, calls } = clientWith(() =>
      jsonResponse(200, { degree: 3, closeness: 1.0, betweenness: 1.0, neighbors: [1, 2, 3] }),
    );
    const params = await client.nodeParams('abc', 0);
    expect(params.degree).toBe(3);
    expect(calls[0].url).toBe('http://svc/session/abc/node/0/params');
  });
});

describe('RequestGate', () => {
  it('drops responses superseded by a newer request in the category', async () => {
    const gate = new RequestGate();
    let releaseFirst!: () => void;
    const firstDone = new Promise<void>((resolve) => (releaseFirst = resolve));

    const first = gate.run('layout', async () => {
      await firstDone;
      return 'stale';
    });
    const second = gate.run('layout', async () => 'fresh');

    expect(await second).toBe('fresh');
    releaseFirst();
    expect(await first).toBeUndefined();
  });

  it('independent categories do not interfere', async () => {
    const gate = new RequestGate();
    const a = gate.run('layout', async () => 'a');
    const b = gate.run('subnet', async () => 'b');
    expect(await a).toBe('a');
    expect(await b).toBe('b');
  });
});
