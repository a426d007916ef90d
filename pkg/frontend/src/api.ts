// Thin fetch client for the session service. Every method returns parsed
// JSON or throws with the server's error detail.

import type {
  HypothesisPayload,
  ScatterPayload,
  SessionInfo,
  TileAddResponse,
  TileInfo,
  ViewPair,
} from './types.js';

async function expectOk(resp: Response): Promise<any> {
  if (!resp.ok) {
    let detail = `${resp.status} ${resp.statusText}`;
    try {
      const body = await resp.json();
      if (body && body.detail) detail = `${detail}: ${body.detail}`;
    } catch {
      /* non-JSON error body */
    }
    throw new Error(detail);
  }
  return resp.json();
}

export class ApiClient {
  constructor(readonly baseUrl: string = '') {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  async createSession(
    file: Blob,
    opts: { filename?: string; header?: boolean; classColumn?: string; seed?: number } = {},
  ): Promise<SessionInfo> {
    const form = new FormData();
    form.append('file', file, opts.filename ?? 'data.csv');
    if (opts.header !== undefined) form.append('header', String(opts.header));
    if (opts.classColumn) form.append('class_column', opts.classColumn);
    if (opts.seed !== undefined) form.append('seed', String(opts.seed));
    return expectOk(await fetch(this.url('/sessions'), { method: 'POST', body: form }));
  }

  async sessionInfo(sid: string): Promise<SessionInfo & Record<string, unknown>> {
    return expectOk(await fetch(this.url(`/sessions/${sid}`)));
  }

  async listTiles(sid: string): Promise<TileInfo[]> {
    const doc = await expectOk(await fetch(this.url(`/sessions/${sid}/tiles`)));
    return doc.tiles;
  }

  async addTile(sid: string, rows: number[], cols: (number | string)[]): Promise<TileAddResponse> {
    return expectOk(
      await fetch(this.url(`/sessions/${sid}/tiles`), {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body: JSON.stringify({ rows, cols }),
      }),
    );
  }

  async deleteTile(sid: string, index: number): Promise<void> {
    await expectOk(
      await fetch(this.url(`/sessions/${sid}/tiles/${index}`), { method: 'DELETE' }),
    );
  }

  async setHypothesis(sid: string, payload: HypothesisPayload): Promise<{ warning?: string }> {
    return expectOk(
      await fetch(this.url(`/sessions/${sid}/hypothesis`), {
        method: 'PUT',
        headers: { 'Content-Type': 'application/json' },
        body: JSON.stringify(payload),
      }),
    );
  }

  async views(
    sid: string,
    params: { limit?: number; widen?: boolean } = {},
  ): Promise<ViewPair[]> {
    const query = new URLSearchParams();
    if (params.limit !== undefined) query.set('limit', String(params.limit));
    if (params.widen !== undefined) query.set('widen', String(params.widen));
    const suffix = query.toString() ? `?${query}` : '';
    return expectOk(await fetch(this.url(`/sessions/${sid}/views${suffix}`)));
  }

  async scatter(sid: string, x: number | string, y: number | string): Promise<ScatterPayload> {
    const query = new URLSearchParams({ x: String(x), y: String(y) });
    return expectOk(await fetch(this.url(`/sessions/${sid}/scatter?${query}`)));
  }

  async getSnapshot(sid: string): Promise<unknown> {
    return expectOk(await fetch(this.url(`/sessions/${sid}/snapshot`)));
  }

  async putSnapshot(sid: string, snapshot: unknown): Promise<void> {
    await expectOk(
      await fetch(this.url(`/sessions/${sid}/snapshot`), {
        method: 'PUT',
        headers: { 'Content-Type': 'application/json' },
        body: JSON.stringify(snapshot),
      }),
    );
  }
}
