// Client-side view state and the pure helpers that update it. The screen is
// a function of the last server responses plus the local selection, so a
// refresh rebuilds it from these fields alone.

import type { ColumnInfo, ViewPair } from './types.js';

export const RENDER_POINT_CAP = 10000;

export interface ViewState {
  sessionId: string | null;
  columns: ColumnInfo[];
  n: number;
  axes: { x: number; y: number } | null;
  selection: number[]; // brushed row indices, always < n
  views: ViewPair[];
  breadcrumbs: string[];
  requestId: number; // monotone; stale responses are discarded
}

export function initialState(): ViewState {
  return {
    sessionId: null,
    columns: [],
    n: 0,
    axes: null,
    selection: [],
    views: [],
    breadcrumbs: [],
    requestId: 0,
  };
}

export function nextRequestId(state: ViewState): number {
  state.requestId += 1;
  return state.requestId;
}

export function isStale(state: ViewState, id: number): boolean {
  return id !== state.requestId;
}

export function setSelection(state: ViewState, indices: number[]): void {
  state.selection = indices.filter((i) => Number.isInteger(i) && i >= 0 && i < state.n);
}

// Distinct columns of the best-scoring pairs, first-appearance order; feeds
// the overview scatterplot matrix.
export function topAttributes(views: ViewPair[], k: number): number[] {
  const seen: number[] = [];
  for (const view of views) {
    for (const c of [view.i, view.j]) {
      if (!seen.includes(c)) seen.push(c);
    }
    if (seen.length >= k) break;
  }
  return seen.slice(0, k);
}

export function pushBreadcrumb(state: ViewState, label: string, cap = 20): void {
  state.breadcrumbs.push(label);
  if (state.breadcrumbs.length > cap) {
    state.breadcrumbs.splice(0, state.breadcrumbs.length - cap);
  }
}

// Deterministic stride-based downsampling for rendering huge datasets; keeps
// the first and last rows and an even spread in between.
export function downsampleIndices(n: number, cap: number = RENDER_POINT_CAP): number[] {
  if (n <= cap) {
    return Array.from({ length: n }, (_, i) => i);
  }
  const out: number[] = [];
  const step = (n - 1) / (cap - 1);
  for (let k = 0; k < cap; k++) {
    out.push(Math.round(k * step));
  }
  return [...new Set(out)];
}

export function quantitativeColumns(columns: ColumnInfo[]): number[] {
  return columns
    .map((c, idx) => ({ c, idx }))
    .filter(({ c }) => c.domain === 'quantitative')
    .map(({ idx }) => idx);
}
