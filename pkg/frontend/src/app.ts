// Browser entry point: wires the API client, view state, and SVG rendering
// into the exploration loop. Single-threaded event flow with at most one
// in-flight mutating request; stale async responses are discarded by the
// monotone request id in the state.

import { ApiClient } from './api.js';
import { pointsInRect, selectAll, tilePayloadFromSelection } from './brush.js';
import {
  emptyGroups,
  groupWarning,
  hypothesisPayload,
  moveColumn,
  type GroupsState,
} from './hypothesis.js';
import {
  initialState,
  isStale,
  nextRequestId,
  pushBreadcrumb,
  quantitativeColumns,
  setSelection,
  topAttributes,
  downsampleIndices,
  RENDER_POINT_CAP,
} from './state.js';
import {
  invertScale,
  renderScatterSVG,
  scatterGeometry,
  selectionLabelSummary,
} from './scatter.js';
import type { ScatterPayload } from './types.js';

const api = new ApiClient('');
const state = initialState();
let groups: GroupsState = emptyGroups();
let mode: 'explore' | 'focus' | 'compare' = 'explore';
let currentScatter: ScatterPayload | null = null;
let renderIndices: number[] = [];

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function columnName(idx: number): string {
  return state.columns[idx]?.name ?? String(idx);
}

function setStatus(text: string, isError = false): void {
  const status = el<HTMLDivElement>('status');
  status.textContent = text;
  status.className = isError ? 'error' : '';
}

function downsampled(payload: ScatterPayload): ScatterPayload {
  if (payload.data.length <= RENDER_POINT_CAP) {
    renderIndices = selectAll(payload.data.length);
    return payload;
  }
  renderIndices = downsampleIndices(payload.data.length);
  const pick = <T>(arr: T[]) => renderIndices.map((i) => arr[i]);
  return { ...payload, data: pick(payload.data), h1: pick(payload.h1), h2: pick(payload.h2) };
}

async function refreshScatter(): Promise<void> {
  if (!state.sessionId || !state.axes) return;
  const id = nextRequestId(state);
  const payload = await api.scatter(state.sessionId, state.axes.x, state.axes.y);
  if (isStale(state, id)) return;
  currentScatter = downsampled(payload);
  drawScatter();
}

function drawScatter(): void {
  if (!currentScatter) return;
  const holder = el<HTMLDivElement>('scatter');
  const selectionOnScreen = state.selection
    .map((row) => renderIndices.indexOf(row))
    .filter((k) => k >= 0);
  holder.innerHTML = renderScatterSVG(currentScatter, {
    histograms: el<HTMLInputElement>('histograms').checked,
    selection: selectionOnScreen,
  });
  el<HTMLDivElement>('axes-label').textContent =
    `${currentScatter.x} vs ${currentScatter.y}`;
  const labels = selectionLabelSummary(currentScatter.labels, state.selection);
  el<HTMLDivElement>('selection-info').textContent =
    state.selection.length === 0
      ? ''
      : `${state.selection.length} selected` + (labels.length ? ` - ${labels.join(', ')}` : '');
  attachBrush(holder);
}

function attachBrush(holder: HTMLDivElement): void {
  const svg = holder.querySelector('svg');
  if (!svg || !currentScatter) return;
  const geo = scatterGeometry(currentScatter, {});
  let start: { x: number; y: number } | null = null;

  const toLocal = (ev: MouseEvent) => {
    const box = svg.getBoundingClientRect();
    return { x: ev.clientX - box.left, y: ev.clientY - box.top };
  };

  svg.addEventListener('mousedown', (ev) => {
    start = toLocal(ev as MouseEvent);
  });
  svg.addEventListener('mouseup', (ev) => {
    if (!start || !currentScatter) return;
    const end = toLocal(ev as MouseEvent);
    const rect = {
      x0: invertScale(geo.xScale, start.x),
      x1: invertScale(geo.xScale, end.x),
      y0: invertScale(geo.yScale, start.y),
      y1: invertScale(geo.yScale, end.y),
    };
    start = null;
    const local = pointsInRect(currentScatter.data, rect);
    setSelection(state, local.map((k) => renderIndices[k]));
    drawScatter();
  });
}

async function refreshTiles(): Promise<void> {
  if (!state.sessionId) return;
  const tiles = await api.listTiles(state.sessionId);
  const list = el<HTMLUListElement>('tile-list');
  list.innerHTML = '';
  tiles.forEach((tile, index) => {
    const item = document.createElement('li');
    const cols = tile.cols.map(columnName).join(',');
    item.textContent = `#${index}: ${tile.rows.length} rows x [${cols}] `;
    const remove = document.createElement('button');
    remove.textContent = 'x';
    remove.addEventListener('click', async () => {
      await api.deleteTile(state.sessionId!, index);
      await refreshTiles();
      await refreshScatter();
    });
    item.appendChild(remove);
    list.appendChild(item);
  });
}

async function nextView(): Promise<void> {
  if (!state.sessionId) return;
  const widen = el<HTMLInputElement>('widen').checked;
  const views = await api.views(state.sessionId, { limit: 10, widen });
  state.views = views;
  const list = el<HTMLOListElement>('view-list');
  list.innerHTML = '';
  views.forEach((view) => {
    const item = document.createElement('li');
    const label = `${columnName(view.i)}-${columnName(view.j)}`;
    item.textContent = `${label}: ${view.score.toFixed(3)}`;
    item.addEventListener('click', () => {
      state.axes = { x: view.i, y: view.j };
      void refreshScatter();
    });
    list.appendChild(item);
  });
  if (views.length > 0) {
    const top = views[0];
    state.axes = { x: top.i, y: top.j };
    pushBreadcrumb(state, `${columnName(top.i)}-${columnName(top.j)}`);
    el<HTMLDivElement>('breadcrumbs').textContent = state.breadcrumbs.join(' > ');
    await refreshScatter();
    await renderOverview();
  }
}

async function renderOverview(): Promise<void> {
  if (!state.sessionId || state.views.length === 0) return;
  const attrs = topAttributes(state.views, 5);
  const holder = el<HTMLDivElement>('overview');
  holder.innerHTML = '';
  for (let a = 0; a < attrs.length; a++) {
    for (let b = a + 1; b < attrs.length; b++) {
      const payload = await api.scatter(state.sessionId, attrs[a], attrs[b]);
      const cell = document.createElement('div');
      cell.className = 'overview-cell';
      cell.innerHTML = renderScatterSVG(downsampledMini(payload), {
        width: 120, height: 120, margin: 6, pointRadius: 1.5,
      });
      cell.title = `${payload.x} vs ${payload.y}`;
      cell.addEventListener('click', () => {
        state.axes = { x: attrs[a], y: attrs[b] };
        void refreshScatter();
      });
      holder.appendChild(cell);
    }
  }
}

function downsampledMini(payload: ScatterPayload): ScatterPayload {
  if (payload.data.length <= 500) return payload;
  const keep = downsampleIndices(payload.data.length, 500);
  const pick = <T>(arr: T[]) => keep.map((i) => arr[i]);
  return { ...payload, data: pick(payload.data), h1: pick(payload.h1), h2: pick(payload.h2) };
}

function renderGroupEditor(): void {
  const holder = el<HTMLDivElement>('groups');
  holder.innerHTML = '';
  const quant = quantitativeColumns(state.columns);
  quant.forEach((col) => {
    const row = document.createElement('div');
    const label = document.createElement('span');
    label.textContent = columnName(col);
    const select = document.createElement('select');
    const current = groups.groups.findIndex((g) => g.includes(col));
    const options = ['-', ...groups.groups.map((_, k) => `group ${k + 1}`), 'new group'];
    options.forEach((text, k) => {
      const opt = document.createElement('option');
      opt.value = String(k - 1);
      opt.textContent = text;
      if (k - 1 === current) opt.selected = true;
      select.appendChild(opt);
    });
    select.addEventListener('change', () => {
      const target = Number(select.value);
      groups = target < 0
        ? { groups: groups.groups.map((g) => g.filter((c) => c !== col)).filter((g) => g.length > 0) }
        : moveColumn(groups, col, target);
      renderGroupEditor();
    });
    row.appendChild(label);
    row.appendChild(select);
    holder.appendChild(row);
  });
  const warning = groupWarning(groups);
  el<HTMLDivElement>('group-warning').textContent = warning ?? '';
}

async function applyHypothesis(): Promise<void> {
  if (!state.sessionId) return;
  const payload = hypothesisPayload(mode, mode === 'explore' ? [] : state.selection, groups);
  const resp = await api.setHypothesis(state.sessionId, payload);
  setStatus(resp.warning ? `hypothesis set (${resp.warning})` : 'hypothesis set');
  await refreshScatter();
}

async function brushToTile(): Promise<void> {
  if (!state.sessionId || !state.axes) return;
  const rows = state.selection.length > 0 ? state.selection : selectAll(state.n);
  const cols = [state.axes.x, state.axes.y];
  const payload = tilePayloadFromSelection(rows, cols);
  const resp = await api.addTile(state.sessionId, payload.rows, payload.cols);
  setStatus(`tile #${resp.tile_index} added`);
  await refreshTiles();
  await refreshScatter();
}

async function onUpload(): Promise<void> {
  const input = el<HTMLInputElement>('file');
  if (!input.files || input.files.length === 0) return;
  try {
    const classColumn = el<HTMLInputElement>('class-column').value.trim();
    const info = await api.createSession(input.files[0], {
      filename: input.files[0].name,
      classColumn: classColumn || undefined,
    });
    state.sessionId = info.session_id;
    state.columns = info.columns;
    state.n = info.n;
    state.selection = [];
    state.views = [];
    state.breadcrumbs = [];
    groups = emptyGroups();
    setStatus(`session ${info.session_id}: ${info.n} rows x ${info.m} columns`);
    renderGroupEditor();
    await refreshTiles();
    await nextView();
  } catch (err) {
    setStatus(String(err), true);
  }
}

export function wireUp(): void {
  el<HTMLInputElement>('file').addEventListener('change', () => void onUpload());
  el<HTMLButtonElement>('next-view').addEventListener('click', () => void nextView());
  el<HTMLButtonElement>('make-tile').addEventListener('click', () => void brushToTile());
  el<HTMLButtonElement>('apply-hypothesis').addEventListener('click', () => void applyHypothesis());
  el<HTMLInputElement>('histograms').addEventListener('change', () => drawScatter());
  el<HTMLSelectElement>('mode').addEventListener('change', (ev) => {
    mode = (ev.target as HTMLSelectElement).value as typeof mode;
  });
  el<HTMLButtonElement>('clear-selection').addEventListener('click', () => {
    state.selection = [];
    drawScatter();
  });
}

if (typeof document !== 'undefined' && document.getElementById('file')) {
  wireUp();
}
