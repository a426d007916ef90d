// SVG scatterplot rendering: the data against both hypothesis samples, with
// optional marginal histograms. Pure string builders, testable without a DOM.

import type { Point, ScatterPayload } from './types.js';

// Glyph convention: data are black hollow circles, the keep-everything
// sample (hypothesis 1) green crosses, the break-apart sample (hypothesis 2)
// blue plus signs.
export const DATA_GLYPH = { color: '#000000', fill: 'none', shape: 'circle' } as const;
export const H1_GLYPH = { color: '#2ca02c', shape: 'cross' } as const;
export const H2_GLYPH = { color: '#1f77b4', shape: 'plus' } as const;

export interface Scale {
  (v: number): number;
  domain: [number, number];
  range: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((v: number) => r0 + ((v - d0) / span) * (r1 - r0)) as Scale;
  scale.domain = domain;
  scale.range = range;
  return scale;
}

export function invertScale(scale: Scale, px: number): number {
  const [d0, d1] = scale.domain;
  const [r0, r1] = scale.range;
  const span = r1 - r0 || 1;
  return d0 + ((px - r0) / span) * (d1 - d0);
}

export function extent(values: number[]): [number, number] {
  if (values.length === 0) return [0, 1];
  let lo = values[0];
  let hi = values[0];
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return lo === hi ? [lo - 0.5, hi + 0.5] : [lo, hi];
}

export function histogram(values: number[], bins: number, domain?: [number, number]): number[] {
  const [lo, hi] = domain ?? extent(values);
  const counts = new Array<number>(bins).fill(0);
  const span = hi - lo || 1;
  for (const v of values) {
    let b = Math.floor(((v - lo) / span) * bins);
    if (b < 0) b = 0;
    if (b >= bins) b = bins - 1;
    counts[b] += 1;
  }
  return counts;
}

function circleMarkup(x: number, y: number, r: number): string {
  return `<circle cx="${x.toFixed(1)}" cy="${y.toFixed(1)}" r="${r}" ` +
    `stroke="${DATA_GLYPH.color}" fill="${DATA_GLYPH.fill}"/>`;
}

function crossMarkup(x: number, y: number, r: number): string {
  const d = `M${(x - r).toFixed(1)} ${(y - r).toFixed(1)}L${(x + r).toFixed(1)} ${(y + r).toFixed(1)}` +
    `M${(x - r).toFixed(1)} ${(y + r).toFixed(1)}L${(x + r).toFixed(1)} ${(y - r).toFixed(1)}`;
  return `<path d="${d}" stroke="${H1_GLYPH.color}" fill="none"/>`;
}

function plusMarkup(x: number, y: number, r: number): string {
  const d = `M${(x - r).toFixed(1)} ${y.toFixed(1)}L${(x + r).toFixed(1)} ${y.toFixed(1)}` +
    `M${x.toFixed(1)} ${(y - r).toFixed(1)}L${x.toFixed(1)} ${(y + r).toFixed(1)}`;
  return `<path d="${d}" stroke="${H2_GLYPH.color}" fill="none"/>`;
}

export interface ScatterOptions {
  width?: number;
  height?: number;
  margin?: number;
  pointRadius?: number;
  histograms?: boolean;
  histogramBins?: number;
  selection?: number[]; // data rows to highlight
}

export interface ScatterGeometry {
  xScale: Scale;
  yScale: Scale;
  plot: { x0: number; y0: number; x1: number; y1: number };
}

export function scatterGeometry(payload: ScatterPayload, opts: ScatterOptions = {}): ScatterGeometry {
  const width = opts.width ?? 520;
  const height = opts.height ?? 520;
  const margin = opts.margin ?? 36;
  const all = [...payload.data, ...payload.h1, ...payload.h2];
  const xScale = linearScale(extent(all.map((p) => p[0])), [margin, width - margin]);
  // SVG y grows downwards; flip so larger values plot higher
  const yScale = linearScale(extent(all.map((p) => p[1])), [height - margin, margin]);
  return { xScale, yScale, plot: { x0: margin, y0: margin, x1: width - margin, y1: height - margin } };
}

function layerMarkup(points: Point[], geo: ScatterGeometry, r: number,
                     mark: (x: number, y: number, r: number) => string): string {
  return points.map(([px, py]) => mark(geo.xScale(px), geo.yScale(py), r)).join('');
}

function histogramMarkup(values: number[], geo: ScatterGeometry, bins: number,
                         side: 'top' | 'right'): string {
  const scale = side === 'top' ? geo.xScale : geo.yScale;
  const counts = histogram(values, bins, scale.domain);
  const peak = Math.max(...counts, 1);
  const thickness = 26;
  const bars: string[] = [];
  const [r0, r1] = scale.range;
  const step = (r1 - r0) / bins;
  counts.forEach((count, b) => {
    const size = (count / peak) * thickness;
    if (side === 'top') {
      const x = r0 + b * step;
      bars.push(`<rect x="${Math.min(x, x + step).toFixed(1)}" y="${(geo.plot.y0 - size).toFixed(1)}" ` +
        `width="${Math.abs(step).toFixed(1)}" height="${size.toFixed(1)}" class="hist"/>`);
    } else {
      const y = r0 + b * step; // range is flipped for y
      bars.push(`<rect x="${geo.plot.x1.toFixed(1)}" y="${Math.min(y, y + step).toFixed(1)}" ` +
        `width="${size.toFixed(1)}" height="${Math.abs(step).toFixed(1)}" class="hist"/>`);
    }
  });
  return `<g class="hist-${side}" fill="#bbbbbb">${bars.join('')}</g>`;
}

// Full SVG document for one view: break-sample under keep-sample under data,
// so the real points stay visible on top.
export function renderScatterSVG(payload: ScatterPayload, opts: ScatterOptions = {}): string {
  const width = opts.width ?? 520;
  const height = opts.height ?? 520;
  const r = opts.pointRadius ?? 3.5;
  const geo = scatterGeometry(payload, opts);
  const parts: string[] = [];
  parts.push(`<g class="layer-h2">${layerMarkup(payload.h2, geo, r, plusMarkup)}</g>`);
  parts.push(`<g class="layer-h1">${layerMarkup(payload.h1, geo, r, crossMarkup)}</g>`);
  parts.push(`<g class="layer-data">${layerMarkup(payload.data, geo, r, circleMarkup)}</g>`);
  if (opts.selection && opts.selection.length > 0) {
    const marks = opts.selection
      .filter((i) => i >= 0 && i < payload.data.length)
      .map((i) => payload.data[i])
      .map(([px, py]) =>
        `<circle cx="${geo.xScale(px).toFixed(1)}" cy="${geo.yScale(py).toFixed(1)}" ` +
        `r="${r + 2}" stroke="#d62728" fill="none"/>`)
      .join('');
    parts.push(`<g class="layer-selection">${marks}</g>`);
  }
  if (opts.histograms) {
    const bins = opts.histogramBins ?? 12;
    parts.push(histogramMarkup(payload.data.map((p) => p[0]), geo, bins, 'top'));
    parts.push(histogramMarkup(payload.data.map((p) => p[1]), geo, bins, 'right'));
  }
  const frame = `<rect x="${geo.plot.x0}" y="${geo.plot.y0}" ` +
    `width="${geo.plot.x1 - geo.plot.x0}" height="${geo.plot.y1 - geo.plot.y0}" ` +
    `stroke="#888888" fill="none"/>`;
  return `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}">${frame}${parts.join('')}</svg>`;
}

// Class labels of the selected data points ("what are these?"), deduplicated
// with counts, for the side panel.
export function selectionLabelSummary(labels: string[] | null, selection: number[]): string[] {
  if (!labels || selection.length === 0) return [];
  const counts = new Map<string, number>();
  for (const idx of selection) {
    if (idx < 0 || idx >= labels.length) continue;
    counts.set(labels[idx], (counts.get(labels[idx]) ?? 0) + 1);
  }
  return [...counts.entries()]
    .sort((a, b) => b[1] - a[1])
    .map(([label, count]) => `${label} (${count})`);
}
