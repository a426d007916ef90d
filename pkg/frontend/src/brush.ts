// Brushing: a dragged rectangle over the scatterplot selects data points;
// confirming the selection turns it into a background tile over the brushed
// rows and the chosen columns (default: the two axes on screen).

import type { Point } from './types.js';

export interface BrushRect {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

export function normalizeRect(rect: BrushRect): BrushRect {
  return {
    x0: Math.min(rect.x0, rect.x1),
    x1: Math.max(rect.x0, rect.x1),
    y0: Math.min(rect.y0, rect.y1),
    y1: Math.max(rect.y0, rect.y1),
  };
}

// Indices of the data points inside the rectangle (inclusive bounds),
// in ascending row order. Coordinates are data coordinates.
export function pointsInRect(points: Point[], rect: BrushRect): number[] {
  const r = normalizeRect(rect);
  const out: number[] = [];
  points.forEach(([x, y], idx) => {
    if (x >= r.x0 && x <= r.x1 && y >= r.y0 && y <= r.y1) out.push(idx);
  });
  return out;
}

export interface TilePayload {
  rows: number[];
  cols: (number | string)[];
}

// The POST /tiles body for a confirmed selection. Rows are the brushed data
// point indices; columns default to the axes the analyst brushed over.
export function tilePayloadFromSelection(
  selection: number[],
  cols: (number | string)[],
): TilePayload {
  if (selection.length === 0) throw new Error('empty selection cannot form a tile');
  if (cols.length === 0) throw new Error('a tile needs at least one column');
  const rows = [...new Set(selection)].sort((a, b) => a - b);
  return { rows, cols: [...cols] };
}

export function selectAll(n: number): number[] {
  return Array.from({ length: n }, (_, i) => i);
}
