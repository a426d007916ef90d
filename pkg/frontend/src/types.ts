// Wire types of the session service (all indices 0-based; column names are
// accepted by the server as aliases for indices).

export interface ColumnInfo {
  name: string;
  domain: 'quantitative' | 'categorical';
}

export interface SessionInfo {
  session_id: string;
  n: number;
  m: number;
  columns: ColumnInfo[];
}

export interface ViewPair {
  i: number;
  j: number;
  score: number;
}

export type Point = [number, number];

export interface ScatterPayload {
  x: string;
  y: string;
  data: Point[];
  h1: Point[];
  h2: Point[];
  labels: string[] | null;
}

export interface TileInfo {
  rows: number[];
  cols: number[];
}

export interface TileAddResponse {
  tile_index: number;
  tiling_stats: Record<string, number>;
}

export interface HypothesisPayload {
  mode: 'explore' | 'focus' | 'compare';
  rows?: number[];
  partition?: (number | string)[][];
}
