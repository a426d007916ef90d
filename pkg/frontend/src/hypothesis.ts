// Column-group editor: the analyst drags columns into groups; the groups
// become the hypothesis partition. One group means "keep vs keep" - the two
// hypotheses coincide and the server will answer with zero scores everywhere.

import type { HypothesisPayload } from './types.js';

export interface GroupsState {
  // column indices per group; group order is display order
  groups: number[][];
}

export function emptyGroups(): GroupsState {
  return { groups: [] };
}

// Move a column into the group at `target` (append a fresh group when target
// is the current group count); drops it from wherever it was. Empty groups
// are compacted away.
export function moveColumn(state: GroupsState, column: number, target: number): GroupsState {
  const cleaned = state.groups.map((g) => g.filter((c) => c !== column));
  while (cleaned.length <= target) cleaned.push([]);
  cleaned[target] = [...cleaned[target], column].sort((a, b) => a - b);
  return { groups: cleaned.filter((g) => g.length > 0) };
}

export function removeColumn(state: GroupsState, column: number): GroupsState {
  return { groups: state.groups.map((g) => g.filter((c) => c !== column)).filter((g) => g.length > 0) };
}

export function groupedColumns(state: GroupsState): number[] {
  return state.groups.flat().sort((a, b) => a - b);
}

// Single non-empty group: the keep and break tilings coincide, so warn
// before the analyst wonders why every score is zero.
export function groupWarning(state: GroupsState): string | null {
  return state.groups.length === 1 ? 'hypotheses identical: add a second group' : null;
}

// PUT /hypothesis body. An empty row filter means "all rows" (omitted on the
// wire); explore mode ignores rows and groups entirely.
export function hypothesisPayload(
  mode: 'explore' | 'focus' | 'compare',
  rowsFilter: number[],
  state: GroupsState,
): HypothesisPayload {
  if (mode === 'explore') return { mode };
  const payload: HypothesisPayload = { mode, partition: state.groups.map((g) => [...g]) };
  if (rowsFilter.length > 0) payload.rows = [...rowsFilter].sort((a, b) => a - b);
  return payload;
}
