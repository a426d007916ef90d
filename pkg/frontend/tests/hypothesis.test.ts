import { describe, expect, it } from 'vitest';

import {
  emptyGroups,
  groupWarning,
  groupedColumns,
  hypothesisPayload,
  moveColumn,
  removeColumn,
} from '../src/hypothesis.js';

describe('moveColumn', () => {
  it('builds groups incrementally', () => {
    let state = emptyGroups();
    state = moveColumn(state, 2, 0);
    state = moveColumn(state, 0, 0);
    state = moveColumn(state, 3, 1);
    expect(state.groups).toEqual([[0, 2], [3]]);
  });

  it('moves a column between groups and compacts empties', () => {
    let state = { groups: [[0], [1, 2]] };
    state = moveColumn(state, 0, 1);
    expect(state.groups).toEqual([[0, 1, 2]]);
  });
});

describe('removeColumn', () => {
  it('drops the column and empty groups', () => {
    expect(removeColumn({ groups: [[0], [1]] }, 0).groups).toEqual([[1]]);
  });
});

describe('groupWarning', () => {
  it('warns when both hypotheses coincide', () => {
    expect(groupWarning({ groups: [[0, 1]] })).toMatch(/identical/);
    expect(groupWarning({ groups: [[0], [1]] })).toBeNull();
    expect(groupWarning(emptyGroups())).toBeNull();
  });
});

describe('hypothesisPayload', () => {
  it('explore mode sends only the mode', () => {
    expect(hypothesisPayload('explore', [1, 2], { groups: [[0]] })).toEqual({ mode: 'explore' });
  });

  it('focus mode sends partition and sorted row filter', () => {
    const payload = hypothesisPayload('focus', [5, 1], { groups: [[2], [3]] });
    expect(payload).toEqual({ mode: 'focus', partition: [[2], [3]], rows: [1, 5] });
  });

  it('empty row filter means all rows (field omitted)', () => {
    const payload = hypothesisPayload('compare', [], { groups: [[0, 1], [2]] });
    expect(payload.rows).toBeUndefined();
    expect(groupedColumns({ groups: payload.partition as number[][] })).toEqual([0, 1, 2]);
  });
});
