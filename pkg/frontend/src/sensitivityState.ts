// Sensitivity view state: a slider over one criterion's weight.
//
// The displayed ranking always comes from a server response for the
// displayed slider value; reversal markers are the server's crossing
// thresholds for the swept interval.

import type { RankingResponse, Reversal, SensitivityResponse } from "./types.js";

export interface SensitivityState {
  criterion: string | null;
  baseline: number;
  value: number;
  /** Server ranking at `value`; null until the first response lands. */
  displayed: RankingResponse | null;
  reversals: Reversal[];
  /** Leader at the baseline point, for change highlighting. */
  baselineLeader: string | null;
  /** Set when the leader at `value` differs from the baseline leader. */
  newLeader: string | null;
  pending: boolean;
  error: string | null;
}

export function initialSensitivity(): SensitivityState {
  return {
    criterion: null,
    baseline: 0,
    value: 0,
    displayed: null,
    reversals: [],
    baselineLeader: null,
    newLeader: null,
    pending: false,
    error: null,
  };
}

export function selectCriterion(
  state: SensitivityState,
  criterion: string,
  baselineWeight: number,
): SensitivityState {
  return {
    ...initialSensitivity(),
    criterion,
    baseline: baselineWeight,
    value: baselineWeight,
  };
}

/** The grid to request for slider value g: baseline plus g (sorted, deduped). */
export function sweepGrid(state: SensitivityState, g: number): number[] {
  const grid = g === state.baseline ? [g] : [state.baseline, g].sort((a, b) => a - b);
  return grid;
}

export function applySweep(
  state: SensitivityState,
  g: number,
  response: SensitivityResponse,
): SensitivityState {
  const atValue = response.points.find((p) => p.weight === g) ?? response.points[0];
  const atBaseline =
    response.points.find((p) => p.weight === state.baseline) ?? atValue;
  const baselineLeader = atBaseline.ranking.entries[0]?.alternative ?? null;
  const leader = atValue.ranking.entries[0]?.alternative ?? null;
  return {
    ...state,
    value: g,
    displayed: atValue.ranking,
    reversals: response.reversals,
    baselineLeader,
    newLeader: leader !== baselineLeader ? leader : null,
    pending: false,
    error: null,
  };
}
