// Pairwise-judgment grid state: what each cell shows and may do.
//
// Only the strict upper triangle is editable; the lower triangle always
// renders the reciprocal of its mirror cell, and the diagonal is locked.
// Weights and the consistency badge hold the server's latest response,
// never a locally derived value.

import { reciprocalOf } from "./grades.js";
import type {
  ConsistencyResponse,
  JudgmentUpdateResponse,
  SessionDocument,
  WeightsResponse,
} from "./types.js";

export type CellView =
  | { kind: "diagonal" }
  | { kind: "editable"; grade: string | null }
  | { kind: "derived"; text: string };

export interface GridState {
  node: string;
  labels: string[];
  readOnly: boolean;
  grades: Record<string, string>;
  missing: string[];
  weights: WeightsResponse | null;
  consistency: ConsistencyResponse | null;
  pending: boolean;
  error: string | null;
}

export function cellKey(i: number, j: number): string {
  return `(${i},${j})`;
}

export function nodeLabels(doc: SessionDocument, node: string): string[] {
  return node === "criteria"
    ? doc.criteria.map((c) => c.id)
    : doc.alternatives.map((a) => a.id);
}

export function nodeIsPrecomputed(doc: SessionDocument, node: string): boolean {
  if (node === "criteria") {
    return doc.precomputed?.criteria_weights !== undefined;
  }
  return doc.precomputed?.decision_matrix !== undefined;
}

function storedGrades(doc: SessionDocument, node: string): Record<string, string> {
  const cells =
    node === "criteria"
      ? doc.judgments?.criteria
      : doc.judgments?.alternatives?.[node];
  return { ...(cells ?? {}) };
}

export function missingCells(labels: string[], grades: Record<string, string>): string[] {
  const missing: string[] = [];
  for (let i = 0; i < labels.length; i++) {
    for (let j = i + 1; j < labels.length; j++) {
      if (!(cellKey(i, j) in grades)) missing.push(cellKey(i, j));
    }
  }
  return missing;
}

export function gridFromDocument(doc: SessionDocument, node: string): GridState {
  const labels = nodeLabels(doc, node);
  const grades = storedGrades(doc, node);
  return {
    node,
    labels,
    readOnly: nodeIsPrecomputed(doc, node),
    grades,
    missing: missingCells(labels, grades),
    weights: null,
    consistency: null,
    pending: false,
    error: null,
  };
}

/** What cell (i, j) of the grid renders. */
export function cellView(state: GridState, i: number, j: number): CellView {
  if (i === j) return { kind: "diagonal" };
  if (i < j) return { kind: "editable", grade: state.grades[cellKey(i, j)] ?? null };
  const mirror = state.grades[cellKey(j, i)];
  return { kind: "derived", text: mirror ? reciprocalOf(mirror) : "" };
}

export function applyJudgmentUpdate(
  state: GridState,
  update: JudgmentUpdateResponse,
): GridState {
  return {
    ...state,
    grades: { ...state.grades, [update.cell]: update.grade },
    missing: update.missing,
    weights: update.weights ?? null,
    consistency: update.consistency ?? null,
    pending: false,
    error: null,
  };
}

export function withError(state: GridState, message: string): GridState {
  return { ...state, pending: false, error: message };
}
