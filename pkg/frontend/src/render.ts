// Pure HTML renderers; main.ts assigns the output and binds events.

import { GRADE_CHOICES, gradeTooltip } from "./grades.js";
import { GridState, cellView } from "./gridState.js";
import { SensitivityState } from "./sensitivityState.js";
import type { RankingPanel } from "./workbench.js";
import type { RankingResponse, SessionDocument } from "./types.js";

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderNodeTabs(nodes: string[], active: string, doc: SessionDocument): string {
  const names = new Map(doc.criteria.map((c) => [c.id, c.name]));
  return nodes
    .map((node) => {
      const label = node === "criteria" ? "Criteria" : names.get(node) ?? node;
      const cls = node === active ? "tab active" : "tab";
      return `<button class="${cls}" data-node="${esc(node)}">${esc(label)}</button>`;
    })
    .join("");
}

function gradeSelect(node: string, i: number, j: number, current: string | null): string {
  const options = [
    `<option value=""${current === null ? " selected" : ""}>—</option>`,
    ...GRADE_CHOICES.map(
      (g) =>
        `<option value="${g}" title="${esc(gradeTooltip(g))}"` +
        `${current === g ? " selected" : ""}>${g}</option>`,
    ),
  ].join("");
  return (
    `<select class="grade" data-node="${esc(node)}" data-i="${i}" data-j="${j}"` +
    ` title="${current ? esc(gradeTooltip(current)) : "unset"}">${options}</select>`
  );
}

export function renderGrid(state: GridState): string {
  const n = state.labels.length;
  const head = [
    "<tr><th></th>",
    ...state.labels.map((label) => `<th>${esc(label)}</th>`),
    "</tr>",
  ].join("");
  const rows: string[] = [];
  for (let i = 0; i < n; i++) {
    const cells: string[] = [`<th>${esc(state.labels[i])}</th>`];
    for (let j = 0; j < n; j++) {
      const view = cellView(state, i, j);
      if (view.kind === "diagonal") {
        cells.push('<td class="diag">1</td>');
      } else if (view.kind === "editable") {
        cells.push(
          state.readOnly
            ? `<td class="locked">${esc(view.grade ?? "—")}</td>`
            : `<td>${gradeSelect(state.node, i, j, view.grade)}</td>`,
        );
      } else {
        cells.push(`<td class="derived">${esc(view.text || "—")}</td>`);
      }
    }
    rows.push(`<tr>${cells.join("")}</tr>`);
  }

  const badge = renderConsistencyBadge(state);
  const bars = renderWeightBars(state);
  const chips = (state.weights?.diagnostics ?? [])
    .map((d) => `<span class="chip chip-${esc(d.code)}" title="${esc(d.message)}">${esc(d.code)}</span>`)
    .join(" ");
  const note = state.readOnly
    ? '<p class="muted">This node ships precomputed priorities; the grid is read-only.</p>'
    : state.missing.length
      ? `<p class="muted">Unanswered cells: ${state.missing.map(esc).join(", ")}</p>`
      : "";
  const error = state.error ? `<p class="error">${esc(state.error)}</p>` : "";
  return `
    <div class="grid-head">${badge}${chips}</div>
    <table class="pairwise">${head}${rows.join("")}</table>
    ${note}${error}${bars}`;
}

function renderConsistencyBadge(state: GridState): string {
  const report = state.consistency;
  if (!report) return '<span class="badge neutral">CR —</span>';
  const cls = report.acceptable ? "badge ok" : "badge bad";
  return `<span class="${cls}">CR ${report.consistency_ratio.toFixed(4)}</span>`;
}

function renderWeightBars(state: GridState): string {
  const weights = state.weights;
  if (!weights) return "";
  const peak = Math.max(...weights.weights, 1e-9);
  const bars = weights.labels
    .map((label, k) => {
      const w = weights.weights[k];
      const width = Math.round((w / peak) * 100);
      return (
        `<div class="bar-row"><span class="bar-label">${esc(label)}</span>` +
        `<div class="bar" style="width:${width}%"></div>` +
        `<span class="bar-value">${w.toFixed(2)}</span></div>`
      );
    })
    .join("");
  return `<div class="weights">${bars}</div>`;
}

export function renderRankingPanel(
  panel: RankingPanel,
  doc: SessionDocument,
  highlight: string | null = null,
): string {
  if (panel.missing) {
    const items = Object.entries(panel.missing)
      .map(([node, cells]) => `<li><b>${esc(node)}</b>: ${cells.map(esc).join(", ")}</li>`)
      .join("");
    return `<p>Finish these judgments to rank:</p><ul class="todo">${items}</ul>`;
  }
  if (panel.error) return `<p class="error">${esc(panel.error)}</p>`;
  if (!panel.ranking) return '<p class="muted">No ranking yet.</p>';
  return renderRankingList(panel.ranking, highlight) +
    `<p class="muted">aggregation: ${esc(panel.ranking.aggregation)}</p>`;
}

export function renderRankingList(ranking: RankingResponse, highlight: string | null): string {
  const peak = Math.max(...ranking.entries.map((e) => e.score), 1e-9);
  const rows = ranking.entries
    .map((entry) => {
      const width = Math.round((entry.score / peak) * 100);
      const cls = entry.alternative === highlight ? "rank-row highlight" : "rank-row";
      return (
        `<div class="${cls}"><span class="rank-pos">${entry.rank}</span>` +
        `<span class="rank-name">${esc(entry.name)}</span>` +
        `<div class="bar" style="width:${width}%"></div>` +
        `<span class="rank-score">${entry.score.toFixed(4)}</span></div>`
      );
    })
    .join("");
  return `<div class="ranking">${rows}</div>`;
}

export function renderSensitivity(state: SensitivityState, doc: SessionDocument): string {
  const options = doc.criteria
    .map(
      (c) =>
        `<option value="${esc(c.id)}"${c.id === state.criterion ? " selected" : ""}>` +
        `${esc(c.name)}</option>`,
    )
    .join("");
  const slider = state.criterion
    ? `<input type="range" id="sens-slider" min="0" max="1" step="0.001" value="${state.value}">
       <span id="sens-value">${state.value.toFixed(4)}</span>`
    : "";
  const markers = state.reversals
    .map(
      (r) =>
        `<li class="marker">at ${r.threshold.toFixed(4)}: ` +
        `${esc(r.leader_before)} &harr; ${esc(r.leader_after)}</li>`,
    )
    .join("");
  const leaderNote = state.newLeader
    ? `<p class="leader-change">New leader: <b>${esc(state.newLeader)}</b></p>`
    : "";
  const body = state.displayed
    ? renderRankingList(state.displayed, state.newLeader)
    : '<p class="muted">Pick a criterion and drag.</p>';
  const error = state.error ? `<p class="error">${esc(state.error)}</p>` : "";
  return `
    <label>Criterion <select id="sens-criterion">
      <option value=""${state.criterion ? "" : " selected"}>—</option>${options}
    </select></label>
    ${slider}
    ${leaderNote}${body}${error}
    ${markers ? `<ul class="markers">${markers}</ul>` : ""}`;
}
