// Orchestrates one session: grids per node, ranking panel, sensitivity.
//
// Pure of DOM concerns so the whole flow is unit-testable; main.ts wires
// it to the page and re-renders after every mutation.

import { ApiClient, ApiError, LatestWins } from "./api.js";
import {
  GridState,
  applyJudgmentUpdate,
  gridFromDocument,
  withError,
} from "./gridState.js";
import {
  SensitivityState,
  applySweep,
  initialSensitivity,
  selectCriterion,
  sweepGrid,
} from "./sensitivityState.js";
import type { RankingResponse, SessionDocument } from "./types.js";

export interface RankingPanel {
  ranking: RankingResponse | null;
  aggregation: string | null;
  /** node -> unanswered cells, from the server's 409 payload. */
  missing: Record<string, string[]> | null;
  error: string | null;
}

/** A tiny two-criteria / two-alternatives judgment sandbox. */
export function sandboxDocument(): SessionDocument {
  return {
    version: 1,
    goal: "Sandbox",
    criteria: [
      { id: "first", name: "First criterion" },
      { id: "second", name: "Second criterion" },
    ],
    alternatives: [
      { id: "left", name: "Left option" },
      { id: "right", name: "Right option" },
    ],
    judgments: { criteria: {}, alternatives: { first: {}, second: {} } },
    settings: { aggregation: "weighted-sum", scale: "paper-table-1" },
  };
}

export class Workbench {
  sessionId: string | null = null;
  doc: SessionDocument | null = null;
  grids = new Map<string, GridState>();
  activeNode = "criteria";
  rankingPanel: RankingPanel = { ranking: null, aggregation: null, missing: null, error: null };
  sensitivity: SensitivityState = initialSensitivity();

  private rankingSeq = new LatestWins();
  private sweepSeq = new LatestWins();

  constructor(private readonly api: ApiClient) {}

  nodes(): string[] {
    if (!this.doc) return [];
    return ["criteria", ...this.doc.criteria.map((c) => c.id)];
  }

  /** Baseline weight of one criterion, asked of the server. */
  private async criterionWeight(criterion: string): Promise<number> {
    if (!this.sessionId) return 0;
    try {
      const weights = await this.api.getWeights(this.sessionId, "criteria");
      const index = weights.labels.indexOf(criterion);
      return index >= 0 ? weights.weights[index] : 0;
    } catch {
      return 0;
    }
  }

  private async openSession(id: string): Promise<void> {
    this.sessionId = id;
    this.doc = await this.api.getSession(id);
    this.grids.clear();
    for (const node of this.nodes()) {
      this.grids.set(node, gridFromDocument(this.doc, node));
    }
    this.activeNode = "criteria";
    this.rankingPanel = { ranking: null, aggregation: null, missing: null, error: null };
    this.sensitivity = initialSensitivity();
    await this.refreshRanking();
  }

  async loadTemplate(template = "paper"): Promise<void> {
    const { id } = await this.api.createFromTemplate(template);
    await this.openSession(id);
  }

  async newSandbox(): Promise<void> {
    const { id } = await this.api.createSession(sandboxDocument());
    await this.openSession(id);
  }

  /** Store one upper-triangle judgment; grid state tracks the response. */
  async selectGrade(node: string, i: number, j: number, grade: string): Promise<void> {
    if (!this.sessionId) return;
    const grid = this.grids.get(node);
    if (!grid || grid.readOnly) return; // read-only grids never issue requests
    this.grids.set(node, { ...grid, pending: true });
    try {
      const update = await this.api.putJudgment(this.sessionId, node, i, j, grade);
      this.grids.set(node, applyJudgmentUpdate(this.grids.get(node)!, update));
    } catch (error) {
      const message = error instanceof ApiError ? error.body.message : String(error);
      this.grids.set(node, withError(this.grids.get(node)!, message));
      return;
    }
    await this.refreshRanking();
  }

  async refreshRanking(aggregation?: string): Promise<void> {
    if (!this.sessionId) return;
    const token = this.rankingSeq.begin();
    try {
      const ranking = await this.api.getRanking(this.sessionId, aggregation);
      if (!this.rankingSeq.isCurrent(token)) return;
      this.rankingPanel = {
        ranking,
        aggregation: ranking.aggregation,
        missing: null,
        error: null,
      };
    } catch (error) {
      if (!this.rankingSeq.isCurrent(token)) return;
      if (error instanceof ApiError && error.body.code === "incomplete-judgments") {
        const missing = (error.body.details?.missing ?? {}) as Record<string, string[]>;
        this.rankingPanel = { ranking: null, aggregation: null, missing, error: null };
      } else {
        const message = error instanceof ApiError ? error.body.message : String(error);
        this.rankingPanel = { ranking: null, aggregation: null, missing: null, error: message };
      }
    }
  }

  async pickSensitivityCriterion(criterion: string): Promise<void> {
    this.sensitivity = selectCriterion(
      this.sensitivity,
      criterion,
      await this.criterionWeight(criterion),
    );
  }

  /** Slider moved: fetch baseline..g sweep; stale responses are dropped. */
  async dragSensitivity(g: number): Promise<void> {
    const criterion = this.sensitivity.criterion;
    if (!this.sessionId || !criterion) return;
    const token = this.sweepSeq.begin();
    this.sensitivity = { ...this.sensitivity, value: g, pending: true };
    try {
      const response = await this.api.getSensitivity(
        this.sessionId,
        criterion,
        sweepGrid(this.sensitivity, g),
      );
      if (!this.sweepSeq.isCurrent(token)) return;
      this.sensitivity = applySweep(this.sensitivity, g, response);
    } catch (error) {
      if (!this.sweepSeq.isCurrent(token)) return;
      const message = error instanceof ApiError ? error.body.message : String(error);
      this.sensitivity = { ...this.sensitivity, pending: false, error: message };
    }
  }
}
