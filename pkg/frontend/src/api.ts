// Typed client for the session service plus request sequencing.

import type {
  ApiErrorBody,
  ConsistencyResponse,
  JudgmentUpdateResponse,
  RankingResponse,
  SensitivityResponse,
  SessionDocument,
  WeightsResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly body: ApiErrorBody,
  ) {
    super(body.message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(this.base + path, init);
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, payload as ApiErrorBody);
    }
    return payload as T;
  }

  createFromTemplate(template: string): Promise<{ id: string }> {
    return this.request("POST", "/sessions", { template });
  }

  createSession(doc: SessionDocument): Promise<{ id: string }> {
    return this.request("POST", "/sessions", doc);
  }

  getSession(id: string): Promise<SessionDocument> {
    return this.request("GET", `/sessions/${id}`);
  }

  putJudgment(
    id: string,
    node: string,
    i: number,
    j: number,
    grade: string,
  ): Promise<JudgmentUpdateResponse> {
    return this.request("PUT", `/sessions/${id}/judgments/${node}/${i}/${j}`, {
      grade,
    });
  }

  getWeights(id: string, node: string): Promise<WeightsResponse> {
    return this.request("GET", `/sessions/${id}/weights/${node}`);
  }

  getConsistency(id: string, node: string): Promise<ConsistencyResponse> {
    return this.request("GET", `/sessions/${id}/consistency/${node}`);
  }

  getRanking(id: string, aggregation?: string): Promise<RankingResponse> {
    const query = aggregation ? `?aggregation=${encodeURIComponent(aggregation)}` : "";
    return this.request("GET", `/sessions/${id}/ranking${query}`);
  }

  getSensitivity(
    id: string,
    criterion: string,
    grid: number[],
  ): Promise<SensitivityResponse> {
    const params = new URLSearchParams({ criterion, grid: grid.join(",") });
    return this.request("GET", `/sessions/${id}/sensitivity?${params}`);
  }
}

/**
 * Monotone request sequencing for one panel: responses are applied only
 * when no newer request has been issued for the same panel, so rapid
 * interactions never render stale data.
 */
export class LatestWins {
  private latest = 0;

  begin(): number {
    return ++this.latest;
  }

  isCurrent(token: number): boolean {
    return token === this.latest;
  }
}
