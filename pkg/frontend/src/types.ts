// Payload shapes of the session service API.

export interface MemberDoc {
  id: string;
  name: string;
}

export interface SessionDocument {
  version: number;
  goal: string;
  criteria: MemberDoc[];
  alternatives: MemberDoc[];
  judgments?: {
    criteria?: Record<string, string>;
    alternatives?: Record<string, Record<string, string>>;
  };
  precomputed?: {
    criteria_weights?: number[];
    decision_matrix?: number[][];
  };
  settings?: { aggregation?: string; scale?: string };
}

export interface Diagnostic {
  code: string;
  message: string;
  label?: string | null;
}

export interface WeightsResponse {
  node: string;
  labels: string[];
  weights: number[];
  diagnostics: Diagnostic[];
}

export interface ConsistencyResponse {
  node: string;
  lambda_max: number;
  consistency_index: number;
  consistency_ratio: number;
  acceptable: boolean;
  n: number;
}

export interface JudgmentUpdateResponse {
  node: string;
  cell: string;
  grade: string;
  complete: boolean;
  missing: string[];
  weights?: WeightsResponse | null;
  consistency?: ConsistencyResponse | null;
}

export interface RankingEntry {
  alternative: string;
  name: string;
  rank: number;
  score: number;
}

export interface RankingResponse {
  aggregation: string;
  entries: RankingEntry[];
}

export interface SweepPoint {
  weight: number;
  ranking: RankingResponse;
}

export interface Reversal {
  threshold: number;
  leader_before: string;
  leader_after: string;
}

export interface SensitivityResponse {
  criterion: string;
  points: SweepPoint[];
  reversals: Reversal[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  details?: Record<string, unknown>;
}
