// In-memory stand-in for the session service, shaped exactly like its
// JSON responses (fixtures frozen from the real API).

import type {
  JudgmentUpdateResponse,
  RankingResponse,
  SensitivityResponse,
  SessionDocument,
} from "../src/types.js";

export const PAPER_DOC: SessionDocument = {
  version: 1,
  goal: "Sustainable IoT priorities in healthcare",
  criteria: [
    { id: "economic", name: "Economic Prosperity" },
    { id: "quality-of-life", name: "Quality of Life" },
    { id: "environmental", name: "Environmental Protection" },
  ],
  alternatives: [
    { id: "fall-detection", name: "Fall Detection" },
    { id: "medical-fridges", name: "Medical Fridges" },
    { id: "sportsmen-care", name: "Sportsmen Care" },
    { id: "patient-surveillance", name: "Patient Surveillance" },
    { id: "chronic-disease-management", name: "Chronic Disease Management" },
    { id: "ultraviolet-radiation", name: "Ultraviolet Radiation" },
    { id: "hygienic-hand-control", name: "Hygienic Hand Control" },
    { id: "sleep-control", name: "Sleep Control" },
    { id: "dental-health", name: "Dental Health" },
  ],
  precomputed: {
    criteria_weights: [0.4532, 0.3105, 0.2363],
    decision_matrix: [
      [0.109, 0.096, 0.14],
      [0.084, 0.11, 0.039],
      [0.069, 0.0836, 0.153],
      [0.117, 0.0954, 0.121],
      [0.079, 0.104, 0.025],
      [0.193, 0.132, 0.176],
      [0.098, 0.094, 0.12],
      [0.068, 0.143, 0.059],
      [0.183, 0.142, 0.167],
    ],
  },
  settings: { aggregation: "paper-mean", scale: "paper-table-1" },
};

function ranking(rows: [string, string, number][]): RankingResponse {
  return {
    aggregation: "paper-mean",
    entries: rows.map(([alternative, name, score], k) => ({
      alternative,
      name,
      rank: k + 1,
      score,
    })),
  };
}

export const PAPER_RANKING = ranking([
  ["ultraviolet-radiation", "Ultraviolet Radiation", 0.0566808],
  ["dental-health", "Dental Health", 0.0554962],
  ["fall-detection", "Fall Detection", 0.0374296],
  ["patient-surveillance", "Patient Surveillance", 0.0370795],
  ["hygienic-hand-control", "Hygienic Hand Control", 0.0339855],
  ["sportsmen-care", "Sportsmen Care", 0.0311275],
  ["sleep-control", "Sleep Control", 0.0297203],
  ["medical-fridges", "Medical Fridges", 0.0271465],
  ["chronic-disease-management", "Chronic Disease Management", 0.0246674],
]);

const RANKING_AT_ZERO = ranking([
  ["dental-health", "Dental Health", 0.0509346],
  ["ultraviolet-radiation", "Ultraviolet Radiation", 0.0503382],
  ["fall-detection", "Fall Detection", 0.0383382],
  ["sportsmen-care", "Sportsmen Care", 0.0378638],
  ["sleep-control", "Sleep Control", 0.0355664],
  ["patient-surveillance", "Patient Surveillance", 0.0354877],
  ["hygienic-hand-control", "Hygienic Hand Control", 0.0350786],
  ["medical-fridges", "Medical Fridges", 0.0264391],
  ["chronic-disease-management", "Chronic Disease Management", 0.0232867],
]);

export function paperSensitivity(grid: number[]): SensitivityResponse {
  const points = grid.map((weight) => ({
    weight,
    ranking: weight === 0 ? RANKING_AT_ZERO : PAPER_RANKING,
  }));
  const reversals =
    grid.length > 1
      ? [
          {
            threshold: 0.1518,
            leader_before: "dental-health",
            leader_after: "ultraviolet-radiation",
          },
        ]
      : [];
  return { criterion: "economic", points, reversals };
}

export const SANDBOX_JUDGMENT_UPDATE: JudgmentUpdateResponse = {
  node: "criteria",
  cell: "(0,1)",
  grade: "SI",
  complete: true,
  missing: [],
  weights: {
    node: "criteria",
    labels: ["first", "second"],
    weights: [1.0, 0.0],
    diagnostics: [
      {
        code: "zero-weight",
        message: "'second' is fully dominated and receives weight 0",
        label: "second",
      },
    ],
  },
  consistency: {
    node: "criteria",
    lambda_max: 2.0,
    consistency_index: 0.0,
    consistency_ratio: 0.0,
    acceptable: true,
    n: 2,
  },
};

type Route = (body: unknown) => { status: number; body: unknown };

function json(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json; charset=utf-8" },
  });
}

/** fetch-compatible fake: routes the handful of paths the tests exercise. */
export function makeFakeFetch() {
  const sessions = new Map<string, SessionDocument>();
  let counter = 0;
  const calls: string[] = [];

  const fetchFn = async (url: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    calls.push(`${method} ${url}`);
    const body = init?.body ? JSON.parse(init.body as string) : undefined;
    const [path, query] = url.split("?");

    if (method === "POST" && path === "/sessions") {
      const id = `session-${++counter}`;
      const isTemplate =
        typeof body === "object" && body !== null && "template" in body;
      sessions.set(id, isTemplate ? PAPER_DOC : (body as SessionDocument));
      return json(201, { id });
    }

    const match = path.match(/^\/sessions\/([^/]+)(\/.*)?$/);
    if (!match) return json(404, { code: "http-404", message: "no route" });
    const doc = sessions.get(match[1]);
    if (!doc) return json(404, { code: "unknown-session", message: "no session" });
    const rest = match[2] ?? "";

    if (method === "GET" && rest === "") return json(200, doc);

    if (method === "GET" && rest === "/ranking") {
      if (doc === PAPER_DOC) return json(200, PAPER_RANKING);
      return json(409, {
        code: "incomplete-judgments",
        message: "judgments are incomplete",
        details: { missing: { first: ["(0,1)"], second: ["(0,1)"] } },
      });
    }

    if (method === "GET" && rest === "/weights/criteria") {
      if (doc === PAPER_DOC) {
        return json(200, {
          node: "criteria",
          labels: ["economic", "quality-of-life", "environmental"],
          weights: [0.4532, 0.3105, 0.2363],
          diagnostics: [],
        });
      }
      return json(409, { code: "incomplete-judgments", message: "incomplete" });
    }

    if (method === "GET" && rest === "/sensitivity") {
      const params = new URLSearchParams(query);
      const grid = (params.get("grid") ?? "").split(",").map(Number);
      return json(200, paperSensitivity(grid));
    }

    if (method === "PUT" && rest === "/judgments/criteria/0/1") {
      return json(200, { ...SANDBOX_JUDGMENT_UPDATE, grade: body.grade });
    }

    return json(404, { code: "http-404", message: `no route ${method} ${url}` });
  };

  return { fetchFn, calls };
}

/** A fetch whose responses resolve only when the test releases them. */
export function makeSteppedFetch(responses: Array<() => Response>) {
  const pending: Array<(r: Response) => void> = [];
  const fetchFn = (_url: string, _init?: RequestInit): Promise<Response> =>
    new Promise((resolve) => {
      pending.push(resolve);
    });
  const release = (index: number): void => {
    pending[index](responses[index]());
  };
  return { fetchFn, release };
}
