import { describe, expect, it } from "vitest";

import {
  applyJudgmentUpdate,
  cellKey,
  cellView,
  gridFromDocument,
  missingCells,
} from "../src/gridState.js";
import { reciprocalOf } from "../src/grades.js";
import { PAPER_DOC, SANDBOX_JUDGMENT_UPDATE } from "./fakeService.js";
import { sandboxDocument } from "../src/workbench.js";

describe("grid state", () => {
  it("locks the diagonal and derives the lower triangle", () => {
    const grid = gridFromDocument(sandboxDocument(), "criteria");
    expect(cellView(grid, 0, 0)).toEqual({ kind: "diagonal" });
    expect(cellView(grid, 0, 1)).toEqual({ kind: "editable", grade: null });
    expect(cellView(grid, 1, 0)).toEqual({ kind: "derived", text: "" });
  });

  it("mirrors every set cell as its reciprocal string", () => {
    let grid = gridFromDocument(sandboxDocument(), "criteria");
    grid = { ...grid, grades: { [cellKey(0, 1)]: "VSI" } };
    const lower = cellView(grid, 1, 0);
    expect(lower).toEqual({ kind: "derived", text: "1/VSI" });
    grid = { ...grid, grades: { [cellKey(0, 1)]: "1/MI" } };
    expect(cellView(grid, 1, 0)).toEqual({ kind: "derived", text: "MI" });
    // invariant: the derived text is always reciprocalOf(upper grade)
    for (const grade of ["EI", "1/EI", "SI", "EMI", "1/EMI"]) {
      grid = { ...grid, grades: { [cellKey(0, 1)]: grade } };
      const view = cellView(grid, 1, 0);
      expect(view.kind === "derived" && view.text).toBe(reciprocalOf(grade));
    }
  });

  it("tracks unanswered cells", () => {
    expect(missingCells(["a", "b", "c"], {})).toEqual(["(0,1)", "(0,2)", "(1,2)"]);
    expect(missingCells(["a", "b", "c"], { "(0,2)": "SI" })).toEqual([
      "(0,1)",
      "(1,2)",
    ]);
  });

  it("marks precomputed nodes read-only", () => {
    const grid = gridFromDocument(PAPER_DOC, "economic");
    expect(grid.readOnly).toBe(true);
    const criteria = gridFromDocument(PAPER_DOC, "criteria");
    expect(criteria.readOnly).toBe(true);
  });

  it("applies a judgment response as the new server truth", () => {
    const grid = gridFromDocument(sandboxDocument(), "criteria");
    const updated = applyJudgmentUpdate(grid, SANDBOX_JUDGMENT_UPDATE);
    expect(updated.grades["(0,1)"]).toBe("SI");
    expect(updated.missing).toEqual([]);
    expect(updated.weights?.weights).toEqual([1.0, 0.0]);
    expect(updated.weights?.diagnostics[0].code).toBe("zero-weight");
    expect(updated.consistency?.acceptable).toBe(true);
    expect(updated.pending).toBe(false);
  });
});
