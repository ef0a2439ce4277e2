// Page wiring: one Workbench instance, re-render after every state change.

import { ApiClient } from "./api.js";
import {
  renderGrid,
  renderNodeTabs,
  renderRankingPanel,
  renderSensitivity,
} from "./render.js";
import { Workbench } from "./workbench.js";

const api = new ApiClient("");
const workbench = new Workbench(api);

const el = (id: string) => document.getElementById(id)!;

function render(): void {
  const doc = workbench.doc;
  el("session-meta").textContent = doc
    ? `${doc.goal} · session ${workbench.sessionId}`
    : "No session loaded.";
  if (!doc) {
    el("tabs").innerHTML = "";
    el("grid").innerHTML = "";
    el("ranking").innerHTML = "";
    el("sensitivity").innerHTML = "";
    return;
  }
  el("tabs").innerHTML = renderNodeTabs(workbench.nodes(), workbench.activeNode, doc);
  const grid = workbench.grids.get(workbench.activeNode);
  el("grid").innerHTML = grid ? renderGrid(grid) : "";
  el("ranking").innerHTML = renderRankingPanel(workbench.rankingPanel, doc);
  el("sensitivity").innerHTML = renderSensitivity(workbench.sensitivity, doc);
  bindDynamicHandlers();
}

function bindDynamicHandlers(): void {
  for (const tab of document.querySelectorAll<HTMLButtonElement>("#tabs .tab")) {
    tab.onclick = () => {
      workbench.activeNode = tab.dataset.node!;
      render();
    };
  }
  for (const select of document.querySelectorAll<HTMLSelectElement>("select.grade")) {
    select.onchange = async () => {
      if (!select.value) return;
      await workbench.selectGrade(
        select.dataset.node!,
        Number(select.dataset.i),
        Number(select.dataset.j),
        select.value,
      );
      render();
    };
  }
  const criterion = document.getElementById("sens-criterion") as HTMLSelectElement | null;
  if (criterion) {
    criterion.onchange = async () => {
      if (!criterion.value) return;
      await workbench.pickSensitivityCriterion(criterion.value);
      await workbench.dragSensitivity(workbench.sensitivity.value);
      render();
    };
  }
  const slider = document.getElementById("sens-slider") as HTMLInputElement | null;
  if (slider) {
    slider.oninput = async () => {
      const g = Number(slider.value);
      const label = document.getElementById("sens-value");
      if (label) label.textContent = g.toFixed(4);
      await workbench.dragSensitivity(g);
      render();
    };
  }
}

async function boot(): Promise<void> {
  el("load-demo").onclick = async () => {
    await workbench.loadTemplate("paper");
    render();
  };
  el("new-sandbox").onclick = async () => {
    await workbench.newSandbox();
    render();
  };
  const toggle = el("aggregation-toggle") as HTMLSelectElement;
  toggle.onchange = async () => {
    await workbench.refreshRanking(toggle.value || undefined);
    render();
  };
  render();
}

boot();
