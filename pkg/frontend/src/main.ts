/** App wiring: new-game form, the play loop against the engine, the hint
 * overlay, and refresh recovery from the session id in the URL hash. */

import { ApiError, GrimApi } from "./api.js";
import { renderBoard } from "./board.js";
import { layoutFor } from "./layout.js";
import {
  badgeText,
  bannerText,
  boardView,
  phaseAfter,
  removalDiff,
  type Phase,
  type Removal,
} from "./state.js";
import type { Analysis, GameState, Layout } from "./types.js";

const ANIMATION_MS = 650;

interface App {
  api: GrimApi;
  state: GameState | null;
  layout: Layout;
  humanPlayer: 1 | 2;
  phase: Phase;
  hintsOn: boolean;
  analysis: Analysis | null;
  busy: boolean;
}

const app: App = {
  api: new GrimApi(""),
  state: null,
  layout: new Map(),
  humanPlayer: 1,
  phase: "humanTurn",
  hintsOn: false,
  analysis: null,
  busy: false,
};

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
};

function svg(): SVGSVGElement {
  return $("board") as unknown as SVGSVGElement;
}

function setStatus(text: string): void {
  $("status").textContent = text;
}

function draw(removal: Removal | null = null): void {
  if (!app.state) return;
  const hints = app.hintsOn && app.analysis ? app.analysis.winning_moves : null;
  renderBoard(svg(), boardView(app.layout, app.state, removal, hints), onVertexClick);
  const banner = bannerText(app.state, app.humanPlayer);
  if (banner) {
    setStatus(banner);
  } else if (app.phase === "engineTurn" || app.busy) {
    setStatus("Engine is thinking…");
  } else {
    setStatus(app.hintsOn && app.analysis ? badgeText(app.analysis) : "Your move — click a vertex");
  }
}

async function refreshAnalysis(): Promise<void> {
  app.analysis = null;
  if (!app.state || !app.hintsOn || app.state.status === "finished") return;
  try {
    app.analysis = await app.api.analysis(app.state.id);
  } catch (err) {
    if (err instanceof ApiError && err.status === 422) {
      setStatus("Position too large to analyze — playing blind");
      return;
    }
    throw err;
  }
}

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

async function animateTransition(before: GameState, after: GameState, chosen: number): Promise<void> {
  const removal = removalDiff(before, after, chosen);
  app.phase = "animating";
  // draw the old board with exit paints, then settle on the new one
  const hints = app.hintsOn && app.analysis ? app.analysis.winning_moves : null;
  renderBoard(svg(), boardView(app.layout, after, removal, hints), onVertexClick);
  await sleep(ANIMATION_MS);
  app.state = after;
}

async function onVertexClick(id: number): Promise<void> {
  if (!app.state || app.busy || app.phase !== "humanTurn") return;
  if (app.state.status === "finished") return;
  app.busy = true;
  try {
    const before = app.state;
    let after: GameState;
    try {
      after = await app.api.move(before.id, id);
    } catch (err) {
      if (err instanceof ApiError && (err.status === 404 || err.status === 409)) {
        return; // dead vertex or finished game: ignore the click
      }
      throw err;
    }
    await animateTransition(before, after, id);
    app.phase = phaseAfter(after, app.humanPlayer);
    draw();
    if (app.phase === "engineTurn") {
      await engineReply();
    }
    await refreshAnalysis();
    draw();
  } finally {
    app.busy = false;
    draw();
  }
}

async function engineReply(): Promise<void> {
  if (!app.state || app.state.status === "finished") return;
  const before = app.state;
  const reply = await app.api.engineMove(before.id);
  await animateTransition(before, reply.state, reply.vertex);
  app.phase = phaseAfter(reply.state, app.humanPlayer);
}

async function startGame(spec: string, humanFirst: boolean): Promise<void> {
  app.busy = true;
  try {
    const starting = humanFirst ? 1 : 2;
    const state = await app.api.createGame(spec, starting as 1 | 2);
    app.state = state;
    app.humanPlayer = humanFirst ? 1 : 2;
    app.layout = layoutFor(spec, state.vertices, state.edges);
    app.phase = phaseAfter(state, app.humanPlayer);
    window.location.hash = `${state.id}:${app.humanPlayer}`;
    $("game-error").textContent = "";
    draw();
    if (app.phase === "engineTurn") {
      await engineReply();
    }
    await refreshAnalysis();
    draw();
  } catch (err) {
    if (err instanceof ApiError) {
      $("game-error").textContent = err.detail;
    } else {
      throw err;
    }
  } finally {
    app.busy = false;
    draw();
  }
}

async function resumeFromHash(): Promise<boolean> {
  const hash = window.location.hash.replace(/^#/, "");
  if (!hash) return false;
  const [id, who] = hash.split(":");
  try {
    const [state, exported] = await Promise.all([app.api.getGame(id), app.api.exportGame(id)]);
    app.state = state;
    app.humanPlayer = who === "2" ? 2 : 1;
    app.layout = layoutFor(
      exported.spec,
      exported.initial.vertices,
      exported.initial.edges,
    );
    app.phase = phaseAfter(state, app.humanPlayer);
    await refreshAnalysis();
    draw();
    if (app.phase === "engineTurn") {
      app.busy = true;
      try {
        await engineReply();
        await refreshAnalysis();
      } finally {
        app.busy = false;
      }
      draw();
    }
    return true;
  } catch {
    window.location.hash = "";
    return false;
  }
}

function specFromForm(): string {
  const family = ($("family") as HTMLSelectElement).value;
  if (family === "g6") {
    return `g6:${($("g6-text") as HTMLInputElement).value.trim()}`;
  }
  if (family === "kpartite") {
    const parts = ($("parts") as HTMLInputElement).value.trim();
    return `kpartite:${parts}`;
  }
  const n = ($("size") as HTMLInputElement).value;
  return `${family}:${n}`;
}

function wireForm(): void {
  $("family").addEventListener("change", () => {
    const family = ($("family") as HTMLSelectElement).value;
    $("size-row").style.display = family === "g6" || family === "kpartite" ? "none" : "";
    $("parts-row").style.display = family === "kpartite" ? "" : "none";
    $("g6-row").style.display = family === "g6" ? "" : "none";
  });
  $("new-game").addEventListener("click", () => {
    const humanFirst = ($("first-mover") as HTMLSelectElement).value === "human";
    void startGame(specFromForm(), humanFirst);
  });
  $("hints").addEventListener("change", async () => {
    app.hintsOn = ($("hints") as HTMLInputElement).checked;
    await refreshAnalysis();
    draw();
  });
}

window.addEventListener("DOMContentLoaded", () => {
  wireForm();
  void resumeFromHash();
});
