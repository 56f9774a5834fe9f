/** Pure view-state helpers. The board is always a function of the latest
 * service response plus the animation phase; nothing here computes game
 * rules. */

import type { Analysis, GameState, Layout } from "./types.js";

export type Phase = "humanTurn" | "animating" | "engineTurn" | "gameOver";

export interface Removal {
  chosen: number;
  cascade: number[];
}

/** Which vertices vanished in a transition, split into the selected vertex
 * and the isolation cascade the move swept along with it. */
export function removalDiff(before: GameState, after: GameState, chosen: number): Removal {
  const survivors = new Set(after.vertices.map((v) => v.id));
  const gone = before.vertices.map((v) => v.id).filter((id) => !survivors.has(id));
  return { chosen, cascade: gone.filter((id) => id !== chosen).sort((a, b) => a - b) };
}

export type VertexPaint = "alive" | "chosen-out" | "cascade-out" | "hint";

export interface BoardVertexView {
  id: number;
  x: number;
  y: number;
  paint: VertexPaint;
}

export interface BoardView {
  vertices: BoardVertexView[];
  edges: [number, number][];
}

/** Board for the current state. During an animation the vertices being
 * removed are still drawn, marked with their exit paint; hints mark the
 * service's winning moves and nothing else. */
export function boardView(
  layout: Layout,
  state: GameState,
  removal: Removal | null = null,
  hints: number[] | null = null,
): BoardView {
  const hintSet = new Set(hints ?? []);
  const vertices: BoardVertexView[] = [];
  for (const v of state.vertices) {
    const p = layout.get(v.id);
    if (!p) continue;
    vertices.push({ id: v.id, x: p.x, y: p.y, paint: hintSet.has(v.id) ? "hint" : "alive" });
  }
  if (removal) {
    const dying = [removal.chosen, ...removal.cascade];
    for (const id of dying) {
      const p = layout.get(id);
      if (!p) continue;
      vertices.push({
        id,
        x: p.x,
        y: p.y,
        paint: id === removal.chosen ? "chosen-out" : "cascade-out",
      });
    }
  }
  vertices.sort((a, b) => a.id - b.id);
  return { vertices, edges: state.edges };
}

/** Ids the board renders once animations settle; must equal the service's
 * vertex set after every transition. */
export function settledVertexIds(view: BoardView): number[] {
  return view.vertices
    .filter((v) => v.paint === "alive" || v.paint === "hint")
    .map((v) => v.id)
    .sort((a, b) => a - b);
}

export function phaseAfter(state: GameState, humanPlayer: 1 | 2): Phase {
  if (state.status === "finished") return "gameOver";
  return state.to_move === humanPlayer ? "humanTurn" : "engineTurn";
}

export function bannerText(state: GameState, humanPlayer: 1 | 2): string | null {
  if (state.status !== "finished") return null;
  return state.winner === humanPlayer ? "You win" : "Engine wins";
}

export function badgeText(analysis: Analysis): string {
  if (analysis.outcome === "P") {
    return `P — a perfect opponent wins (value ${analysis.sg})`;
  }
  return `N — the player to move wins (value ${analysis.sg})`;
}
