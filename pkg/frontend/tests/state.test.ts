import { describe, expect, it } from "vitest";

import {
  badgeText,
  bannerText,
  boardView,
  phaseAfter,
  removalDiff,
  settledVertexIds,
} from "../src/state.js";
import type { GameState, Layout } from "../src/types.js";

function state(ids: number[], overrides: Partial<GameState> = {}): GameState {
  return {
    id: "g1",
    spec: "path:4",
    vertices: ids.map((id) => ({ id })),
    edges: [],
    to_move: 1,
    status: "in_progress",
    winner: null,
    history: [],
    ...overrides,
  };
}

function gridLayout(ids: number[]): Layout {
  return new Map(ids.map((id) => [id, { x: id * 10, y: 5 }]));
}

describe("removalDiff", () => {
  it("splits the clicked vertex from the isolation cascade", () => {
    // deleting vertex 1 of a 4-path strands vertex 0
    const before = state([0, 1, 2, 3]);
    const after = state([2, 3]);
    expect(removalDiff(before, after, 1)).toEqual({ chosen: 1, cascade: [0] });
  });

  it("reports no cascade for a clean deletion", () => {
    const before = state([0, 1, 2]);
    const after = state([1, 2]);
    expect(removalDiff(before, after, 0)).toEqual({ chosen: 0, cascade: [] });
  });

  it("handles a whole-board sweep", () => {
    const before = state([0, 1, 2]);
    const after = state([]);
    expect(removalDiff(before, after, 0)).toEqual({ chosen: 0, cascade: [1, 2] });
  });
});

describe("boardView", () => {
  it("renders exactly the service vertex set once settled", () => {
    const s = state([2, 3, 5]);
    const view = boardView(gridLayout([0, 1, 2, 3, 4, 5]), s);
    expect(settledVertexIds(view)).toEqual([2, 3, 5]);
  });

  it("paints hints only on the provided winning moves", () => {
    const s = state([0, 1, 2]);
    const view = boardView(gridLayout([0, 1, 2]), s, null, [1]);
    const paints = new Map(view.vertices.map((v) => [v.id, v.paint]));
    expect(paints.get(1)).toBe("hint");
    expect(paints.get(0)).toBe("alive");
    expect(settledVertexIds(view)).toEqual([0, 1, 2]);
  });

  it("keeps dying vertices visible with distinct exit paints during animation", () => {
    const after = state([2, 3]);
    const view = boardView(gridLayout([0, 1, 2, 3]), after, { chosen: 1, cascade: [0] });
    const paints = new Map(view.vertices.map((v) => [v.id, v.paint]));
    expect(paints.get(1)).toBe("chosen-out");
    expect(paints.get(0)).toBe("cascade-out");
    expect(settledVertexIds(view)).toEqual([2, 3]);
  });

  it("positions come from the fixed initial layout", () => {
    const s = state([1]);
    const view = boardView(gridLayout([0, 1]), s);
    expect(view.vertices[0]).toMatchObject({ id: 1, x: 10, y: 5 });
  });
});

describe("phase and banners", () => {
  it("tracks whose turn it is", () => {
    expect(phaseAfter(state([0], { to_move: 1 }), 1)).toBe("humanTurn");
    expect(phaseAfter(state([0], { to_move: 2 }), 1)).toBe("engineTurn");
    expect(phaseAfter(state([], { status: "finished", winner: 2 }), 1)).toBe("gameOver");
  });

  it("names the winner from the human's perspective", () => {
    expect(bannerText(state([], { status: "finished", winner: 1 }), 1)).toBe("You win");
    expect(bannerText(state([], { status: "finished", winner: 1 }), 2)).toBe("Engine wins");
    expect(bannerText(state([0]), 1)).toBeNull();
  });

  it("describes analysis outcomes", () => {
    expect(badgeText({ outcome: "P", sg: 0, winning_moves: [] })).toContain("P —");
    expect(badgeText({ outcome: "N", sg: 2, winning_moves: [4] })).toContain("N —");
  });
});
