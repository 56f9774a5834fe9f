/** Wire types for the /v1 game service. */

export interface VertexRef {
  id: number;
}

export interface GameState {
  id: string;
  spec: string;
  vertices: VertexRef[];
  edges: [number, number][];
  to_move: 1 | 2;
  status: "in_progress" | "finished";
  winner: 1 | 2 | null;
  history: HistoryEntry[];
}

export interface HistoryEntry {
  player: 1 | 2;
  vertex: number;
  remaining: number;
}

export interface EngineMoveResponse {
  vertex: number;
  state: GameState;
}

export interface Analysis {
  outcome: "N" | "P";
  sg: number;
  winning_moves: number[];
}

export interface ExportedGame {
  id: string;
  spec: string;
  starting_player: 1 | 2;
  initial: {
    vertices: VertexRef[];
    edges: [number, number][];
    graph6: string | null;
  };
  history: HistoryEntry[];
  status: "in_progress" | "finished";
  winner: 1 | 2 | null;
}

export interface Point {
  x: number;
  y: number;
}

export type Layout = Map<number, Point>;
