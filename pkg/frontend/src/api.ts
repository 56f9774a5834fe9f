/** Thin typed client for the game service. All rules live server-side; this
 * file only moves JSON around. */

import type { Analysis, EngineMoveResponse, ExportedGame, GameState } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class GrimApi {
  constructor(
    private base: string = "",
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.base + path, init);
    let body: unknown = null;
    try {
      body = await response.json();
    } catch {
      /* non-JSON error body */
    }
    if (!response.ok) {
      const detail =
        body && typeof body === "object" && "detail" in body
          ? String((body as { detail: unknown }).detail)
          : response.statusText;
      throw new ApiError(response.status, detail);
    }
    return body as T;
  }

  private post<T>(path: string, payload?: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: payload === undefined ? undefined : JSON.stringify(payload),
    });
  }

  createGame(spec: string, startingPlayer: 1 | 2): Promise<GameState> {
    return this.post("/v1/games", { spec, starting_player: startingPlayer });
  }

  getGame(id: string): Promise<GameState> {
    return this.request(`/v1/games/${id}`);
  }

  move(id: string, vertex: number): Promise<GameState> {
    return this.post(`/v1/games/${id}/moves`, { vertex });
  }

  engineMove(id: string): Promise<EngineMoveResponse> {
    return this.post(`/v1/games/${id}/engine-move`);
  }

  analysis(id: string): Promise<Analysis> {
    return this.request(`/v1/games/${id}/analysis`);
  }

  exportGame(id: string): Promise<ExportedGame> {
    return this.request(`/v1/games/${id}/export`);
  }
}
