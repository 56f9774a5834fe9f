/** Vertex placement. Named families get fixed geometric layouts that keep
 * their symmetries visible (the reflection/rotation pairings are exactly
 * what the winning strategies use); anything else falls back to a small
 * deterministic force-directed embedding. Positions are computed once per
 * game from the initial graph and never move, so deletions animate in
 * place. Coordinates live in a 1000x1000 box. */

import type { Layout, Point, VertexRef } from "./types.js";

const SIZE = 1000;
const CX = SIZE / 2;
const CY = SIZE / 2;
const R = SIZE * 0.4;

function circle(ids: number[], radius = R, phase = -Math.PI / 2): Layout {
  const out: Layout = new Map();
  ids.forEach((id, i) => {
    const angle = phase + (2 * Math.PI * i) / ids.length;
    out.set(id, { x: CX + radius * Math.cos(angle), y: CY + radius * Math.sin(angle) });
  });
  return out;
}

function line(ids: number[]): Layout {
  const out: Layout = new Map();
  const step = ids.length > 1 ? (SIZE * 0.8) / (ids.length - 1) : 0;
  ids.forEach((id, i) => {
    out.set(id, { x: SIZE * 0.1 + i * step, y: CY });
  });
  return out;
}

function hubAndRim(ids: number[]): Layout {
  // constructors put the hub last (join with a single vertex)
  const hub = ids[ids.length - 1];
  const rim = ids.slice(0, -1);
  const out = circle(rim);
  out.set(hub, { x: CX, y: CY });
  return out;
}

function star(ids: number[]): Layout {
  // star constructor puts the hub first
  const [hub, ...leaves] = ids;
  const out = circle(leaves);
  out.set(hub, { x: CX, y: CY });
  return out;
}

export function forceDirected(ids: number[], edges: [number, number][], iterations = 250): Layout {
  // deterministic spring embedding: start on a circle, no randomness
  const pos = circle(ids, R * 0.8);
  if (ids.length <= 2) return pos;
  const k = SIZE / Math.sqrt(ids.length) / 2.2;
  let temperature = SIZE / 8;
  const cool = 0.955;
  for (let step = 0; step < iterations; step++) {
    const disp = new Map<number, Point>(ids.map((id) => [id, { x: 0, y: 0 }]));
    for (let i = 0; i < ids.length; i++) {
      for (let j = i + 1; j < ids.length; j++) {
        const a = pos.get(ids[i])!;
        const b = pos.get(ids[j])!;
        let dx = a.x - b.x;
        let dy = a.y - b.y;
        let d = Math.hypot(dx, dy);
        if (d < 1e-6) {
          // identical spots: separate along a fixed direction
          dx = 1;
          dy = (i + 1) / ids.length;
          d = 1;
        }
        const force = (k * k) / d;
        const da = disp.get(ids[i])!;
        const db = disp.get(ids[j])!;
        da.x += (dx / d) * force;
        da.y += (dy / d) * force;
        db.x -= (dx / d) * force;
        db.y -= (dy / d) * force;
      }
    }
    for (const [u, v] of edges) {
      const a = pos.get(u)!;
      const b = pos.get(v)!;
      const dx = a.x - b.x;
      const dy = a.y - b.y;
      const d = Math.max(Math.hypot(dx, dy), 1e-6);
      const force = (d * d) / k;
      const da = disp.get(u)!;
      const db = disp.get(v)!;
      da.x -= (dx / d) * force;
      da.y -= (dy / d) * force;
      db.x += (dx / d) * force;
      db.y += (dy / d) * force;
    }
    for (const id of ids) {
      const d = disp.get(id)!;
      const len = Math.max(Math.hypot(d.x, d.y), 1e-6);
      const p = pos.get(id)!;
      p.x += (d.x / len) * Math.min(len, temperature);
      p.y += (d.y / len) * Math.min(len, temperature);
      p.x = Math.min(SIZE * 0.95, Math.max(SIZE * 0.05, p.x));
      p.y = Math.min(SIZE * 0.95, Math.max(SIZE * 0.05, p.y));
    }
    temperature *= cool;
  }
  return pos;
}

/** Layout for the initial board, chosen from the spec the game was created
 * with (layout is presentation only; the server owns the rules). */
export function layoutFor(spec: string, vertices: VertexRef[], edges: [number, number][]): Layout {
  const ids = vertices.map((v) => v.id);
  const head = spec.split(":", 1)[0];
  switch (head) {
    case "path":
      return line(ids);
    case "cycle":
    case "complete":
    case "kpartite":
      return circle(ids);
    case "wheel":
      return ids.length >= 2 ? hubAndRim(ids) : circle(ids);
    case "star":
      return ids.length >= 2 ? star(ids) : circle(ids);
    default:
      return forceDirected(ids, edges);
  }
}
