/** SVG rendering of a BoardView. Pure DOM manipulation; the interesting
 * logic lives in state.ts where it is testable. */

import type { BoardView } from "./state.js";

const NS = "http://www.w3.org/2000/svg";
const VERTEX_RADIUS = 26;

export function renderBoard(
  svg: SVGSVGElement,
  view: BoardView,
  onVertexClick: (id: number) => void,
): void {
  svg.setAttribute("viewBox", "0 0 1000 1000");
  svg.replaceChildren();
  const coords = new Map(view.vertices.map((v) => [v.id, v]));
  for (const [u, w] of view.edges) {
    const a = coords.get(u);
    const b = coords.get(w);
    if (!a || !b) continue;
    const lineEl = document.createElementNS(NS, "line");
    lineEl.setAttribute("x1", String(a.x));
    lineEl.setAttribute("y1", String(a.y));
    lineEl.setAttribute("x2", String(b.x));
    lineEl.setAttribute("y2", String(b.y));
    lineEl.setAttribute("class", "edge");
    svg.appendChild(lineEl);
  }
  for (const v of view.vertices) {
    const group = document.createElementNS(NS, "g");
    group.setAttribute("class", `vertex ${v.paint}`);
    group.setAttribute("data-id", String(v.id));
    const circleEl = document.createElementNS(NS, "circle");
    circleEl.setAttribute("cx", String(v.x));
    circleEl.setAttribute("cy", String(v.y));
    circleEl.setAttribute("r", String(VERTEX_RADIUS));
    const label = document.createElementNS(NS, "text");
    label.setAttribute("x", String(v.x));
    label.setAttribute("y", String(v.y));
    label.setAttribute("dy", "0.35em");
    label.textContent = String(v.id);
    group.appendChild(circleEl);
    group.appendChild(label);
    if (v.paint === "alive" || v.paint === "hint") {
      group.addEventListener("click", () => onVertexClick(v.id));
    }
    svg.appendChild(group);
  }
}
