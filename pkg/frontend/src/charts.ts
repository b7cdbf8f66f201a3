/** Hand-rolled SVG traces.
 *
 * Input trace: the stimuli X_1..X_n against trial number, bracket lines at
 * a and b, the current median estimate when available, and the trials whose
 * balance index is zero marked in red (the values come from the service
 * state, never recomputed here).  Cumsum trace: the S_n staircase with the
 * same red markers.
 */

import { SessionState } from "./types.js";

const W = 640;
const H = 220;
const PAD = { left: 46, right: 12, top: 10, bottom: 24 };

const SVG_NS = "http://www.w3.org/2000/svg";

interface Scale {
  x(n: number): number;
  y(v: number): number;
}

function makeScale(nMax: number, vMin: number, vMax: number): Scale {
  const innerW = W - PAD.left - PAD.right;
  const innerH = H - PAD.top - PAD.bottom;
  const span = vMax - vMin || 1;
  return {
    x: (n) => PAD.left + ((n - 1) / Math.max(1, nMax - 1)) * innerW,
    y: (v) => PAD.top + (1 - (v - vMin) / span) * innerH,
  };
}

function el(name: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, String(v));
  return node;
}

function axisLabel(svg: SVGElement, text: string, x: number, y: number): void {
  const t = el("text", { x, y, class: "axis-label" });
  t.textContent = text;
  svg.appendChild(t);
}

function baseSvg(title: string): SVGElement {
  const svg = el("svg", {
    viewBox: `0 0 ${W} ${H}`,
    width: "100%",
    role: "img",
    "aria-label": title,
  });
  return svg;
}

export function renderInputTrace(
  state: SessionState,
  estimate: number | null,
): SVGElement {
  const svg = baseSvg("stimulus trace");
  const n = state.trials.length;
  if (n === 0) return svg;
  const scale = makeScale(n, state.a, state.b);

  for (const [value, cls] of [
    [state.a, "bracket-line"],
    [state.b, "bracket-line"],
  ] as const) {
    svg.appendChild(
      el("line", {
        x1: scale.x(1),
        x2: scale.x(Math.max(n, 2)),
        y1: scale.y(value),
        y2: scale.y(value),
        class: cls,
      }),
    );
  }
  if (estimate !== null && estimate >= state.a && estimate <= state.b) {
    svg.appendChild(
      el("line", {
        x1: scale.x(1),
        x2: scale.x(Math.max(n, 2)),
        y1: scale.y(estimate),
        y2: scale.y(estimate),
        class: "estimate-line",
      }),
    );
  }

  const points = state.trials
    .map((t) => `${scale.x(t.index)},${scale.y(t.x)}`)
    .join(" ");
  svg.appendChild(el("polyline", { points, class: "trace input-trace" }));
  for (const t of state.trials) {
    svg.appendChild(
      el("circle", {
        cx: scale.x(t.index),
        cy: scale.y(t.x),
        r: t.tau === 0 ? 3.5 : 2,
        class: t.tau === 0 ? "marker fresh" : "marker",
        "data-n": t.index,
        "data-tau": t.tau,
      }),
    );
  }
  axisLabel(svg, String(state.b), 4, scale.y(state.b) + 4);
  axisLabel(svg, String(state.a), 4, scale.y(state.a) + 4);
  return svg;
}

export function renderCumsumTrace(state: SessionState): SVGElement {
  const svg = baseSvg("cumulative sum trace");
  const n = state.trials.length;
  if (n === 0) return svg;
  const values = state.trials.map((t) => t.s);
  const lo = Math.min(0, ...values);
  const hi = Math.max(0, ...values);
  const scale = makeScale(n, lo, hi);

  svg.appendChild(
    el("line", {
      x1: scale.x(1),
      x2: scale.x(Math.max(n, 2)),
      y1: scale.y(0),
      y2: scale.y(0),
      class: "bracket-line",
    }),
  );
  // staircase: hold each level until the next trial
  let d = `M ${scale.x(1)} ${scale.y(values[0])}`;
  for (let i = 1; i < n; i++) {
    d += ` H ${scale.x(i + 1)} V ${scale.y(values[i])}`;
  }
  svg.appendChild(el("path", { d, class: "trace cumsum-trace" }));
  for (const t of state.trials) {
    if (t.tau === 0) {
      svg.appendChild(
        el("circle", {
          cx: scale.x(t.index),
          cy: scale.y(t.s),
          r: 3.5,
          class: "marker fresh",
          "data-n": t.index,
        }),
      );
    }
  }
  axisLabel(svg, String(hi), 4, scale.y(hi) + 4);
  axisLabel(svg, String(lo), 4, scale.y(lo) + 4);
  return svg;
}
