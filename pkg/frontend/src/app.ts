/** The conduction dashboard.
 *
 * The client is a pure view over server state: every number on screen is a
 * value the service sent (stimuli rendered at 4 decimals, raw values kept in
 * state), the session id lives in the URL hash, and a hard refresh rebuilds
 * the identical view from GET /sessions/{id} alone.  Recording buttons
 * disable while a request is in flight; a stale-stimulus conflict refreshes
 * the view and tells the operator to retry.
 */

import { Api } from "./api.js";
import { renderCumsumTrace, renderInputTrace } from "./charts.js";
import { fmt4, fmtOutcome } from "./format.js";
import {
  EstimatePayload,
  Outcome,
  ServiceError,
  SessionState,
} from "./types.js";

export class App {
  state: SessionState | null = null;
  estimate: EstimatePayload | null = null;
  banner = "";
  busy = false;

  constructor(
    private root: HTMLElement,
    private api: Api,
    private onSessionChange: (id: string | null) => void = () => {},
  ) {
    this.render();
  }

  /** Load (or reload) a session completely from server state. */
  async openSession(id: string): Promise<void> {
    this.state = await this.api.getState(id);
    this.estimate = await this.api.estimate(id);
    this.onSessionChange(id);
    this.render();
  }

  async createSession(a: number, b: number, family: string): Promise<void> {
    if (!(isFinite(a) && isFinite(b) && a < b)) {
      this.banner = "the bracket needs finite endpoints with a < b";
      this.render();
      return;
    }
    try {
      const state = await this.api.createSession(a, b, family);
      this.banner = "";
      await this.openSession(state.id);
    } catch (err) {
      this.banner = describe(err);
      this.render();
    }
  }

  async recordOutcome(y: Outcome): Promise<void> {
    const s = this.state;
    if (!s || s.next_stimulus === null || this.busy) return;
    this.busy = true;
    this.render();
    try {
      this.state = await this.api.recordOutcome(
        s.id,
        s.next_stimulus,
        y,
        s.expected_index,
      );
      this.estimate = await this.api.estimate(s.id);
      this.banner = "";
    } catch (err) {
      if (err instanceof ServiceError && err.code === "stale_stimulus") {
        this.banner = "another writer got there first; view refreshed, retry";
        this.state = await this.api.getState(s.id);
        this.estimate = await this.api.estimate(s.id);
      } else {
        this.banner = describe(err);
      }
    } finally {
      this.busy = false;
      this.render();
    }
  }

  async undo(): Promise<void> {
    const s = this.state;
    if (!s || s.trials.length === 0 || this.busy) return;
    this.busy = true;
    this.render();
    try {
      this.state = await this.api.undo(s.id);
      this.estimate = await this.api.estimate(s.id);
      this.banner = "";
    } catch (err) {
      this.banner = describe(err);
    } finally {
      this.busy = false;
      this.render();
    }
  }

  async closeSession(): Promise<void> {
    this.state = null;
    this.estimate = null;
    this.banner = "";
    this.onSessionChange(null);
    this.render();
  }

  render(): void {
    this.root.textContent = "";
    if (this.banner) {
      const div = h("div", "banner");
      div.textContent = this.banner;
      this.root.appendChild(div);
    }
    if (!this.state) {
      this.root.appendChild(this.renderCreateForm());
    } else {
      this.root.appendChild(this.renderSession(this.state));
    }
  }

  private renderCreateForm(): HTMLElement {
    const form = h("form", "create-form") as HTMLFormElement;
    form.innerHTML = `
      <h2>New test session</h2>
      <label>lower bound a <input name="a" id="input-a" value="-1.5"></label>
      <label>upper bound b <input name="b" id="input-b" value="1.5"></label>
      <label>model family
        <select name="family" id="input-family">
          <option value="probit">probit</option>
          <option value="logistic">logistic</option>
        </select>
      </label>
      <button type="submit" id="create-btn">start session</button>
    `;
    form.addEventListener("submit", (ev) => {
      ev.preventDefault();
      const a = parseFloat((form.querySelector("#input-a") as HTMLInputElement).value);
      const b = parseFloat((form.querySelector("#input-b") as HTMLInputElement).value);
      const family = (form.querySelector("#input-family") as HTMLSelectElement).value;
      void this.createSession(a, b, family);
    });
    return form;
  }

  private renderSession(state: SessionState): HTMLElement {
    const wrap = h("div", "session");

    const head = h("div", "session-head");
    head.innerHTML = `<h2>session <code>${state.id.slice(0, 8)}</code></h2>
      <div class="meta">bracket [${fmt4(state.a)}, ${fmt4(state.b)}] ·
      ${state.family} · ${state.trial_count} trials · ${state.status}</div>`;
    wrap.appendChild(head);

    const panel = h("div", "stimulus-panel");
    const stim = h("div", "stimulus-value");
    stim.id = "next-stimulus";
    stim.dataset.raw = String(state.next_stimulus);
    stim.textContent =
      state.next_stimulus === null
        ? "session closed"
        : fmt4(state.next_stimulus);
    panel.appendChild(h("div", "stimulus-caption", "next stimulus"));
    panel.appendChild(stim);

    const controls = h("div", "controls");
    const successBtn = button("success-btn", "record success", this.busy ||
      state.next_stimulus === null);
    successBtn.addEventListener("click", () => void this.recordOutcome(1));
    const failureBtn = button("failure-btn", "record failure", this.busy ||
      state.next_stimulus === null);
    failureBtn.addEventListener("click", () => void this.recordOutcome(-1));
    const undoBtn = button("undo-btn", "undo last", this.busy ||
      state.trials.length === 0);
    undoBtn.addEventListener("click", () => void this.undo());
    controls.append(successBtn, failureBtn, undoBtn);
    panel.appendChild(controls);
    wrap.appendChild(panel);

    wrap.appendChild(this.renderEstimate());

    const charts = h("div", "charts");
    const xi =
      this.estimate && this.estimate.estimable
        ? (this.estimate.xi50_hat ?? null)
        : null;
    const inputChart = h("figure", "chart");
    inputChart.appendChild(h("figcaption", "", "stimulus X(n), fresh-cumsum trials in red"));
    inputChart.appendChild(renderInputTrace(state, xi));
    const cumsumChart = h("figure", "chart");
    cumsumChart.appendChild(h("figcaption", "", "cumulative sum S(n)"));
    cumsumChart.appendChild(renderCumsumTrace(state));
    charts.append(inputChart, cumsumChart);
    wrap.appendChild(charts);

    wrap.appendChild(this.renderTrialTable(state));
    return wrap;
  }

  private renderEstimate(): HTMLElement {
    const box = h("div", "estimate-panel");
    box.id = "estimate-panel";
    const e = this.estimate;
    if (!e) {
      box.textContent = "estimate: …";
    } else if (!e.estimable) {
      box.textContent = `median estimate unavailable: ${e.reason}`;
    } else {
      box.innerHTML = `median estimate <span id="estimate-value" data-raw="${
        e.xi50_hat
      }">${fmt4(e.xi50_hat)}</span>
        <span class="meta">(alpha ${fmt4(e.alpha_hat)}, beta ${fmt4(e.beta_hat)})</span>`;
    }
    return box;
  }

  private renderTrialTable(state: SessionState): HTMLElement {
    const table = h("table", "trials") as HTMLTableElement;
    table.innerHTML =
      "<thead><tr><th>n</th><th>x</th><th>outcome</th><th>S</th>" +
      "<th>balance</th><th>note</th></tr></thead>";
    const body = document.createElement("tbody");
    for (const t of [...state.trials].reverse()) {
      const row = document.createElement("tr");
      row.className = t.tau === 0 ? "fresh" : "";
      row.innerHTML = `<td>${t.index}</td><td data-raw="${t.x}">${fmt4(
        t.x,
      )}</td><td>${fmtOutcome(t.y)}</td><td>${t.s}</td><td>${
        t.tau
      }</td><td>${t.note ?? ""}</td>`;
      body.appendChild(row);
    }
    table.appendChild(body);
    return table;
  }
}

function h(tag: string, cls: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (cls) node.className = cls;
  if (text !== undefined) node.textContent = text;
  return node;
}

function button(id: string, label: string, disabled: boolean): HTMLButtonElement {
  const btn = document.createElement("button");
  btn.id = id;
  btn.textContent = label;
  btn.disabled = disabled;
  return btn;
}

function describe(err: unknown): string {
  if (err instanceof ServiceError) return `${err.code}: ${err.message}`;
  return `service unreachable: ${String(err)} — retry when it is back`;
}
