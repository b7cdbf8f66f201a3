/** Thin typed client over the session-service HTTP API.
 *
 * The client never derives or rounds design values: the raw JSON numbers
 * the server sends are handed to the view untouched.
 */

import {
  ApiError,
  EstimatePayload,
  Outcome,
  ServiceError,
  SessionState,
  SessionSummary,
} from "./types.js";

async function parseError(res: Response): Promise<never> {
  let payload: ApiError;
  try {
    payload = (await res.json()) as ApiError;
  } catch {
    payload = { code: "http_error", message: res.statusText, detail: null };
  }
  throw new ServiceError(res.status, payload);
}

export class Api {
  constructor(private base: string) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.base + path, init);
    if (!res.ok) await parseError(res);
    return (await res.json()) as T;
  }

  listSessions(): Promise<SessionSummary[]> {
    return this.request("/sessions");
  }

  createSession(a: number, b: number, family: string): Promise<SessionState> {
    return this.request("/sessions", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ a, b, family }),
    });
  }

  getState(id: string): Promise<SessionState> {
    return this.request(`/sessions/${id}`);
  }

  recordOutcome(
    id: string,
    x: number,
    y: Outcome,
    expectedIndex: number,
    note?: string,
  ): Promise<SessionState> {
    return this.request(`/sessions/${id}/outcomes`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({
        x,
        y,
        expected_index: expectedIndex,
        note: note ?? null,
      }),
    });
  }

  undo(id: string): Promise<SessionState> {
    return this.request(`/sessions/${id}/undo`, { method: "POST" });
  }

  estimate(id: string): Promise<EstimatePayload> {
    return this.request(`/sessions/${id}/estimate`);
  }

  async exportDocument(id: string): Promise<string> {
    const res = await fetch(`${this.base}/sessions/${id}/export`);
    if (!res.ok) await parseError(res);
    return res.text();
  }
}
