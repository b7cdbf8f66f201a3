/** Payload shapes of the session-service JSON API. */

export type Outcome = 1 | -1;

export interface TrialRow {
  index: number;
  x: number;
  y: Outcome;
  s: number;
  tau: number;
  timestamp: string | null;
  note: string | null;
}

export interface SessionState {
  id: string;
  created_at: string;
  a: number;
  b: number;
  family: string;
  status: "active" | "closed";
  trial_count: number;
  next_stimulus: number | null;
  expected_index: number;
  trials: TrialRow[];
}

export interface SessionSummary {
  id: string;
  created_at: string;
  a: number;
  b: number;
  family: string;
  status: string;
  trial_count: number;
}

export interface EstimatePayload {
  estimable: boolean;
  reason?: string;
  detail?: string;
  alpha_hat?: number;
  beta_hat?: number;
  xi50_hat?: number;
  iterations?: number;
  log_likelihood?: number;
}

export interface ApiError {
  code: string;
  message: string;
  detail: unknown;
}

export class ServiceError extends Error {
  constructor(public status: number, public payload: ApiError) {
    super(payload.message);
  }
  get code(): string {
    return this.payload.code;
  }
}
