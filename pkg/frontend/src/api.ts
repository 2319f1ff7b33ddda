/**
 * Typed client for the session service. Every reply carries a schema
 * version; anything other than version 1 is rejected at the call site so
 * the page fails loudly instead of misrendering.
 */

export const SUPPORTED_SCHEMA = 1;

export interface SessionState {
  version: number;
  id: string;
  history: string;
  offers: string[];
  stopped: boolean;
}

export interface PeekState {
  version: number;
  id: string;
  eventset: string;
  offers: string[];
  stopped: boolean;
}

export interface ParseErrorEntry {
  line: number;
  col: number;
  expected: string;
  found: string;
}

export interface ErrorPayload {
  version?: number;
  error?: string;
  errors?: ParseErrorEntry[];
  // a 409 body is a full session state plus an error message
  id?: string;
  history?: string;
  offers?: string[];
  stopped?: boolean;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly payload: ErrorPayload,
  ) {
    super(payload.error ?? `service error ${status}`);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  const payload = (await response.json()) as T & { version?: number };
  if (!response.ok) {
    throw new ApiError(response.status, payload as ErrorPayload);
  }
  if (payload.version !== SUPPORTED_SCHEMA) {
    throw new Error(
      `service speaks schema v${payload.version}, this page needs v${SUPPORTED_SCHEMA}`,
    );
  }
  return payload;
}

export class SessionApi {
  constructor(readonly base: string) {}

  create(source: string, processName: string): Promise<SessionState> {
    return request<SessionState>(`${this.base}/api/session`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ source, process: processName }),
    });
  }

  get(id: string): Promise<SessionState> {
    return request<SessionState>(`${this.base}/api/session/${id}`);
  }

  step(id: string, eventset: string): Promise<SessionState> {
    return request<SessionState>(`${this.base}/api/session/${id}/step`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ eventset }),
    });
  }

  undo(id: string): Promise<SessionState> {
    return request<SessionState>(`${this.base}/api/session/${id}/undo`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({}),
    });
  }

  peek(id: string, eventset: string): Promise<PeekState> {
    const query = encodeURIComponent(eventset);
    return request<PeekState>(
      `${this.base}/api/session/${id}/peek?eventset=${query}`,
    );
  }
}
