/**
 * Explorer state machine, DOM-free for testability.
 *
 * Every displayed offer and the whole history ribbon come verbatim from
 * service responses.  Mutations (step, undo) are queued so at most one is
 * in flight per session; peeks run outside the queue and never mutate.
 * A 409 (desynchronized click, nothing to undo) is recovered by applying
 * the conflict body and then re-fetching the session.
 */

import { ApiError, ParseErrorEntry, SessionApi, SessionState } from "./api.js";
import { splitTraceElements } from "./trace.js";

export interface ViewState {
  sessionId: string | null;
  /** canonical trace string exactly as the service sent it */
  history: string;
  /** the same string split into per-instant chips */
  historyElements: string[];
  offers: string[];
  peek: { eventset: string; offers: string[] } | null;
  stopped: boolean;
  error: string | null;
  parseErrors: ParseErrorEntry[];
}

export function initialViewState(): ViewState {
  return {
    sessionId: null,
    history: "<>",
    historyElements: [],
    offers: [],
    peek: null,
    stopped: false,
    error: null,
    parseErrors: [],
  };
}

export type Listener = (state: ViewState) => void;

export class ExplorerController {
  private state: ViewState = initialViewState();
  private listeners: Listener[] = [];
  private mutationQueue: Promise<void> = Promise.resolve();

  constructor(private readonly api: SessionApi) {}

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
    listener(this.state);
  }

  get view(): ViewState {
    return this.state;
  }

  private emit(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) {
      listener(this.state);
    }
  }

  private applySession(session: SessionState): void {
    this.emit({
      sessionId: session.id,
      history: session.history,
      historyElements: splitTraceElements(session.history),
      offers: session.offers,
      stopped: session.stopped,
      peek: null,
      error: null,
      parseErrors: [],
    });
  }

  async load(source: string, processName: string): Promise<void> {
    try {
      const session = await this.api.create(source, processName);
      this.applySession(session);
    } catch (err) {
      if (err instanceof ApiError && err.payload.errors) {
        this.emit({
          sessionId: null,
          offers: [],
          error: "the module did not parse",
          parseErrors: err.payload.errors,
        });
      } else {
        this.emit({ error: describe(err) });
      }
    }
  }

  /** Queue a mutation; resolves when this mutation has been applied. */
  private enqueue(mutate: () => Promise<void>): Promise<void> {
    const next = this.mutationQueue.then(mutate);
    // keep the chain alive after failures; errors surface via state
    this.mutationQueue = next.catch(() => undefined);
    return next;
  }

  stepClick(eventset: string): Promise<void> {
    return this.enqueue(async () => {
      const id = this.state.sessionId;
      if (id === null) return;
      try {
        this.applySession(await this.api.step(id, eventset));
      } catch (err) {
        await this.recover(id, err);
      }
    });
  }

  undoClick(): Promise<void> {
    return this.enqueue(async () => {
      const id = this.state.sessionId;
      if (id === null) return;
      try {
        this.applySession(await this.api.undo(id));
      } catch (err) {
        await this.recover(id, err);
      }
    });
  }

  async peekHover(eventset: string): Promise<void> {
    const id = this.state.sessionId;
    if (id === null) return;
    const before = this.state.history;
    try {
      const peeked = await this.api.peek(id, eventset);
      if (this.state.history === before) {
        this.emit({ peek: { eventset, offers: peeked.offers } });
      }
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        await this.recover(id, err);
      } else {
        this.emit({ error: describe(err) });
      }
    }
  }

  peekClear(): void {
    if (this.state.peek !== null) {
      this.emit({ peek: null });
    }
  }

  /** After a 409, trust the conflict body, then re-fetch to resynchronize. */
  private async recover(id: string, err: unknown): Promise<void> {
    if (err instanceof ApiError && err.status === 409) {
      const body = err.payload;
      if (body.history !== undefined && body.offers !== undefined) {
        this.emit({
          history: body.history,
          historyElements: splitTraceElements(body.history),
          offers: body.offers,
          stopped: body.stopped ?? false,
          peek: null,
          error: body.error ?? "out of sync with the service",
        });
      }
      try {
        const fresh = await this.api.get(id);
        this.emit({
          history: fresh.history,
          historyElements: splitTraceElements(fresh.history),
          offers: fresh.offers,
          stopped: fresh.stopped,
          error: err instanceof ApiError ? err.message : null,
        });
      } catch (refetchErr) {
        this.emit({ error: describe(refetchErr) });
      }
    } else {
      this.emit({ error: describe(err) });
    }
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError) {
    return err.message;
  }
  return err instanceof Error ? err.message : String(err);
}
