/** DOM rendering: everything shown is lifted straight out of ViewState. */

import { ExplorerController, ViewState } from "./controller.js";

export interface Panels {
  ribbon: HTMLElement;
  ribbonCanonical: HTMLElement;
  offers: HTMLElement;
  peek: HTMLElement;
  status: HTMLElement;
  errors: HTMLElement;
  source: HTMLTextAreaElement;
  sourceAnnotations: HTMLElement;
}

export function bindRenderer(controller: ExplorerController, panels: Panels): void {
  controller.subscribe((state) => render(controller, panels, state));
}

function render(
  controller: ExplorerController,
  panels: Panels,
  state: ViewState,
): void {
  panels.ribbonCanonical.textContent = state.history;
  panels.ribbon.replaceChildren(
    ...state.historyElements.map((element) => {
      const chip = document.createElement("span");
      chip.className = "ribbon-chip";
      chip.textContent = element;
      return chip;
    }),
  );

  panels.offers.replaceChildren(
    ...state.offers.map((offer) => {
      const chip = document.createElement("button");
      chip.className = "offer-chip";
      chip.textContent = offer;
      chip.addEventListener("click", () => void controller.stepClick(offer));
      chip.addEventListener("mouseenter", () => void controller.peekHover(offer));
      chip.addEventListener("mouseleave", () => controller.peekClear());
      return chip;
    }),
  );

  if (state.sessionId === null) {
    panels.status.textContent = "no session loaded";
  } else if (state.stopped) {
    panels.status.textContent = "deadlocked / terminated (no offers)";
  } else {
    panels.status.textContent = `session ${state.sessionId.slice(0, 8)}…`;
  }

  if (state.peek !== null) {
    const listed = state.peek.offers.length
      ? state.peek.offers.join("  ")
      : "(none: that step would stop the process)";
    panels.peek.textContent = `after ${state.peek.eventset}: ${listed}`;
  } else {
    panels.peek.textContent = "";
  }

  panels.errors.replaceChildren();
  if (state.error !== null) {
    const banner = document.createElement("div");
    banner.className = "error-banner";
    banner.textContent = state.error;
    panels.errors.append(banner);
  }
  renderParseAnnotations(panels, state);
}

function renderParseAnnotations(panels: Panels, state: ViewState): void {
  panels.sourceAnnotations.replaceChildren();
  if (!state.parseErrors.length) {
    return;
  }
  const lines = panels.source.value.split("\n");
  for (const err of state.parseErrors) {
    const anchor = document.createElement("div");
    anchor.className = "parse-error";
    const where = document.createElement("span");
    where.className = "parse-error-pos";
    where.textContent = `${err.line}:${err.col}`;
    const text = document.createElement("span");
    text.textContent = ` expected ${err.expected}, found ${err.found}`;
    const context = document.createElement("pre");
    context.className = "parse-error-line";
    context.textContent = lines[err.line - 1] ?? "";
    anchor.append(where, text, context);
    panels.sourceAnnotations.append(anchor);
  }
}
