/**
 * String-level helpers for the service's canonical trace format.  The page
 * never computes process semantics; it only splits the service's own
 * strings for display, so the ribbon can always be reassembled verbatim.
 */

/** Split "<{a,b},{c}>" into ["{a,b}", "{c}"]; "<>" gives []. */
export function splitTraceElements(history: string): string[] {
  if (!history.startsWith("<") || !history.endsWith(">")) {
    throw new Error(`not a trace string: ${history}`);
  }
  const inner = history.slice(1, -1);
  if (inner === "") {
    return [];
  }
  const elements: string[] = [];
  let depth = 0;
  let start = 0;
  for (let i = 0; i < inner.length; i++) {
    const ch = inner[i];
    if (ch === "{") depth++;
    else if (ch === "}") depth--;
    else if (ch === "," && depth === 0) {
      elements.push(inner.slice(start, i));
      start = i + 1;
    }
  }
  elements.push(inner.slice(start));
  return elements;
}

/** Reassemble what splitTraceElements produced; inverse by construction. */
export function joinTraceElements(elements: string[]): string {
  return `<${elements.join(",")}>`;
}
