import assert from "node:assert/strict";
import { test } from "node:test";

import { SessionApi } from "../src/api.js";
import { ExplorerController } from "../src/controller.js";
import { joinTraceElements, splitTraceElements } from "../src/trace.js";
import { MockService, startMock } from "./mock_service.js";

// deliberately alien event names: the page cannot have computed these
const MACHINE = {
  s0: { offers: ["{zig}", "{zag,zog}"], next: { "{zig}": "s1", "{zag,zog}": "s2" } },
  s1: { offers: ["{zag,zog}"], next: { "{zag,zog}": "s2" } },
  s2: { offers: [], next: {} },
};

async function withMock(
  fn: (mock: MockService, controller: ExplorerController) => Promise<void>,
  options: Partial<Parameters<typeof startMock>[0]> = {},
): Promise<void> {
  const mock = await startMock({ machine: MACHINE, start: "s0", ...options });
  try {
    const controller = new ExplorerController(new SessionApi(mock.base));
    await fn(mock, controller);
  } finally {
    await mock.close();
  }
}

test("trace strings split and rejoin verbatim", () => {
  assert.deepEqual(splitTraceElements("<>"), []);
  assert.deepEqual(splitTraceElements("<{a,b},{c}>"), ["{a,b}", "{c}"]);
  assert.deepEqual(splitTraceElements("<{c}.{v},{d}.{w}>"), ["{c}.{v}", "{d}.{w}"]);
  for (const history of ["<>", "<{a}>", "<{a,b},{c},{d}>"]) {
    assert.equal(joinTraceElements(splitTraceElements(history)), history);
  }
});

test("load shows exactly the offers the service sent", async () => {
  await withMock(async (_mock, controller) => {
    await controller.load("whatever", "IGNORED");
    assert.deepEqual(controller.view.offers, ["{zig}", "{zag,zog}"]);
    assert.equal(controller.view.history, "<>");
    assert.deepEqual(controller.view.historyElements, []);
    assert.equal(controller.view.stopped, false);
    assert.equal(controller.view.error, null);
  });
});

test("parse failures surface line and column anchors", async () => {
  await withMock(async (_mock, controller) => {
    await controller.load("BROKEN", "P");
    assert.equal(controller.view.sessionId, null);
    assert.deepEqual(controller.view.parseErrors, [
      { line: 2, col: 5, expected: "'='", found: "'BROKEN'" },
    ]);
    assert.deepEqual(controller.view.offers, []);
  });
});

test("steps extend the ribbon with the service's canonical strings", async () => {
  await withMock(async (_mock, controller) => {
    await controller.load("src", "P");
    await controller.stepClick("{zig}");
    assert.equal(controller.view.history, "<{zig}>");
    assert.deepEqual(controller.view.historyElements, ["{zig}"]);
    await controller.stepClick("{zag,zog}");
    assert.equal(controller.view.history, "<{zig},{zag,zog}>");
    assert.equal(controller.view.stopped, true);
    assert.deepEqual(controller.view.offers, []);
  });
});

test("undo restores the previous ribbon", async () => {
  await withMock(async (_mock, controller) => {
    await controller.load("src", "P");
    await controller.stepClick("{zig}");
    await controller.undoClick();
    assert.equal(controller.view.history, "<>");
    assert.deepEqual(controller.view.offers, ["{zig}", "{zag,zog}"]);
  });
});

test("undo at the start reports the conflict and stays consistent", async () => {
  await withMock(async (_mock, controller) => {
    await controller.load("src", "P");
    await controller.undoClick();
    assert.match(controller.view.error ?? "", /undo/);
    assert.equal(controller.view.history, "<>");
  });
});

test("peek shows next offers without touching the ribbon", async () => {
  await withMock(async (_mock, controller) => {
    await controller.load("src", "P");
    await controller.peekHover("{zig}");
    assert.deepEqual(controller.view.peek, {
      eventset: "{zig}",
      offers: ["{zag,zog}"],
    });
    assert.equal(controller.view.history, "<>");
    controller.peekClear();
    assert.equal(controller.view.peek, null);
  });
});

test("a 409 desync is recovered by re-fetching the session", async () => {
  await withMock(async (_mock, controller) => {
    await controller.load("src", "P");
    await controller.stepClick("{nonsense}");
    assert.match(controller.view.error ?? "", /not offered/);
    // state resynchronized from the service, not guessed locally
    assert.deepEqual(controller.view.offers, ["{zig}", "{zag,zog}"]);
    assert.equal(controller.view.history, "<>");
    // the session still works after recovery
    await controller.stepClick("{zig}");
    assert.equal(controller.view.history, "<{zig}>");
  });
});

test("rapid clicks serialize: one in-flight mutation per session", async () => {
  await withMock(
    async (mock, controller) => {
      await controller.load("src", "P");
      await Promise.all([
        controller.stepClick("{zig}"),
        controller.stepClick("{zag,zog}"),
        controller.undoClick(),
      ]);
      assert.equal(mock.overlaps, 0);
      assert.equal(mock.mutations, 3);
      assert.equal(controller.view.history, "<{zig}>");
    },
    { mutationDelay: 25 },
  );
});

test("a wrong schema version fails loudly at load", async () => {
  await withMock(
    async (_mock, controller) => {
      await controller.load("src", "P");
      assert.match(controller.view.error ?? "", /schema v99/);
      assert.equal(controller.view.sessionId, null);
    },
    { version: 99 },
  );
});
