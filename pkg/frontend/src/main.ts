import { SessionApi } from "./api.js";
import { ExplorerController } from "./controller.js";
import { bindRenderer, Panels } from "./render.js";

const SAMPLE = `# two independent loops advancing in lockstep
alphabet L = {work}
alphabet R = {rest}

process LEFT : L = mu X . {work} -> X
process RIGHT : R = mu Y . {rest} -> Y
process BOTH = LEFT || RIGHT
`;

function grab<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function main(): void {
  const source = grab<HTMLTextAreaElement>("source");
  const processName = grab<HTMLInputElement>("process-name");
  const serviceUrl = grab<HTMLInputElement>("service-url");
  source.value = SAMPLE;
  processName.value = "BOTH";
  serviceUrl.value = `${window.location.protocol}//${window.location.hostname}:8421`;

  const panels: Panels = {
    ribbon: grab("ribbon"),
    ribbonCanonical: grab("ribbon-canonical"),
    offers: grab("offers"),
    peek: grab("peek"),
    status: grab("status"),
    errors: grab("errors"),
    source,
    sourceAnnotations: grab("source-annotations"),
  };

  let controller = new ExplorerController(new SessionApi(serviceUrl.value));
  bindRenderer(controller, panels);

  grab<HTMLButtonElement>("load").addEventListener("click", () => {
    controller = new ExplorerController(new SessionApi(serviceUrl.value));
    bindRenderer(controller, panels);
    void controller.load(source.value, processName.value);
  });
  grab<HTMLButtonElement>("undo").addEventListener("click", () => {
    void controller.undoClick();
  });
}

main();
