/** DOM wiring: one canvas, three tools, two panels, one banner.
 *
 * All mathematics lives on the service; this file moves rectangles,
 * draws polylines, and prints panel lines built by panels.ts from
 * raw response text.  UI input state (b, N, zoom) is the only
 * client-originated numeric display.
 */

import {
  ApiClient,
  ClientValidationError,
  LoopGate,
  ScanCoordinator,
  ScanSink,
} from "./api.js";
import {
  Basepoint,
  LoopDraft,
  addWaypoint,
  closeDraft,
  newDraft,
  serializeLoop,
  setDraftN,
  validateDraft,
} from "./loop.js";
import { hovCurvePoints, realAxisY, wBoundaryPoints } from "./overlays.js";
import { TileImage } from "./palette.js";
import {
  FailurePoint,
  bannerText,
  codesTableLines,
  inspectHeaderLines,
  loopPanelLines,
  parseFailingParameter,
} from "./panels.js";
import {
  Size,
  Tool,
  ViewState,
  canvasToParam,
  defaultView,
  makeView,
  pan,
  paramToCanvas,
  zoomAt,
} from "./view.js";

const UI_CONFIG = {
  baseUrl: "",
  // canonical real basepoint for loop monodromy
  basepoint: { a: [-6.0, 0.0], b: [0.2, 0.0] } as Basepoint,
  tile: { width: 160, height: 140 } as Size,
  scanDebounceMs: 450,
};

const CANVAS_SIZE: Size = { width: 480, height: 420 };

function element<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

const canvas = element<HTMLCanvasElement>("plane");
const maybeCtx = canvas.getContext("2d");
if (maybeCtx === null) {
  throw new Error("canvas 2d context unavailable");
}
const ctx: CanvasRenderingContext2D = maybeCtx;
const banner = element<HTMLDivElement>("banner");
const bannerMessage = element<HTMLSpanElement>("banner-text");
const retryButton = element<HTMLButtonElement>("retry");
const statusLine = element<HTMLDivElement>("status");
const resultPanel = element<HTMLPreElement>("result-panel");
const inspectPanel = element<HTMLPreElement>("inspect-panel");
const rawPanel = element<HTMLPreElement>("raw-panel");
const nSelect = element<HTMLSelectElement>("n-select");
const bInput = element<HTMLInputElement>("b-input");
const loadCodesButton = element<HTMLButtonElement>("load-codes");
const submitLoopButton = element<HTMLButtonElement>("submit-loop");

const client = new ApiClient(UI_CONFIG.baseUrl);
const loopGate = new LoopGate(client);

let view: ViewState = defaultView();
let image: TileImage | null = null;
let imageData: ImageData | null = null;
let draft: LoopDraft | null = null;
let failure: FailurePoint | null = null;
let inspected: { are: number; aim: number } | null = null;
let retryAction: (() => void) | null = null;
let scanTimer: number | undefined;

function currentN(): number {
  return Number(nSelect.value);
}

function showBanner(err: Error, retry: (() => void) | null): void {
  bannerMessage.textContent = bannerText(err);
  retryAction = retry;
  retryButton.hidden = retry === null;
  banner.hidden = false;
}

function hideBanner(): void {
  banner.hidden = true;
  retryAction = null;
}

const offscreen = document.createElement("canvas");

function repaint(): void {
  ctx.fillStyle = "#14161a";
  ctx.fillRect(0, 0, CANVAS_SIZE.width, CANVAS_SIZE.height);
  if (image !== null && imageData !== null) {
    offscreen.width = image.width;
    offscreen.height = image.height;
    const octx = offscreen.getContext("2d");
    if (octx !== null) {
      octx.putImageData(imageData, 0, 0);
      const gridW = (image.rect.reHi - image.rect.reLo) / image.width;
      const gridH = (image.rect.imHi - image.rect.imLo) / image.height;
      const topLeft = paramToCanvas(
        view.rect,
        CANVAS_SIZE,
        image.rect.reLo + gridW / 2,
        image.rect.imHi - gridH / 2,
      );
      const botRight = paramToCanvas(
        view.rect,
        CANVAS_SIZE,
        image.rect.reHi - gridW / 2,
        image.rect.imLo + gridH / 2,
      );
      const cellW = (botRight.px - topLeft.px) / (image.width - 1 || 1);
      const cellH = (botRight.py - topLeft.py) / (image.height - 1 || 1);
      ctx.imageSmoothingEnabled = false;
      ctx.drawImage(
        offscreen,
        topLeft.px - cellW / 2,
        topLeft.py - cellH / 2,
        cellW * image.width,
        cellH * image.height,
      );
    }
  }
  drawOverlays();
  drawDraft();
  drawFailure();
  drawInspected();
}

function strokePolyline(points: { px: number; py: number }[], style: string, dash: number[]): void {
  if (points.length < 2) {
    return;
  }
  ctx.save();
  ctx.strokeStyle = style;
  ctx.setLineDash(dash);
  ctx.lineWidth = 1;
  ctx.beginPath();
  ctx.moveTo(points[0].px, points[0].py);
  for (const point of points.slice(1)) {
    ctx.lineTo(point.px, point.py);
  }
  ctx.stroke();
  ctx.restore();
}

function drawOverlays(): void {
  // the real axis is always drawn: its non-island points are the
  // candidates the tool exists to probe
  if (view.overlays.realAxis) {
    const y = realAxisY(view.rect, CANVAS_SIZE);
    if (y !== null) {
      strokePolyline(
        [
          { px: 0, py: y },
          { px: CANVAS_SIZE.width, py: y },
        ],
        "#d0a030",
        [],
      );
    }
  }
  if (view.overlays.hovCurve) {
    strokePolyline(hovCurvePoints(view.b, view.rect, CANVAS_SIZE), "#4aa3ff", [6, 4]);
  }
  if (view.overlays.wBoundary) {
    strokePolyline(wBoundaryPoints(view.rect, CANVAS_SIZE), "#ff6a6a", [2, 3]);
  }
}

function drawDraft(): void {
  if (draft === null || draft.waypoints.length === 0) {
    return;
  }
  const points = draft.waypoints.map((w) =>
    paramToCanvas(view.rect, CANVAS_SIZE, w[0], w[1]),
  );
  strokePolyline(points, "#7CFC9A", []);
  ctx.save();
  ctx.fillStyle = "#7CFC9A";
  for (const point of points) {
    ctx.beginPath();
    ctx.arc(point.px, point.py, 3, 0, 2 * Math.PI);
    ctx.fill();
  }
  ctx.restore();
}

function drawFailure(): void {
  if (failure === null) {
    return;
  }
  const at = paramToCanvas(view.rect, CANVAS_SIZE, failure.a[0], failure.a[1]);
  ctx.save();
  ctx.strokeStyle = "#ff3030";
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.arc(at.px, at.py, 7, 0, 2 * Math.PI);
  ctx.stroke();
  ctx.beginPath();
  ctx.moveTo(at.px - 5, at.py - 5);
  ctx.lineTo(at.px + 5, at.py + 5);
  ctx.moveTo(at.px - 5, at.py + 5);
  ctx.lineTo(at.px + 5, at.py - 5);
  ctx.stroke();
  ctx.restore();
}

function drawInspected(): void {
  if (inspected === null) {
    return;
  }
  const at = paramToCanvas(view.rect, CANVAS_SIZE, inspected.are, inspected.aim);
  ctx.save();
  ctx.strokeStyle = "#ffffff";
  ctx.lineWidth = 1;
  ctx.beginPath();
  ctx.arc(at.px, at.py, 5, 0, 2 * Math.PI);
  ctx.stroke();
  ctx.restore();
}

const sink: ScanSink = {
  begin(img, info) {
    image = img;
    imageData = new ImageData(img.data, img.width, img.height);
    statusLine.textContent = info.cached
      ? `job ${info.job} (cached)`
      : `job ${info.job}: scanning ${img.width}x${img.height}`;
    repaint();
  },
  progress(img) {
    statusLine.textContent = `rows ${img.paintedRows.size}/${img.height}`;
    repaint();
  },
  finish(img) {
    statusLine.textContent = `tiles ${img.width}x${img.height} complete, payload sha256 ${img.sourceHash.slice(0, 12)}`;
    hideBanner();
    repaint();
  },
  fail(err) {
    showBanner(err, () => scheduleScan(0));
  },
};

const coordinator = new ScanCoordinator(client, sink);

function scheduleScan(delayMs: number): void {
  window.clearTimeout(scanTimer);
  scanTimer = window.setTimeout(() => {
    const body = {
      b: [view.b, 0.0] as [number, number],
      re_lo: view.rect.reLo,
      re_hi: view.rect.reHi,
      im_lo: view.rect.imLo,
      im_hi: view.rect.imHi,
      width: UI_CONFIG.tile.width,
      height: UI_CONFIG.tile.height,
    };
    void coordinator.request(body);
  }, delayMs);
}

function setView(next: ViewState, rescanDelay: number | null): void {
  view = next;
  statusLine.textContent = `zoom ${view.zoom.toFixed(2)}x`;
  repaint();
  if (rescanDelay !== null) {
    scheduleScan(rescanDelay);
  }
}

function setTool(tool: Tool): void {
  view = { ...view, tool };
  for (const id of ["tool-pan", "tool-loop", "tool-inspect"]) {
    element<HTMLButtonElement>(id).classList.toggle(
      "active",
      id === `tool-${tool === "loop-draw" ? "loop" : tool}`,
    );
  }
  canvas.style.cursor = tool === "pan" ? "grab" : "crosshair";
}

// --- pan and zoom ---------------------------------------------------

let dragging = false;
let lastX = 0;
let lastY = 0;

canvas.addEventListener("mousedown", (event) => {
  if (view.tool !== "pan") {
    return;
  }
  dragging = true;
  lastX = event.offsetX;
  lastY = event.offsetY;
});

canvas.addEventListener("mousemove", (event) => {
  if (!dragging) {
    return;
  }
  const dx = event.offsetX - lastX;
  const dy = event.offsetY - lastY;
  lastX = event.offsetX;
  lastY = event.offsetY;
  setView(pan(view, dx, dy, CANVAS_SIZE), null);
});

window.addEventListener("mouseup", () => {
  if (dragging) {
    dragging = false;
    scheduleScan(UI_CONFIG.scanDebounceMs);
  }
});

canvas.addEventListener("wheel", (event) => {
  event.preventDefault();
  const factor = event.deltaY < 0 ? 1.25 : 0.8;
  setView(
    zoomAt(view, event.offsetX, event.offsetY, factor, CANVAS_SIZE),
    UI_CONFIG.scanDebounceMs,
  );
});

// --- loop drawing ---------------------------------------------------

function reportLoopProblem(message: string): void {
  resultPanel.textContent = `cannot submit: ${message}`;
}

canvas.addEventListener("click", (event) => {
  if (view.tool === "loop-draw") {
    const at = canvasToParam(view.rect, CANVAS_SIZE, event.offsetX, event.offsetY);
    try {
      draft = addWaypoint(draft ?? newDraft(currentN()), at.re, at.im, view.b, 0.0);
    } catch (err) {
      reportLoopProblem((err as Error).message);
      return;
    }
    resultPanel.textContent = `${draft.waypoints.length} waypoint(s); close the loop to submit`;
    repaint();
    return;
  }
  if (view.tool === "inspect") {
    const at = canvasToParam(view.rect, CANVAS_SIZE, event.offsetX, event.offsetY);
    void inspectPoint(at.re, at.im);
  }
});

canvas.addEventListener("dblclick", (event) => {
  event.preventDefault();
  if (view.tool === "loop-draw") {
    closeCurrentLoop();
  }
});

function closeCurrentLoop(): void {
  if (draft === null) {
    reportLoopProblem("nothing drawn yet");
    return;
  }
  try {
    draft = closeDraft(draft);
  } catch (err) {
    reportLoopProblem((err as Error).message);
    return;
  }
  resultPanel.textContent = "loop closed; submit when ready";
  repaint();
}

async function submitCurrentLoop(): Promise<void> {
  if (draft === null) {
    reportLoopProblem("nothing drawn yet");
    return;
  }
  const problem = validateDraft(draft);
  if (problem !== null) {
    reportLoopProblem(problem);
    return;
  }
  const body = serializeLoop(draft, UI_CONFIG.basepoint);
  submitLoopButton.disabled = true;
  resultPanel.textContent = "running monodromy...";
  failure = null;
  try {
    const result = await loopGate.submit(body);
    resultPanel.textContent = loopPanelLines(result.raw).join("\n");
    rawPanel.textContent = result.raw;
    if (result.payload.status !== "ok") {
      failure = parseFailingParameter(result.payload.diagnostics.note);
    }
    hideBanner();
  } catch (err) {
    if (err instanceof ClientValidationError) {
      reportLoopProblem(err.message);
    } else {
      showBanner(err as Error, () => void submitCurrentLoop());
    }
  } finally {
    submitLoopButton.disabled = false;
    repaint();
  }
}

element<HTMLButtonElement>("close-loop").addEventListener("click", closeCurrentLoop);
submitLoopButton.addEventListener("click", () => void submitCurrentLoop());
element<HTMLButtonElement>("clear-loop").addEventListener("click", () => {
  draft = null;
  failure = null;
  resultPanel.textContent = "";
  rawPanel.textContent = "";
  repaint();
});

// --- inspection -----------------------------------------------------

async function inspectPoint(are: number, aim: number): Promise<void> {
  inspected = { are, aim };
  repaint();
  inspectPanel.textContent = "classifying...";
  try {
    const result = await client.classify(are, aim, view.b, 0.0);
    inspectPanel.textContent = inspectHeaderLines(result.raw).join("\n");
    loadCodesButton.hidden = false;
    hideBanner();
  } catch (err) {
    inspectPanel.textContent = "";
    showBanner(err as Error, () => void inspectPoint(are, aim));
  }
}

async function loadCodes(): Promise<void> {
  if (inspected === null) {
    return;
  }
  const { are, aim } = inspected;
  loadCodesButton.disabled = true;
  try {
    const result = await client.codes(are, aim, view.b, 0.0, currentN());
    inspectPanel.textContent +=
      "\n" + codesTableLines(result.raw).join("\n");
    hideBanner();
  } catch (err) {
    showBanner(err as Error, () => void loadCodes());
  } finally {
    loadCodesButton.disabled = false;
  }
}

loadCodesButton.addEventListener("click", () => void loadCodes());

// --- toolbar --------------------------------------------------------

element<HTMLButtonElement>("tool-pan").addEventListener("click", () => setTool("pan"));
element<HTMLButtonElement>("tool-loop").addEventListener("click", () => setTool("loop-draw"));
element<HTMLButtonElement>("tool-inspect").addEventListener("click", () => setTool("inspect"));

element<HTMLButtonElement>("reset-view").addEventListener("click", () => {
  const overlays = view.overlays;
  const tool = view.tool;
  const fresh = defaultView();
  setView(makeView(view.b, fresh.rect, overlays, tool), 0);
});

bInput.addEventListener("change", () => {
  const b = Number(bInput.value);
  if (!Number.isFinite(b)) {
    bInput.value = String(view.b);
    return;
  }
  setView(makeView(b, view.rect, view.overlays, view.tool), 0);
});

nSelect.addEventListener("change", () => {
  if (draft !== null) {
    draft = setDraftN(draft, currentN());
  }
});

function bindOverlay(id: string, key: keyof ViewState["overlays"]): void {
  const box = element<HTMLInputElement>(id);
  box.checked = view.overlays[key];
  box.addEventListener("change", () => {
    view = {
      ...view,
      overlays: { ...view.overlays, [key]: box.checked },
    };
    repaint();
  });
}

bindOverlay("ov-hov", "hovCurve");
bindOverlay("ov-w", "wBoundary");
bindOverlay("ov-axis", "realAxis");

retryButton.addEventListener("click", () => {
  const action = retryAction;
  hideBanner();
  if (action !== null) {
    action();
  }
});

// --- boot -----------------------------------------------------------

bInput.value = String(view.b);
setTool("pan");
repaint();
scheduleScan(0);
