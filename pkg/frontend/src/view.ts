/** View state for the parameter-plane canvas: rectangle, zoom, tools.
 *
 * The pixel convention matches the service's scan grid: column 0 is
 * the left edge, row 0 the top edge, and a pixel samples its center,
 * so canvasToParam(rect, size, col, row) lands exactly on the tile
 * record for that cell when the canvas size equals the grid size.
 */

import type { ScanBody } from "./types.js";

export interface Rect {
  reLo: number;
  reHi: number;
  imLo: number;
  imHi: number;
}

export interface Size {
  width: number;
  height: number;
}

export type Tool = "pan" | "loop-draw" | "inspect";

export interface OverlayToggles {
  hovCurve: boolean;
  wBoundary: boolean;
  realAxis: boolean;
}

export interface ViewState {
  b: number;
  rect: Rect;
  zoom: number;
  overlays: OverlayToggles;
  tool: Tool;
}

export const FIG1_RECT: Rect = { reLo: -2.6, reHi: -1.0, imLo: -0.7, imHi: 0.7 };
export const DEFAULT_B = 0.2;
export const ZOOM_MIN = 1.0;
export const ZOOM_MAX = 1024.0;

/** Zoom level of a rectangle relative to the home window width. */
export function zoomLevel(rect: Rect): number {
  return (FIG1_RECT.reHi - FIG1_RECT.reLo) / (rect.reHi - rect.reLo);
}

export function makeView(
  b: number,
  rect: Rect,
  overlays: OverlayToggles,
  tool: Tool,
): ViewState {
  if (!(rect.reLo < rect.reHi) || !(rect.imLo < rect.imHi)) {
    throw new RangeError("view rectangle bounds must be ordered");
  }
  const raw = zoomLevel(rect);
  // Rect arithmetic at the limits can land a few ulps past them; rounding
  // that small must not block panning at full zoom.
  const slack = 1e-9;
  if (raw < ZOOM_MIN * (1 - slack) || raw > ZOOM_MAX * (1 + slack)) {
    throw new RangeError("zoom outside configured limits");
  }
  const zoom = Math.min(ZOOM_MAX, Math.max(ZOOM_MIN, raw));
  if (!Number.isFinite(b)) {
    throw new RangeError("b must be finite");
  }
  return { b, rect: { ...rect }, zoom, overlays: { ...overlays }, tool };
}

export function defaultView(): ViewState {
  return makeView(
    DEFAULT_B,
    FIG1_RECT,
    { hovCurve: true, wBoundary: true, realAxis: true },
    "pan",
  );
}

export function canvasToParam(
  rect: Rect,
  size: Size,
  px: number,
  py: number,
): { re: number; im: number } {
  const re = rect.reLo + ((px + 0.5) * (rect.reHi - rect.reLo)) / size.width;
  const im = rect.imHi - ((py + 0.5) * (rect.imHi - rect.imLo)) / size.height;
  return { re, im };
}

/** Inverse of canvasToParam; returns fractional pixel coordinates. */
export function paramToCanvas(
  rect: Rect,
  size: Size,
  re: number,
  im: number,
): { px: number; py: number } {
  const px = ((re - rect.reLo) / (rect.reHi - rect.reLo)) * size.width - 0.5;
  const py = ((rect.imHi - im) / (rect.imHi - rect.imLo)) * size.height - 0.5;
  return { px, py };
}

/** Shift the view by a pixel delta; the content follows the drag. */
export function pan(view: ViewState, dxPx: number, dyPx: number, size: Size): ViewState {
  const dRe = (-dxPx * (view.rect.reHi - view.rect.reLo)) / size.width;
  const dIm = (dyPx * (view.rect.imHi - view.rect.imLo)) / size.height;
  const rect = {
    reLo: view.rect.reLo + dRe,
    reHi: view.rect.reHi + dRe,
    imLo: view.rect.imLo + dIm,
    imHi: view.rect.imHi + dIm,
  };
  return makeView(view.b, rect, view.overlays, view.tool);
}

/** Zoom by a factor keeping the parameter under the cursor fixed. */
export function zoomAt(
  view: ViewState,
  px: number,
  py: number,
  factor: number,
  size: Size,
): ViewState {
  if (!(factor > 0)) {
    throw new RangeError("zoom factor must be positive");
  }
  const target = Math.min(ZOOM_MAX, Math.max(ZOOM_MIN, view.zoom * factor));
  const eff = target / view.zoom;
  if (eff === 1.0) {
    return view;
  }
  const anchor = canvasToParam(view.rect, size, px, py);
  const w = (view.rect.reHi - view.rect.reLo) / eff;
  const h = (view.rect.imHi - view.rect.imLo) / eff;
  const reLo = anchor.re - ((px + 0.5) * w) / size.width;
  const imHi = anchor.im + ((py + 0.5) * h) / size.height;
  const rect = { reLo, reHi: reLo + w, imLo: imHi - h, imHi };
  return makeView(view.b, rect, view.overlays, view.tool);
}

/** Scan request for the visible rectangle at a given tile resolution. */
export function windowFromView(view: ViewState, tile: Size, nMax?: number): ScanBody {
  const body: ScanBody = {
    b: [view.b, 0.0],
    re_lo: view.rect.reLo,
    re_hi: view.rect.reHi,
    im_lo: view.rect.imLo,
    im_hi: view.rect.imHi,
    width: tile.width,
    height: tile.height,
  };
  if (nMax !== undefined) {
    body.options = { n_max: nMax };
  }
  return body;
}
