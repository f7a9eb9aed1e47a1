/** Overlay geometry in canvas coordinates: navigation chrome only.
 *
 * The curves mirror the documented closed forms (the HOV boundary
 * |a| = 2(1+|b|)^2 and the W1 boundary r(phi) = -sin(phi/2) /
 * sin(3 phi/2) on (2pi/3, 4pi/3)); no displayed number comes from
 * here.  The real axis Im(a) = 0 is always drawn when visible.
 */

import { Rect, Size, paramToCanvas } from "./view.js";

export interface CanvasPoint {
  px: number;
  py: number;
}

export function hovRadius(b: number): number {
  return 2.0 * (1.0 + Math.abs(b)) ** 2;
}

/** The HOV boundary circle for the current b, as a polyline. */
export function hovCurvePoints(
  b: number,
  rect: Rect,
  size: Size,
  samples = 256,
): CanvasPoint[] {
  const radius = hovRadius(b);
  const points: CanvasPoint[] = [];
  for (let k = 0; k <= samples; k += 1) {
    const angle = (2.0 * Math.PI * k) / samples;
    points.push(
      paramToCanvas(rect, size, radius * Math.cos(angle), radius * Math.sin(angle)),
    );
  }
  return points;
}

const THIRD = Math.PI / 3.0;

/** The W1 boundary curve between its asymptote angles. */
export function wBoundaryPoints(
  rect: Rect,
  size: Size,
  samples = 256,
): CanvasPoint[] {
  const lo = 2.0 * THIRD;
  const hi = 4.0 * THIRD;
  const margin = (hi - lo) * 1e-3;
  const points: CanvasPoint[] = [];
  for (let k = 0; k <= samples; k += 1) {
    const phi = lo + margin + ((hi - lo - 2 * margin) * k) / samples;
    const radius = -Math.sin(phi / 2.0) / Math.sin((3.0 * phi) / 2.0);
    points.push(
      paramToCanvas(rect, size, radius * Math.cos(phi), radius * Math.sin(phi)),
    );
  }
  return points;
}

/** Canvas y of the real axis, or null when Im(a)=0 is out of view. */
export function realAxisY(rect: Rect, size: Size): number | null {
  if (rect.imLo > 0 || rect.imHi < 0) {
    return null;
  }
  return paramToCanvas(rect, size, rect.reLo, 0.0).py;
}
