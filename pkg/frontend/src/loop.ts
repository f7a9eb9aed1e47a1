/** Loop drafting: waypoints in parameter coordinates, closure, N.
 *
 * A draft holds what the user drew and nothing else.  Serialization
 * wraps the drawn waypoints with the canonical basepoint on both ends
 * (the service requires closed paths to start and end at the same
 * parameters, exactly), dropping exact duplicates at the two seams.
 */

import type { LoopBody } from "./types.js";

export const LOOP_N_LIMIT = 8;

export type Waypoint = [number, number, number, number];

export interface Basepoint {
  a: [number, number];
  b: [number, number];
}

export interface LoopDraft {
  waypoints: Waypoint[];
  closed: boolean;
  n: number;
}

export function newDraft(n: number): LoopDraft {
  checkN(n);
  return { waypoints: [], closed: false, n };
}

export function checkN(n: number): void {
  if (!Number.isInteger(n) || n < 1 || n > LOOP_N_LIMIT) {
    throw new RangeError(`N must be an integer between 1 and ${LOOP_N_LIMIT}`);
  }
}

export function setDraftN(draft: LoopDraft, n: number): LoopDraft {
  checkN(n);
  return { ...draft, waypoints: draft.waypoints.map(copyPoint), n };
}

function copyPoint(p: Waypoint): Waypoint {
  return [p[0], p[1], p[2], p[3]];
}

function samePoint(p: Waypoint, q: Waypoint): boolean {
  return p[0] === q[0] && p[1] === q[1] && p[2] === q[2] && p[3] === q[3];
}

export function addWaypoint(
  draft: LoopDraft,
  are: number,
  aim: number,
  bre: number,
  bim: number,
): LoopDraft {
  if (draft.closed) {
    throw new Error("the loop is closed; start a new draft to add points");
  }
  const point: Waypoint = [are, aim, bre, bim];
  const last = draft.waypoints[draft.waypoints.length - 1];
  if (last !== undefined && samePoint(last, point)) {
    throw new Error("repeated waypoint; move before clicking again");
  }
  return {
    ...draft,
    waypoints: [...draft.waypoints.map(copyPoint), point],
  };
}

/** Close the draft by appending a copy of its start point. */
export function closeDraft(draft: LoopDraft): LoopDraft {
  if (draft.closed) {
    throw new Error("the loop is already closed");
  }
  if (draft.waypoints.length < 3) {
    throw new Error("draw at least 3 waypoints before closing the loop");
  }
  return {
    ...draft,
    waypoints: [...draft.waypoints.map(copyPoint), copyPoint(draft.waypoints[0])],
    closed: true,
  };
}

/** Reason the draft cannot be submitted yet, or null when it can. */
export function validateDraft(draft: LoopDraft): string | null {
  if (draft.waypoints.length < 3) {
    return "draw at least 3 waypoints before submitting";
  }
  if (!draft.closed) {
    return "close the loop before submitting";
  }
  return null;
}

/** Request body for POST /api/loop; drawn points appear verbatim. */
export function serializeLoop(draft: LoopDraft, base: Basepoint): LoopBody {
  const problem = validateDraft(draft);
  if (problem !== null) {
    throw new Error(problem);
  }
  const anchor: Waypoint = [base.a[0], base.a[1], base.b[0], base.b[1]];
  const waypoints: Waypoint[] = [];
  for (const point of [anchor, ...draft.waypoints.map(copyPoint), anchor]) {
    const last = waypoints[waypoints.length - 1];
    if (last !== undefined && samePoint(last, point)) {
      continue;
    }
    waypoints.push(point);
  }
  return {
    base: { a: [base.a[0], base.a[1]], b: [base.b[0], base.b[1]] },
    waypoints,
    closed: true,
    N: draft.n,
  };
}
