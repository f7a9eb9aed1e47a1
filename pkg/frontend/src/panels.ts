/** Panel text builders: everything the user reads comes from here.
 *
 * All numeric content is sliced from the raw response text (see
 * rawjson.ts); the builders add labels around it, never reformatted
 * values.  The cycles line uses the same "cycles: ..." shape as the
 * CLI text output, so the two agree byte for byte on the same loop.
 */

import { NetworkError, ServiceError } from "./api.js";
import {
  RawValue,
  parseRaw,
  rawBool,
  rawGet,
  rawIsNull,
  rawItems,
  rawNum,
  rawStr,
} from "./rawjson.js";

export function matchLabel(match: string | null): string {
  if (match === null) {
    return "no generator word within budget";
  }
  if (match === "") {
    return "identity";
  }
  if (match === "C") {
    return "C (symbol swap)";
  }
  if (match === "F") {
    return "F (Brown automorphism)";
  }
  if (match === "s") {
    return "s (shift)";
  }
  return `${match} (letters apply left to right)`;
}

function gcd(x: number, y: number): number {
  while (y !== 0) {
    [x, y] = [y, x % y];
  }
  return x;
}

/** Order of the permutation: lcm of its cycle lengths. */
export function permutationOrder(pairs: [string, string][]): number {
  const image = new Map(pairs);
  const seen = new Set<string>();
  let order = 1;
  for (const [start] of pairs) {
    if (seen.has(start)) {
      continue;
    }
    let length = 0;
    let word = start;
    do {
      seen.add(word);
      const next = image.get(word);
      if (next === undefined) {
        throw new TypeError("permutation pairs do not close");
      }
      word = next;
      length += 1;
    } while (word !== start);
    order = (order / gcd(order, length)) * length;
  }
  return order;
}

/** Parse Python's str(complex): "(-2.3+0.1j)", "(2+0j)", "0.1j". */
export function parsePyComplex(text: string): [number, number] | null {
  let body = text;
  if (body.startsWith("(") && body.endsWith(")")) {
    body = body.slice(1, -1);
  }
  if (!body.endsWith("j")) {
    const re = Number(body);
    return Number.isFinite(re) ? [re, 0] : null;
  }
  body = body.slice(0, -1);
  // split at the sign that starts the imaginary part (not an exponent sign)
  for (let at = body.length - 1; at > 0; at -= 1) {
    const ch = body[at];
    if ((ch === "+" || ch === "-") && body[at - 1] !== "e" && body[at - 1] !== "E") {
      const re = Number(body.slice(0, at));
      const im = Number(body.slice(at));
      return Number.isFinite(re) && Number.isFinite(im) ? [re, im] : null;
    }
  }
  const im = Number(body);
  return Number.isFinite(im) ? [0, im] : null;
}

export interface FailurePoint {
  aText: string;
  bText: string;
  a: [number, number];
  b: [number, number];
}

/** Failing parameter from a continuation note, for the canvas marker. */
export function parseFailingParameter(note: string): FailurePoint | null {
  const match = /at a=(\S+) b=(\S+)$/.exec(note);
  if (match === null) {
    return null;
  }
  const a = parsePyComplex(match[1]);
  const b = parsePyComplex(match[2]);
  if (a === null || b === null) {
    return null;
  }
  return { aText: match[1], bText: match[2], a, b };
}

function tracesLines(diagnostics: RawValue): string[] {
  const lines: string[] = [];
  for (const trace of rawItems(rawGet(diagnostics, "traces"))) {
    const word = rawStr(rawGet(trace, "word"));
    const steps = rawNum(rawGet(trace, "steps"));
    const margin = rawNum(rawGet(trace, "min_margin"));
    lines.push(`  ${word}: steps=${steps} min_margin=${margin}`);
  }
  return lines;
}

/** Result panel lines for a loop response. */
export function loopPanelLines(raw: string): string[] {
  const tree = parseRaw(raw);
  const status = rawStr(rawGet(tree, "status"));
  const lines = [`status: ${status}`];
  const permutation = rawGet(tree, "permutation");
  if (!rawIsNull(permutation)) {
    lines.push(`cycles: ${rawStr(rawGet(tree, "cycles"))}`);
    const matchField = rawGet(tree, "match");
    lines.push(
      `match: ${matchLabel(rawIsNull(matchField) ? null : rawStr(matchField))}`,
    );
    const pairs = rawItems(permutation).map((pair) => {
      const [src, dst] = rawItems(pair);
      return [rawStr(src), rawStr(dst)] as [string, string];
    });
    const order = permutationOrder(pairs);
    lines.push(`order: ${order}${order === 2 ? " (involution)" : ""}`);
  }
  const diagnostics = rawGet(tree, "diagnostics");
  lines.push(
    `hov certified: ${rawBool(rawGet(diagnostics, "hov_certified")) ? "yes" : "no"}`,
  );
  const note = rawStr(rawGet(diagnostics, "note"));
  if (note !== "") {
    lines.push(`note: ${note}`);
  }
  if (status !== "ok") {
    const failure = parseFailingParameter(note);
    if (failure !== null) {
      lines.push(`failed near a=${failure.aText} b=${failure.bText}`);
    }
  }
  const traces = tracesLines(diagnostics);
  if (traces.length > 0) {
    lines.push("orbit traces:");
    lines.push(...traces);
  }
  return lines;
}

const REAL_TYPE_GLOSS: Record<string, string> = {
  type1: "real horseshoe",
  type2: "no real bounded orbits",
  type3: "neither",
};

/** Detail panel header for a classify response. */
export function inspectHeaderLines(raw: string): string[] {
  const tree = parseRaw(raw);
  const aPair = rawItems(rawGet(tree, "a"));
  const bPair = rawItems(rawGet(tree, "b"));
  const lines = [
    `a = ${rawNum(aPair[0])} + ${rawNum(aPair[1])}i`,
    `b = ${rawNum(bPair[0])} + ${rawNum(bPair[1])}i`,
    `verdict: ${rawStr(rawGet(tree, "verdict"))} (n_max ${rawNum(rawGet(tree, "n_max"))})`,
  ];
  const witness = rawGet(tree, "witness");
  if (!rawIsNull(witness)) {
    const kind = rawStr(rawGet(witness, "kind"));
    const wa = rawItems(rawGet(witness, "a"));
    const cycle = rawItems(rawGet(witness, "cycle"));
    lines.push(`witness: ${kind} at a=${rawNum(wa[0])}+${rawNum(wa[1])}i, cycle length ${cycle.length}`);
  }
  return lines;
}

/** Per-N table lines for a codes response. */
export function codesTableLines(raw: string): string[] {
  const tree = parseRaw(raw);
  const lines = [
    `Per_${rawNum(rawGet(tree, "n"))}: ${rawNum(rawGet(tree, "count"))} orbits`,
  ];
  const realType = rawGet(tree, "real_type");
  if (!rawIsNull(realType)) {
    const label = rawStr(realType);
    const gloss = REAL_TYPE_GLOSS[label];
    lines.push(
      gloss === undefined
        ? `real-axis evidence: ${label}`
        : `real-axis evidence: ${label} (${gloss})`,
    );
  }
  for (const orbit of rawItems(rawGet(tree, "orbits"))) {
    const eCode = rawStr(rawGet(orbit, "e_code"));
    const gField = rawGet(orbit, "g_codes");
    const gCodes = rawIsNull(gField)
      ? "-"
      : rawItems(gField).map(rawStr).join(",") || "-";
    const margin = rawNum(rawGet(orbit, "margin"));
    lines.push(`  E=${eCode} G=${gCodes} margin=${margin}`);
  }
  return lines;
}

/** Error banner copy; network failures get the retry hint. */
export function bannerText(err: Error): string {
  if (err instanceof NetworkError) {
    // the message already reads "service unreachable: <cause>"
    return `${err.message}. Start the henonshoe service, then retry.`;
  }
  if (err instanceof ServiceError) {
    return `${err.code}: ${err.message}`;
  }
  return err.message;
}
