/** Service payload shapes, mirrored from the HTTP API responses. */

export type Pair = [number, number];

export interface WitnessPayload {
  kind: string;
  a: Pair;
  b: Pair;
  cycle: Pair[];
  seed: Pair[];
}

export interface ClassifyPayload {
  a: Pair;
  b: Pair;
  n_max: number;
  verdict: string;
  witness: WitnessPayload | null;
}

export interface TileRecord {
  re: number;
  im: number;
  verdict: string;
  witness_kind: string | null;
}

export interface TilesPayload {
  b: Pair;
  width: number;
  height: number;
  rows_done: number;
  complete: boolean;
  records: TileRecord[];
}

export interface SubmitResponse {
  job: string;
  cached: boolean;
  width: number;
  height: number;
}

export interface JobSnapshot {
  job: string;
  state: "queued" | "running" | "done" | "failed";
  cached: boolean;
  width: number;
  height: number;
  rows_done: number;
  error: string | null;
}

export interface OrbitTracePayload {
  word: string;
  steps: number;
  min_margin: number;
}

export interface LoopResponse {
  base: { a: Pair; b: Pair };
  N: number;
  status: "ok" | "collision" | "left_horseshoe_evidence";
  permutation: [string, string][] | null;
  cycles: string;
  match: string | null;
  diagnostics: {
    hov_certified: boolean;
    note: string;
    traces: OrbitTracePayload[];
  };
}

export interface CodesOrbitRow {
  e_code: string;
  g_codes: string[] | null;
  margin: number;
  y: Pair[];
}

export interface CodesPayload {
  a: Pair;
  b: Pair;
  n: number;
  count: number;
  real_type: string | null;
  orbits: CodesOrbitRow[];
}

export interface ErrorEnvelope {
  error: { code: string; message: string };
}

/** Scan request body as POST /api/scan expects it. */
export interface ScanBody {
  b: Pair;
  re_lo: number;
  re_hi: number;
  im_lo: number;
  im_hi: number;
  width: number;
  height: number;
  options?: { n_max?: number };
}

/** Loop request body as POST /api/loop expects it. */
export interface LoopBody {
  base: { a: Pair; b: Pair };
  waypoints: [number, number, number, number][];
  closed: boolean;
  N: number;
}
