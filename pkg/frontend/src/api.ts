/** HTTP client for the henonshoe service, plus the two request
 * disciplines the UI needs: a scan coordinator that keeps at most one
 * job in flight and discards stale responses, and a loop gate that
 * rejects overlapping loop submissions.
 *
 * Every fetch result is kept as raw text alongside the parsed value;
 * the panels display from the raw text, never from re-stringified
 * parses.
 */

import { TileImage } from "./palette.js";
import type { Rect } from "./view.js";
import type {
  ClassifyPayload,
  CodesPayload,
  JobSnapshot,
  LoopBody,
  LoopResponse,
  ScanBody,
  SubmitResponse,
  TilesPayload,
} from "./types.js";

export class ServiceError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ServiceError";
  }
}

export class NetworkError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "NetworkError";
  }
}

export class ClientValidationError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "ClientValidationError";
  }
}

export interface FetchResponseLike {
  ok: boolean;
  status: number;
  text(): Promise<string>;
}

export type FetchLike = (
  url: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string },
) => Promise<FetchResponseLike>;

export interface RawResult<T> {
  raw: string;
  payload: T;
}

export async function sha256Hex(text: string): Promise<string> {
  const digest = await crypto.subtle.digest(
    "SHA-256",
    new TextEncoder().encode(text),
  );
  return [...new Uint8Array(digest)]
    .map((byte) => byte.toString(16).padStart(2, "0"))
    .join("");
}

function query(params: Record<string, number | string | undefined>): string {
  const parts: string[] = [];
  for (const [key, value] of Object.entries(params)) {
    if (value !== undefined) {
      parts.push(`${key}=${encodeURIComponent(String(value))}`);
    }
  }
  return parts.length === 0 ? "" : "?" + parts.join("&");
}

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: FetchLike = fetch as unknown as FetchLike,
  ) {}

  private async request(
    path: string,
    init?: { method?: string; headers?: Record<string, string>; body?: string },
  ): Promise<string> {
    let response: FetchResponseLike;
    try {
      response = await this.fetchFn(this.baseUrl + path, init);
    } catch (err) {
      throw new NetworkError(`service unreachable: ${String(err)}`);
    }
    const raw = await response.text();
    if (!response.ok) {
      let code = "error";
      let message = raw;
      try {
        const envelope = JSON.parse(raw) as { error: { code: string; message: string } };
        code = envelope.error.code;
        message = envelope.error.message;
      } catch {
        // not the service envelope; keep the body as the message
      }
      throw new ServiceError(code, message, response.status);
    }
    return raw;
  }

  private async getJson<T>(path: string): Promise<RawResult<T>> {
    const raw = await this.request(path);
    return { raw, payload: JSON.parse(raw) as T };
  }

  private async postJson<T>(path: string, body: unknown): Promise<RawResult<T>> {
    const raw = await this.request(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return { raw, payload: JSON.parse(raw) as T };
  }

  classify(
    are: number,
    aim: number,
    bre: number,
    bim: number,
    nMax?: number,
  ): Promise<RawResult<ClassifyPayload>> {
    return this.getJson(
      "/api/classify" + query({ are, aim, bre, bim, n_max: nMax }),
    );
  }

  codes(
    are: number,
    aim: number,
    bre: number,
    bim: number,
    n?: number,
  ): Promise<RawResult<CodesPayload>> {
    return this.getJson("/api/codes" + query({ are, aim, bre, bim, n }));
  }

  async startScan(body: ScanBody): Promise<SubmitResponse> {
    return (await this.postJson<SubmitResponse>("/api/scan", body)).payload;
  }

  async jobStatus(jobId: string): Promise<JobSnapshot> {
    return (await this.getJson<JobSnapshot>(`/api/job/${jobId}`)).payload;
  }

  tiles(
    jobId: string,
    rect?: [number, number, number, number],
  ): Promise<RawResult<TilesPayload>> {
    const rectArg = rect === undefined ? undefined : rect.join(",");
    return this.getJson("/api/tiles" + query({ job: jobId, rect: rectArg }));
  }

  submitLoop(body: LoopBody): Promise<RawResult<LoopResponse>> {
    return this.postJson("/api/loop", body);
  }
}

export interface ScanSink {
  begin(image: TileImage, info: SubmitResponse): void;
  progress(image: TileImage, paintedRows: number[]): void;
  finish(image: TileImage, raw: string, payload: TilesPayload): void;
  fail(err: Error): void;
}

const POLL_MS = 400;

type Sleeper = (ms: number) => Promise<void>;

function defaultSleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

/** One scan job in flight; superseded requests go silent.
 *
 * Every await is followed by a token check, so a response belonging
 * to an abandoned view never reaches the sink, and the snapshot's
 * echoed job id is compared against the submitted one.
 */
export class ScanCoordinator {
  private seq = 0;
  private jobId: string | null = null;

  constructor(
    private readonly client: ApiClient,
    private readonly sink: ScanSink,
    private readonly sleep: Sleeper = defaultSleep,
    private readonly pollMs: number = POLL_MS,
  ) {}

  get activeJob(): string | null {
    return this.jobId;
  }

  async request(body: ScanBody): Promise<void> {
    const token = ++this.seq;
    try {
      const info = await this.client.startScan(body);
      if (token !== this.seq) {
        return;
      }
      this.jobId = info.job;
      const rect: Rect = {
        reLo: body.re_lo,
        reHi: body.re_hi,
        imLo: body.im_lo,
        imHi: body.im_hi,
      };
      const image = new TileImage(rect, info.width, info.height);
      this.sink.begin(image, info);
      while (true) {
        const status = await this.client.jobStatus(info.job);
        if (token !== this.seq || status.job !== info.job) {
          return;
        }
        if (status.state === "failed") {
          this.sink.fail(new Error(status.error ?? "scan failed"));
          return;
        }
        if (status.state === "done") {
          break;
        }
        const top = image.topFrontier();
        const bottom = image.bottomFrontier();
        if (
          status.rows_done > image.paintedRows.size &&
          top + bottom < image.height
        ) {
          // rows finish from both edges inward; fetch the middle band
          const band = await this.client.tiles(info.job, [
            0,
            top,
            info.width - 1,
            info.height - 1 - bottom,
          ]);
          if (token !== this.seq) {
            return;
          }
          const painted = image.paintRecords(band.payload.records);
          if (painted.length > 0) {
            this.sink.progress(image, painted);
          }
        }
        await this.sleep(this.pollMs);
        if (token !== this.seq) {
          return;
        }
      }
      const full = await this.client.tiles(info.job);
      if (token !== this.seq) {
        return;
      }
      image.paintRecords(full.payload.records);
      image.sourceHash = await sha256Hex(full.raw);
      this.sink.finish(image, full.raw, full.payload);
    } catch (err) {
      if (token !== this.seq) {
        return;
      }
      this.sink.fail(err instanceof Error ? err : new Error(String(err)));
    } finally {
      if (token === this.seq) {
        this.jobId = null;
      }
    }
  }
}

/** At most one loop request in flight; overlap is a client error. */
export class LoopGate {
  private pending = false;

  constructor(private readonly client: ApiClient) {}

  get busy(): boolean {
    return this.pending;
  }

  async submit(body: LoopBody): Promise<RawResult<LoopResponse>> {
    if (this.pending) {
      throw new ClientValidationError("a loop request is already in flight");
    }
    this.pending = true;
    try {
      return await this.client.submitLoop(body);
    } finally {
      this.pending = false;
    }
  }
}
