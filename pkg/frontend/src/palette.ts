/** Verdict shading and the tile raster the canvas blits from.
 *
 * The grayscale levels are the ones the service's own PNG renderer
 * uses, so the canvas and a CLI-rendered image of the same records
 * agree shade for shade.
 */

import type { Rect } from "./view.js";
import type { TileRecord } from "./types.js";

export const PALETTE: Record<string, number> = {
  not_horseshoe: 40,
  horseshoe_evidence: 200,
  horseshoe_hov: 255,
  unknown: 128,
};

export function shadeFor(verdict: string): number {
  const shade = PALETTE[verdict];
  // an unrecognized verdict from a newer service renders as unknown
  return shade === undefined ? PALETTE.unknown : shade;
}

export interface PlacedRecord {
  col: number;
  row: number;
  record: TileRecord;
}

/** Grid position of a record, inverted from its pixel center. */
export function placeRecord(
  rect: Rect,
  width: number,
  height: number,
  record: TileRecord,
): PlacedRecord {
  // + 0 folds the -0 that Math.round can return on the first row or column
  const col = Math.round(((record.re - rect.reLo) / (rect.reHi - rect.reLo)) * width - 0.5) + 0;
  const row = Math.round(((rect.imHi - record.im) / (rect.imHi - rect.imLo)) * height - 0.5) + 0;
  if (col < 0 || col >= width || row < 0 || row >= height) {
    throw new RangeError("record center outside the scan grid");
  }
  return { col, row, record };
}

/** RGBA raster accumulating painted rows; top row first. */
export class TileImage {
  readonly data: Uint8ClampedArray<ArrayBuffer>;
  readonly paintedRows: Set<number> = new Set();
  sourceHash = "";

  constructor(
    readonly rect: Rect,
    readonly width: number,
    readonly height: number,
  ) {
    // alpha starts at 0 so unpainted rows show the page background
    this.data = new Uint8ClampedArray(new ArrayBuffer(4 * width * height));
  }

  /** Paint every complete row present in a batch of records. */
  paintRecords(records: TileRecord[]): number[] {
    const byRow = new Map<number, PlacedRecord[]>();
    for (const record of records) {
      const placed = placeRecord(this.rect, this.width, this.height, record);
      const bucket = byRow.get(placed.row);
      if (bucket === undefined) {
        byRow.set(placed.row, [placed]);
      } else {
        bucket.push(placed);
      }
    }
    const painted: number[] = [];
    for (const [row, bucket] of byRow) {
      if (bucket.length !== this.width) {
        continue;
      }
      for (const placed of bucket) {
        const at = 4 * (row * this.width + placed.col);
        const shade = shadeFor(placed.record.verdict);
        this.data[at] = shade;
        this.data[at + 1] = shade;
        this.data[at + 2] = shade;
        this.data[at + 3] = 255;
      }
      this.paintedRows.add(row);
      painted.push(row);
    }
    painted.sort((x, y) => x - y);
    return painted;
  }

  get complete(): boolean {
    return this.paintedRows.size === this.height;
  }

  /** Contiguous painted band from the top edge, as a row count. */
  topFrontier(): number {
    let row = 0;
    while (this.paintedRows.has(row)) {
      row += 1;
    }
    return row;
  }

  /** Contiguous painted band from the bottom edge, as a row count. */
  bottomFrontier(): number {
    let depth = 0;
    while (this.paintedRows.has(this.height - 1 - depth)) {
      depth += 1;
    }
    return depth;
  }
}
