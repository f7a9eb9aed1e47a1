import { describe, expect, it } from "vitest";

import { PALETTE, TileImage, placeRecord, shadeFor } from "../src/palette.js";
import type { TileRecord } from "../src/types.js";
import type { Rect } from "../src/view.js";

const RECT: Rect = { reLo: -2.6, reHi: -1.0, imLo: -0.7, imHi: 0.7 };

function centerRecord(
  width: number,
  height: number,
  col: number,
  row: number,
  verdict: string,
): TileRecord {
  return {
    re: RECT.reLo + ((col + 0.5) * (RECT.reHi - RECT.reLo)) / width,
    im: RECT.imHi - ((row + 0.5) * (RECT.imHi - RECT.imLo)) / height,
    verdict,
    witness_kind: null,
  };
}

describe("verdict shading", () => {
  it("matches the service renderer levels", () => {
    expect(shadeFor("not_horseshoe")).toBe(40);
    expect(shadeFor("horseshoe_evidence")).toBe(200);
    expect(shadeFor("horseshoe_hov")).toBe(255);
    expect(shadeFor("unknown")).toBe(128);
  });

  it("shades an unrecognized verdict as unknown", () => {
    expect(shadeFor("future_state")).toBe(PALETTE.unknown);
  });
});

describe("record placement", () => {
  it("inverts pixel centers exactly", () => {
    for (const [col, row] of [
      [0, 0],
      [7, 0],
      [0, 6],
      [3, 2],
      [7, 6],
    ]) {
      const placed = placeRecord(RECT, 8, 7, centerRecord(8, 7, col, row, "unknown"));
      expect(placed.col).toBe(col);
      expect(placed.row).toBe(row);
    }
  });

  it("rejects a record outside the grid", () => {
    const outside: TileRecord = { re: -3.0, im: 0.0, verdict: "unknown", witness_kind: null };
    expect(() => placeRecord(RECT, 8, 7, outside)).toThrow("outside the scan grid");
  });
});

describe("tile raster", () => {
  it("paints only complete rows", () => {
    const image = new TileImage(RECT, 4, 3);
    const records: TileRecord[] = [];
    for (let col = 0; col < 4; col += 1) {
      records.push(centerRecord(4, 3, col, 0, "horseshoe_hov"));
    }
    records.push(centerRecord(4, 3, 0, 1, "not_horseshoe"));
    records.push(centerRecord(4, 3, 1, 1, "not_horseshoe"));
    const painted = image.paintRecords(records);
    expect(painted).toEqual([0]);
    expect(image.paintedRows.has(0)).toBe(true);
    expect(image.paintedRows.has(1)).toBe(false);
    for (let col = 0; col < 4; col += 1) {
      const at = 4 * col;
      expect(Array.from(image.data.slice(at, at + 4))).toEqual([255, 255, 255, 255]);
    }
    const secondRow = Array.from(image.data.slice(4 * 4, 4 * 8));
    expect(secondRow).toEqual(new Array(16).fill(0));
    expect(image.complete).toBe(false);
  });

  it("tracks frontiers as rows land from both edges", () => {
    const image = new TileImage(RECT, 2, 5);
    const rowRecords = (row: number) => [
      centerRecord(2, 5, 0, row, "unknown"),
      centerRecord(2, 5, 1, row, "unknown"),
    ];
    image.paintRecords([...rowRecords(0), ...rowRecords(4)]);
    expect(image.topFrontier()).toBe(1);
    expect(image.bottomFrontier()).toBe(1);
    image.paintRecords([...rowRecords(1), ...rowRecords(3)]);
    expect(image.topFrontier()).toBe(2);
    expect(image.bottomFrontier()).toBe(2);
    expect(image.complete).toBe(false);
    image.paintRecords(rowRecords(2));
    expect(image.topFrontier()).toBe(5);
    expect(image.bottomFrontier()).toBe(5);
    expect(image.complete).toBe(true);
  });

  it("writes the exact grayscale bytes for each verdict", () => {
    const image = new TileImage(RECT, 4, 1);
    image.paintRecords([
      centerRecord(4, 1, 0, 0, "not_horseshoe"),
      centerRecord(4, 1, 1, 0, "horseshoe_evidence"),
      centerRecord(4, 1, 2, 0, "horseshoe_hov"),
      centerRecord(4, 1, 3, 0, "unknown"),
    ]);
    expect(Array.from(image.data)).toEqual([
      40, 40, 40, 255, 200, 200, 200, 255, 255, 255, 255, 255, 128, 128, 128, 255,
    ]);
  });
});
