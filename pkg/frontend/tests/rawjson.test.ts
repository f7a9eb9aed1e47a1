import { describe, expect, it } from "vitest";

import {
  parseRaw,
  rawBool,
  rawGet,
  rawIsNull,
  rawItems,
  rawNum,
  rawStr,
  serializeRaw,
} from "../src/rawjson.js";

const CANONICAL =
  '{"a":[-2.6,0.7],"b":[0.2,0.0],"complete":true,"match":null,' +
  '"note":"orbit collision at a=(-2.3+0.1j) b=(0.05+0j)","n_max":2}';

describe("raw parsing", () => {
  it("round trips canonical payload bytes exactly", () => {
    expect(serializeRaw(parseRaw(CANONICAL))).toBe(CANONICAL);
  });

  it("keeps number spellings that JavaScript would rewrite", () => {
    const cases = [
      '{"x":2.0}',
      '{"x":1e-07}',
      '{"x":-0.0}',
      '{"x":1.7976931348623157e+308}',
      '{"x":0.30000000000000004}',
      '{"x":6e0}',
    ];
    for (const text of cases) {
      expect(serializeRaw(parseRaw(text))).toBe(text);
    }
    const tree = parseRaw('{"x":2.0}');
    expect(rawNum(rawGet(tree, "x"))).toBe("2.0");
    expect(String(JSON.parse('{"x":2.0}').x)).toBe("2");
  });

  it("keeps string escapes as sent", () => {
    const text = '{"k":"a\\"b","u":"\\u00e9","nl":"line\\nbreak"}';
    expect(serializeRaw(parseRaw(text))).toBe(text);
    const tree = parseRaw(text);
    expect(rawStr(rawGet(tree, "k"))).toBe('a"b');
    expect(rawStr(rawGet(tree, "u"))).toBe("é");
  });

  it("handles nesting and empty containers", () => {
    const text = '{"records":[{"re":-2.58,"verdict":"unknown"},{}],"empty":[],"o":{}}';
    expect(serializeRaw(parseRaw(text))).toBe(text);
    const records = rawItems(rawGet(parseRaw(text), "records"));
    expect(records).toHaveLength(2);
    expect(rawStr(rawGet(records[0], "verdict"))).toBe("unknown");
  });

  it("tolerates whitespace on input", () => {
    const tree = parseRaw(' {\n  "x" : [ 1 , 2 ] ,\t"y" : false }\n');
    expect(rawNum(rawItems(rawGet(tree, "x"))[1])).toBe("2");
    expect(rawBool(rawGet(tree, "y"))).toBe(false);
    expect(rawIsNull(rawGet(parseRaw('{"m":null}'), "m"))).toBe(true);
  });

  it("rejects malformed input", () => {
    expect(() => parseRaw('{"x":1} trailing')).toThrow(SyntaxError);
    expect(() => parseRaw('{"x":}')).toThrow(SyntaxError);
    expect(() => parseRaw("{'x':1}")).toThrow(SyntaxError);
    expect(() => parseRaw('{"x":01}')).toThrow(SyntaxError);
    expect(() => parseRaw("")).toThrow(SyntaxError);
  });

  it("reports a missing field by name", () => {
    expect(() => rawGet(parseRaw('{"x":1}'), "y")).toThrow("missing field y");
  });
});
