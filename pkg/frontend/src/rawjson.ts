/** JSON parser that keeps each scalar's source text.
 *
 * The panels must display numbers exactly as the service serialized
 * them.  Re-stringifying a parsed double diverges from the server's
 * formatting (2.0 becomes "2", 1e-07 becomes "1e-7"), so displayed
 * values are sliced out of the response text instead.  serializeRaw
 * of a parse is byte-identical to the input for the service's
 * whitespace-free canonical responses.
 */

export interface RawEntry {
  key: string;
  keyText: string;
  value: RawValue;
}

export type RawValue =
  | { kind: "obj"; entries: RawEntry[] }
  | { kind: "arr"; items: RawValue[] }
  | { kind: "str"; text: string; value: string }
  | { kind: "num"; text: string }
  | { kind: "bool"; value: boolean }
  | { kind: "null" };

const NUMBER_RE = /^-?(?:0|[1-9][0-9]*)(?:\.[0-9]+)?(?:[eE][+-]?[0-9]+)?/;

class Scanner {
  pos = 0;

  constructor(readonly text: string) {}

  error(message: string): never {
    throw new SyntaxError(`${message} at offset ${this.pos}`);
  }

  skipWs(): void {
    while (this.pos < this.text.length && " \t\n\r".includes(this.text[this.pos])) {
      this.pos += 1;
    }
  }

  peek(): string {
    if (this.pos >= this.text.length) {
      this.error("unexpected end of input");
    }
    return this.text[this.pos];
  }

  expect(ch: string): void {
    if (this.peek() !== ch) {
      this.error(`expected ${JSON.stringify(ch)}`);
    }
    this.pos += 1;
  }

  literal(word: string): void {
    if (!this.text.startsWith(word, this.pos)) {
      this.error(`expected ${word}`);
    }
    this.pos += word.length;
  }

  string(): { text: string; value: string } {
    const start = this.pos;
    this.expect('"');
    while (true) {
      const ch = this.peek();
      if (ch === '"') {
        this.pos += 1;
        break;
      }
      if (ch === "\\") {
        this.pos += 2;
        continue;
      }
      this.pos += 1;
    }
    const text = this.text.slice(start, this.pos);
    // delegate escape decoding to the native parser
    return { text, value: JSON.parse(text) as string };
  }

  number(): string {
    const match = NUMBER_RE.exec(this.text.slice(this.pos));
    if (match === null || match[0].length === 0) {
      this.error("malformed number");
    }
    this.pos += match[0].length;
    return match[0];
  }

  value(): RawValue {
    this.skipWs();
    const ch = this.peek();
    if (ch === "{") {
      this.pos += 1;
      const entries: RawEntry[] = [];
      this.skipWs();
      if (this.peek() === "}") {
        this.pos += 1;
        return { kind: "obj", entries };
      }
      while (true) {
        this.skipWs();
        const key = this.string();
        this.skipWs();
        this.expect(":");
        entries.push({ key: key.value, keyText: key.text, value: this.value() });
        this.skipWs();
        if (this.peek() === ",") {
          this.pos += 1;
          continue;
        }
        this.expect("}");
        return { kind: "obj", entries };
      }
    }
    if (ch === "[") {
      this.pos += 1;
      const items: RawValue[] = [];
      this.skipWs();
      if (this.peek() === "]") {
        this.pos += 1;
        return { kind: "arr", items };
      }
      while (true) {
        items.push(this.value());
        this.skipWs();
        if (this.peek() === ",") {
          this.pos += 1;
          continue;
        }
        this.expect("]");
        return { kind: "arr", items };
      }
    }
    if (ch === '"') {
      const s = this.string();
      return { kind: "str", text: s.text, value: s.value };
    }
    if (ch === "t") {
      this.literal("true");
      return { kind: "bool", value: true };
    }
    if (ch === "f") {
      this.literal("false");
      return { kind: "bool", value: false };
    }
    if (ch === "n") {
      this.literal("null");
      return { kind: "null" };
    }
    return { kind: "num", text: this.number() };
  }
}

export function parseRaw(text: string): RawValue {
  const scanner = new Scanner(text);
  const out = scanner.value();
  scanner.skipWs();
  if (scanner.pos !== text.length) {
    scanner.error("trailing content");
  }
  return out;
}

export function serializeRaw(value: RawValue): string {
  switch (value.kind) {
    case "obj":
      return (
        "{" +
        value.entries
          .map((e) => `${e.keyText}:${serializeRaw(e.value)}`)
          .join(",") +
        "}"
      );
    case "arr":
      return "[" + value.items.map(serializeRaw).join(",") + "]";
    case "str":
      return value.text;
    case "num":
      return value.text;
    case "bool":
      return value.value ? "true" : "false";
    case "null":
      return "null";
  }
}

/** Object field lookup; throws when the shape is not as expected. */
export function rawGet(value: RawValue, key: string): RawValue {
  if (value.kind !== "obj") {
    throw new TypeError(`expected object while reading ${key}`);
  }
  for (const entry of value.entries) {
    if (entry.key === key) {
      return entry.value;
    }
  }
  throw new TypeError(`missing field ${key}`);
}

export function rawStr(value: RawValue): string {
  if (value.kind !== "str") {
    throw new TypeError("expected string");
  }
  return value.value;
}

/** The number's source text, verbatim from the response. */
export function rawNum(value: RawValue): string {
  if (value.kind !== "num") {
    throw new TypeError("expected number");
  }
  return value.text;
}

export function rawItems(value: RawValue): RawValue[] {
  if (value.kind !== "arr") {
    throw new TypeError("expected array");
  }
  return value.items;
}

export function rawIsNull(value: RawValue): boolean {
  return value.kind === "null";
}

export function rawBool(value: RawValue): boolean {
  if (value.kind !== "bool") {
    throw new TypeError("expected boolean");
  }
  return value.value;
}
