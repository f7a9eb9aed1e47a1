"""Canonical JSON payloads shared by the CLI and the HTTP service.

Both frontends must produce byte-identical output for identical inputs,
so every response body is built here and serialized with one canonical
encoder (sorted keys, minimal separators).  Schema validation raises
ValueError with a human-readable message; callers map that to exit
status 2 or HTTP 400.
"""

import json
from dataclasses import asdict

from henonshoe.continuation import ParamPath, match_automorphism, monodromy
from henonshoe.henon import (
    HenonParams,
    classify_real_type,
    code_orbit,
    orbit_multipliers,
    per_N_words,
)
from henonshoe.scanner import ScanOptions, ScanWindow, classify_parameter

LOOP_N_LIMIT = 8


def canonical_json(payload) -> bytes:
    return json.dumps(
        payload, sort_keys=True, separators=(",", ":"), allow_nan=False
    ).encode("ascii")


def _pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _number(value, label: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"{label} must be a number")
    out = float(value)
    if out != out:
        raise ValueError(f"{label} must be finite")
    return out


def _complex_pair(value, label: str) -> complex:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ValueError(f"{label} must be a [re, im] pair")
    return complex(
        _number(value[0], f"{label}[0]"), _number(value[1], f"{label}[1]")
    )


def _witness_payload(witness) -> dict | None:
    if witness is None:
        return None
    return {
        "kind": witness.kind,
        "a": _pair(witness.a),
        "b": _pair(witness.b),
        "cycle": [_pair(v) for v in witness.cycle],
        "seed": [_pair(v) for v in witness.seed],
    }


def scan_options_from(body, label: str = "options") -> ScanOptions:
    if body is None:
        return ScanOptions()
    if not isinstance(body, dict):
        raise ValueError(f"{label} must be an object")
    fields = ScanOptions.__dataclass_fields__
    kwargs = {}
    for key, value in body.items():
        if key not in fields:
            raise ValueError(f"unknown option {key!r}")
        if fields[key].type in (int, "int"):
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValueError(f"option {key} must be an integer")
            kwargs[key] = value
        else:
            kwargs[key] = _number(value, f"option {key}")
    return ScanOptions(**kwargs)


def classify_payload(a: complex, b: complex, opts: ScanOptions) -> dict:
    pixel = classify_parameter(HenonParams(a, b), opts)
    return {
        "a": _pair(a),
        "b": _pair(b),
        "n_max": opts.n_max,
        "verdict": pixel.verdict,
        "witness": _witness_payload(pixel.witness),
    }


def scan_window_from(body) -> ScanWindow:
    """Validate a scan request body and build the window it describes."""
    if not isinstance(body, dict):
        raise ValueError("scan request must be an object")
    required = ("b", "re_lo", "re_hi", "im_lo", "im_hi", "width", "height")
    for key in required:
        if key not in body:
            raise ValueError(f"missing field {key!r}")
    known = set(required) | {"options"}
    for key in body:
        if key not in known:
            raise ValueError(f"unknown field {key!r}")
    b = _complex_pair(body["b"], "b")
    bounds = {k: _number(body[k], k) for k in ("re_lo", "re_hi", "im_lo", "im_hi")}
    for k in ("width", "height"):
        if isinstance(body[k], bool) or not isinstance(body[k], int):
            raise ValueError(f"{k} must be an integer")
    return ScanWindow(
        b=b,
        re_lo=bounds["re_lo"],
        re_hi=bounds["re_hi"],
        im_lo=bounds["im_lo"],
        im_hi=bounds["im_hi"],
        width=body["width"],
        height=body["height"],
        options=scan_options_from(body.get("options")),
    )


def window_descriptor(window: ScanWindow) -> dict:
    """The canonical cache-key material for a window and its options."""
    return {
        "b": _pair(window.b),
        "re_lo": window.re_lo,
        "re_hi": window.re_hi,
        "im_lo": window.im_lo,
        "im_hi": window.im_hi,
        "width": window.width,
        "height": window.height,
        "options": asdict(window.options),
    }


def tiles_payload(
    window: ScanWindow, records, rows_done: int, complete: bool
) -> dict:
    return {
        "b": _pair(window.b),
        "width": window.width,
        "height": window.height,
        "rows_done": rows_done,
        "complete": complete,
        "records": list(records),
    }


def _word_string(word) -> str:
    return "".join(str(s) for s in word)


def loop_payload(body) -> dict:
    """Run loop monodromy from a request body; shared CLI/service schema."""
    if not isinstance(body, dict):
        raise ValueError("loop request must be an object")
    for key in ("base", "waypoints"):
        if key not in body:
            raise ValueError(f"missing field {key!r}")
    known = {"base", "waypoints", "closed", "N"}
    for key in body:
        if key not in known:
            raise ValueError(f"unknown field {key!r}")
    base_spec = body["base"]
    if not isinstance(base_spec, dict) or set(base_spec) != {"a", "b"}:
        raise ValueError("base must be an object with fields a and b")
    base = HenonParams(
        _complex_pair(base_spec["a"], "base.a"),
        _complex_pair(base_spec["b"], "base.b"),
    )
    waypoints_spec = body["waypoints"]
    if not isinstance(waypoints_spec, list) or not waypoints_spec:
        raise ValueError("waypoints must be a nonempty list")
    waypoints = []
    for k, entry in enumerate(waypoints_spec):
        if not isinstance(entry, (list, tuple)) or len(entry) != 4:
            raise ValueError(
                f"waypoint {k} must be [a_re, a_im, b_re, b_im]"
            )
        vals = [_number(v, f"waypoint {k}") for v in entry]
        waypoints.append((complex(vals[0], vals[1]), complex(vals[2], vals[3])))
    closed = body.get("closed", True)
    if not isinstance(closed, bool):
        raise ValueError("closed must be a boolean")
    n = body.get("N", 4)
    if isinstance(n, bool) or not isinstance(n, int):
        raise ValueError("N must be an integer")
    if not 1 <= n <= LOOP_N_LIMIT:
        raise ValueError(f"N must be between 1 and {LOOP_N_LIMIT}")
    path = ParamPath(waypoints=tuple(waypoints), closed=closed)
    result = monodromy(base, path, N=n)
    if result.permutation is None:
        permutation = None
        cycles = ""
        match = None
    else:
        permutation = [
            [_word_string(src), _word_string(dst)]
            for src, dst in sorted(result.permutation.as_dict().items())
        ]
        cycles = result.permutation.cycles_string()
        match = match_automorphism(result.permutation)
    return {
        "base": {"a": _pair(base.a), "b": _pair(base.b)},
        "N": n,
        "status": result.status,
        "permutation": permutation,
        "cycles": cycles,
        "match": match,
        "diagnostics": {
            "hov_certified": result.hov_certified,
            "note": result.note,
            "traces": [
                {
                    "word": _word_string(t.word),
                    "steps": t.steps,
                    "min_margin": t.min_margin,
                }
                for t in result.traces
            ],
        },
    }


def codes_payload(a: complex, b: complex, n: int) -> dict:
    """Per_N table with codings; real parameters also get a type label.

    Orbits are labeled by their seeding itinerary, which stays a
    bijection even where a positional symbol read-off degenerates.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise ValueError("n must be an integer")
    if not 1 <= n <= LOOP_N_LIMIT:
        raise ValueError(f"n must be between 1 and {LOOP_N_LIMIT}")
    params = HenonParams(a, b)
    table = []
    for word, orbit in per_N_words(params, n):
        entry = {
            "y": [_pair(v) for v in orbit.y],
            "e_code": _word_string(word),
            "margin": orbit_multipliers(orbit).margin,
        }
        try:
            entry["g_codes"] = sorted(
                _word_string(w) for w in code_orbit(params, orbit, "G")
            )
        except ValueError:
            entry["g_codes"] = None
        table.append(entry)
    table.sort(key=lambda e: e["e_code"])
    real_type = None
    if complex(a).imag == 0 and complex(b).imag == 0:
        real_type = classify_real_type(params, n).label
    return {
        "a": _pair(a),
        "b": _pair(b),
        "n": n,
        "count": len(table),
        "real_type": real_type,
        "orbits": table,
    }


def theorem2_payload(report) -> dict:
    return {
        "passed": report.passed,
        "period4_count": report.period4_count,
        "class_x_size": len(report.class_x),
        "class_y_size": len(report.class_y),
        "pi_g_x": sorted(report.pi_g_x),
        "pi_g_y": sorted(report.pi_g_y),
        "assertions": [[name, bool(ok)] for name, ok in report.assertions],
        "witnesses": list(report.witnesses),
    }


def theta_payload(radius: float, samples: int, value: float) -> dict:
    import math

    return {
        "radius": radius,
        "samples": samples,
        "value": value,
        "target": 2.0 * math.pi,
        "relative_error": abs(value - 2.0 * math.pi) / (2.0 * math.pi),
    }
