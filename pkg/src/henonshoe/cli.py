"""Command line front end.

Every verb that prints JSON goes through the same payload builders as
the HTTP service, so `--format json` output (minus the trailing
newline) is byte-identical to the corresponding endpoint body.
Validation failures print to stderr and exit 2; argparse handles
usage errors with its own exit 2.
"""

import argparse
import json
import sys

from henonshoe.cache import ScanCache, scan_key
from henonshoe.config import load_config
from henonshoe.onedim import theta_loop_integral
from henonshoe.payloads import (
    canonical_json,
    classify_payload,
    codes_payload,
    loop_payload,
    theorem2_payload,
    theta_payload,
    tiles_payload,
)
from henonshoe.scanner import (
    ScanOptions,
    ScanWindow,
    fig6_image,
    fig9_image,
    render_verdict_rows,
    row_records,
    scan_stream,
    write_image,
)
from henonshoe.symbolic import theorem2_report

THETA_TOLERANCE = 0.01


def _parse_complex(text: str) -> complex:
    try:
        return complex(text.strip().replace("i", "j"))
    except ValueError:
        raise ValueError(f"not a complex number: {text!r}") from None


def _emit(payload: dict) -> None:
    print(canonical_json(payload).decode("ascii"))


def _run_classify(args) -> int:
    payload = classify_payload(
        _parse_complex(args.a),
        _parse_complex(args.b),
        ScanOptions(n_max=args.n_max),
    )
    if args.format == "json":
        _emit(payload)
        return 0
    print(f"a = {args.a}  b = {args.b}  n_max = {args.n_max}")
    print(f"verdict: {payload['verdict']}")
    witness = payload["witness"]
    if witness is not None:
        print(f"witness: {witness['kind']}")
        for label, points in (("cycle", witness["cycle"]), ("seed", witness["seed"])):
            for re, im in points:
                print(f"  {label} point: {re:+.6f}{im:+.6f}i")
    return 0


def _scan_payload(args) -> bytes:
    window = ScanWindow(
        b=_parse_complex(args.b),
        re_lo=args.re_lo,
        re_hi=args.re_hi,
        im_lo=args.im_lo,
        im_hi=args.im_hi,
        width=args.width,
        height=args.height,
        options=ScanOptions(n_max=args.n_max),
    )
    config = load_config(args.config, overrides={"cache_dir": args.cache_dir})
    cache = ScanCache(
        config.cache_dir, config.cache_max_age, config.cache_max_bytes
    )
    key = scan_key(window)
    payload = cache.load(key)
    if payload is None:
        live = sys.stderr.isatty()
        rows: list = [None] * window.height
        finished = 0
        for row, pixels in scan_stream(window):
            rows[row] = row_records(window, row, pixels)
            finished += 1
            if live:
                print(f"\rrow {finished}/{window.height}", end="", file=sys.stderr)
        if live:
            print(file=sys.stderr)
        flat = [record for row in rows for record in row]
        payload = canonical_json(
            tiles_payload(window, flat, window.height, True)
        )
        cache.store(key, payload)
    return payload


def _run_scan(args) -> int:
    payload = _scan_payload(args)
    body = json.loads(payload)
    if args.records:
        with open(args.records, "wb") as fh:
            fh.write(payload)
    if args.out:
        verdicts = [r["verdict"] for r in body["records"]]
        rows = [
            verdicts[k * body["width"] : (k + 1) * body["width"]]
            for k in range(body["height"])
        ]
        write_image(args.out, *render_verdict_rows(rows))
    if args.format == "json":
        print(payload.decode("ascii"))
        return 0
    counts: dict[str, int] = {}
    for record in body["records"]:
        counts[record["verdict"]] = counts.get(record["verdict"], 0) + 1
    print(f"{body['width']}x{body['height']} pixels at b = {args.b}")
    for verdict in sorted(counts):
        print(f"  {verdict}: {counts[verdict]}")
    for path in (args.records, args.out):
        if path:
            print(f"wrote {path}")
    return 0


def _run_fig6(args) -> int:
    width, height, rgb = fig6_image(args.width, args.height)
    write_image(args.out, width, height, rgb)
    print(f"wrote {args.out} ({width}x{height})")
    return 0


def _run_fig9(args) -> int:
    width, height, rgb = fig9_image(args.width, args.height)
    write_image(args.out, width, height, rgb)
    print(f"wrote {args.out} ({width}x{height})")
    return 0


def _run_theta(args) -> int:
    value = theta_loop_integral(args.radius, args.samples)
    payload = theta_payload(args.radius, args.samples, value)
    if args.format == "json":
        _emit(payload)
    else:
        print(f"integral: {value!r}")
        print(f"target:   {payload['target']!r}")
        print(f"relative error: {payload['relative_error']:.3e}")
    return 0 if payload["relative_error"] <= THETA_TOLERANCE else 1


def _run_codes(args) -> int:
    payload = codes_payload(
        _parse_complex(args.a), _parse_complex(args.b), args.n
    )
    if args.format == "json":
        _emit(payload)
        return 0
    print(
        f"{payload['count']} orbits of period dividing {args.n}"
        f" at a = {args.a}, b = {args.b}"
    )
    if payload["real_type"] is not None:
        print(f"real type: {payload['real_type']}")
    for orbit in payload["orbits"]:
        g_part = "-" if orbit["g_codes"] is None else ",".join(orbit["g_codes"])
        print(
            f"  E {orbit['e_code']}  G {g_part}  margin {orbit['margin']:.4f}"
        )
    return 0


def _run_loop(args) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    try:
        body = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"loop file is not valid JSON: {exc}") from None
    payload = loop_payload(body)
    if args.format == "json":
        _emit(payload)
        return 0
    print(f"status: {payload['status']}")
    print(f"cycles: {payload['cycles']}")
    match = payload["match"]
    print(f"match: {'identity' if match == '' else match}")
    diag = payload["diagnostics"]
    print(f"hov_certified: {str(diag['hov_certified']).lower()}")
    if diag["note"]:
        print(f"note: {diag['note']}")
    for trace in diag["traces"]:
        print(
            f"  {trace['word']}: steps {trace['steps']}"
            f" min_margin {trace['min_margin']:.4f}"
        )
    return 0 if payload["status"] == "ok" else 1


def _run_thm2(args) -> int:
    payload = theorem2_payload(theorem2_report())
    if args.format == "json":
        _emit(payload)
    else:
        print(f"period-4 orbit codes: {payload['period4_count']}")
        print(
            f"classes: {payload['class_x_size']} + {payload['class_y_size']}"
        )
        print(f"pi_g_x: {' '.join(payload['pi_g_x'])}")
        print(f"pi_g_y: {' '.join(payload['pi_g_y'])}")
        for name, ok in payload["assertions"]:
            print(f"  {name}: {'pass' if ok else 'FAIL'}")
        print(f"passed: {str(payload['passed']).lower()}")
    return 0 if payload["passed"] else 1


def _run_serve(args) -> int:
    import uvicorn

    from henonshoe.service import create_app

    overrides = {
        "host": args.host,
        "port": args.port,
        "workers": args.workers,
        "cache_dir": args.cache_dir,
        "static_dir": args.static,
        "n_max": args.n_max,
    }
    config = load_config(args.config, overrides=overrides)
    app = create_app(config)
    print(f"serving on http://{config.host}:{config.port}")
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
    return 0


def _add_format(parser) -> None:
    parser.add_argument(
        "--format", choices=("text", "json"), default="text"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="henonshoe",
        description="Horseshoe locus tools: classify, scan, loops, codes.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("classify", help="classify one parameter point")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--n-max", type=int, default=5)
    _add_format(p)
    p.set_defaults(handler=_run_classify)

    p = verbs.add_parser("scan", help="classify a window of the a-plane")
    p.add_argument("--b", required=True)
    p.add_argument("--re-lo", type=float, required=True)
    p.add_argument("--re-hi", type=float, required=True)
    p.add_argument("--im-lo", type=float, required=True)
    p.add_argument("--im-hi", type=float, required=True)
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--out", help="image file (.png or .ppm)")
    p.add_argument("--records", help="write the tile records as JSON")
    p.add_argument("--config", help="config file for cache settings")
    p.add_argument("--cache-dir")
    _add_format(p)
    p.set_defaults(handler=_run_scan)

    p = verbs.add_parser("fig6", help="a-plane region chart image")
    p.add_argument("--width", type=int, default=200)
    p.add_argument("--height", type=int, default=200)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_run_fig6)

    p = verbs.add_parser("fig9", help="real (a, b) region chart image")
    p.add_argument("--width", type=int, default=240)
    p.add_argument("--height", type=int, default=200)
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_run_fig9)

    p = verbs.add_parser("theta", help="winding integral sanity check")
    p.add_argument("--radius", type=float, default=3.0)
    p.add_argument("--samples", type=int, default=2048)
    _add_format(p)
    p.set_defaults(handler=_run_theta)

    p = verbs.add_parser("codes", help="periodic orbit code table")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--n", type=int, default=4)
    _add_format(p)
    p.set_defaults(handler=_run_codes)

    p = verbs.add_parser("loop", help="loop monodromy from a JSON file")
    p.add_argument("--file", required=True, help="path or - for stdin")
    _add_format(p)
    p.set_defaults(handler=_run_loop)

    p = verbs.add_parser("thm2", help="period-4 coding class report")
    _add_format(p)
    p.set_defaults(handler=_run_thm2)

    p = verbs.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--cache-dir")
    p.add_argument("--static")
    p.add_argument("--n-max", type=int)
    p.add_argument("--config", help="key=value config file")
    p.set_defaults(handler=_run_serve)

    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
