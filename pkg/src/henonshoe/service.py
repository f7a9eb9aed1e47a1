"""HTTP front end exposing the classifier, scans, loops, and codes.

Every success body is produced by the shared payload builders and
serialized with canonical_json, so responses are byte-identical to
the CLI output for the same inputs.  Errors use one envelope:
{"error": {"code": ..., "message": ...}}.
"""

import json
import os

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.staticfiles import StaticFiles

from henonshoe.cache import ScanCache
from henonshoe.config import ServiceConfig
from henonshoe.jobs import JobTable
from henonshoe.payloads import (
    canonical_json,
    classify_payload,
    codes_payload,
    loop_payload,
    scan_window_from,
)
from henonshoe.scanner import ScanOptions


def _json_response(payload: dict, status: int = 200) -> Response:
    return Response(
        content=canonical_json(payload),
        status_code=status,
        media_type="application/json",
    )


def _raw_response(body: bytes) -> Response:
    return Response(content=body, media_type="application/json")


def _error(status: int, code: str, message: str) -> Response:
    return _json_response(
        {"error": {"code": code, "message": message}}, status
    )


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    cache = ScanCache(
        config.cache_dir, config.cache_max_age, config.cache_max_bytes
    )
    jobs = JobTable(cache, config.workers)
    app = FastAPI(title="henonshoe", docs_url=None, redoc_url=None)
    app.state.config = config
    app.state.cache = cache
    app.state.jobs = jobs
    app.router.add_event_handler("shutdown", jobs.close)

    @app.exception_handler(RequestValidationError)
    async def on_bad_request(request, exc):
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first.get("loc", ()))
        return _error(400, "bad_request", f"{where}: {first['msg']}")

    @app.exception_handler(ValueError)
    async def on_value_error(request, exc):
        return _error(400, "invalid_parameter", str(exc))

    @app.exception_handler(ArithmeticError)
    async def on_numeric_failure(request, exc):
        return _error(400, "computation_failed", str(exc))

    @app.exception_handler(KeyError)
    async def on_missing(request, exc):
        return _error(404, "not_found", f"unknown job {exc.args[0]}")

    @app.get("/api/classify")
    def classify(
        are: float,
        bre: float,
        aim: float = 0.0,
        bim: float = 0.0,
        n_max: int | None = None,
    ):
        opts = ScanOptions(n_max=config.n_max if n_max is None else n_max)
        return _raw_response(
            canonical_json(
                classify_payload(complex(are, aim), complex(bre, bim), opts)
            )
        )

    @app.post("/api/scan")
    async def scan(request: Request):
        body = await _body(request)
        if isinstance(body, dict):
            options = body.get("options")
            if options is None:
                body["options"] = {"n_max": config.n_max}
            elif isinstance(options, dict) and "n_max" not in options:
                options["n_max"] = config.n_max
        window = scan_window_from(body)
        return _json_response(jobs.submit(window))

    @app.get("/api/job/{job_id}")
    def job_status(job_id: str):
        return _json_response(jobs.snapshot(job_id))

    @app.get("/api/tiles")
    def tiles(job: str, rect: str | None = None):
        parsed = None
        if rect is not None:
            parts = rect.split(",")
            if len(parts) != 4:
                raise ValueError("rect must be col0,row0,col1,row1")
            try:
                parsed = tuple(int(p) for p in parts)
            except ValueError:
                raise ValueError("rect needs four integers") from None
        return _raw_response(jobs.tiles(job, parsed))

    @app.post("/api/loop")
    async def loop(request: Request):
        return _raw_response(canonical_json(loop_payload(await _body(request))))

    @app.get("/api/codes")
    def codes(
        are: float,
        bre: float,
        aim: float = 0.0,
        bim: float = 0.0,
        n: int | None = None,
    ):
        payload = codes_payload(
            complex(are, aim),
            complex(bre, bim),
            config.n_max if n is None else n,
        )
        return _raw_response(canonical_json(payload))

    if config.static_dir and os.path.isdir(config.static_dir):
        app.mount(
            "/",
            StaticFiles(directory=config.static_dir, html=True),
            name="static",
        )

    return app


async def _body(request: Request):
    try:
        return json.loads(await request.body())
    except json.JSONDecodeError as exc:
        raise ValueError(f"request body is not valid JSON: {exc}") from None
