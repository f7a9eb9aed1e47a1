"""Background scan jobs with streaming row results.

A job moves queued -> running -> done or failed and never backwards;
progress only grows, and a done job is never mutated again.  Rows
arrive in the scanner's streaming order (mirror partners right after
their source), so partial tile reads serve whatever rows exist.  All
jobs share one worker pool; the table lock guards only bookkeeping.
"""

import json
import threading
import uuid
from concurrent.futures import ThreadPoolExecutor

from henonshoe.cache import ScanCache, scan_key
from henonshoe.payloads import canonical_json, tiles_payload
from henonshoe.scanner import ScanWindow, row_records, scan_stream


class Job:
    __slots__ = (
        "id",
        "window",
        "key",
        "state",
        "cached",
        "rows_done",
        "rows",
        "payload",
        "error",
    )

    def __init__(self, window: ScanWindow, key: str):
        self.id = uuid.uuid4().hex[:12]
        self.window = window
        self.key = key
        self.state = "queued"
        self.cached = False
        self.rows_done = 0
        self.rows: dict[int, list[dict]] = {}
        self.payload: bytes | None = None
        self.error: str | None = None


class JobTable:
    def __init__(self, cache: ScanCache, workers: int):
        self.cache = cache
        self._jobs: dict[str, Job] = {}
        self._lock = threading.Lock()
        self._pool = ThreadPoolExecutor(max_workers=workers)

    def close(self) -> None:
        self._pool.shutdown(wait=False, cancel_futures=True)

    def submit(self, window: ScanWindow) -> dict:
        job = Job(window, scan_key(window))
        payload = self.cache.load(job.key)
        if payload is not None:
            job.cached = True
            job.rows_done = window.height
            job.payload = payload
            job.state = "done"
        with self._lock:
            self._jobs[job.id] = job
        if payload is None:
            self._pool.submit(self._run, job)
        return {
            "job": job.id,
            "cached": job.cached,
            "width": window.width,
            "height": window.height,
        }

    def _run(self, job: Job) -> None:
        with self._lock:
            job.state = "running"
        try:
            for row, pixels in scan_stream(job.window):
                records = row_records(job.window, row, pixels)
                with self._lock:
                    job.rows[row] = records
                    job.rows_done += 1
            flat: list[dict] = []
            for row in range(job.window.height):
                flat.extend(job.rows[row])
            payload = canonical_json(
                tiles_payload(job.window, flat, job.window.height, True)
            )
            self.cache.store(job.key, payload)
            with self._lock:
                job.payload = payload
                job.state = "done"
        except Exception as exc:
            with self._lock:
                job.error = f"{type(exc).__name__}: {exc}"
                job.state = "failed"

    def _get(self, job_id: str) -> Job:
        with self._lock:
            if job_id not in self._jobs:
                raise KeyError(job_id)
            return self._jobs[job_id]

    def snapshot(self, job_id: str) -> dict:
        job = self._get(job_id)
        with self._lock:
            return {
                "job": job.id,
                "state": job.state,
                "cached": job.cached,
                "width": job.window.width,
                "height": job.window.height,
                "rows_done": job.rows_done,
                "error": job.error,
            }

    def tiles(self, job_id: str, rect: tuple | None = None) -> bytes:
        """Tile payload for a job; finished rows only while running.

        A done job asked for the full grid returns the cached payload
        bytes unchanged, so repeated reads are byte-identical.
        """
        job = self._get(job_id)
        window = job.window
        if rect is not None:
            col0, row0, col1, row1 = rect
            inside = (
                0 <= col0 <= col1 < window.width
                and 0 <= row0 <= row1 < window.height
            )
            if not inside:
                raise ValueError("rect outside the scan grid")
        with self._lock:
            payload = job.payload
            rows_done = job.rows_done
            done = job.state == "done"
            finished = dict(job.rows) if payload is None else None
        if payload is not None:
            if rect is None:
                return payload
            stored = json.loads(payload)["records"]
            records = []
            for row in range(row0, row1 + 1):
                base = row * window.width
                records.extend(stored[base + col0 : base + col1 + 1])
        else:
            if rect is None:
                col0, col1 = 0, window.width - 1
                row0, row1 = 0, window.height - 1
            records = []
            for row in range(row0, row1 + 1):
                if row in finished:
                    records.extend(finished[row][col0 : col1 + 1])
        return canonical_json(
            tiles_payload(window, records, rows_done, done)
        )
