"""Disk cache for finished scan payloads.

Entries are keyed by a digest of the window geometry, the classifier
options, and the package version, so any change to the inputs or the
code invalidates old results.  Each file carries its own payload
digest on the first line; a mismatch means corruption and the entry
is dropped with a logged warning.  Writes go through a temp file and
an atomic rename so concurrent readers never see partial data.
"""

import hashlib
import logging
import os
import tempfile
import time
from importlib import metadata

from henonshoe.payloads import canonical_json, window_descriptor
from henonshoe.scanner import ScanWindow

log = logging.getLogger("henonshoe.cache")

SUFFIX = ".tiles"


def _version() -> str:
    try:
        return metadata.version("henonshoe")
    except metadata.PackageNotFoundError:
        return "unpackaged"


def scan_key(window: ScanWindow) -> str:
    material = canonical_json(
        {"window": window_descriptor(window), "version": _version()}
    )
    return hashlib.sha256(material).hexdigest()


class ScanCache:
    def __init__(self, directory: str, max_age: int, max_bytes: int):
        self.directory = directory
        self.max_age = max_age
        self.max_bytes = max_bytes
        os.makedirs(directory, exist_ok=True)

    def _path(self, key: str) -> str:
        return os.path.join(self.directory, key + SUFFIX)

    def load(self, key: str) -> bytes | None:
        path = self._path(key)
        try:
            with open(path, "rb") as fh:
                blob = fh.read()
        except FileNotFoundError:
            return None
        digest, _, payload = blob.partition(b"\n")
        if digest.decode("ascii", "replace") == hashlib.sha256(
            payload
        ).hexdigest():
            return payload
        log.warning("dropping corrupt cache entry %s", key)
        try:
            os.unlink(path)
        except FileNotFoundError:
            pass
        return None

    def store(self, key: str, payload: bytes) -> None:
        blob = hashlib.sha256(payload).hexdigest().encode("ascii")
        blob += b"\n" + payload
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(blob)
            os.replace(tmp, self._path(key))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        self._evict()

    def _evict(self) -> None:
        entries = []
        for name in os.listdir(self.directory):
            if not name.endswith(SUFFIX):
                continue
            path = os.path.join(self.directory, name)
            try:
                stat = os.stat(path)
            except FileNotFoundError:
                continue
            entries.append((stat.st_mtime, stat.st_size, path))
        now = time.time()
        kept = []
        for mtime, size, path in sorted(entries):
            if now - mtime > self.max_age:
                self._drop(path)
            else:
                kept.append((mtime, size, path))
        total = sum(size for _, size, _ in kept)
        for _, size, path in kept:
            if total <= self.max_bytes:
                break
            self._drop(path)
            total -= size

    @staticmethod
    def _drop(path: str) -> None:
        try:
            os.unlink(path)
        except FileNotFoundError:
            pass
