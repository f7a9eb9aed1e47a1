"""Service configuration from file, environment, and flag overrides.

Precedence, lowest to highest: built-in defaults, key=value config
file, HENONSHOE_* environment variables, explicit overrides (CLI
flags).  Unknown keys in any source are rejected so typos surface
instead of silently reverting to defaults.
"""

import os
from dataclasses import dataclass, fields


@dataclass(frozen=True)
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8700
    workers: int = 2
    cache_dir: str = ""
    cache_max_age: int = 604800
    cache_max_bytes: int = 67108864
    n_max: int = 5
    static_dir: str = ""

    def __post_init__(self):
        if not 1 <= self.port <= 65535:
            raise ValueError("port out of range")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        if self.cache_max_age < 0 or self.cache_max_bytes < 0:
            raise ValueError("cache limits must be nonnegative")
        if not 1 <= self.n_max <= 8:
            raise ValueError("n_max must be between 1 and 8")
        if not self.cache_dir:
            object.__setattr__(
                self,
                "cache_dir",
                os.path.join(
                    os.path.expanduser("~"), ".cache", "henonshoe"
                ),
            )


_FIELDS = {f.name: f.type for f in fields(ServiceConfig)}


def _coerce(key: str, raw: str):
    if key not in _FIELDS:
        raise ValueError(f"unknown config key {key!r}")
    if _FIELDS[key] in (int, "int"):
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"config key {key} needs an integer") from None
    return raw


def parse_config_file(path: str) -> dict:
    """Read KEY=VALUE lines; blank lines and # comments are skipped."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            if "=" not in text:
                raise ValueError(f"{path}:{lineno}: expected KEY=VALUE")
            key, _, raw = text.partition("=")
            key = key.strip().lower()
            values[key] = _coerce(key, raw.strip())
    return values


def load_config(
    path: str | None = None, environ=None, overrides: dict | None = None
) -> ServiceConfig:
    environ = os.environ if environ is None else environ
    values: dict = {}
    if path:
        values.update(parse_config_file(path))
    for name in _FIELDS:
        raw = environ.get("HENONSHOE_" + name.upper())
        if raw is not None:
            values[name] = _coerce(name, raw)
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key not in _FIELDS:
            raise ValueError(f"unknown config key {key!r}")
        values[key] = value
    return ServiceConfig(**values)
