"""Parameter-plane scanning over a pixel grid at fixed b.

Rows are stored top-down: row 0 holds the largest imaginary parts, so
the grid can be written to a raster without flipping.  When b is real
and the window is symmetric about the real axis, only the upper half is
computed and the lower half is filled with conjugated results; verdicts
are conjugation invariants, so the saved half is exact, not a guess.
"""

from dataclasses import dataclass
from typing import Callable

from henonshoe.henon import HenonParams
from henonshoe.scanner.classify import (
    PixelClass,
    ScanOptions,
    Witness,
    classify_parameter,
)


@dataclass(frozen=True)
class ScanWindow:
    b: complex
    re_lo: float
    re_hi: float
    im_lo: float
    im_hi: float
    width: int
    height: int
    options: ScanOptions = ScanOptions()

    def __post_init__(self) -> None:
        b = complex(self.b)
        if b != b:
            raise ValueError("b must be finite")
        if not (self.re_lo < self.re_hi and self.im_lo < self.im_hi):
            raise ValueError("window bounds must be ordered")
        if self.width < 1 or self.height < 1:
            raise ValueError("resolution must be positive")
        object.__setattr__(self, "b", b)

    def pixel_center(self, col: int, row: int) -> complex:
        """Parameter a at the center of (col, row); row 0 is the top."""
        if not (0 <= col < self.width and 0 <= row < self.height):
            raise ValueError("pixel outside the window")
        re = self.re_lo + (col + 0.5) * (self.re_hi - self.re_lo) / self.width
        im = self.im_hi - (row + 0.5) * (self.im_hi - self.im_lo) / self.height
        return complex(re, im)


@dataclass(frozen=True)
class ScanResult:
    window: ScanWindow
    rows: tuple[tuple[PixelClass, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.window.height:
            raise ValueError("row count does not match the window")
        for row in self.rows:
            if len(row) != self.window.width:
                raise ValueError("row width does not match the window")

    def verdicts(self) -> tuple[tuple[str, ...], ...]:
        return tuple(tuple(p.verdict for p in row) for row in self.rows)


def _conjugated(pixel: PixelClass) -> PixelClass:
    if pixel.witness is None:
        return pixel
    w = pixel.witness
    mirror = Witness(
        kind=w.kind,
        a=w.a.conjugate(),
        b=w.b.conjugate(),
        cycle=tuple(v.conjugate() for v in w.cycle),
        seed=tuple(v.conjugate() for v in w.seed),
    )
    return PixelClass(pixel.verdict, mirror)


def scan_stream(window: ScanWindow):
    """Yield (row_index, pixel_row) as rows finish; mirrored rows are
    emitted right after the row they are conjugated from, so consumers
    can serve partial results while the scan is still running."""
    b = window.b
    mirrored = b.imag == 0 and window.im_lo == -window.im_hi
    seen: set[int] = set()
    for row in range(window.height):
        if row in seen:
            continue
        partner = window.height - 1 - row
        pixels = []
        for col in range(window.width):
            a = window.pixel_center(col, row)
            pixels.append(classify_parameter(HenonParams(a, b), window.options))
        seen.add(row)
        yield row, tuple(pixels)
        if mirrored and partner != row:
            seen.add(partner)
            yield partner, tuple(_conjugated(p) for p in pixels)


def scan_window(
    window: ScanWindow,
    progress: Callable[[int, int], None] | None = None,
) -> ScanResult:
    """Classify every pixel; deterministic for fixed window and options."""
    total = window.width * window.height
    done = 0
    rows: list[tuple[PixelClass, ...] | None] = [None] * window.height
    for row, pixels in scan_stream(window):
        rows[row] = pixels
        done += window.width
        if progress is not None:
            progress(done, total)
    return ScanResult(window, tuple(rows))


def row_records(window: ScanWindow, row: int, pixels) -> tuple[dict, ...]:
    """Serializable records for one pixel row, left to right."""
    out = []
    for col, pixel in enumerate(pixels):
        a = window.pixel_center(col, row)
        out.append(
            {
                "re": a.real,
                "im": a.imag,
                "verdict": pixel.verdict,
                "witness_kind": (
                    "" if pixel.witness is None else pixel.witness.kind
                ),
            }
        )
    return tuple(out)


def tile_records(result: ScanResult) -> tuple[dict, ...]:
    """Flat serializable records, row-major from the top-left pixel."""
    out: list[dict] = []
    for row in range(result.window.height):
        out.extend(row_records(result.window, row, result.rows[row]))
    return tuple(out)
