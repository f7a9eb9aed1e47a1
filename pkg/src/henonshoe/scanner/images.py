"""Raster output: scan palettes, region figures, PPM and PNG writers.

The PNG path is a minimal encoder (8-bit RGB, no interlace, filter 0)
so images stay viewable without any imaging dependency; PPM is the
plain-text-header baseline.  Region figures are drawn from the region
membership predicates, with boundary curves overdrawn in black.
"""

import math
import struct
import zlib

from henonshoe.henon import HenonParams, region_member_2d
from henonshoe.onedim import region_member_1d
from henonshoe.onedim.quad import w1_boundary_radius
from henonshoe.scanner.grid import ScanResult

PALETTE = {
    "not_horseshoe": 40,
    "horseshoe_evidence": 200,
    "horseshoe_hov": 255,
    "unknown": 128,
}

FIG6_SHADES = {"m": 60, "w1": 180, "hov1": 220, "none": 255}
FIG9_SHADES = {"w2": 180, "hov": 230, "none": 255}

TWO_THIRDS_PI = 2.0 * math.pi / 3.0


def render_verdict_rows(rows) -> tuple[int, int, bytes]:
    """Grayscale RGB raster from verdict rows; raises when empty."""
    if not rows or not rows[0]:
        raise ValueError("empty tile grid")
    width = len(rows[0])
    out = bytearray()
    for row in rows:
        if len(row) != width:
            raise ValueError("ragged tile grid")
        for verdict in row:
            shade = PALETTE[verdict]
            out += bytes((shade, shade, shade))
    return width, len(rows), bytes(out)


def render_scan(result: ScanResult) -> tuple[int, int, bytes]:
    return render_verdict_rows(result.verdicts())


def ppm_bytes(width: int, height: int, rgb: bytes) -> bytes:
    if len(rgb) != 3 * width * height:
        raise ValueError("pixel payload does not match the dimensions")
    return b"P6\n%d %d\n255\n" % (width, height) + rgb


def png_bytes(width: int, height: int, rgb: bytes) -> bytes:
    if len(rgb) != 3 * width * height:
        raise ValueError("pixel payload does not match the dimensions")

    def chunk(tag: bytes, payload: bytes) -> bytes:
        body = tag + payload
        return struct.pack(">I", len(payload)) + body + struct.pack(
            ">I", zlib.crc32(body)
        )

    header = struct.pack(">IIBBBBB", width, height, 8, 2, 0, 0, 0)
    stride = 3 * width
    raw = b"".join(
        b"\x00" + rgb[r * stride : (r + 1) * stride] for r in range(height)
    )
    return (
        b"\x89PNG\r\n\x1a\n"
        + chunk(b"IHDR", header)
        + chunk(b"IDAT", zlib.compress(raw, 9))
        + chunk(b"IEND", b"")
    )


def write_image(path: str, width: int, height: int, rgb: bytes) -> None:
    """Write a raster by file extension: .ppm or .png."""
    name = str(path)
    if name.endswith(".ppm"):
        payload = ppm_bytes(width, height, rgb)
    elif name.endswith(".png"):
        payload = png_bytes(width, height, rgb)
    else:
        raise ValueError("unsupported image format, use .ppm or .png")
    with open(path, "wb") as handle:
        handle.write(payload)


def fig6_regions(a: complex) -> frozenset:
    """Region tags of a point in the 1-D parameter plane."""
    tags = set()
    if a != 0 and region_member_1d("W1", a):
        tags.add("w1")
    if region_member_1d("HOV1", a):
        tags.add("hov1")
    if region_member_1d("M", a):
        tags.add("m")
    return frozenset(tags)


def fig6_overlay(a: complex, tol: float) -> bool:
    """True on the |a| = 2 circle or the boundary arch, within tol."""
    r = abs(a)
    if abs(r - 2.0) < tol:
        return True
    if r == 0:
        return False
    phi = math.atan2(abs(a.imag), a.real) % (2.0 * math.pi)
    if not (TWO_THIRDS_PI < phi < 2.0 * TWO_THIRDS_PI):
        return False
    return abs(r - w1_boundary_radius(phi)) < tol


def fig6_image(
    width: int = 200,
    height: int = 200,
    re_lo: float = -3.5,
    re_hi: float = 1.5,
    im_lo: float = -2.5,
    im_hi: float = 2.5,
) -> tuple[int, int, bytes]:
    """Region chart of the a-plane: three nested regions plus curves."""
    if width < 1 or height < 1:
        raise ValueError("resolution must be positive")
    if not (re_lo < re_hi and im_lo < im_hi):
        raise ValueError("window bounds must be ordered")
    dre = (re_hi - re_lo) / width
    dim = (im_hi - im_lo) / height
    tol = max(dre, dim)
    out = bytearray()
    for row in range(height):
        im = im_hi - (row + 0.5) * dim
        for col in range(width):
            a = complex(re_lo + (col + 0.5) * dre, im)
            if fig6_overlay(a, tol):
                shade = 0
            else:
                tags = fig6_regions(a)
                if "m" in tags:
                    shade = FIG6_SHADES["m"]
                elif "w1" in tags:
                    shade = FIG6_SHADES["w1"]
                elif "hov1" in tags:
                    shade = FIG6_SHADES["hov1"]
                else:
                    shade = FIG6_SHADES["none"]
            out += bytes((shade, shade, shade))
    return width, height, bytes(out)


def fig9_regions(a: float, b: float) -> frozenset:
    """Region tags of a real parameter pair."""
    if a == 0:
        return frozenset()
    params = HenonParams(a, b)
    tags = set()
    if region_member_2d("W2", params):
        tags.add("w2")
    if region_member_2d("HOV", params):
        tags.add("hov")
    return frozenset(tags)


def fig9_overlay(a: float, b: float, tol: float) -> bool:
    """True on the curve a = -2(1+|b|)^2, within tol in a."""
    return abs(a + 2.0 * (1.0 + abs(b)) ** 2) < tol


def fig9_image(
    width: int = 240,
    height: int = 200,
    a_lo: float = -8.0,
    a_hi: float = 0.0,
    b_lo: float = -1.0,
    b_hi: float = 1.0,
) -> tuple[int, int, bytes]:
    """Region chart of the real (a, b) plane with both boundary curves."""
    if width < 1 or height < 1:
        raise ValueError("resolution must be positive")
    if not (a_lo < a_hi and b_lo < b_hi):
        raise ValueError("window bounds must be ordered")
    da = (a_hi - a_lo) / width
    db = (b_hi - b_lo) / height
    shades = []
    for row in range(height):
        b = b_hi - (row + 0.5) * db
        line = []
        w2_flags = []
        for col in range(width):
            a = a_lo + (col + 0.5) * da
            tags = fig9_regions(a, b)
            w2_flags.append("w2" in tags)
            if fig9_overlay(a, b, da):
                line.append(0)
            elif "w2" in tags:
                line.append(FIG9_SHADES["w2"])
            elif "hov" in tags:
                line.append(FIG9_SHADES["hov"])
            else:
                line.append(FIG9_SHADES["none"])
        # membership flips mark the left region boundary in each row
        for col in range(1, width):
            if w2_flags[col] != w2_flags[col - 1]:
                line[col] = 0
        shades.append(line)
    out = bytearray()
    for line in shades:
        for shade in line:
            out += bytes((shade, shade, shade))
    return width, height, bytes(out)
