"""Tests for the pixel classifier, window scanning, and figure rendering."""

import struct
import zlib

import pytest

from henonshoe.henon import (
    HenonParams,
    filtration_radius,
    orbit_multipliers,
    solve_periodic_orbit,
)
from henonshoe.scanner import (
    PALETTE,
    PixelClass,
    ScanOptions,
    ScanResult,
    ScanWindow,
    Witness,
    classify_parameter,
    fig6_image,
    fig6_overlay,
    fig6_regions,
    fig9_image,
    fig9_overlay,
    fig9_regions,
    png_bytes,
    ppm_bytes,
    render_verdict_rows,
    scan_window,
    tile_records,
    write_image,
)

FAST = ScanOptions(n_max=3)
WINDOW = ScanWindow(0.2, -2.6, -1.0, -0.35, 0.35, 12, 10, FAST)


def test_classify_hov_anchors():
    left = classify_parameter(HenonParams(-6.0, 0.2))
    right = classify_parameter(HenonParams(6.0, 0.2))
    assert left.verdict == "horseshoe_hov"
    assert right.verdict == "horseshoe_hov"
    assert left.witness is None
    # tier 1 is recheckable directly from the inequality
    assert abs(-6.0) > 2.0 * (abs(0.2) + 1.0) ** 2


def test_classify_attracting_witness_is_reproducible():
    pixel = classify_parameter(HenonParams(-1.2, 0.05))
    assert pixel.verdict == "not_horseshoe"
    w = pixel.witness
    assert w.kind == "attracting_orbit"
    assert len(w.cycle) == 2
    assert w.a == -1.2
    assert w.b == 0.05
    orbit = solve_periodic_orbit(HenonParams(-1.2, 0.05), 2, w.cycle)
    info = orbit_multipliers(orbit)
    assert max(abs(m) for m in info.multipliers) < 1.0


def test_classify_trapped_witness_is_reproducible():
    pixel = classify_parameter(HenonParams(-1.8, 0.2))
    assert pixel.verdict == "not_horseshoe"
    w = pixel.witness
    assert w.kind == "trapped_orbit"
    assert w.cycle == ()
    assert len(w.seed) == 2
    bail = 2.0 * filtration_radius(HenonParams(-1.8, 0.2)) + 2.0
    x, y = w.seed
    for _ in range(512):
        x, y = x * x + w.a - w.b * y, x
        assert abs(x) <= bail
        assert abs(y) <= bail


def test_classify_evidence_and_unknown():
    assert classify_parameter(HenonParams(-2.5, 0.2)).verdict == (
        "horseshoe_evidence"
    )
    assert classify_parameter(HenonParams(-2.5, 0.2)).witness is None
    assert classify_parameter(HenonParams(-2.2, 0.2)).verdict == "unknown"


def test_scan_options_validation():
    with pytest.raises(ValueError):
        ScanOptions(n_max=0)
    with pytest.raises(ValueError):
        ScanOptions(seed_grid=1)
    with pytest.raises(ValueError):
        ScanOptions(attractor_iterations=0)
    with pytest.raises(ValueError):
        ScanOptions(trapped_fraction=0.0)
    with pytest.raises(ValueError):
        ScanOptions(trapped_fraction=1.5)
    with pytest.raises(ValueError):
        ScanOptions(max_step=0.0)
    with pytest.raises(ValueError):
        ScanOptions(anchor_margin=1.0)
    with pytest.raises(ValueError):
        ScanOptions(anchor_phases=2)


def test_witness_and_pixel_validation():
    with pytest.raises(ValueError):
        Witness("sighting", -1.0, 0.0)
    with pytest.raises(ValueError):
        PixelClass("maybe")
    with pytest.raises(ValueError):
        PixelClass("not_horseshoe")


def test_conjugation_equivariance_of_verdicts():
    for a in (-2.5, -1.8, -1.8 + 0.4j, -1.3 + 0.1j, -2.2 + 0.15j):
        one = classify_parameter(HenonParams(a, 0.2), FAST)
        two = classify_parameter(
            HenonParams(complex(a).conjugate(), 0.2), FAST
        )
        assert one.verdict == two.verdict
        kind_one = one.witness.kind if one.witness else ""
        kind_two = two.witness.kind if two.witness else ""
        assert kind_one == kind_two


def test_hov_verdict_stable_under_budget_increase():
    for a, b in ((-6.0, 0.2), (-2.3, 0.05)):
        small = classify_parameter(HenonParams(a, b), ScanOptions(n_max=2))
        large = classify_parameter(HenonParams(a, b), ScanOptions(n_max=6))
        assert small.verdict == "horseshoe_hov"
        assert large.verdict == "horseshoe_hov"


def test_evidence_verdict_independent_of_anchor():
    result = scan_window(WINDOW)
    alt = ScanOptions(n_max=3, anchor_margin=1.45)
    checked = 0
    for row in range(WINDOW.height):
        for col in range(WINDOW.width):
            if result.rows[row][col].verdict != "horseshoe_evidence":
                continue
            if (row * WINDOW.width + col) % 8:
                continue
            a = WINDOW.pixel_center(col, row)
            other = classify_parameter(HenonParams(a, WINDOW.b), alt)
            assert other.verdict == "horseshoe_evidence"
            checked += 1
    assert checked >= 8


def test_scan_window_validation():
    with pytest.raises(ValueError):
        ScanWindow(0.2, -1.0, -2.0, -0.5, 0.5, 8, 8)
    with pytest.raises(ValueError):
        ScanWindow(0.2, -2.0, -1.0, 0.5, -0.5, 8, 8)
    with pytest.raises(ValueError):
        ScanWindow(0.2, -2.0, -1.0, -0.5, 0.5, 0, 8)
    with pytest.raises(ValueError):
        ScanWindow(float("nan"), -2.0, -1.0, -0.5, 0.5, 8, 8)
    with pytest.raises(ValueError):
        WINDOW.pixel_center(12, 0)
    with pytest.raises(ValueError):
        WINDOW.pixel_center(0, -1)


def test_pixel_center_geometry():
    top_left = WINDOW.pixel_center(0, 0)
    assert abs(top_left.real - (-2.6 + 0.5 * 1.6 / 12)) < 1e-12
    assert abs(top_left.imag - (0.35 - 0.5 * 0.7 / 10)) < 1e-12
    bottom_right = WINDOW.pixel_center(11, 9)
    assert abs(bottom_right.real - (-1.0 - 0.5 * 1.6 / 12)) < 1e-12
    assert abs(bottom_right.imag - (-0.35 + 0.5 * 0.7 / 10)) < 1e-12


def test_scan_window_mirror_symmetry_and_mix():
    result = scan_window(WINDOW)
    verdicts = result.verdicts()
    assert verdicts == tuple(reversed(verdicts))
    flat = {v for row in verdicts for v in row}
    assert flat == {"horseshoe_evidence", "not_horseshoe"}
    again = scan_window(WINDOW)
    assert again.rows == result.rows


def test_scan_all_hov_window_is_uniform():
    window = ScanWindow(0.2, -8.0, -7.0, -0.2, 0.2, 4, 4, FAST)
    result = scan_window(window)
    assert {p.verdict for row in result.rows for p in row} == {
        "horseshoe_hov"
    }


def test_scan_progress_is_monotone():
    seen = []
    window = ScanWindow(0.2, -8.0, -7.0, -0.2, 0.2, 3, 4, FAST)
    scan_window(window, progress=lambda done, total: seen.append((done, total)))
    assert seen[-1] == (12, 12)
    assert all(t == 12 for _, t in seen)
    assert all(a < b for (a, _), (b, _) in zip(seen, seen[1:]))


def test_scan_result_shape_validation():
    good = scan_window(ScanWindow(0.2, -8.0, -7.0, -0.2, 0.2, 3, 2, FAST))
    with pytest.raises(ValueError):
        ScanResult(good.window, good.rows[:1])
    with pytest.raises(ValueError):
        ScanResult(good.window, tuple(row[:2] for row in good.rows))


def test_tile_records_layout():
    result = scan_window(WINDOW)
    records = tile_records(result)
    assert len(records) == 120
    first = records[0]
    center = WINDOW.pixel_center(0, 0)
    assert first["re"] == center.real
    assert first["im"] == center.imag
    assert first["verdict"] in ("horseshoe_evidence", "not_horseshoe")
    assert records[12]["re"] == WINDOW.pixel_center(0, 1).real
    for rec in records:
        if rec["verdict"] == "not_horseshoe":
            assert rec["witness_kind"] in ("attracting_orbit", "trapped_orbit")
        else:
            assert rec["witness_kind"] == ""


def test_render_palette_bytes():
    rows = (
        ("horseshoe_hov", "not_horseshoe"),
        ("unknown", "horseshoe_evidence"),
    )
    width, height, rgb = render_verdict_rows(rows)
    assert (width, height) == (2, 2)
    assert rgb == bytes(
        [255, 255, 255, 40, 40, 40, 128, 128, 128, 200, 200, 200]
    )
    assert PALETTE["not_horseshoe"] == 40
    with pytest.raises(ValueError):
        render_verdict_rows(())
    with pytest.raises(ValueError):
        render_verdict_rows((("unknown", "unknown"), ("unknown",)))


def test_ppm_bytes_exact():
    rgb = bytes(range(12))
    data = ppm_bytes(2, 2, rgb)
    assert data == b"P6\n2 2\n255\n" + rgb
    with pytest.raises(ValueError):
        ppm_bytes(2, 2, rgb[:-1])


def test_png_bytes_decode_round_trip():
    rgb = bytes([255, 0, 0, 0, 255, 0, 0, 0, 255, 17, 34, 51])
    data = png_bytes(2, 2, rgb)
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    width, height, depth, color = struct.unpack(">IIBB", data[16:26])
    assert (width, height, depth, color) == (2, 2, 8, 2)
    pos = 8
    idat = b""
    while pos < len(data):
        (length,) = struct.unpack(">I", data[pos : pos + 4])
        kind = data[pos + 4 : pos + 8]
        body = data[pos + 8 : pos + 8 + length]
        (crc,) = struct.unpack(
            ">I", data[pos + 8 + length : pos + 12 + length]
        )
        assert crc == zlib.crc32(kind + body) & 0xFFFFFFFF
        if kind == b"IDAT":
            idat += body
        pos += 12 + length
    raw = zlib.decompress(idat)
    assert raw == b"\x00" + rgb[:6] + b"\x00" + rgb[6:]


def test_write_image_by_suffix(tmp_path):
    rgb = bytes([0, 0, 0, 255, 255, 255])
    ppm_path = tmp_path / "out.ppm"
    png_path = tmp_path / "out.png"
    write_image(str(ppm_path), 2, 1, rgb)
    write_image(str(png_path), 2, 1, rgb)
    assert ppm_path.read_bytes().startswith(b"P6\n")
    assert png_path.read_bytes().startswith(b"\x89PNG")
    with pytest.raises(ValueError):
        write_image(str(tmp_path / "out.gif"), 2, 1, rgb)


def test_fig6_region_tags():
    assert fig6_regions(-2.0) == frozenset({"w1", "m"})
    assert fig6_regions(-0.5) == frozenset({"m"})
    assert fig6_regions(-3.0) == frozenset({"w1", "hov1"})
    assert fig6_regions(0.0) == frozenset({"m"})
    assert fig6_overlay(-1.0, 0.02)
    assert fig6_overlay(2j, 0.02)
    assert not fig6_overlay(-0.2, 0.02)


def test_fig9_region_tags():
    assert fig9_regions(-2.3, 0.05) == frozenset({"w2", "hov"})
    assert fig9_regions(-2.3, 0.0) == frozenset({"w2"})
    assert fig9_regions(-1.0, 0.5) == frozenset()
    assert fig9_overlay(-2.0, 0.0, 0.02)
    assert not fig9_overlay(-1.0, 0.0, 0.02)


def test_region_images_render():
    width, height, rgb = fig6_image(60, 60)
    assert (width, height, len(rgb)) == (60, 60, 10800)
    assert set(rgb) <= {0, 60, 180, 220, 255}
    assert 0 in set(rgb)
    width, height, rgb = fig9_image(60, 50)
    assert (width, height, len(rgb)) == (60, 50, 9000)
    assert set(rgb) <= {0, 180, 230, 255}
    assert 0 in set(rgb)
