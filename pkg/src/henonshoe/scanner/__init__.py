"""Parameter-plane classification, scanning, and figure rendering."""

from henonshoe.scanner.classify import (
    VERDICTS,
    PixelClass,
    ScanOptions,
    Witness,
    classify_parameter,
)
from henonshoe.scanner.grid import (
    ScanResult,
    ScanWindow,
    row_records,
    scan_stream,
    scan_window,
    tile_records,
)
from henonshoe.scanner.images import (
    PALETTE,
    fig6_image,
    fig6_overlay,
    fig6_regions,
    fig9_image,
    fig9_overlay,
    fig9_regions,
    png_bytes,
    ppm_bytes,
    render_scan,
    render_verdict_rows,
    write_image,
)

__all__ = [
    "PALETTE",
    "PixelClass",
    "ScanOptions",
    "ScanResult",
    "ScanWindow",
    "VERDICTS",
    "Witness",
    "classify_parameter",
    "fig6_image",
    "fig6_overlay",
    "fig6_regions",
    "fig9_image",
    "fig9_overlay",
    "fig9_regions",
    "png_bytes",
    "ppm_bytes",
    "render_scan",
    "render_verdict_rows",
    "row_records",
    "scan_stream",
    "scan_window",
    "tile_records",
    "write_image",
]
