"""
CSS whitespace channel: anchor scanning, canonicalization, and run embedding.
"""

from stylesteg.css.codec import (
    DEFAULT_BITS_PER_ANCHOR,
    AnchorRun,
    StegoParams,
    anchor_runs,
    canonicalize,
    capacity,
    channel_bits,
    embed_bits,
    extract_bits,
    is_visually_equivalent,
    strip_anchor_runs,
)
from stylesteg.css.scanner import (
    Anchor,
    CssDocument,
    LineEnding,
    ScanIssue,
    ScanWarning,
    scan,
)

__all__ = [
    "Anchor",
    "AnchorRun",
    "CssDocument",
    "LineEnding",
    "ScanIssue",
    "ScanWarning",
    "StegoParams",
    "DEFAULT_BITS_PER_ANCHOR",
    "scan",
    "canonicalize",
    "capacity",
    "channel_bits",
    "embed_bits",
    "extract_bits",
    "anchor_runs",
    "strip_anchor_runs",
    "is_visually_equivalent",
]
