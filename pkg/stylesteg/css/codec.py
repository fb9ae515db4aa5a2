"""
Writing and reading whitespace runs at CSS anchors.

Each anchor carries up to ``bits_per_anchor`` bits as a run of SPACE/TAB
between its semicolon and the newline. Everything else in the stylesheet is
left byte-for-byte untouched.
"""

import logging
from dataclasses import dataclass

from stylesteg.bitstream import (
    HEADER_BITS,
    BitString,
    WhitespaceRun,
    bits_to_whitespace,
    concat,
    whitespace_to_bits,
)
from stylesteg.css.scanner import CssDocument, scan
from stylesteg.errors import CapacityExceededError

logger = logging.getLogger(__name__)

DEFAULT_BITS_PER_ANCHOR = 8
MAX_BITS_PER_ANCHOR = 64


@dataclass(frozen=True)
class StegoParams:
    """
    Channel parameters shared by sender and receiver.

    Example:
        params = StegoParams(bits_per_anchor=4)
    """

    bits_per_anchor: int = DEFAULT_BITS_PER_ANCHOR
    """Whitespace characters written per anchor (k)"""

    def __post_init__(self) -> None:
        if not 1 <= self.bits_per_anchor <= MAX_BITS_PER_ANCHOR:
            raise ValueError(
                f"bits_per_anchor must be between 1 and {MAX_BITS_PER_ANCHOR}, "
                f"got {self.bits_per_anchor}"
            )


@dataclass(frozen=True)
class AnchorRun:
    """What one anchor currently carries."""

    line: int
    semicolon_offset: int
    run: WhitespaceRun
    bits: BitString


def canonicalize(doc: CssDocument) -> CssDocument:
    """
    Remove existing SPACE/TAB bytes after every anchor semicolon.

    Non-anchor bytes are untouched; an already canonical document is returned as is.
    """
    if doc.is_canonical:
        return doc

    pieces = []
    cursor = 0
    for anchor in doc.anchors:
        pieces.append(doc.data[cursor : anchor.run_start])
        cursor = anchor.run_end
    pieces.append(doc.data[cursor:])
    stripped = sum(anchor.existing_trailing for anchor in doc.anchors)
    logger.debug(f"Canonicalized document: removed {stripped} trailing whitespace bytes")
    return scan(b"".join(pieces))


def channel_bits(doc: CssDocument, params: StegoParams) -> int:
    """Raw channel size: anchors x bits per anchor."""
    return len(doc.anchors) * params.bits_per_anchor


def capacity(doc: CssDocument, params: StegoParams) -> int:
    """
    Payload bits available once the 32-bit frame header is paid for.

    Returns:
        ``anchors * k - 32`` when positive, else 0
    """
    return max(channel_bits(doc, params) - HEADER_BITS, 0)


def embed_bits(doc: CssDocument, stream: BitString, params: StegoParams) -> bytes:
    """
    Write ``stream`` into the anchors, ``k`` bits per anchor, in order.

    The document is canonicalized first if it is not already. Anchors past the
    last chunk receive nothing.

    Raises:
        CapacityExceededError: If the stream needs more than anchors x k bits
    """
    doc = canonicalize(doc)
    available = channel_bits(doc, params)
    if stream.length > available:
        raise CapacityExceededError(
            f"Stream needs {stream.length} channel bits but the cover offers {available}",
            required_bits=stream.length,
            available_bits=available,
        )

    pieces = []
    cursor = 0
    for anchor, chunk in zip(doc.anchors, stream.chunks(params.bits_per_anchor)):
        pieces.append(doc.data[cursor : anchor.run_start])
        pieces.append(bits_to_whitespace(chunk).chars)
        cursor = anchor.run_start
    pieces.append(doc.data[cursor:])
    return b"".join(pieces)


def anchor_runs(css_bytes: bytes) -> list[AnchorRun]:
    """Every anchor with its line number, current run, and the bits the run encodes."""
    doc = scan(css_bytes)
    runs = []
    for anchor in doc.anchors:
        run = WhitespaceRun(doc.data[anchor.run_start : anchor.run_end])
        runs.append(
            AnchorRun(
                line=doc.line_of(anchor.semicolon_offset),
                semicolon_offset=anchor.semicolon_offset,
                run=run,
                bits=whitespace_to_bits(run),
            )
        )
    return runs


def extract_bits(stego_bytes: bytes, params: StegoParams) -> BitString:
    """
    Concatenate the bits carried by every anchor's run, in anchor order.

    Runs of any length are read; where the data ends is decided by the frame header.
    """
    runs = anchor_runs(stego_bytes)
    oversized = sum(1 for item in runs if len(item.run) > params.bits_per_anchor)
    if oversized:
        logger.warning(
            f"{oversized} anchors carry more than {params.bits_per_anchor} whitespace characters; "
            "sender and receiver may disagree on bits per anchor"
        )
    return concat(item.bits for item in runs)


def strip_anchor_runs(stego_bytes: bytes) -> bytes:
    """Bytes of the stylesheet with every anchor run removed."""
    return canonicalize(scan(stego_bytes)).data


def is_visually_equivalent(cover_bytes: bytes, stego_bytes: bytes) -> bool:
    """
    True when the two stylesheets differ only in whitespace runs after anchor semicolons.
    """
    return strip_anchor_runs(cover_bytes) == strip_anchor_runs(stego_bytes)
