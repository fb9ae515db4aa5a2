"""
Byte-level CSS scanner that finds embedding anchors.

An anchor is a semicolon that sits outside comments, quoted strings and
``url(...)``, and is followed only by SPACE/TAB up to a newline (LF or CRLF)
or end of file. A backslash escapes the byte after it everywhere except before
a newline; quotes only open a string at the start of a ``url(`` body. The
scanner never decodes text; UTF-8 continuation bytes cannot collide with any
byte it looks at.

Defects (a newline inside a string, EOF inside a string, comment or url)
are reported as warnings and stop anchor collection at the defect.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum

from stylesteg.bitstream import WHITESPACE_BYTES

logger = logging.getLogger(__name__)

SEMICOLON = 0x3B
LF = 0x0A
CR = 0x0D
BACKSLASH = 0x5C
SLASH = 0x2F
STAR = 0x2A
LPAREN = 0x28
RPAREN = 0x29
SINGLE_QUOTE = 0x27
DOUBLE_QUOTE = 0x22


class ScanState(Enum):
    """States of the anchor scanner."""

    NORMAL = "normal"
    SINGLE_QUOTE = "single_quote"
    DOUBLE_QUOTE = "double_quote"
    COMMENT = "comment"
    URL = "url"


class ScanIssue(Enum):
    """Kinds of lexical defect the scanner reports."""

    UNTERMINATED_STRING = "unterminated_string"
    UNTERMINATED_COMMENT = "unterminated_comment"
    UNTERMINATED_URL = "unterminated_url"


class LineEnding(Enum):
    LF = "lf"
    CRLF = "crlf"


@dataclass(frozen=True)
class ScanWarning:
    """A lexical defect found while scanning."""

    issue: ScanIssue
    offset: int  # where the string, comment or url started
    line: int

    def __str__(self) -> str:
        return f"line {self.line}: {self.issue.value.replace('_', ' ')}"


@dataclass(frozen=True)
class Anchor:
    """
    An end-of-line semicolon able to carry a whitespace run.

    Attributes:
        semicolon_offset: Byte index of the ``;``
        existing_trailing: SPACE/TAB bytes between the ``;`` and the newline or EOF
    """

    semicolon_offset: int
    existing_trailing: int = 0

    @property
    def run_start(self) -> int:
        return self.semicolon_offset + 1

    @property
    def run_end(self) -> int:
        return self.semicolon_offset + 1 + self.existing_trailing


@dataclass(frozen=True)
class CssDocument:
    """
    A stylesheet's raw bytes plus the anchors found in them.

    Invariants: anchors strictly increase and each addresses a ``;`` byte.
    """

    data: bytes
    anchors: tuple[Anchor, ...] = ()
    line_ending: LineEnding = LineEnding.LF
    warnings: tuple[ScanWarning, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "anchors", tuple(self.anchors))
        object.__setattr__(self, "warnings", tuple(self.warnings))
        previous = -1
        for anchor in self.anchors:
            if anchor.semicolon_offset <= previous:
                raise ValueError("Anchors must be strictly increasing")
            if self.data[anchor.semicolon_offset : anchor.semicolon_offset + 1] != b";":
                raise ValueError(f"Offset {anchor.semicolon_offset} is not a semicolon")
            previous = anchor.semicolon_offset

    @property
    def is_canonical(self) -> bool:
        """True when no anchor carries trailing whitespace."""
        return all(anchor.existing_trailing == 0 for anchor in self.anchors)

    def line_of(self, offset: int) -> int:
        """1-based line number of a byte offset."""
        return self.data.count(b"\n", 0, offset) + 1


def detect_line_ending(data: bytes) -> LineEnding:
    """Dominant newline convention; LF on ties and for files without newlines."""
    crlf = data.count(b"\r\n")
    lf = data.count(b"\n") - crlf
    return LineEnding.CRLF if crlf > lf else LineEnding.LF


def _is_ident_byte(byte: int) -> bool:
    return byte >= 0x80 or chr(byte).isalnum() or byte in (0x2D, 0x5F)


def _opens_url(data: bytes, paren: int) -> bool:
    start = paren - 3
    if start < 0 or data[start:paren].lower() != b"url":
        return False
    return start == 0 or not _is_ident_byte(data[start - 1])


def _anchor_at(data: bytes, semicolon: int) -> Anchor | None:
    end = semicolon + 1
    size = len(data)
    while end < size and data[end] in WHITESPACE_BYTES:
        end += 1
    if end == size or data[end] == LF or data[end : end + 2] == b"\r\n":
        return Anchor(semicolon_offset=semicolon, existing_trailing=end - semicolon - 1)
    return None


def scan(css_bytes: bytes) -> CssDocument:
    """
    Find every anchor in a stylesheet.

    Args:
        css_bytes: Raw stylesheet bytes

    Returns:
        CssDocument with anchors in offset order and any scan warnings
    """
    data = bytes(css_bytes)
    size = len(data)
    anchors: list[Anchor] = []
    warnings: list[ScanWarning] = []

    state = ScanState.NORMAL
    string_return = ScanState.NORMAL
    opened_at = 0
    url_opened_at = 0
    url_body_started = False
    i = 0

    def defect(issue: ScanIssue, offset: int) -> None:
        warning = ScanWarning(issue=issue, offset=offset, line=data.count(b"\n", 0, offset) + 1)
        warnings.append(warning)
        logger.warning(f"CSS scan: {warning}; anchors after it are ignored")

    while i < size:
        byte = data[i]

        if state is ScanState.COMMENT:
            if byte == STAR and i + 1 < size and data[i + 1] == SLASH:
                state = ScanState.NORMAL
                i += 2
                continue
            i += 1
            continue

        if state in (ScanState.SINGLE_QUOTE, ScanState.DOUBLE_QUOTE):
            quote = SINGLE_QUOTE if state is ScanState.SINGLE_QUOTE else DOUBLE_QUOTE
            if byte == BACKSLASH:
                i += 3 if data[i + 1 : i + 3] == b"\r\n" else 2
                continue
            if byte == quote:
                state = string_return
            elif byte == LF:
                defect(ScanIssue.UNTERMINATED_STRING, opened_at)
                break
            i += 1
            continue

        if state is ScanState.URL and url_body_started and byte in (SINGLE_QUOTE, DOUBLE_QUOTE):
            # quotes inside an unquoted url body are ordinary bytes
            i += 1
            continue

        if byte == BACKSLASH and state in (ScanState.NORMAL, ScanState.URL):
            url_body_started = True
            i += 1 if data[i + 1 : i + 2] in (b"", b"\n", b"\r") else 2
            continue

        if byte in (SINGLE_QUOTE, DOUBLE_QUOTE):
            string_return = state
            state = ScanState.SINGLE_QUOTE if byte == SINGLE_QUOTE else ScanState.DOUBLE_QUOTE
            opened_at = i
            url_body_started = True
        elif state is ScanState.URL:
            if byte == RPAREN:
                state = ScanState.NORMAL
            elif byte not in WHITESPACE_BYTES and byte not in (LF, CR):
                url_body_started = True
        elif byte == SLASH and i + 1 < size and data[i + 1] == STAR:
            state = ScanState.COMMENT
            opened_at = i
            i += 2
            continue
        elif byte == LPAREN and _opens_url(data, i):
            state = ScanState.URL
            url_opened_at = i - 3
            url_body_started = False
        elif byte == SEMICOLON:
            anchor = _anchor_at(data, i)
            if anchor is not None:
                anchors.append(anchor)
        i += 1
    else:
        if state is ScanState.COMMENT:
            defect(ScanIssue.UNTERMINATED_COMMENT, opened_at)
        elif state in (ScanState.SINGLE_QUOTE, ScanState.DOUBLE_QUOTE):
            defect(ScanIssue.UNTERMINATED_STRING, opened_at)
        elif state is ScanState.URL:
            defect(ScanIssue.UNTERMINATED_URL, url_opened_at)

    logger.debug(f"Scanned {size} bytes: {len(anchors)} anchors")
    return CssDocument(
        data=data,
        anchors=tuple(anchors),
        line_ending=detect_line_ending(data),
        warnings=tuple(warnings),
    )
