"""
Bit strings, the whitespace alphabet, and length framing.

Bit order is most-significant-bit first everywhere. The alphabet is fixed:
SPACE (0x20) carries 0 and TAB (0x09) carries 1.

Embedded stream layout:

    [32-bit payload length L][payload: L bits]

and the payload produced from a cipher is:

    [block 0: |n| bits]...[block k-1: |n| bits][32-bit plaintext bit length]
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import overload

from stylesteg.errors import (
    ForeignCharacterError,
    FrameOverflowError,
    LengthFieldInvalidError,
    MalformedStreamError,
    TruncatedStreamError,
)
from stylesteg.rsa.cipher import CipherBlockSeq

SPACE = 0x20
TAB = 0x09
WHITESPACE_BYTES = frozenset((SPACE, TAB))

HEADER_BITS = 32
MAX_FIELD_VALUE = (1 << HEADER_BITS) - 1


@dataclass(frozen=True)
class BitString:
    """
    Immutable ordered sequence of bits.

    Example:
        >>> BitString.from_int(5, 4)
        BitString('0101')
    """

    bits: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        bits = tuple(self.bits)
        if any(bit not in (0, 1) for bit in bits):
            raise ValueError("BitString digits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_int(cls, value: int, width: int) -> "BitString":
        """Big-endian rendering of ``value`` in exactly ``width`` bits."""
        if value < 0 or value >> width:
            raise ValueError(f"{value} does not fit in {width} bits")
        return cls(tuple((value >> shift) & 1 for shift in range(width - 1, -1, -1)))

    @classmethod
    def from_bytes(cls, data: bytes) -> "BitString":
        return cls.from_int(int.from_bytes(data, "big"), 8 * len(data))

    @classmethod
    def from_str(cls, digits: str) -> "BitString":
        """Parse a string of '0'/'1' characters."""
        if any(ch not in "01" for ch in digits):
            raise ValueError(f"Not a bit string: {digits!r}")
        return cls(tuple(int(ch) for ch in digits))

    @property
    def length(self) -> int:
        return len(self.bits)

    def to_int(self) -> int:
        value = 0
        for bit in self.bits:
            value = (value << 1) | bit
        return value

    def chunks(self, size: int) -> Iterator["BitString"]:
        """Consecutive pieces of ``size`` bits; the last may be shorter."""
        for start in range(0, self.length, size):
            yield BitString(self.bits[start : start + size])

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    @overload
    def __getitem__(self, index: int) -> int: ...

    @overload
    def __getitem__(self, index: slice) -> "BitString": ...

    def __getitem__(self, index: int | slice) -> "int | BitString":
        if isinstance(index, slice):
            return BitString(self.bits[index])
        return self.bits[index]

    def __add__(self, other: "BitString") -> "BitString":
        return BitString(self.bits + other.bits)

    def __str__(self) -> str:
        return "".join(str(bit) for bit in self.bits)

    def __repr__(self) -> str:
        return f"BitString('{self}')"


def concat(parts: Iterable[BitString]) -> BitString:
    """Join bit strings in order."""
    bits: list[int] = []
    for part in parts:
        bits.extend(part.bits)
    return BitString(tuple(bits))


@dataclass(frozen=True)
class WhitespaceRun:
    """A run of SPACE/TAB bytes. Any other byte raises ForeignCharacterError."""

    chars: bytes = b""

    def __post_init__(self) -> None:
        codes = [ord(ch) for ch in self.chars] if isinstance(self.chars, str) else self.chars
        for offset, char in enumerate(codes):
            if char not in WHITESPACE_BYTES:
                raise ForeignCharacterError(
                    f"Byte 0x{char:02x} at offset {offset} is neither SPACE nor TAB",
                    offset=offset,
                    char=char,
                )
        object.__setattr__(self, "chars", bytes(codes))

    def __len__(self) -> int:
        return len(self.chars)


def bits_to_whitespace(bits: BitString) -> WhitespaceRun:
    """Render bits as whitespace: 0 -> SPACE, 1 -> TAB."""
    return WhitespaceRun(bytes(TAB if bit else SPACE for bit in bits))


def whitespace_to_bits(run: WhitespaceRun | bytes | str) -> BitString:
    """
    Read bits back from a whitespace run.

    Raises:
        ForeignCharacterError: If the run holds anything but SPACE and TAB
    """
    if not isinstance(run, WhitespaceRun):
        run = WhitespaceRun(run)  # type: ignore[arg-type]
    return BitString(tuple(1 if char == TAB else 0 for char in run.chars))


@dataclass(frozen=True)
class FramedPayload:
    """A payload preceded by its 32-bit big-endian bit length."""

    payload: BitString

    def __post_init__(self) -> None:
        if self.payload.length > MAX_FIELD_VALUE:
            raise FrameOverflowError(
                f"Payload of {self.payload.length} bits does not fit a 32-bit header",
                length=self.payload.length,
            )

    @property
    def header(self) -> int:
        return self.payload.length

    def to_bits(self) -> BitString:
        return BitString.from_int(self.header, HEADER_BITS) + self.payload

    @classmethod
    def parse(cls, stream: BitString) -> "FramedPayload":
        """
        Read a frame from the front of ``stream``; surplus bits are channel padding.

        Raises:
            TruncatedStreamError: If the header or the announced payload is incomplete
        """
        if stream.length < HEADER_BITS:
            raise TruncatedStreamError(
                f"Stream of {stream.length} bits is too short for the {HEADER_BITS}-bit header",
                required_bits=HEADER_BITS,
                available_bits=stream.length,
            )
        declared = stream[:HEADER_BITS].to_int()
        required = HEADER_BITS + declared
        if stream.length < required:
            raise TruncatedStreamError(
                f"Header announces {declared} payload bits but only "
                f"{stream.length - HEADER_BITS} follow",
                required_bits=required,
                available_bits=stream.length,
            )
        return cls(stream[HEADER_BITS:required])


def frame(payload: BitString) -> BitString:
    """
    Prefix ``payload`` with its 32-bit length.

    Raises:
        FrameOverflowError: If the payload has 2**32 bits or more
    """
    return FramedPayload(payload).to_bits()


def unframe(stream: BitString) -> BitString:
    """
    Return the payload announced by the header at the front of ``stream``.

    Raises:
        TruncatedStreamError: If fewer than 32+L bits are available
    """
    return FramedPayload.parse(stream).payload


def cipher_to_bits(cipher: CipherBlockSeq) -> BitString:
    """
    Serialize blocks in |n| bits each, followed by a 32-bit plaintext-length trailer.

    Raises:
        FrameOverflowError: If the result would reach 2**32 bits
    """
    total = len(cipher.blocks) * cipher.modulus_bits + HEADER_BITS
    if total > MAX_FIELD_VALUE:
        raise FrameOverflowError(f"Cipher stream of {total} bits is too long", length=total)
    if cipher.plaintext_bit_len > MAX_FIELD_VALUE:
        raise FrameOverflowError(
            f"Plaintext length {cipher.plaintext_bit_len} does not fit the trailer",
            length=cipher.plaintext_bit_len,
        )

    parts = [BitString.from_int(block, cipher.modulus_bits) for block in cipher.blocks]
    parts.append(BitString.from_int(cipher.plaintext_bit_len, HEADER_BITS))
    return concat(parts)


def bits_to_cipher(bits: BitString, modulus_bits: int) -> CipherBlockSeq:
    """
    Inverse of :func:`cipher_to_bits`.

    Raises:
        MalformedStreamError: If the length is not 32 plus a multiple of ``modulus_bits``
        LengthFieldInvalidError: If the trailer exceeds what the blocks can hold
    """
    if modulus_bits < 1:
        raise ValueError(f"modulus_bits must be positive, got {modulus_bits}")
    body = bits.length - HEADER_BITS
    if body < 0 or body % modulus_bits:
        raise MalformedStreamError(
            f"Stream of {bits.length} bits is not {HEADER_BITS} plus a multiple of {modulus_bits}"
        )

    blocks = tuple(chunk.to_int() for chunk in bits[:body].chunks(modulus_bits))
    plaintext_bit_len = bits[body:].to_int()
    maximum = len(blocks) * (modulus_bits - 1)
    if plaintext_bit_len > maximum:
        raise LengthFieldInvalidError(
            f"Trailer declares {plaintext_bit_len} plaintext bits "
            f"but blocks hold at most {maximum}",
            declared=plaintext_bit_len,
            maximum=maximum,
        )
    return CipherBlockSeq(
        blocks=blocks, modulus_bits=modulus_bits, plaintext_bit_len=plaintext_bit_len
    )
