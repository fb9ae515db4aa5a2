"""
Sender and receiver protocol.

Sender:   encrypt -> cipher_to_bits -> frame -> canonicalize + embed_bits
Receiver: extract_bits -> unframe -> bits_to_cipher -> decrypt

Both sides must agree on StegoParams; nothing about them travels in the channel.
"""

import logging
from dataclasses import dataclass

from stylesteg.bitstream import HEADER_BITS, bits_to_cipher, cipher_to_bits, frame, unframe
from stylesteg.css.codec import StegoParams, canonicalize, capacity, embed_bits, extract_bits
from stylesteg.css.scanner import CssDocument, scan
from stylesteg.errors import CapacityExceededError
from stylesteg.logging import log_calls
from stylesteg.rsa.cipher import MIN_MODULUS_BITS, decrypt, encrypt
from stylesteg.rsa.keys import RsaPrivateKey, RsaPublicKey

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EmbedReport:
    """
    Channel usage of one embed.

    Attributes:
        anchors_total: Anchors found in the canonicalized cover
        anchors_used: Anchors that received at least one whitespace character
        payload_bits: Ciphertext stream bits, excluding the 32-bit frame header
        capacity_bits: Payload bits the cover can carry at these parameters
    """

    anchors_total: int
    anchors_used: int
    payload_bits: int
    capacity_bits: int

    @property
    def stream_bits(self) -> int:
        """Channel bits written, frame header included."""
        return self.payload_bits + HEADER_BITS

    @property
    def fits(self) -> bool:
        return self.payload_bits <= self.capacity_bits and self.anchors_used <= self.anchors_total

    def to_dict(self) -> dict[str, int]:
        return {
            "anchors_total": self.anchors_total,
            "anchors_used": self.anchors_used,
            "payload_bits": self.payload_bits,
            "capacity_bits": self.capacity_bits,
        }


@log_calls
def embed_message(
    css_bytes: bytes,
    message: bytes,
    pub: RsaPublicKey,
    params: StegoParams | None = None,
) -> tuple[bytes, EmbedReport]:
    """
    Encrypt ``message`` and hide it in the stylesheet.

    Args:
        css_bytes: Cover stylesheet
        message: Secret message bytes
        pub: Receiver's public key
        params: Channel parameters (default k=8)

    Returns:
        Tuple of stego stylesheet bytes and the EmbedReport

    Raises:
        CapacityExceededError: If the framed ciphertext does not fit; ``report`` is attached
        KeyTooSmallError: If the modulus has fewer than 9 bits
    """
    params = params or StegoParams()
    doc = canonicalize(scan(css_bytes))
    payload = cipher_to_bits(encrypt(message, pub))
    stream = frame(payload)

    k = params.bits_per_anchor
    report = EmbedReport(
        anchors_total=len(doc.anchors),
        anchors_used=-(-stream.length // k),
        payload_bits=payload.length,
        capacity_bits=capacity(doc, params),
    )
    if not report.fits:
        raise CapacityExceededError(
            f"Message needs {stream.length} channel bits but the cover offers "
            f"{len(doc.anchors) * k} ({len(doc.anchors)} anchors x {k})",
            required_bits=stream.length,
            available_bits=len(doc.anchors) * k,
            report=report,
        )

    stego = embed_bits(doc, stream, params)
    logger.info(
        f"Embedded {len(message)} bytes: {report.anchors_used}/{report.anchors_total} anchors, "
        f"{report.payload_bits}/{report.capacity_bits} payload bits"
    )
    return stego, report


@log_calls
def extract_message(
    stego_bytes: bytes,
    priv: RsaPrivateKey,
    params: StegoParams | None = None,
) -> bytes:
    """
    Recover and decrypt a message hidden by :func:`embed_message`.

    Raises:
        TruncatedStreamError: Channel layer; the frame header or payload is incomplete
        MalformedStreamError: Framing layer; the payload is not whole blocks plus trailer
        LengthFieldInvalidError: Framing layer; the plaintext length trailer is impossible
        BlockOutOfRangeError: Crypto layer; a block does not fit the key
    """
    params = params or StegoParams()
    stream = extract_bits(stego_bytes, params)
    payload = unframe(stream)
    cipher = bits_to_cipher(payload, priv.modulus_bits)
    return decrypt(cipher, priv)


def required_channel_bits(message_len: int, modulus_bits: int) -> int:
    """Channel bits needed to embed ``message_len`` bytes under a ``modulus_bits`` key."""
    if modulus_bits < MIN_MODULUS_BITS:
        raise ValueError(f"modulus_bits must be at least {MIN_MODULUS_BITS}")
    groups = -(-8 * message_len // (modulus_bits - 1))
    return groups * modulus_bits + 2 * HEADER_BITS


def max_message_bytes(doc: CssDocument, params: StegoParams, modulus_bits: int) -> int:
    """
    Largest message, in bytes, that fits the cover under a key of ``modulus_bits`` bits.
    """
    if modulus_bits < MIN_MODULUS_BITS:
        raise ValueError(f"modulus_bits must be at least {MIN_MODULUS_BITS}")
    blocks = (len(doc.anchors) * params.bits_per_anchor - 2 * HEADER_BITS) // modulus_bits
    if blocks <= 0:
        return 0
    return blocks * (modulus_bits - 1) // 8
