"""
Structured error types for stylesteg.

Every failure a caller can trigger with untrusted input is one of these classes.
Each carries a ``layer`` naming where the corruption or misuse was detected:

- channel: the whitespace channel inside the stylesheet (runs, capacity, header)
- framing: the bit-level framing around the ciphertext
- crypto: RSA keys, blocks and recovered plaintext
- key: key files on disk
"""

from typing import Any


class StegoError(Exception):
    """
    Base class for all structured stylesteg failures.

    Attributes:
        message: Human-readable error message
        layer: Layer that detected the failure (channel, framing, crypto, key)
    """

    layer = "stego"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ChannelError(StegoError):
    """Raised when the whitespace channel cannot carry or yield a stream."""

    layer = "channel"


class FramingError(StegoError):
    """Raised when a bit stream does not follow the framing layout."""

    layer = "framing"


class CryptoError(StegoError):
    """Raised for RSA key, block, or plaintext length problems."""

    layer = "crypto"


class ForeignCharacterError(ChannelError):
    """
    Raised when a whitespace run contains something other than SPACE or TAB.

    Attributes:
        offset: Index of the offending character within the run
        char: The offending byte value
    """

    def __init__(self, message: str, offset: int | None = None, char: int | None = None):
        super().__init__(message)
        self.offset = offset
        self.char = char


class CapacityExceededError(ChannelError):
    """
    Raised when a stream needs more channel bits than the cover provides.

    Attributes:
        required_bits: Channel bits the stream needs (header included)
        available_bits: Channel bits the cover offers (anchors x bits per anchor)
        report: Optional EmbedReport describing the attempted embed
    """

    def __init__(
        self,
        message: str,
        required_bits: int = 0,
        available_bits: int = 0,
        report: Any | None = None,
    ):
        super().__init__(message)
        self.required_bits = required_bits
        self.available_bits = available_bits
        self.report = report


class TruncatedStreamError(ChannelError):
    """
    Raised when fewer bits were extracted than the frame header announces.

    Attributes:
        required_bits: Bits needed to read the header and the announced payload
        available_bits: Bits actually present
    """

    def __init__(self, message: str, required_bits: int = 0, available_bits: int = 0):
        super().__init__(message)
        self.required_bits = required_bits
        self.available_bits = available_bits


class MalformedStreamError(FramingError):
    """Raised when a ciphertext bit stream has an impossible length."""


class LengthFieldInvalidError(FramingError):
    """
    Raised when the plaintext length trailer exceeds what the blocks can hold.

    Attributes:
        declared: Plaintext bit length found in the trailer
        maximum: Largest plaintext bit length the blocks can carry
    """

    def __init__(self, message: str, declared: int = 0, maximum: int = 0):
        super().__init__(message)
        self.declared = declared
        self.maximum = maximum


class FrameOverflowError(FramingError):
    """
    Raised when a stream is too long for the 32-bit length fields.

    Attributes:
        length: The offending bit length
    """

    def __init__(self, message: str, length: int = 0):
        super().__init__(message)
        self.length = length


class KeyTooSmallError(CryptoError):
    """
    Raised when a modulus is too short to hold one byte per group.

    Attributes:
        modulus_bits: Bit length of the rejected modulus
    """

    def __init__(self, message: str, modulus_bits: int = 0):
        super().__init__(message)
        self.modulus_bits = modulus_bits


class BlockOutOfRangeError(CryptoError):
    """
    Raised when a cipher block or a decrypted group does not fit the key.

    Attributes:
        index: Position of the block in the sequence
        value: The offending integer
    """

    def __init__(self, message: str, index: int | None = None, value: int | None = None):
        super().__init__(message)
        self.index = index
        self.value = value


class LengthMismatchError(CryptoError):
    """
    Raised when the plaintext length cannot be recovered from the blocks.

    Attributes:
        declared: Plaintext bit length carried with the cipher
        maximum: Largest plaintext bit length the blocks can carry
    """

    def __init__(self, message: str, declared: int = 0, maximum: int = 0):
        super().__init__(message)
        self.declared = declared
        self.maximum = maximum


class ModulusMismatchError(CryptoError):
    """
    Raised when a cipher was produced under a modulus of a different width.

    Attributes:
        expected_bits: Block width implied by the key
        actual_bits: Block width recorded on the cipher
    """

    def __init__(self, message: str, expected_bits: int = 0, actual_bits: int = 0):
        super().__init__(message)
        self.expected_bits = expected_bits
        self.actual_bits = actual_bits


class InvalidKeyError(CryptoError):
    """Raised when key material violates the RSA key invariants."""


class KeyFileError(StegoError):
    """
    Raised when a key file cannot be read or parsed.

    Attributes:
        path: Path of the key file, if the key came from disk
    """

    layer = "key"

    def __init__(self, message: str, path: str | None = None):
        super().__init__(message)
        self.path = path
