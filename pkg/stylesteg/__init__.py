"""
stylesteg - RSA-encrypted messages hidden in CSS end-of-line whitespace

The sender encrypts a message with the receiver's public key and writes the
ciphertext as SPACE (0) / TAB (1) runs after line-final semicolons of a
stylesheet. The receiver reads the runs back and decrypts them.

Example:
    from stylesteg import StegoParams, embed_message, extract_message, generate_keypair

    keys = generate_keypair(64, rng_seed=7)
    stego, report = embed_message(css_bytes, b"hi", keys.public, StegoParams(8))
    assert extract_message(stego, keys.private, StegoParams(8)) == b"hi"

Textbook RSA is deterministic and unpadded; do not rely on it for real secrecy.
"""

__version__ = "0.1.0"

from stylesteg.bitstream import (
    BitString,
    FramedPayload,
    WhitespaceRun,
    bits_to_cipher,
    bits_to_whitespace,
    cipher_to_bits,
    frame,
    unframe,
    whitespace_to_bits,
)
from stylesteg.config import Config, load_config
from stylesteg.css import (
    Anchor,
    CssDocument,
    StegoParams,
    canonicalize,
    capacity,
    embed_bits,
    extract_bits,
    is_visually_equivalent,
    scan,
    strip_anchor_runs,
)
from stylesteg.errors import (
    BlockOutOfRangeError,
    CapacityExceededError,
    ChannelError,
    CryptoError,
    ForeignCharacterError,
    FrameOverflowError,
    FramingError,
    InvalidKeyError,
    KeyFileError,
    KeyTooSmallError,
    LengthFieldInvalidError,
    LengthMismatchError,
    MalformedStreamError,
    ModulusMismatchError,
    StegoError,
    TruncatedStreamError,
)
from stylesteg.logging import get_logger, setup_logging
from stylesteg.pipeline import EmbedReport, embed_message, extract_message, max_message_bytes
from stylesteg.rsa import (
    CipherBlockSeq,
    ExponentPolicy,
    RsaKeyPair,
    RsaPrivateKey,
    RsaPublicKey,
    build_keypair,
    decrypt,
    encrypt,
    generate_keypair,
    generate_primes,
    modpow,
)

# Define public API
__all__ = [
    # Version
    "__version__",
    # RSA
    "RsaPublicKey",
    "RsaPrivateKey",
    "RsaKeyPair",
    "CipherBlockSeq",
    "ExponentPolicy",
    "generate_primes",
    "generate_keypair",
    "build_keypair",
    "encrypt",
    "decrypt",
    "modpow",
    # Bitstream
    "BitString",
    "WhitespaceRun",
    "FramedPayload",
    "cipher_to_bits",
    "bits_to_cipher",
    "bits_to_whitespace",
    "whitespace_to_bits",
    "frame",
    "unframe",
    # CSS channel
    "Anchor",
    "CssDocument",
    "StegoParams",
    "scan",
    "canonicalize",
    "capacity",
    "embed_bits",
    "extract_bits",
    "strip_anchor_runs",
    "is_visually_equivalent",
    # Pipeline
    "EmbedReport",
    "embed_message",
    "extract_message",
    "max_message_bytes",
    # Config
    "Config",
    "load_config",
    # Logging
    "setup_logging",
    "get_logger",
    # Errors
    "StegoError",
    "ChannelError",
    "FramingError",
    "CryptoError",
    "ForeignCharacterError",
    "CapacityExceededError",
    "TruncatedStreamError",
    "MalformedStreamError",
    "LengthFieldInvalidError",
    "FrameOverflowError",
    "KeyTooSmallError",
    "BlockOutOfRangeError",
    "LengthMismatchError",
    "ModulusMismatchError",
    "InvalidKeyError",
    "KeyFileError",
]
