"""
Block encryption and decryption.

A message is read as a bit string (most significant bit first in each byte)
and cut into groups of |n|-1 bits; the last group is zero-padded on the right.
Each group m_i is encrypted as c_i = m_i^e mod n. The exact plaintext bit
length travels with the blocks so decryption can drop the padding.
"""

import logging
from dataclasses import dataclass

from stylesteg.errors import (
    BlockOutOfRangeError,
    KeyTooSmallError,
    LengthMismatchError,
    ModulusMismatchError,
)
from stylesteg.rsa.arith import modpow
from stylesteg.rsa.keys import RsaPrivateKey, RsaPublicKey

logger = logging.getLogger(__name__)

MIN_MODULUS_BITS = 9


@dataclass(frozen=True)
class CipherBlockSeq:
    """
    Ordered ciphertext blocks plus the metadata needed to undo the grouping.

    Attributes:
        blocks: Encrypted groups c_i, in message order
        modulus_bits: |n|, the bit length of the modulus
        plaintext_bit_len: Bit length of the message before padding
    """

    blocks: tuple[int, ...]
    modulus_bits: int
    plaintext_bit_len: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if self.modulus_bits < 1:
            raise ValueError(f"modulus_bits must be positive, got {self.modulus_bits}")
        if self.plaintext_bit_len < 0:
            raise ValueError("plaintext_bit_len must be non-negative")
        if any(block < 0 for block in self.blocks):
            raise ValueError("cipher blocks must be non-negative")

    @property
    def group_bits(self) -> int:
        """Plaintext bits per block (|n|-1)."""
        return self.modulus_bits - 1

    @property
    def max_plaintext_bits(self) -> int:
        return len(self.blocks) * self.group_bits


def _check_modulus(n: int) -> int:
    modulus_bits = n.bit_length()
    if modulus_bits < MIN_MODULUS_BITS:
        raise KeyTooSmallError(
            f"Modulus has {modulus_bits} bits; at least {MIN_MODULUS_BITS} are needed",
            modulus_bits=modulus_bits,
        )
    return modulus_bits


def split_groups(message: bytes, group_bits: int) -> list[int]:
    """
    Cut ``message`` into ``group_bits``-wide big-endian integers.

    The final group is zero-padded on the right. An empty message gives no groups.
    """
    total_bits = 8 * len(message)
    if total_bits == 0:
        return []

    count = -(-total_bits // group_bits)
    value = int.from_bytes(message, "big") << (count * group_bits - total_bits)
    mask = (1 << group_bits) - 1
    return [(value >> (group_bits * (count - 1 - i))) & mask for i in range(count)]


def encrypt(message: bytes, key: RsaPublicKey) -> CipherBlockSeq:
    """
    Encrypt ``message`` group by group under ``key``.

    Args:
        message: Plaintext bytes (may be empty)
        key: Public key with a modulus of at least 9 bits

    Returns:
        CipherBlockSeq with one block per |n|-1 bit group

    Raises:
        KeyTooSmallError: If |n| < 9
    """
    modulus_bits = _check_modulus(key.n)
    groups = split_groups(bytes(message), modulus_bits - 1)
    blocks = tuple(modpow(m, key.e, key.n) for m in groups)
    logger.debug(f"Encrypted {len(message)} bytes into {len(blocks)} blocks")
    return CipherBlockSeq(
        blocks=blocks,
        modulus_bits=modulus_bits,
        plaintext_bit_len=8 * len(message),
    )


def decrypt(cipher: CipherBlockSeq, key: RsaPrivateKey) -> bytes:
    """
    Decrypt every block and reassemble the original bytes.

    Raises:
        KeyTooSmallError: If |n| < 9
        ModulusMismatchError: If the cipher was built for a modulus of another width
        LengthMismatchError: If the plaintext length cannot come from these blocks
        BlockOutOfRangeError: If a block is >= n or decrypts to a group wider than |n|-1 bits
    """
    modulus_bits = _check_modulus(key.n)
    if cipher.modulus_bits != modulus_bits:
        raise ModulusMismatchError(
            f"Cipher uses {cipher.modulus_bits}-bit blocks "
            f"but the key modulus has {modulus_bits} bits",
            expected_bits=modulus_bits,
            actual_bits=cipher.modulus_bits,
        )

    group_bits = modulus_bits - 1
    maximum = cipher.max_plaintext_bits
    if cipher.plaintext_bit_len > maximum:
        raise LengthMismatchError(
            f"Plaintext length {cipher.plaintext_bit_len} exceeds the {maximum} bits "
            f"carried by {len(cipher.blocks)} blocks",
            declared=cipher.plaintext_bit_len,
            maximum=maximum,
        )
    if cipher.plaintext_bit_len % 8:
        raise LengthMismatchError(
            f"Plaintext length {cipher.plaintext_bit_len} is not a whole number of bytes",
            declared=cipher.plaintext_bit_len,
            maximum=maximum,
        )

    value = 0
    for index, block in enumerate(cipher.blocks):
        if block >= key.n:
            raise BlockOutOfRangeError(
                f"Block {index} is not below the modulus", index=index, value=block
            )
        group = modpow(block, key.d, key.n)
        if group >> group_bits:
            raise BlockOutOfRangeError(
                f"Block {index} decrypts to a value wider than {group_bits} bits",
                index=index,
                value=group,
            )
        value = (value << group_bits) | group

    value >>= maximum - cipher.plaintext_bit_len
    return value.to_bytes(cipher.plaintext_bit_len // 8, "big")
