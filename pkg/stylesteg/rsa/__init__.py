"""
Textbook RSA for stylesteg.

Key generation, block encryption and decryption, and the text key-file format.
No padding scheme is applied: encryption is deterministic and not
semantically secure.
"""

from stylesteg.rsa.arith import egcd, is_probable_prime, modinv, modpow
from stylesteg.rsa.cipher import CipherBlockSeq, decrypt, encrypt
from stylesteg.rsa.keyfile import (
    dump_private_key,
    dump_public_key,
    load_key,
    read_private_key,
    read_public_key,
    write_keypair,
)
from stylesteg.rsa.keys import (
    ExponentPolicy,
    RsaKeyPair,
    RsaPrivateKey,
    RsaPublicKey,
    build_keypair,
    generate_keypair,
    generate_primes,
)

__all__ = [
    # Arithmetic
    "modpow",
    "egcd",
    "modinv",
    "is_probable_prime",
    # Keys
    "RsaPublicKey",
    "RsaPrivateKey",
    "RsaKeyPair",
    "ExponentPolicy",
    "generate_primes",
    "generate_keypair",
    "build_keypair",
    # Cipher
    "CipherBlockSeq",
    "encrypt",
    "decrypt",
    # Key files
    "dump_public_key",
    "dump_private_key",
    "load_key",
    "read_public_key",
    "read_private_key",
    "write_keypair",
]
