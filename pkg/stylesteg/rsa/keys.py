"""
RSA key types, prime generation, and key generation.

Textbook RSA only: no padding, no blinding. Keys are immutable values.
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from math import gcd

from stylesteg.errors import InvalidKeyError
from stylesteg.logging import log_calls
from stylesteg.rsa.arith import DEFAULT_MILLER_RABIN_ROUNDS, is_probable_prime, modinv

logger = logging.getLogger(__name__)

MIN_PRIME_BITS = 8
FIXED_PUBLIC_EXPONENT = 65537


class ExponentPolicy(str, Enum):
    """How the public exponent e is chosen."""

    FIXED = "fixed"  # 65537 when admissible, else smallest odd coprime e
    RANDOM = "random"  # uniform odd e in (1, phi) until coprime


@dataclass(frozen=True)
class RsaPublicKey:
    """Public key (e, n)."""

    e: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 6:
            raise InvalidKeyError(f"Modulus must be at least 6, got {self.n}")
        if not 1 < self.e < self.n:
            raise InvalidKeyError(f"Public exponent must satisfy 1 < e < n, got e={self.e}")

    @property
    def modulus_bits(self) -> int:
        return self.n.bit_length()


@dataclass(frozen=True)
class RsaPrivateKey:
    """Private key (d, n)."""

    d: int = field(repr=False)
    n: int

    def __post_init__(self) -> None:
        if self.n < 6:
            raise InvalidKeyError(f"Modulus must be at least 6, got {self.n}")
        if not 1 < self.d < self.n:
            raise InvalidKeyError("Private exponent must satisfy 1 < d < n")

    @property
    def modulus_bits(self) -> int:
        return self.n.bit_length()


@dataclass(frozen=True)
class RsaKeyPair:
    """
    A full keypair with the primes and totient it was derived from.

    Invariants (checked on construction):
        p, q distinct primes with p*q == n; phi == (p-1)(q-1);
        gcd(e, phi) == 1; e*d mod phi == 1
    """

    public: RsaPublicKey
    private: RsaPrivateKey
    p: int = field(repr=False)
    q: int = field(repr=False)
    phi: int = field(repr=False)

    def __post_init__(self) -> None:
        n = self.public.n
        if self.private.n != n:
            raise InvalidKeyError("Public and private keys use different moduli")
        if self.p == self.q:
            raise InvalidKeyError("Primes must be distinct")
        if self.p * self.q != n:
            raise InvalidKeyError("p*q does not equal the modulus")
        if not (is_probable_prime(self.p) and is_probable_prime(self.q)):
            raise InvalidKeyError("p and q must both be prime")
        if self.phi != (self.p - 1) * (self.q - 1):
            raise InvalidKeyError("phi does not equal (p-1)(q-1)")
        if gcd(self.public.e, self.phi) != 1:
            raise InvalidKeyError("Public exponent is not coprime to phi")
        if (self.public.e * self.private.d) % self.phi != 1:
            raise InvalidKeyError("e*d mod phi != 1")

    @property
    def n(self) -> int:
        return self.public.n


def _random_prime(bit_len: int, rng: random.Random, rounds: int) -> int:
    top_bit = 1 << (bit_len - 1)
    attempts = 0
    while True:
        attempts += 1
        candidate = rng.getrandbits(bit_len) | top_bit | 1
        if is_probable_prime(candidate, rounds, rng):
            logger.debug(f"Found {bit_len}-bit prime after {attempts} candidates")
            return candidate


def _prime_pair(bit_len: int, rng: random.Random, rounds: int) -> tuple[int, int]:
    if bit_len < MIN_PRIME_BITS:
        raise ValueError(f"Prime bit length must be at least {MIN_PRIME_BITS}, got {bit_len}")

    p = _random_prime(bit_len, rng, rounds)
    q = _random_prime(bit_len, rng, rounds)
    while q == p:
        q = _random_prime(bit_len, rng, rounds)
    return p, q


def generate_primes(
    bit_len: int,
    rng_seed: int | None = None,
    rounds: int = DEFAULT_MILLER_RABIN_ROUNDS,
) -> tuple[int, int]:
    """
    Generate two distinct primes of exactly ``bit_len`` bits.

    Args:
        bit_len: Bits per prime (at least 8); the top bit is always set
        rng_seed: Seed for reproducible output; system entropy when None
        rounds: Miller-Rabin rounds per candidate

    Returns:
        Tuple ``(p, q)`` with ``p != q``
    """
    return _prime_pair(bit_len, random.Random(rng_seed), rounds)


def choose_public_exponent(
    phi: int,
    policy: ExponentPolicy = ExponentPolicy.FIXED,
    rng: random.Random | None = None,
) -> int:
    """
    Pick e with 1 < e < phi and gcd(e, phi) == 1.

    Under the fixed policy, 65537 is used when it is below phi and coprime to it;
    otherwise the smallest odd e >= 3 coprime to phi.
    """
    policy = ExponentPolicy(policy)
    if phi < 3:
        raise InvalidKeyError(f"phi={phi} admits no public exponent")

    if policy is ExponentPolicy.RANDOM:
        rng = rng or random.Random()
        while True:
            e = rng.randrange(3, phi, 2)
            if gcd(e, phi) == 1:
                return e

    if FIXED_PUBLIC_EXPONENT < phi and gcd(FIXED_PUBLIC_EXPONENT, phi) == 1:
        return FIXED_PUBLIC_EXPONENT
    for e in range(3, phi, 2):
        if gcd(e, phi) == 1:
            return e
    raise InvalidKeyError(f"phi={phi} admits no public exponent")


def build_keypair(
    p: int,
    q: int,
    e: int | None = None,
    exponent_policy: ExponentPolicy = ExponentPolicy.FIXED,
    rng: random.Random | None = None,
) -> RsaKeyPair:
    """
    Assemble a keypair from chosen primes.

    Args:
        p: First prime
        q: Second prime, distinct from p
        e: Public exponent; chosen by ``exponent_policy`` when None
        exponent_policy: Policy used when ``e`` is None
        rng: Randomness for the random exponent policy

    Returns:
        Validated RsaKeyPair

    Raises:
        InvalidKeyError: If the primes or exponent violate the key invariants

    Example:
        >>> pair = build_keypair(61, 53, e=17)
        >>> pair.private.d
        2753
    """
    if p == q:
        raise InvalidKeyError("Primes must be distinct")
    if not (is_probable_prime(p) and is_probable_prime(q)):
        raise InvalidKeyError(f"{p} and {q} must both be prime")

    n = p * q
    phi = (p - 1) * (q - 1)
    if e is None:
        e = choose_public_exponent(phi, exponent_policy, rng)
    if not 1 < e < phi or gcd(e, phi) != 1:
        raise InvalidKeyError(f"e={e} must satisfy 1 < e < phi and gcd(e, phi) == 1")

    d = modinv(e, phi)
    return RsaKeyPair(
        public=RsaPublicKey(e=e, n=n),
        private=RsaPrivateKey(d=d, n=n),
        p=p,
        q=q,
        phi=phi,
    )


@log_calls
def generate_keypair(
    bit_len_per_prime: int,
    exponent_policy: ExponentPolicy = ExponentPolicy.FIXED,
    rng_seed: int | None = None,
    rounds: int = DEFAULT_MILLER_RABIN_ROUNDS,
) -> RsaKeyPair:
    """
    Generate a textbook RSA keypair.

    Args:
        bit_len_per_prime: Bits per prime (at least 8)
        exponent_policy: fixed (65537 when admissible) or random
        rng_seed: Seed for reproducible keys; system entropy when None
        rounds: Miller-Rabin rounds per candidate

    Returns:
        RsaKeyPair; identical seeds and parameters give identical keypairs
    """
    rng = random.Random(rng_seed)
    p, q = _prime_pair(bit_len_per_prime, rng, rounds)
    pair = build_keypair(p, q, exponent_policy=exponent_policy, rng=rng)
    logger.info(f"Generated keypair with {pair.n.bit_length()}-bit modulus")
    return pair
