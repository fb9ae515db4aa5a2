"""
Integer arithmetic for textbook RSA: square-and-multiply exponentiation,
extended Euclid, modular inverse, and Miller-Rabin primality.
"""

import random

DEFAULT_MILLER_RABIN_ROUNDS = 40
TRIAL_DIVISION_LIMIT = 1000


def _primes_below(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


SMALL_PRIMES = _primes_below(TRIAL_DIVISION_LIMIT)


def modpow(base: int, exp: int, modulus: int) -> int:
    """
    Compute ``base ** exp % modulus`` by right-to-left square-and-multiply.

    Args:
        base: Non-negative base
        exp: Non-negative exponent
        modulus: Positive modulus

    Returns:
        The residue, always in ``[0, modulus)``
    """
    if modulus < 1:
        raise ValueError(f"modulus must be positive, got {modulus}")
    if base < 0 or exp < 0:
        raise ValueError("base and exponent must be non-negative")

    result = 1 % modulus
    square = base % modulus
    while exp:
        if exp & 1:
            result = (result * square) % modulus
        square = (square * square) % modulus
        exp >>= 1
    return result


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """
    Extended Euclidean algorithm.

    Returns:
        ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``
    """
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b != 0:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def modinv(a: int, modulus: int) -> int:
    """
    Least positive inverse of ``a`` modulo ``modulus``.

    Raises:
        ValueError: If ``a`` and ``modulus`` are not coprime
    """
    g, x, _ = egcd(a % modulus, modulus)
    if g != 1:
        raise ValueError(f"{a} has no inverse modulo {modulus} (gcd={g})")
    return x % modulus


def is_probable_prime(
    n: int,
    rounds: int = DEFAULT_MILLER_RABIN_ROUNDS,
    rng: random.Random | None = None,
) -> bool:
    """
    Primality test: trial division by every prime below 1000, then Miller-Rabin.

    Numbers below 1000**2 are decided exactly by the trial division alone.

    Args:
        n: Candidate
        rounds: Miller-Rabin rounds with random bases
        rng: Source of bases (a fresh system-seeded generator when omitted)

    Returns:
        True if ``n`` is prime with error probability at most 4**-rounds
    """
    if n < 2:
        return False
    for p in SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < TRIAL_DIVISION_LIMIT * TRIAL_DIVISION_LIMIT:
        return True

    rng = rng or random.Random()
    r, s = 0, n - 1
    while s % 2 == 0:
        r += 1
        s //= 2

    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = modpow(a, s, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = modpow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True
