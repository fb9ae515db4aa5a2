"""
Shared fixtures for the stylesteg test suite.
"""

import logging
from pathlib import Path

import pytest
from hypothesis import settings

from stylesteg.rsa import RsaKeyPair, build_keypair, generate_keypair

DATA_DIR = Path(__file__).parent / "data"

# pure-Python RSA: no per-example deadline
settings.register_profile("stylesteg", deadline=None, max_examples=100)
settings.load_profile("stylesteg")


@pytest.fixture(autouse=True)
def restore_root_logger():
    """setup_logging replaces root handlers; put the originals back after each test."""
    root = logging.getLogger()
    handlers = list(root.handlers)
    level = root.level
    package_level = logging.getLogger("stylesteg").level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
    logging.getLogger("stylesteg").setLevel(package_level)


@pytest.fixture
def site_css() -> bytes:
    """A small real-world stylesheet with 14 line-final semicolons."""
    return (DATA_DIR / "site.css").read_bytes()


@pytest.fixture
def site_css_path() -> Path:
    return DATA_DIR / "site.css"


@pytest.fixture(scope="session")
def tiny_keypair() -> RsaKeyPair:
    """p=19, q=29: a 10-bit modulus, one byte per block."""
    return build_keypair(19, 29)


@pytest.fixture(scope="session")
def textbook_keypair() -> RsaKeyPair:
    """p=61, q=53, e=17: n=3233, d=2753."""
    return build_keypair(61, 53, e=17)


@pytest.fixture(scope="session")
def small_keypair() -> RsaKeyPair:
    """Seeded keypair with 32-bit primes."""
    return generate_keypair(32, rng_seed=1234)
