"""
Text key-file format.

    css-stego-key v1
    kind pub|priv
    n <decimal>
    e <decimal>        (pub)  /  d <decimal>  (priv)

Files end with a single newline.
"""

import logging
from pathlib import Path

from stylesteg.errors import InvalidKeyError, KeyFileError
from stylesteg.rsa.keys import RsaKeyPair, RsaPrivateKey, RsaPublicKey

logger = logging.getLogger(__name__)

KEY_FILE_MAGIC = "css-stego-key v1"
PUBLIC_SUFFIX = ".pub"
PRIVATE_SUFFIX = ".priv"


def dump_public_key(key: RsaPublicKey) -> str:
    """Render a public key in the key-file format."""
    return f"{KEY_FILE_MAGIC}\nkind pub\nn {key.n}\ne {key.e}\n"


def dump_private_key(key: RsaPrivateKey) -> str:
    """Render a private key in the key-file format."""
    return f"{KEY_FILE_MAGIC}\nkind priv\nn {key.n}\nd {key.d}\n"


def _field(line: str, name: str, path: str | None) -> int:
    parts = line.split(" ")
    if len(parts) != 2 or parts[0] != name:
        raise KeyFileError(f"Expected '{name} <decimal>', got {line!r}", path=path)
    if not (parts[1].isascii() and parts[1].isdigit()):
        raise KeyFileError(f"Field {name} is not a decimal integer", path=path)
    return int(parts[1])


def load_key(text: str, path: str | None = None) -> RsaPublicKey | RsaPrivateKey:
    """
    Parse a key file.

    Args:
        text: Key file contents
        path: Source path, used in error messages

    Returns:
        RsaPublicKey or RsaPrivateKey depending on the ``kind`` line

    Raises:
        KeyFileError: On unknown version, unknown kind, missing or malformed fields
    """
    if not text.endswith("\n"):
        raise KeyFileError("Key file must end with a newline", path=path)
    lines = text[:-1].split("\n")
    if lines[0].rstrip("\r") != KEY_FILE_MAGIC:
        raise KeyFileError(f"Unsupported key file header: {lines[0]!r}", path=path)
    lines = [line.rstrip("\r") for line in lines]
    if len(lines) != 4:
        raise KeyFileError(f"Key file must have 4 lines, found {len(lines)}", path=path)

    kind = lines[1]
    try:
        n = _field(lines[2], "n", path)
        if kind == "kind pub":
            return RsaPublicKey(e=_field(lines[3], "e", path), n=n)
        if kind == "kind priv":
            return RsaPrivateKey(d=_field(lines[3], "d", path), n=n)
    except InvalidKeyError as e:
        raise KeyFileError(f"Invalid key material: {e.message}", path=path) from e
    raise KeyFileError(f"Unknown key kind line: {kind!r}", path=path)


def _read(path: str | Path) -> RsaPublicKey | RsaPrivateKey:
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as e:
        raise KeyFileError(f"Cannot read key file {path}: {e}", path=str(path)) from e
    return load_key(text, path=str(path))


def read_public_key(path: str | Path) -> RsaPublicKey:
    """Read a public key file, rejecting private keys."""
    key = _read(path)
    if not isinstance(key, RsaPublicKey):
        raise KeyFileError(f"{path} holds a private key, expected a public key", path=str(path))
    return key


def read_private_key(path: str | Path) -> RsaPrivateKey:
    """Read a private key file, rejecting public keys."""
    key = _read(path)
    if not isinstance(key, RsaPrivateKey):
        raise KeyFileError(f"{path} holds a public key, expected a private key", path=str(path))
    return key


def write_keypair(keypair: RsaKeyPair, prefix: str | Path) -> tuple[Path, Path]:
    """
    Write ``<prefix>.pub`` and ``<prefix>.priv``.

    Returns:
        Paths of the public and private key files
    """
    pub_path = Path(f"{prefix}{PUBLIC_SUFFIX}")
    priv_path = Path(f"{prefix}{PRIVATE_SUFFIX}")
    pub_path.write_bytes(dump_public_key(keypair.public).encode("ascii"))
    priv_path.write_bytes(dump_private_key(keypair.private).encode("ascii"))
    logger.info(f"Wrote {pub_path} and {priv_path}")
    return pub_path, priv_path
