"""
Command-line interface for stylesteg using Typer.

Provides commands for:
- Generating receiver keypairs
- Embedding encrypted messages into stylesheets
- Extracting and decrypting them
- Reporting capacity and inspecting hidden runs

Data (stego CSS, recovered messages) goes to stdout or --out; every
diagnostic goes to stderr. Exit codes: 0 success, 1 domain error, 2 usage error.
"""

import logging
from collections.abc import Callable
from pathlib import Path
from typing import TypeVar

import typer
from rich.console import Console
from rich.markup import escape

from stylesteg.bitstream import HEADER_BITS, SPACE, FramedPayload, concat
from stylesteg.config import Config, load_config
from stylesteg.css.codec import (
    StegoParams,
    anchor_runs,
    capacity,
    channel_bits,
    is_visually_equivalent,
)
from stylesteg.css.scanner import scan
from stylesteg.errors import CapacityExceededError, StegoError
from stylesteg.logging import setup_logging
from stylesteg.pipeline import embed_message, extract_message, max_message_bytes
from stylesteg.rsa.cipher import MIN_MODULUS_BITS
from stylesteg.rsa.keyfile import read_private_key, read_public_key, write_keypair
from stylesteg.rsa.keys import MIN_PRIME_BITS, ExponentPolicy, generate_keypair

logger = logging.getLogger(__name__)

T = TypeVar("T")

app = typer.Typer(
    name="stylesteg",
    help="Hide RSA-encrypted messages in CSS end-of-line whitespace.",
    add_completion=False,
    no_args_is_help=True,
)
console = Console(highlight=False, soft_wrap=True)
err_console = Console(stderr=True, highlight=False, soft_wrap=True)

SPACE_GLYPH = "·"
TAB_GLYPH = "→"
STDIO = "-"


def _config() -> Config:
    return load_config()


def _config_value(getter: Callable[[], T], param_hint: str) -> T:
    """Read a configured default, reporting bad STYLESTEG_* values as usage errors."""
    try:
        return getter()
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint=param_hint) from e


def _resolve_params(k: int | None) -> StegoParams:
    if k is None:
        k = _config_value(_config().get_bits_per_anchor, "--k")
    try:
        return StegoParams(bits_per_anchor=k)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--k") from e


def _read_input(path: str) -> bytes:
    if path == STDIO:
        return typer.get_binary_stream("stdin").read()
    return Path(path).read_bytes()


def _write_output(path: str, data: bytes) -> None:
    if path == STDIO:
        stream = typer.get_binary_stream("stdout")
        stream.write(data)
        stream.flush()
    else:
        Path(path).write_bytes(data)


def _fail(error: Exception) -> typer.Exit:
    """Report a domain error on stderr and return the exit to raise."""
    if isinstance(error, StegoError):
        err_console.print(f"[red]Error:[/red] {error.layer} layer: {escape(error.message)}")
    else:
        err_console.print(f"[red]Error:[/red] {escape(str(error))}")
    return typer.Exit(code=1)


@app.callback()
def configure(
    log_level: str | None = typer.Option(
        None, "--log-level", help="Logging level (default: STYLESTEG_LOG_LEVEL or WARNING)"
    ),
):
    """Hide RSA-encrypted messages in CSS end-of-line whitespace."""
    setup_logging(level=log_level or _config().get_log_level())


@app.command()
def keygen(
    out: str = typer.Option(
        ..., "--out", "-o", help="Key file prefix: writes <out>.pub and <out>.priv"
    ),
    bits: int | None = typer.Option(
        None, "--bits", min=MIN_PRIME_BITS, help="Bits per prime (default: 256)"
    ),
    seed: int | None = typer.Option(None, "--seed", help="Seed for reproducible keys"),
    exponent: ExponentPolicy | None = typer.Option(
        None, "--exponent", case_sensitive=False, help="Public exponent policy: fixed or random"
    ),
    show_params: bool = typer.Option(
        False, "--show-params", help="Print p, q, phi, e and d to stderr"
    ),
):
    """
    Generate a receiver keypair.

    Examples:
        stylesteg keygen --out receiver
        stylesteg keygen --bits 64 --seed 7 --out k
    """
    config = _config()
    if bits is None:
        bits = _config_value(config.get_prime_bits, "--bits")
        if bits < MIN_PRIME_BITS:
            raise typer.BadParameter(f"must be at least {MIN_PRIME_BITS}", param_hint="--bits")
    try:
        policy = exponent or ExponentPolicy(config.get_exponent_policy())
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--exponent") from e
    rounds = _config_value(config.get_miller_rabin_rounds, "STYLESTEG_MILLER_RABIN_ROUNDS")
    if rounds < 1:
        raise typer.BadParameter("must be at least 1", param_hint="STYLESTEG_MILLER_RABIN_ROUNDS")

    try:
        keypair = generate_keypair(bits, exponent_policy=policy, rng_seed=seed, rounds=rounds)
        pub_path, priv_path = write_keypair(keypair, out)
    except (StegoError, OSError) as e:
        raise _fail(e) from e

    console.print(f"modulus: {keypair.n.bit_length()} bits")
    console.print(f"public key: {pub_path}")
    console.print(f"private key: {priv_path}")
    if show_params:
        err_console.print(f"p = {keypair.p}")
        err_console.print(f"q = {keypair.q}")
        err_console.print(f"phi = {keypair.phi}")
        err_console.print(f"e = {keypair.public.e}")
        err_console.print(f"d = {keypair.private.d}")


@app.command()
def embed(
    cover: str = typer.Argument(..., help="Cover stylesheet"),
    message: str = typer.Argument(STDIO, help="Message file, or - for stdin"),
    key: str = typer.Option(..., "--key", help="Receiver's public key file"),
    out: str = typer.Option(STDIO, "--out", "-o", help="Stego stylesheet, or - for stdout"),
    k: int | None = typer.Option(
        None, "--k", min=1, max=64, help="Whitespace characters per anchor (default: 8)"
    ),
):
    """
    Encrypt a message and hide it in a stylesheet.

    Example:
        stylesteg embed style.css secret.txt --key receiver.pub --out stego.css
    """
    params = _resolve_params(k)
    try:
        pub = read_public_key(key)
        cover_bytes = _read_input(cover)
        message_bytes = _read_input(message)
        stego, report = embed_message(cover_bytes, message_bytes, pub, params)
        _write_output(out, stego)
    except CapacityExceededError as e:
        err_console.print(
            f"[red]Error:[/red] channel layer: message needs {e.required_bits} channel bits, "
            f"cover offers {e.available_bits}"
        )
        raise typer.Exit(code=1) from e
    except (StegoError, OSError) as e:
        raise _fail(e) from e

    err_console.print(
        f"anchors used: {report.anchors_used}/{report.anchors_total}, "
        f"payload bits: {report.payload_bits}/{report.capacity_bits}"
    )


@app.command()
def extract(
    stego: str = typer.Argument(STDIO, help="Stego stylesheet, or - for stdin"),
    key: str = typer.Option(..., "--key", help="Receiver's private key file"),
    out: str = typer.Option(STDIO, "--out", "-o", help="Recovered message, or - for stdout"),
    k: int | None = typer.Option(
        None, "--k", min=1, max=64, help="Whitespace characters per anchor (default: 8)"
    ),
):
    """
    Extract and decrypt a hidden message.

    Example:
        stylesteg extract stego.css --key receiver.priv --out secret.txt
    """
    params = _resolve_params(k)
    try:
        priv = read_private_key(key)
        message_bytes = extract_message(_read_input(stego), priv, params)
        _write_output(out, message_bytes)
    except (StegoError, OSError) as e:
        raise _fail(e) from e


@app.command("capacity")
def capacity_command(
    cover: str = typer.Argument(..., help="Cover stylesheet"),
    k: int | None = typer.Option(
        None, "--k", min=1, max=64, help="Whitespace characters per anchor (default: 8)"
    ),
    modulus_bits: int | None = typer.Option(
        None,
        "--modulus-bits",
        min=MIN_MODULUS_BITS,
        help="Also report the largest message for a key of this modulus size",
    ),
):
    """
    Report how much a stylesheet can carry.

    Example:
        stylesteg capacity style.css --k 8 --modulus-bits 512
    """
    params = _resolve_params(k)
    try:
        doc = scan(_read_input(cover))
    except OSError as e:
        raise _fail(e) from e

    console.print(f"anchors: {len(doc.anchors)}")
    console.print(f"channel bits: {channel_bits(doc, params)}")
    console.print(f"payload bits: {capacity(doc, params)}")
    if modulus_bits is not None:
        console.print(
            f"max message bytes: {max_message_bytes(doc, params, modulus_bits)} "
            f"({modulus_bits}-bit modulus)"
        )


def _glyphs(run: bytes) -> str:
    return "".join(SPACE_GLYPH if char == SPACE else TAB_GLYPH for char in run)


@app.command()
def inspect(
    file: str = typer.Argument(..., help="Stylesheet to inspect, or - for stdin"),
):
    """
    Show every anchor and the whitespace run it carries (· space, → tab).

    Example:
        stylesteg inspect stego.css
    """
    try:
        runs = anchor_runs(_read_input(file))
    except (StegoError, OSError) as e:
        raise _fail(e) from e

    for item in runs:
        console.print(f"line {item.line}: [{_glyphs(item.run.chars)}] {item.bits}", markup=False)
    stream = concat(item.bits for item in runs)

    console.print(f"anchors: {len(runs)}")
    console.print(f"bits: {stream.length}")
    if stream.length >= HEADER_BITS:
        declared = stream[:HEADER_BITS].to_int()
        console.print(f"header: {declared} payload bits announced")
        try:
            FramedPayload.parse(stream)
        except StegoError as e:
            console.print(f"frame: incomplete ({escape(e.message)})")
        else:
            console.print("frame: complete")


@app.command()
def compare(
    cover: str = typer.Argument(..., help="Original stylesheet"),
    stego: str = typer.Argument(..., help="Stylesheet suspected to carry data"),
):
    """
    Check that two stylesheets differ only in end-of-line anchor whitespace.

    Exits 0 when they do, 1 otherwise.
    """
    try:
        equivalent = is_visually_equivalent(_read_input(cover), _read_input(stego))
    except OSError as e:
        raise _fail(e) from e

    if equivalent:
        console.print("equivalent: only anchor whitespace differs")
    else:
        console.print("different: content outside anchor runs changed")
        raise typer.Exit(code=1)


@app.command()
def version():
    """Show stylesteg version information."""
    from stylesteg import __version__

    console.print(f"stylesteg version: {__version__}")


def main():
    """Entry point for the CLI."""
    app()


if __name__ == "__main__":
    main()
