"""
Tests for the text key-file format.
"""

import pytest

from stylesteg.errors import KeyFileError
from stylesteg.rsa.keyfile import (
    dump_private_key,
    dump_public_key,
    load_key,
    read_private_key,
    read_public_key,
    write_keypair,
)
from stylesteg.rsa.keys import RsaPrivateKey, RsaPublicKey


class TestDump:
    """Tests for rendering keys."""

    def test_public_key_layout(self, textbook_keypair):
        """Test the exact public key text."""
        text = dump_public_key(textbook_keypair.public)
        assert text == "css-stego-key v1\nkind pub\nn 3233\ne 17\n"

    def test_private_key_layout(self, textbook_keypair):
        """Test the exact private key text."""
        text = dump_private_key(textbook_keypair.private)
        assert text == "css-stego-key v1\nkind priv\nn 3233\nd 2753\n"


class TestLoadKey:
    """Tests for parsing key files."""

    def test_load_public(self):
        """Test parsing a public key."""
        key = load_key("css-stego-key v1\nkind pub\nn 3233\ne 17\n")
        assert key == RsaPublicKey(e=17, n=3233)

    def test_load_private(self):
        """Test parsing a private key."""
        key = load_key("css-stego-key v1\nkind priv\nn 3233\nd 2753\n")
        assert key == RsaPrivateKey(d=2753, n=3233)

    def test_crlf_tolerated(self):
        """Test keys saved with CRLF line endings still load."""
        key = load_key("css-stego-key v1\r\nkind pub\r\nn 3233\r\ne 17\r\n")
        assert key == RsaPublicKey(e=17, n=3233)

    def test_unknown_version(self):
        """Test an unknown header is rejected."""
        with pytest.raises(KeyFileError, match="header"):
            load_key("css-stego-key v2\nkind pub\nn 3233\ne 17\n")

    def test_unknown_kind(self):
        """Test an unknown kind is rejected."""
        with pytest.raises(KeyFileError, match="kind"):
            load_key("css-stego-key v1\nkind secret\nn 3233\ne 17\n")

    def test_missing_field(self):
        """Test a missing line is rejected."""
        with pytest.raises(KeyFileError, match="4 lines"):
            load_key("css-stego-key v1\nkind pub\nn 3233\n")

    def test_wrong_field_name(self):
        """Test a private exponent in a public key is rejected."""
        with pytest.raises(KeyFileError, match="e <decimal>"):
            load_key("css-stego-key v1\nkind pub\nn 3233\nd 2753\n")

    @pytest.mark.parametrize("value", ["-17", "0x11", "1.5", "", "١٧"])
    def test_non_decimal_value(self, value):
        """Test values must be plain ASCII decimal digits."""
        with pytest.raises(KeyFileError):
            load_key(f"css-stego-key v1\nkind pub\nn 3233\ne {value}\n")

    def test_missing_final_newline(self):
        """Test files must end with a newline."""
        with pytest.raises(KeyFileError, match="newline"):
            load_key("css-stego-key v1\nkind pub\nn 3233\ne 17")

    def test_invalid_key_material(self):
        """Test parsed values that violate key invariants are a key-file error."""
        with pytest.raises(KeyFileError, match="Invalid key material") as exc_info:
            load_key("css-stego-key v1\nkind pub\nn 3233\ne 1\n", path="bad.pub")
        assert exc_info.value.path == "bad.pub"
        assert exc_info.value.layer == "key"


class TestKeyFilesOnDisk:
    """Tests for reading and writing key files."""

    def test_write_and_read_keypair(self, tmp_path, textbook_keypair):
        """Test write_keypair produces files that read back."""
        pub_path, priv_path = write_keypair(textbook_keypair, tmp_path / "receiver")

        assert pub_path.name == "receiver.pub"
        assert priv_path.name == "receiver.priv"
        assert read_public_key(pub_path) == textbook_keypair.public
        assert read_private_key(priv_path) == textbook_keypair.private

    def test_written_bytes(self, tmp_path, textbook_keypair):
        """Test files are ASCII with a single trailing newline."""
        pub_path, _ = write_keypair(textbook_keypair, tmp_path / "k")
        assert pub_path.read_bytes() == b"css-stego-key v1\nkind pub\nn 3233\ne 17\n"

    def test_read_public_rejects_private(self, tmp_path, textbook_keypair):
        """Test a private key cannot be used where a public key is expected."""
        _, priv_path = write_keypair(textbook_keypair, tmp_path / "k")
        with pytest.raises(KeyFileError, match="expected a public key"):
            read_public_key(priv_path)

    def test_read_private_rejects_public(self, tmp_path, textbook_keypair):
        """Test a public key cannot be used where a private key is expected."""
        pub_path, _ = write_keypair(textbook_keypair, tmp_path / "k")
        with pytest.raises(KeyFileError, match="expected a private key"):
            read_private_key(pub_path)

    def test_missing_file(self, tmp_path):
        """Test an absent file is a key-file error."""
        with pytest.raises(KeyFileError, match="Cannot read"):
            read_public_key(tmp_path / "absent.pub")

    def test_binary_file(self, tmp_path):
        """Test non-ASCII content is a key-file error."""
        path = tmp_path / "binary.pub"
        path.write_bytes(b"\xff\xfe\x00")
        with pytest.raises(KeyFileError):
            read_public_key(path)
