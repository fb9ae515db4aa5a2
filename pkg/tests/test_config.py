"""
Tests for configuration loading.
"""

import pytest

from stylesteg.config import Config, load_config


@pytest.fixture(autouse=True)
def clean_environment(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    for name in (
        "STYLESTEG_BITS_PER_ANCHOR",
        "STYLESTEG_PRIME_BITS",
        "STYLESTEG_EXPONENT_POLICY",
        "STYLESTEG_MILLER_RABIN_ROUNDS",
        "STYLESTEG_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)


class TestDefaults:
    """Tests for built-in defaults."""

    def test_defaults(self):
        """Test every setting has a default."""
        config = Config(load_env=False)

        assert config.get_bits_per_anchor() == 8
        assert config.get_prime_bits() == 256
        assert config.get_exponent_policy() == "fixed"
        assert config.get_miller_rabin_rounds() == 40
        assert config.get_log_level() == "WARNING"

    def test_unknown_key(self):
        """Test unknown keys fall back to the caller's default."""
        config = Config(load_env=False)
        assert config.get("missing") is None
        assert config.get("missing", "x") == "x"
        assert "missing" not in config
        assert "prime_bits" in config


class TestSources:
    """Tests for the override > environment > .env > default order."""

    def test_environment_overrides_default(self, monkeypatch):
        """Test STYLESTEG_* variables override defaults."""
        monkeypatch.setenv("STYLESTEG_BITS_PER_ANCHOR", "4")
        monkeypatch.setenv("STYLESTEG_EXPONENT_POLICY", "RANDOM")
        monkeypatch.setenv("STYLESTEG_LOG_LEVEL", "debug")
        config = Config(load_env=False)

        assert config.get_bits_per_anchor() == 4
        assert config.get_exponent_policy() == "random"
        assert config.get_log_level() == "DEBUG"

    def test_override_beats_environment(self, monkeypatch):
        """Test explicit overrides win over the environment."""
        monkeypatch.setenv("STYLESTEG_PRIME_BITS", "64")
        config = load_config(prime_bits=32)
        assert config.get_prime_bits() == 32

    def test_env_file(self, tmp_path, monkeypatch):
        """Test values are read from a .env file."""
        env_file = tmp_path / "custom.env"
        env_file.write_text("STYLESTEG_MILLER_RABIN_ROUNDS=12\n")
        # load_dotenv writes into os.environ; register it for cleanup
        monkeypatch.setenv("STYLESTEG_MILLER_RABIN_ROUNDS", "")
        monkeypatch.delenv("STYLESTEG_MILLER_RABIN_ROUNDS")

        config = Config(env_file=str(env_file))
        assert config.get_miller_rabin_rounds() == 12

    def test_environment_beats_env_file(self, tmp_path, monkeypatch):
        """Test a real environment variable is not replaced by .env."""
        (tmp_path / ".env").write_text("STYLESTEG_PRIME_BITS=16\n")
        monkeypatch.setenv("STYLESTEG_PRIME_BITS", "48")
        assert load_config().get_prime_bits() == 48

    def test_missing_env_file(self):
        """Test a missing .env file is not an error."""
        config = Config(env_file="does-not-exist.env")
        assert config.get_prime_bits() == 256


class TestAccess:
    """Tests for setting and reading values."""

    def test_set_and_item_access(self):
        """Test dictionary-style access."""
        config = Config(load_env=False)
        config["bits_per_anchor"] = 16

        assert config["bits_per_anchor"] == 16
        assert config.get_bits_per_anchor() == 16

    def test_integer_parsing(self, monkeypatch):
        """Test numeric environment values become ints."""
        monkeypatch.setenv("STYLESTEG_PRIME_BITS", "128")
        assert Config(load_env=False).get("prime_bits") == 128

    def test_non_integer_value(self, monkeypatch):
        """Test a non-numeric value for an integer setting raises ValueError."""
        monkeypatch.setenv("STYLESTEG_BITS_PER_ANCHOR", "eight")
        with pytest.raises(ValueError, match="bits_per_anchor"):
            Config(load_env=False).get_bits_per_anchor()

    def test_to_dict(self):
        """Test the effective configuration as a dict."""
        config = load_config(bits_per_anchor=2)
        values = config.to_dict()

        assert values["bits_per_anchor"] == 2
        assert values["prime_bits"] == 256
        assert set(values) == {
            "bits_per_anchor",
            "prime_bits",
            "exponent_policy",
            "miller_rabin_rounds",
            "log_level",
        }
