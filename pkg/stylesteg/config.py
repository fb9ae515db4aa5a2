"""
Configuration management for stylesteg.

Defaults for the command-line tool come from, highest priority first:
- explicit overrides
- environment variables (STYLESTEG_*)
- a .env file
- built-in defaults
"""

import logging
import os
from pathlib import Path
from typing import Any

try:
    from dotenv import load_dotenv
except ImportError:
    load_dotenv = None

logger = logging.getLogger(__name__)

ENV_PREFIX = "STYLESTEG_"


class Config:
    """
    Configuration manager for stylesteg defaults.

    Example:
        config = Config()
        k = config.get_bits_per_anchor()
    """

    def __init__(self, env_file: str | None = ".env", load_env: bool = True):
        """
        Initialize configuration manager.

        Args:
            env_file: Path to .env file (default: .env)
            load_env: Whether to load the .env file (default: True)
        """
        self._config: dict[str, Any] = {}
        self._defaults: dict[str, Any] = {
            "bits_per_anchor": 8,
            "prime_bits": 256,
            "exponent_policy": "fixed",
            "miller_rabin_rounds": 40,
            "log_level": "WARNING",
        }

        if load_env and env_file and load_dotenv is not None:
            env_path = Path(env_file)
            if env_path.exists():
                load_dotenv(env_path)
                logger.debug(f"Loaded environment variables from {env_file}")
            else:
                logger.debug(f"No .env file found at {env_file}")

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value.

        Checks in order:
        1. Explicitly set value
        2. Environment variable STYLESTEG_<KEY>
        3. Built-in default, then ``default``

        Args:
            key: Configuration key
            default: Value returned when the key is unknown everywhere

        Returns:
            Configuration value
        """
        if key in self._config:
            return self._config[key]

        env_value = os.getenv(f"{ENV_PREFIX}{key.upper()}")
        if env_value is not None:
            return self._parse_env_value(env_value)

        return self._defaults.get(key, default)

    def set(self, key: str, value: Any) -> None:
        """
        Set a configuration value.

        Args:
            key: Configuration key
            value: Configuration value
        """
        self._config[key] = value

    def _parse_env_value(self, value: str) -> Any:
        """Parse an environment value to int when it looks like one."""
        try:
            return int(value)
        except ValueError:
            return value

    def _get_int(self, key: str) -> int:
        value = self.get(key)
        try:
            return int(value)
        except (TypeError, ValueError) as e:
            raise ValueError(f"Configuration value {key}={value!r} is not an integer") from e

    def get_bits_per_anchor(self) -> int:
        """Get whitespace characters written per anchor (k)."""
        return self._get_int("bits_per_anchor")

    def get_prime_bits(self) -> int:
        """Get bit length of each generated prime."""
        return self._get_int("prime_bits")

    def get_exponent_policy(self) -> str:
        """Get public exponent policy (fixed or random)."""
        return str(self.get("exponent_policy")).lower()

    def get_miller_rabin_rounds(self) -> int:
        """Get Miller-Rabin round count for prime generation."""
        return self._get_int("miller_rabin_rounds")

    def get_log_level(self) -> str:
        """Get logging level."""
        return str(self.get("log_level")).upper()

    def to_dict(self) -> dict[str, Any]:
        """
        Get the effective configuration as a dictionary.

        Returns:
            Dictionary of all known configuration values
        """
        return {key: self.get(key) for key in {**self._defaults, **self._config}}

    def __getitem__(self, key: str) -> Any:
        """Allow dictionary-style access."""
        return self.get(key)

    def __setitem__(self, key: str, value: Any) -> None:
        """Allow dictionary-style setting."""
        self.set(key, value)

    def __contains__(self, key: str) -> bool:
        """Check if a key is known."""
        return key in self._config or key in self._defaults


def load_config(env_file: str | None = ".env", **overrides: Any) -> Config:
    """
    Convenience function to load configuration.

    Args:
        env_file: Path to .env file
        **overrides: Configuration overrides

    Returns:
        Config instance

    Example:
        config = load_config(bits_per_anchor=4)
        k = config.get_bits_per_anchor()
    """
    config = Config(env_file=env_file)

    for key, value in overrides.items():
        config.set(key, value)

    return config
