"""
Centralized logging setup for stylesteg.

Console output goes to stderr: stdout is reserved for stego bytes and
recovered messages.
"""

import logging
import sys
import time
from collections.abc import Callable
from functools import wraps
from pathlib import Path
from typing import Any, TypeVar

F = TypeVar("F", bound=Callable[..., Any])


# ANSI color codes for terminal output
class LogColors:
    RESET = "\033[0m"
    RED = "\033[91m"
    YELLOW = "\033[93m"
    BLUE = "\033[94m"
    MAGENTA = "\033[95m"
    GRAY = "\033[90m"


class ColoredFormatter(logging.Formatter):
    """
    Formatter that adds colors to log levels in terminal output.
    """

    LEVEL_COLORS = {
        logging.DEBUG: LogColors.GRAY,
        logging.INFO: LogColors.BLUE,
        logging.WARNING: LogColors.YELLOW,
        logging.ERROR: LogColors.RED,
        logging.CRITICAL: LogColors.MAGENTA,
    }

    def format(self, record: logging.LogRecord) -> str:
        if record.levelno in self.LEVEL_COLORS:
            record = logging.makeLogRecord(record.__dict__)
            record.levelname = (
                f"{self.LEVEL_COLORS[record.levelno]}{record.levelname}{LogColors.RESET}"
            )

        return super().format(record)


def setup_logging(
    level: str = "WARNING",
    log_file: str | None = None,
    format_string: str | None = None,
    use_colors: bool = True,
) -> None:
    """
    Configure logging for stylesteg.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional file path to write logs to
        format_string: Custom format string for log messages
        use_colors: Whether to use colored output when stderr is a terminal

    Example:
        from stylesteg.logging import setup_logging

        setup_logging(level="DEBUG", log_file="stylesteg.log")
    """
    numeric_level = getattr(logging, level.upper(), logging.WARNING)

    if format_string is None:
        format_string = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    if use_colors and sys.stderr.isatty():
        console_formatter: logging.Formatter = ColoredFormatter(format_string)
    else:
        console_formatter = logging.Formatter(format_string)

    root_logger = logging.getLogger()
    root_logger.setLevel(numeric_level)
    root_logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(numeric_level)
    console_handler.setFormatter(console_formatter)
    root_logger.addHandler(console_handler)

    if log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(numeric_level)
        file_handler.setFormatter(logging.Formatter(format_string))
        root_logger.addHandler(file_handler)

    logging.getLogger("stylesteg").setLevel(numeric_level)


def get_logger(name: str, level: str | None = None) -> logging.Logger:
    """
    Get a logger instance for a specific module.

    Args:
        name: Name of the logger (typically __name__)
        level: Optional logging level override

    Returns:
        Logger instance
    """
    logger = logging.getLogger(name)

    if level:
        logger.setLevel(getattr(logging, level.upper(), logging.INFO))

    return logger


def log_calls(fn: F) -> F:
    """
    Log entry, success with elapsed time, and failures of a protocol operation.

    Argument values are never logged: they include messages and keys.

    Example:
        @log_calls
        def embed_message(...):
            ...
    """
    fn_logger = logging.getLogger(fn.__module__)

    @wraps(fn)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        start_time = time.perf_counter()
        fn_logger.debug(f"[CALL] {fn.__name__}")

        try:
            result = fn(*args, **kwargs)
        except Exception as e:
            elapsed = time.perf_counter() - start_time
            fn_logger.debug(f"[ERROR] {fn.__name__} - {type(e).__name__} - elapsed={elapsed:.3f}s")
            raise

        elapsed = time.perf_counter() - start_time
        fn_logger.debug(f"[SUCCESS] {fn.__name__} - elapsed={elapsed:.3f}s")
        return result

    return wrapper  # type: ignore[return-value]
