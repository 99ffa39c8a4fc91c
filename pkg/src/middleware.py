import logging
import sys
import time
import traceback
from typing import Callable

from colorlog import ColoredFormatter

from src.config import LOG_FILE, LOG_LEVEL


# Formatter for console
console_formatter = ColoredFormatter(
    "%(log_color)s%(asctime)s - %(levelname)s - %(message)s",
    log_colors={
        'DEBUG': 'cyan',
        'INFO': 'green',
        'WARNING': 'yellow',
        'ERROR': 'red',
        'CRITICAL': 'bold_red',
    },
)

# Formatter for file (no color)
file_formatter = logging.Formatter(
    "%(asctime)s - %(levelname)s - %(message)s"
)

logger = logging.getLogger("fgsp6.middleware")


def setup_logging(level: str = LOG_LEVEL, log_file: str = LOG_FILE) -> logging.Logger:
    """Attach the console (and optional file) handlers to the ``fgsp6`` logger tree once."""
    root = logging.getLogger("fgsp6")
    root.setLevel(getattr(logging, level, logging.WARNING))
    if root.handlers:
        return root

    # stdout carries command output only
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(console_formatter)
    root.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(file_formatter)
        root.addHandler(file_handler)

    root.propagate = False
    return root


def get_exit_color(exit_code: int) -> str:
    if exit_code == 0:
        return "\033[92m"  # Green
    elif exit_code == 1:
        return "\033[91m"  # Red
    elif exit_code == 2:
        return "\033[93m"  # Yellow
    else:
        return "\033[0m"   # Default


def register_middleware(app):

    setup_logging()

    def log_commands(command_name: str, call_next: Callable[[], int]) -> int:
        start_time = time.time()
        try:
            exit_code = call_next()
        except Exception as exc:
            # domain exceptions are translated by the error registry one level up
            if app.errors.knows(exc):
                logger.warning(f"{command_name} - {type(exc).__name__}: {exc}")
                raise
            logger.error(f"Unhandled exception in {command_name}: {exc}")
            logger.error(traceback.format_exc())
            print(f"error [internal_error]: {exc}", file=sys.stderr)
            return 1
        process_time = time.time() - start_time

        color = get_exit_color(exit_code)
        reset_color = "\033[0m"
        logger.info(
            f"{command_name} - Exit: {color}{exit_code}{reset_color} - Time: {process_time:.2f}s"
        )
        return exit_code

    app.add_middleware(log_commands)
