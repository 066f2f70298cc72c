"""
Logging for the spectral toolkit

All module loggers are children of one package logger, which owns the
handlers. Records go to stderr (stdout carries command output) and,
when LOG_FILE is set, to a file as well.
"""

import logging
import os
import sys
from typing import Optional, Union

from dotenv import load_dotenv

load_dotenv()

ROOT_LOGGER_NAME = "spiked_spectra"
DEFAULT_LOG_LEVEL = "INFO"
DEFAULT_LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

LOG_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


def resolve_level(level: Union[str, int, None] = None) -> int:
    """Numeric level from an int, a level name, or LOG_LEVEL"""
    if isinstance(level, int):
        return level
    name = (level or os.getenv("LOG_LEVEL", DEFAULT_LOG_LEVEL)).upper()
    return LOG_LEVELS.get(name, LOG_LEVELS[DEFAULT_LOG_LEVEL])


def setup_logging(
    log_level: Union[str, int, None] = None,
    log_file: Optional[str] = None,
    log_format: str = DEFAULT_LOG_FORMAT,
) -> logging.Logger:
    """(Re)configure the package logger; returns it"""
    root = logging.getLogger(ROOT_LOGGER_NAME)
    level = resolve_level(log_level)
    root.setLevel(level)
    root.propagate = False
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(log_format)
    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(formatter)
    root.addHandler(console)

    log_file = log_file or os.getenv("LOG_FILE")
    if log_file:
        try:
            directory = os.path.dirname(log_file)
            if directory:
                os.makedirs(directory, exist_ok=True)
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(formatter)
            root.addHandler(file_handler)
        except OSError as e:
            root.warning(f"Failed to open log file {log_file}: {e}")
    return root


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Logger ``spiked_spectra.<name>``, configuring the package logger on first use"""
    root = logging.getLogger(ROOT_LOGGER_NAME)
    if not root.handlers:
        setup_logging()
    if not name or name == ROOT_LOGGER_NAME:
        return root
    return root.getChild(name)
