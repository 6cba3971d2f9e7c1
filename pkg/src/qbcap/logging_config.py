"""
Logging Configuration for qbcap

Console logging with an optional rotating log file.
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from qbcap.config import LoggingConfig

DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DEFAULT_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logger(
    name: str = "qbcap",
    level: str = "INFO",
    log_to_file: bool = False,
    log_file: Optional[Path] = None,
    format_string: Optional[str] = None,
    date_format: Optional[str] = None,
) -> logging.Logger:
    """
    Set up a logger with a console handler and an optional file handler.

    Parameters
    ----------
    name : str
        Logger name (default: "qbcap"). Child loggers such as
        "qbcap.dynamics" propagate to it.
    level : str
        Logging level: DEBUG, INFO, WARNING, ERROR, CRITICAL
    log_to_file : bool
        Whether to also log to a file
    log_file : Path, optional
        Path to log file (required if log_to_file is True)
    format_string : str, optional
        Custom format string for log messages
    date_format : str, optional
        Custom date format string

    Returns
    -------
    logging.Logger
        Configured logger instance

    Examples
    --------
    >>> logger = setup_logger("qbcap", level="DEBUG")
    >>> logger.debug("substeps per sample: 8")
    """
    logger = logging.getLogger(name)
    numeric_level = getattr(logging, level.upper())
    logger.setLevel(numeric_level)

    # One console handler per logger, however often this is called
    logger.handlers.clear()

    formatter = logging.Formatter(
        format_string or DEFAULT_FORMAT, datefmt=date_format or DEFAULT_DATE_FORMAT
    )

    # stderr only; stdout carries reports and tables
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(numeric_level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_to_file:
        if log_file is None:
            raise ValueError("log_file must be specified when log_to_file is True")

        log_file = Path(log_file)
        log_file.parent.mkdir(parents=True, exist_ok=True)

        # 10MB per file, 5 backups
        file_handler = RotatingFileHandler(log_file, maxBytes=10 * 1024 * 1024, backupCount=5)
        file_handler.setLevel(numeric_level)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def configure_logging(config: "LoggingConfig", level: Optional[str] = None) -> logging.Logger:
    """
    Set up the package logger from a ``LoggingConfig``.

    Parameters
    ----------
    config : LoggingConfig
        Level, formats and optional log file
    level : str, optional
        Overrides ``config.level`` (the command line passes ``--log-level`` here)

    Returns
    -------
    logging.Logger
        The configured "qbcap" logger
    """
    return setup_logger(
        "qbcap",
        level=level or config.level,
        log_to_file=config.log_to_file,
        log_file=config.log_file,
        format_string=config.format,
        date_format=config.date_format,
    )


def get_logger(name: str = "qbcap") -> logging.Logger:
    """
    Get or create a logger instance.

    Parameters
    ----------
    name : str
        Logger name (default: "qbcap")

    Returns
    -------
    logging.Logger
        Logger instance

    Examples
    --------
    >>> logger = get_logger("qbcap.relations")
    >>> logger.info("Verifying thm1_entanglement")
    """
    return logging.getLogger(name)


class LoggerMixin:
    """
    Mixin class giving a ``qbcap.<ClassName>`` logger to any class.

    Examples
    --------
    >>> class Sweep(LoggerMixin):
    ...     def run(self):
    ...         self.logger.info("sweep started")
    """

    @property
    def logger(self) -> logging.Logger:
        """Get logger for this class."""
        if not hasattr(self, "_logger"):
            self._logger = get_logger(f"qbcap.{self.__class__.__name__}")
        return self._logger
