"""Structured logging configuration.

Console records go through tqdm.write so they do not tear the segment
progress bars. An optional log file receives the same records.
"""

import logging
import logging.config
from typing import Any

from tqdm import tqdm

from config.settings import get_settings

PACKAGES = ("groups", "census", "analytic", "verify", "store", "reports", "cli")


class TqdmHandler(logging.StreamHandler):
    def emit(self, record: logging.LogRecord) -> None:
        try:
            tqdm.write(self.format(record), file=self.stream)
        except Exception:
            self.handleError(record)


def build_logging_config(level: str, log_file: str | None = None) -> dict[str, Any]:
    # the console handler filters at level; loggers pass DEBUG through for the file
    logger_level = "DEBUG" if log_file else level
    handlers: dict[str, dict[str, Any]] = {
        "console": {
            "()": TqdmHandler,
            "stream": "ext://sys.stderr",
            "formatter": "standard",
            "level": level,
        },
    }
    if log_file:
        handlers["file"] = {
            "class": "logging.FileHandler",
            "filename": log_file,
            "encoding": "utf-8",
            "formatter": "standard",
            "level": "DEBUG",
        }
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {
                "format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s",
                "datefmt": "%Y-%m-%d %H:%M:%S",
            },
        },
        "handlers": handlers,
        "root": {"level": logger_level, "handlers": list(handlers)},
        "loggers": {
            **{name: {"level": logger_level} for name in PACKAGES},
            "sqlalchemy": {"level": "WARNING"},
        },
    }


def setup_logging(level: str | None = None) -> None:
    """Configure logging for the command-line tools.

    level overrides the configured one; DEBUG=true in the settings wins over
    the LOG_LEVEL setting.
    """
    settings = get_settings()
    if level is None:
        level = "DEBUG" if settings.debug else settings.log_level
    logging.config.dictConfig(build_logging_config(level.upper(), settings.log_file))
