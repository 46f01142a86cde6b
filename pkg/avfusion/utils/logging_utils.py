# File: avfusion/utils/logging_utils.py
# 📝 Structured Logging Setup

import logging
import sys

import structlog

_configured = False


def configure_logging(level='INFO', fmt='console', force=False):
    """Configure structlog for the process (idempotent unless forced)."""
    global _configured
    if _configured and not force:
        return

    numeric_level = logging.getLevelName(str(level).upper())
    if not isinstance(numeric_level, int):
        numeric_level = logging.INFO

    if fmt == 'json':
        renderer = structlog.processors.JSONRenderer(sort_keys=True)
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=False)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt='iso', utc=True),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric_level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )
    _configured = True
