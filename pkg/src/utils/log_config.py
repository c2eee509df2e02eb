"""Logging setup for the command-line front end."""

import logging
import sys

_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(verbosity: int = 0, baseline: str = "WARNING") -> logging.Logger:
    """Attach a single stderr handler to the ``src`` logger.

    Args:
        verbosity: Count of ``-v`` flags; 1 selects INFO, 2 or more DEBUG.
        baseline: Level name used when no ``-v`` is given.

    Returns:
        The configured package logger.
    """
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.getLevelName(baseline)
        if not isinstance(level, int):
            level = logging.WARNING

    logger = logging.getLogger("src")
    for handler in list(logger.handlers):
        if getattr(handler, "_vhk", False):
            logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_FORMAT))
    handler._vhk = True
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger
