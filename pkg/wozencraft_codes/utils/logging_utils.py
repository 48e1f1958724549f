"""Logging setup for the CLI."""
import logging

from rich.console import Console
from rich.logging import RichHandler

LOGGER_NAME = "wozencraft_codes"


def setup_logging(verbose: bool = False, console: Console | None = None) -> logging.Logger:
    """Route package loggers through a RichHandler on stderr.

    ``verbose`` lowers the level to DEBUG; otherwise only warnings show.
    Calling it again replaces the previous handler.
    """
    logger = logging.getLogger(LOGGER_NAME)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = RichHandler(
        console=console or Console(stderr=True),
        show_time=False,
        show_path=verbose,
        markup=False,
    )
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    logger.propagate = False
    return logger
