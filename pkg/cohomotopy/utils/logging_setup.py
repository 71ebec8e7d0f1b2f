# cohomotopy\cohomotopy\utils\logging_setup.py

import logging

import click

LOG_FORMAT = "%(name)s:%(levelname)s:%(message)s"


class ClickEchoHandler(logging.Handler):
    """Writes records to whatever stderr click sees at emit time."""

    def emit(self, record: logging.LogRecord):
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


def configure_logging(verbosity: int = 0) -> logging.Logger:
    """Attach one handler to the package logger; repeated calls reuse it."""
    logger = logging.getLogger("cohomotopy")
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logger.setLevel(level)
    if not any(isinstance(h, ClickEchoHandler) for h in logger.handlers):
        handler = ClickEchoHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    return logger
