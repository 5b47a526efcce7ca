import sys

from loguru import logger

from .settings import settings


def configure_logging(level: str | None = None, no_color: bool | None = None) -> None:
    """
    Install a single stderr sink for the application logger.

    Args:
        level: Minimum level name. Uses settings default if None.
        no_color: Disable ANSI colours. Follows NO_COLOR if None.
    """
    logger.remove()
    colorize = not (settings.NO_COLOR if no_color is None else no_color)
    logger.add(
        sys.stderr,
        level=(level or settings.LOG_LEVEL).upper(),
        colorize=colorize,
        format="<level>{level: <8}</level> | {message}",
    )
