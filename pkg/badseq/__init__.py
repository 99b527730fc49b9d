import logging
import sys

from .config import config

__version__ = "1.0.0"

log = logging.getLogger(__name__)
# Library use stays silent unless the caller configures logging; the CLI
# calls configure_logging() itself.
log.addHandler(logging.NullHandler())

# Lengths and indices run to thousands of digits past d = 26; str(int) and
# int(str) must not refuse them.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)


def get_config(config_name: str = "default"):
    """
    Config lookup.

    Usage:
        cfg = get_config()            # defaults
        cfg = get_config("testing")   # small budgets for the test suite
    """
    try:
        return config[config_name]
    except KeyError:
        raise ValueError(f"unknown config {config_name!r}; expected one of {sorted(config)}") from None


def configure_logging(verbosity: int = 0, config_name: str = "default") -> None:
    """stderr logging; -v for INFO, -vv for DEBUG."""
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, get_config(config_name).LOG_LEVEL)
    logging.basicConfig(level=level, format="%(asctime)s - %(levelname)s - %(name)s - %(message)s")
