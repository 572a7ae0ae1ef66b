"""
Logging setup for the command line and Celery workers
"""

import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level="WARNING") -> logging.Logger:
    """
    Send records from every `src.*` logger to stderr

    Safe to call more than once; the handler is installed only the first time.
    """
    root = logging.getLogger("src")
    root.setLevel(level)
    if not any(getattr(h, "_enclose", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._enclose = True
        root.addHandler(handler)
    return root
