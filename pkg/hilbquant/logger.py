import logging

from .config import LOG_LEVEL

_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
_configured = False


def get_logger(name: str) -> logging.Logger:
    """Module logger; configures the package root handler on first use."""
    global _configured
    if not _configured:
        root = logging.getLogger('hilbquant')
        if not root.handlers:
            handler = logging.StreamHandler()
            handler.setFormatter(logging.Formatter(_FORMAT))
            root.addHandler(handler)
        root.setLevel(LOG_LEVEL.upper())
        _configured = True
    return logging.getLogger(name)
