"""Logging setup for the command line. Library modules only create
their loggers with ``logging.getLogger(__name__)`` and never install
handlers themselves

"""

import logging

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging(verbosity=0):
    """Installs a single stderr handler on the nodegames logger

    Parameters
    ----------
    verbosity: int
        0 logs warnings only, 1 adds info messages and 2 or more adds
        debug messages

    Returns
    -------
    logging.Logger
        The configured package logger

    """
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logger = logging.getLogger("nodegames")
    logger.setLevel(level)
    logger.handlers = []
    handler = logging.StreamHandler()
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    return logger
