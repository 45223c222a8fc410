import logging

from prefect.exceptions import MissingContextError
from prefect.logging import get_run_logger

PACKAGE_LOGGER_NAME = "cat_swarm_lab"


# Prefect run logger inside a flow or task, package logger everywhere else
def get_logger() -> logging.Logger:
    try:
        return get_run_logger()
    except MissingContextError:
        return logging.getLogger(PACKAGE_LOGGER_NAME)


def set_quiet(quiet: bool) -> None:
    level = logging.WARNING if quiet else logging.INFO
    for name in ("prefect", PACKAGE_LOGGER_NAME):
        logging.getLogger(name).setLevel(level)
