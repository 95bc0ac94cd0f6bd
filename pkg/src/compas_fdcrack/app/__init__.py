"""
********************************************************************************
compas_fdcrack.app
********************************************************************************

.. currentmodule:: compas_fdcrack.app

Command-line driver: configuration, one controller action per command and
a pool of worker processes.

.. autosummary::
    :toctree: generated/

    Controller
    Worker
    WorkerPool
    load_config
    main

"""
from .config import CONFIG  # noqa: F401
from .config import COMMANDS  # noqa: F401
from .config import load_config  # noqa: F401
from .config import parse_override  # noqa: F401
from .config import parse_subdivisions  # noqa: F401
from .worker import Worker  # noqa: F401
from .worker import WorkerPool  # noqa: F401
from .controller import Controller  # noqa: F401
from .controller import write_rows  # noqa: F401
from .cli import main  # noqa: F401


__all__ = [
    "CONFIG",
    "COMMANDS",
    "load_config",
    "parse_override",
    "parse_subdivisions",
    "Worker",
    "WorkerPool",
    "Controller",
    "write_rows",
    "main",
]
