"""Command-line driver of the experiments.

Usage::

    fdcrack convergence --set h_list=[10,20,40] --set elements=["P1/P0"]
    fdcrack robustness --config runs.json --set workers=4
    fdcrack extend3d --set surface=crack.txt

"""
import argparse
import logging
import sys

from ..exceptions import ConfigurationError
from ..exceptions import ElementError
from ..exceptions import InvalidCrackError
from ..exceptions import MetricError
from ..exceptions import SolverError
from ..exceptions import SurfaceError
from .config import COMMANDS
from .config import load_config
from .controller import Controller


__all__ = ["main", "build_parser", "setup_logging", "EXIT_OK", "EXIT_CONFIG", "EXIT_NUMERIC"]


logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERIC = 2

ACTIONS = {
    "convergence": "convergence",
    "gamma-sweep": "gamma_sweep",
    "robustness": "robustness",
    "demo": "demo",
    "extend3d": "extend3d",
}

HELP = {
    "convergence": "errors and rates of the manufactured solution under mesh refinement",
    "gamma-sweep": "multiplier error over a grid of stabilization parameters",
    "robustness": "multiplier error over a family of crack positions or lengths",
    "demo": "pressurized crack in a rectangular block",
    "extend3d": "cone extension of a 3D crack surface",
}


def build_parser():
    parser = argparse.ArgumentParser(prog="fdcrack", description="Fictitious domain finite elements for cracks.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log warnings and errors only")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True
    for command in COMMANDS:
        sub = commands.add_parser(command, help=HELP[command])
        sub.add_argument("--config", metavar="PATH", help="JSON file with configuration sections")
        sub.add_argument("--set", dest="overrides", metavar="KEY=VALUE", action="append", default=[], help="override a configuration key")
        sub.add_argument("--output", metavar="PATH", help="output file")
    return parser


def setup_logging(verbose=False, quiet=False):
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter("[%(levelname)s] %(name)s: %(message)s"))
    root = logging.getLogger("compas_fdcrack")
    root.handlers[:] = [handler]
    root.setLevel(level)
    root.propagate = False


def main(argv=None):
    """Run a command and return its exit code.

    ``0`` on success, ``1`` on configuration or input file errors and ``2`` on
    numerical failures.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose, args.quiet)

    overrides = list(args.overrides)
    if args.output:
        overrides.append("output={}".format(args.output))
    try:
        settings = load_config(args.command, args.config, overrides)
        controller = Controller(settings)
        getattr(controller, ACTIONS[args.command])()
    except (ConfigurationError, ElementError, SurfaceError, ValueError, OSError) as e:
        logger.error("%s", e)
        return EXIT_CONFIG
    except (SolverError, MetricError, InvalidCrackError) as e:
        logger.error("%s", e)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
