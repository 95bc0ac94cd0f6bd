import json
import logging
import os

from ..exceptions import ConfigurationError
from ..mesh import parse_couple


__all__ = ["CONFIG", "COMMANDS", "load_config", "parse_override", "parse_subdivisions"]


logger = logging.getLogger(__name__)


HERE = os.path.dirname(__file__)
CONFIG = os.path.join(HERE, "config.json")

COMMANDS = ("convergence", "gamma-sweep", "robustness", "demo", "extend3d")
SOLVERS = ("monolithic", "uzawa")
MODES = ("position", "length")


def _read(config):
    if isinstance(config, dict):
        return config
    try:
        with open(config, "r", encoding="utf-8") as f:
            return json.load(f)
    except (OSError, ValueError) as e:
        raise ConfigurationError("Cannot read the configuration file {}: {}".format(config, e))


def parse_override(text):
    """Split a ``key=value`` override; the value is read as JSON, or kept as a string.

    Examples
    --------
    >>> parse_override("h_list=[10, 20]")
    ('h_list', [10, 20])
    >>> parse_override("solver=uzawa")
    ('solver', 'uzawa')

    """
    key, sep, value = text.partition("=")
    key = key.strip()
    if not sep or not key:
        raise ConfigurationError("Overrides should read key=value: {!r}".format(text))
    try:
        return key, json.loads(value)
    except ValueError:
        return key, value.strip()


def parse_subdivisions(value):
    """Subdivisions ``n`` or ``'nxXny'`` as a pair of counts.

    Examples
    --------
    >>> parse_subdivisions("25x12")
    (25, 12)
    >>> parse_subdivisions(40)
    (40, 40)

    """
    try:
        if isinstance(value, str):
            parts = value.lower().split("x")
            nx, ny = (int(parts[0]), int(parts[-1])) if len(parts) <= 2 else (0, 0)
        else:
            nx = ny = int(value)
    except (TypeError, ValueError):
        raise ConfigurationError("Invalid subdivisions: {!r}".format(value))
    if nx < 1 or ny < 1:
        raise ConfigurationError("Subdivisions should be positive: {!r}".format(value))
    return nx, ny


def load_config(command, config=None, overrides=()):
    """Settings of one command.

    The defaults of the package configuration file are merged with a user
    configuration, section by section, and then with the overrides.

    Parameters
    ----------
    command : str
        One of :data:`COMMANDS`.
    config : dict or str, optional
        A configuration dict with the sections of the defaults, or the path
        to a JSON file containing such a dict.
    overrides : sequence of str, optional
        ``key=value`` strings.

    Returns
    -------
    dict
        The flat settings of the command.

    Raises
    ------
    ConfigurationError
        If a section or a key is unknown, or a value is invalid.
    """
    if command not in COMMANDS:
        raise ConfigurationError("Unknown command {!r}.".format(command))
    defaults = _read(CONFIG)
    settings = dict(defaults["common"])
    settings.update(defaults[command])

    user = _read(config) if config is not None else {}
    if not isinstance(user, dict):
        raise ConfigurationError("The configuration should be a JSON object.")
    for section in user:
        if section not in defaults:
            raise ConfigurationError("Unknown configuration section {!r}.".format(section))
    for section in ("common", command):
        for key, value in (user.get(section) or {}).items():
            if key not in settings:
                raise ConfigurationError("Unknown key {!r} in section {!r}.".format(key, section))
            settings[key] = value

    for text in overrides:
        key, value = parse_override(text)
        if key not in settings:
            raise ConfigurationError("Unknown key {!r} for {}.".format(key, command))
        settings[key] = value

    _validate(command, settings)
    logger.debug("Settings of %s: %s", command, settings)
    return settings


def _as_list(value):
    return list(value) if isinstance(value, (list, tuple)) else [value]


def _validate(command, settings):
    if settings["solver"] not in SOLVERS:
        raise ConfigurationError("The solver should be one of {}: {!r}".format(SOLVERS, settings["solver"]))
    if not isinstance(settings["workers"], int) or settings["workers"] < 1:
        raise ConfigurationError("The number of workers should be a positive integer: {!r}".format(settings["workers"]))
    try:
        jump = [float(x) for x in settings["jump"]]
    except (TypeError, ValueError):
        jump = []
    if len(jump) != 2:
        raise ConfigurationError("The jump should be a vector of two numbers: {!r}".format(settings["jump"]))
    settings["jump"] = jump

    if "elements" in settings:
        settings["elements"] = _as_list(settings["elements"])
        for token in settings["elements"]:
            parse_couple(token)
    if "gamma0" in settings and command != "demo":
        settings["gamma0"] = [float(g) for g in _as_list(settings["gamma0"])]
        if any(g < 0 for g in settings["gamma0"]):
            raise ConfigurationError("Stabilization parameters should not be negative: {}".format(settings["gamma0"]))
    if "h_list" in settings:
        settings["h_list"] = [int(n) for n in _as_list(settings["h_list"])]
        if any(n < 1 for n in settings["h_list"]):
            raise ConfigurationError("Subdivision counts should be positive: {}".format(settings["h_list"]))
    if "subdivisions" in settings:
        parse_subdivisions(settings["subdivisions"])
    if settings.get("mode", "position") not in MODES:
        raise ConfigurationError("The robustness mode should be one of {}: {!r}".format(MODES, settings["mode"]))
    if command == "extend3d" and not settings["surface"]:
        raise ConfigurationError("The extend3d command needs a surface file (--set surface=PATH).")
