#!/usr/bin/env python

# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
#
# See LICENSE for more details.


"""Run configuration: defaults, key = value config files, command line
values and the output directory environment override.
"""

import os
import logging
import pprint

from spherecodes.lib import excepts
from spherecodes.lib import utils


logger = logging.getLogger(__name__)

OUTPUT_DIR_ENV = "SPHERECODES_OUTPUT_DIR"
"""Environment variable that overrides the output directory."""

COMMANDS = ("bounds", "region", "build", "verify")
FORMATS = ("csv", "json-lines")

# Every parameter a command may consume, with its default.
KNOWN_PARAMS = {
    "command": "",
    "format": "csv",
    "output": "",
    "output_dir": "",
    "seed": utils.DEFAULT_SEED,
    "log_level": "INFO",
    # bounds
    "kind": "",
    # each command has its own x range default
    "x_min": None,
    "x_max": None,
    "samples": 6,
    "lambda": 0.98,
    "c": -10.85,
    "c_min": None,
    "c_max": None,
    "c_steps": 1,
    "q": None,
    "p": None,
    "t": None,
    "tau": None,
    "x0": None,
    # region
    "y_min": 1.0,
    "y_max": 500.0,
    "x_steps": 200,
    "y_steps": 200,
    # build
    "gilbert": "no",
    "inner": "bch",
    "outer": "",
    "n": None,
    "d": None,
    "n_out": None,
    "k_out": None,
    "sample_pairs": 100000,
    "dump_points": "",
    "max_points": 2000,
    # verify
    "only": "all",
}

_INT_PARAMS = ("seed", "samples", "c_steps", "q", "t", "x_steps", "y_steps",
               "n", "d", "n_out", "k_out", "sample_pairs", "max_points")
_FLOAT_PARAMS = ("x_min", "x_max", "lambda", "c", "c_min", "c_max", "tau",
                 "x0", "y_min", "y_max")


class AttributeDict(dict):
    """Dictionary class derived from standard dict. Refer to keys as obj.key.
    Missing keys read as "".
    """
    # http://stackoverflow.com/questions/4984647/
    __setattr__ = dict.__setitem__

    def __getattr__(self, key):
        if key in ["__getstate__", "__setstate__", "__slots__"]:
            raise AttributeError()
        try:
            return dict.__getitem__(self, key)
        except KeyError:
            return ""

    def flag(self, key):
        """Yes/no value of a key, False when missing."""
        item = self.get(key)
        if item in (None, ""):
            return False
        if isinstance(item, bool):
            return item
        return utils.is_yes(item)

    def dump(self):
        for line in pprint.pformat(dict(self)).split('\n'):
            logger.info(line)


def parse_cfg(path):
    """Read a key = value config file.

    Parameters
    ----------
    path : str
        Config file.

    Returns
    -------
    dict
        Raw string values; dashes in keys are read as underscores.

    Raises
    ------
    UsageError
        Unreadable file or a line without '='.

    """
    values = {}
    try:
        with open(path) as cfg:
            lines = cfg.readlines()
    except (IOError, OSError) as excp:
        raise excepts.UsageError("cannot read config %s: %s" % (path, excp))
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise excepts.UsageError("%s:%d: expected key = value" %
                                     (path, lineno))
        key, val = line.split("=", 1)
        key = key.strip().replace("-", "_")
        values[key] = val.strip()
    logger.debug("Config %s: %s", path, values)
    return values


def _convert(key, value):
    if value is None or value == "":
        return KNOWN_PARAMS.get(key) if value == "" else None
    try:
        if key in _INT_PARAMS:
            return int(value)
        if key in _FLOAT_PARAMS:
            return float(value)
    except (TypeError, ValueError):
        raise excepts.UsageError("parameter %s: bad number %r" % (key, value))
    if key == "p":
        # Arbitrary precision prime.
        try:
            return int(str(value))
        except ValueError:
            raise excepts.UsageError("parameter p: bad integer %r" % value)
    return value


class RunConfig(AttributeDict):
    """Parameters of one command run.

    Parameters
    ----------
    cli : dict
        Values given on the command line, None for flags not given.
    cfg_file : str, optional
        Key = value config file, read before the command line values.
    environ : dict, optional
        Environment, os.environ by default.

    Raises
    ------
    UsageError
        Unknown parameter, bad value.

    """

    def __init__(self, cli, cfg_file=None, environ=None):
        super(RunConfig, self).__init__()
        self.update(KNOWN_PARAMS)
        layers = []
        if cfg_file:
            layers.append(("config", parse_cfg(cfg_file)))
        layers.append(("cli", dict((k, v) for k, v in cli.items()
                                   if v is not None)))
        for origin, values in layers:
            for key, value in values.items():
                if key not in KNOWN_PARAMS:
                    raise excepts.UsageError("unknown parameter %s (%s)" %
                                             (key, origin))
                self[key] = _convert(key, value)
        if environ is None:
            environ = os.environ
        if environ.get(OUTPUT_DIR_ENV):
            self.output_dir = environ[OUTPUT_DIR_ENV]
            logger.info("Output directory from %s: %s", OUTPUT_DIR_ENV,
                        self.output_dir)
        if self.format not in FORMATS:
            raise excepts.UsageError("format must be one of %s" %
                                     ", ".join(FORMATS))

    def output_path(self, default_name=None):
        """Where to write the main output, None means stdout."""
        name = self.output or default_name
        if not name:
            return None
        if self.output_dir and not os.path.isabs(name):
            return os.path.join(self.output_dir, name)
        return name

    def require(self, *keys):
        """Raise UsageError unless every key has a value."""
        missing = [k for k in keys if self.get(k) in (None, "")]
        if missing:
            raise excepts.UsageError(
                "%s needs: %s" % (self.command or "command",
                                  ", ".join("--" + k.replace("_", "-")
                                            for k in missing)))
