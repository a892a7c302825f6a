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

"""Command line frontend.

Commands
--------
bounds
    Sample a rate curve, rows ``x,rho,rate,curve``.
region
    Residual grid of the attainable region, rows ``x,y,residual,feasible``.
build
    Construct a code, lift it to the sphere and print a summary.
verify
    Run verification criteria, one JSON line per criterion.

Exit codes: 0 success, 1 verification failure, 2 usage error.

Example
-------
    python -m spherecodes bounds --kind shannon --x-min -5 --x-max 0 \\
        --samples 6
    python -m spherecodes verify --only large
"""

import argparse
import contextlib
import json
import logging
import os
import sys

from spherecodes.lib import bounds
from spherecodes.lib import codes
from spherecodes.lib import config
from spherecodes.lib import criteria
from spherecodes.lib import deco
from spherecodes.lib import excepts
from spherecodes.lib import spherical
from spherecodes.lib import utils

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

BOUNDS_X_RANGE = (-5.0, 0.0)
REGION_X_RANGE = (-1000.0, 0.0)

CURVE_FIELDS = ("x", "rho", "rate", "curve")
REGION_FIELDS = ("x", "y", "residual", "feasible")


class ArgumentParser(argparse.ArgumentParser):
    """Parser that raises UsageError instead of exiting."""

    def error(self, message):
        raise excepts.UsageError(message)


def _common(sub):
    sub.add_argument("--config", dest="config_file",
                     help="key = value configuration file")
    sub.add_argument("--format", choices=config.FORMATS)
    sub.add_argument("--output", help="output file, stdout by default")
    sub.add_argument("--seed", type=int)
    sub.add_argument("--log-level", dest="log_level",
                     choices=("DEBUG", "INFO", "WARNING", "ERROR"))


def build_parser():
    parser = ArgumentParser(
        prog="spherecodes",
        description="Spherical codes from codes over Z_q: rate bounds, "
        "constructions and their verification.")
    subs = parser.add_subparsers(dest="command")

    sub = subs.add_parser("bounds", help="emit a rate curve")
    _common(sub)
    sub.add_argument("--kind")
    sub.add_argument("--x-min", dest="x_min", type=float)
    sub.add_argument("--x-max", dest="x_max", type=float)
    sub.add_argument("--samples", type=int)
    sub.add_argument("--lambda", dest="lambda", type=float)
    sub.add_argument("--c", type=float)
    sub.add_argument("--c-min", dest="c_min", type=float)
    sub.add_argument("--c-max", dest="c_max", type=float)
    sub.add_argument("--c-steps", dest="c_steps", type=int)
    sub.add_argument("--q", type=int)
    sub.add_argument("--p", help="prime, any number of digits")
    sub.add_argument("--t", type=int)
    sub.add_argument("--tau", type=float)
    sub.add_argument("--x0", type=float)

    sub = subs.add_parser("region", help="emit the attainable region grid")
    _common(sub)
    sub.add_argument("--x-min", dest="x_min", type=float)
    sub.add_argument("--x-max", dest="x_max", type=float)
    sub.add_argument("--y-min", dest="y_min", type=float)
    sub.add_argument("--y-max", dest="y_max", type=float)
    sub.add_argument("--x-steps", dest="x_steps", type=int)
    sub.add_argument("--y-steps", dest="y_steps", type=int)
    sub.add_argument("--lambda", dest="lambda", type=float)

    sub = subs.add_parser("build", help="construct and lift a code")
    _common(sub)
    sub.add_argument("--gilbert", action="store_const", const="yes")
    sub.add_argument("--q", type=int)
    sub.add_argument("--n", type=int)
    sub.add_argument("--d", type=int)
    sub.add_argument("--inner", choices=("bch",))
    sub.add_argument("--p")
    sub.add_argument("--t", type=int)
    sub.add_argument("--outer", choices=("rs",))
    sub.add_argument("--n-out", dest="n_out", type=int)
    sub.add_argument("--k-out", dest="k_out", type=int)
    sub.add_argument("--sample-pairs", dest="sample_pairs", type=int)
    sub.add_argument("--dump-points", dest="dump_points")
    sub.add_argument("--max-points", dest="max_points", type=int)

    sub = subs.add_parser("verify", help="run verification criteria")
    _common(sub)
    sub.add_argument("--only", help="group marker or criterion name")
    return parser


@contextlib.contextmanager
def _sink(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as out:
            yield out


class RowWriter(object):
    """CSV with a one line header, or one JSON object per line."""

    def __init__(self, out, fields, fmt):
        self.out = out
        self.fields = fields
        self.fmt = fmt
        if fmt == "csv":
            out.write(",".join(fields) + "\n")

    def write(self, *values):
        if self.fmt == "csv":
            self.out.write(",".join(
                v if isinstance(v, str) else utils.fmt(v)
                for v in values) + "\n")
        else:
            self.out.write(json.dumps(dict(zip(self.fields, values)),
                                      sort_keys=True) + "\n")


def _x_range(cfg, default):
    x_min = default[0] if cfg.x_min in (None, "") else cfg.x_min
    x_max = default[1] if cfg.x_max in (None, "") else cfg.x_max
    if x_min > x_max:
        raise excepts.UsageError("x range is empty: %r > %r" % (x_min, x_max))
    return x_min, x_max


def _curve_params(cfg):
    return dict((k, cfg.get(k)) for k in
                ("lambda", "c", "q", "p", "t", "tau", "x0"))


@deco.log(level=logging.INFO)
def cmd_bounds(cfg):
    """Write one curve, or one envelope per c with --c-min/--c-max."""
    cfg.require("kind")
    x_min, x_max = _x_range(cfg, BOUNDS_X_RANGE)
    params = _curve_params(cfg)
    curves = []
    if cfg.kind == "envelope" and cfg.c_min not in (None, ""):
        cfg.require("c_max")
        c_values = utils.linspace(cfg.c_min, cfg.c_max, cfg.c_steps)
        bounds.envelope_sweep(cfg["lambda"], c_values,
                              utils.linspace(x_min, x_max, cfg.samples))
        for c in c_values:
            curves.append(("envelope:c=%s" % utils.fmt(c),
                           dict(params, c=c)))
    else:
        curves.append((cfg.kind, params))
    with _sink(cfg.output_path()) as out:
        writer = RowWriter(out, CURVE_FIELDS, cfg.format)
        for label, par in curves:
            for pt in bounds.emit_curve(cfg.kind, par, x_min, x_max,
                                        cfg.samples):
                writer.write(pt.x, pt.rho, pt.rate, label)
    return EXIT_OK


@deco.log(level=logging.INFO)
def cmd_region(cfg):
    """Residual of the attainable region on an x by y grid."""
    x_min, x_max = _x_range(cfg, REGION_X_RANGE)
    if not x_max < 1:
        raise excepts.UsageError("region needs x < 1, got x-max %r" % x_max)
    if not 0 < cfg.y_min <= cfg.y_max:
        raise excepts.UsageError("region needs 0 < y-min <= y-max")
    if cfg.x_steps < 1 or cfg.y_steps < 1:
        raise excepts.UsageError("grid steps must be >= 1")
    feasible = 0
    with _sink(cfg.output_path()) as out:
        writer = RowWriter(out, REGION_FIELDS, cfg.format)
        for y in utils.linspace(cfg.y_min, cfg.y_max, cfg.y_steps):
            for x in utils.linspace(x_min, x_max, cfg.x_steps):
                residual = bounds.region_residual(x, y, cfg["lambda"])
                writer.write(x, y, residual, residual <= 0)
                feasible += residual <= 0
    logger.info("Region: %d of %d cells feasible.", feasible,
                cfg.x_steps * cfg.y_steps)
    return EXIT_OK


def _build_code(cfg, gen):
    """(code, words to lift, measured distance) for the build options."""
    if cfg.flag("gilbert"):
        cfg.require("q", "n", "d")
        code = codes.greedy_gilbert(cfg.q, cfg.n, cfg.d)
        md = codes.verify_min_distance(code, cfg.sample_pairs, gen) \
            if code.size > 1 else None
        return code, code.codewords(), md
    cfg.require("p", "t")
    inner = codes.lee_bch(cfg.p, cfg.t)
    if cfg.outer:
        cfg.require("n_out", "k_out")
        outer = codes.rs_code(inner.q, inner.k, cfg.n_out, cfg.k_out)
        code = codes.concatenate(outer, inner)
        md = code.sampled_min_distance(cfg.sample_pairs, gen)
        if code.size <= cfg.max_points:
            words = code.codewords()
        else:
            words = code.sample_words(cfg.max_points, gen)
        return code, words, md
    md = codes.verify_min_distance(inner, cfg.sample_pairs, gen)
    if inner.size <= cfg.max_points:
        words = inner.codewords()
    else:
        words = inner.encode(inner.random_messages(cfg.max_points, gen))
    return inner, words, md


@deco.log(level=logging.INFO)
def cmd_build(cfg):
    """Construct a code, lift it and write its summary."""
    if not cfg.flag("gilbert") and cfg.inner != "bch":
        raise excepts.UsageError("build needs --gilbert or --inner bch")
    gen = utils.rng(cfg.seed)
    code, words, md = _build_code(cfg, gen)
    result = spherical.to_spherical(words, code.q, code.metric_floor,
                                    size=code.size)
    summary = result.summary()
    summary.update({
        "code": repr(code),
        "floor": code.metric_floor,
        "min_distance": md.value if md is not None else None,
        "min_distance_engine": md.engine if md is not None else None,
    })
    with _sink(cfg.output_path()) as out:
        if cfg.format == "csv":
            out.write("key,value\n")
            for key in sorted(summary):
                val = summary[key]
                out.write("%s,%s\n" % (key, val if isinstance(val, str)
                                       else utils.fmt(val)))
        else:
            out.write(json.dumps(summary, sort_keys=True) + "\n")
    if cfg.dump_points:
        path = cfg.dump_points
        if cfg.output_dir and not os.path.isabs(path):
            path = os.path.join(cfg.output_dir, path)
        with open(path, "w") as out:
            for row in result.points:
                if cfg.format == "csv":
                    out.write(",".join(utils.fmt(v) for v in row) + "\n")
                else:
                    out.write(json.dumps([float(v) for v in row]) + "\n")
        logger.info("Wrote %d points to %s.", result.points.shape[0], path)
    return EXIT_OK


@deco.log(level=logging.INFO)
def cmd_verify(cfg):
    """Run the selected criteria; exit 1 when any fails."""
    failed = []
    total = 0
    with _sink(cfg.output_path()) as out:
        for report in criteria.run(cfg, cfg.only or "all"):
            out.write(json.dumps(report, sort_keys=True,
                                 default=utils.fmt) + "\n")
            out.flush()
            total += 1
            if report["status"] != "pass":
                failed.append(report["criterion"])
        out.write(json.dumps({"summary": {"criteria": total,
                                          "failed": failed}},
                             sort_keys=True) + "\n")
    if failed:
        logger.error("Failed criteria: %s", ", ".join(failed))
        return EXIT_FAILURE
    return EXIT_OK


COMMAND_HANDLERS = {
    "bounds": cmd_bounds,
    "region": cmd_region,
    "build": cmd_build,
    "verify": cmd_verify,
}


def main(argv=None, environ=None):
    """Parse arguments, run one command, return the exit code."""
    try:
        args = vars(build_parser().parse_args(argv))
        if not args.get("command"):
            raise excepts.UsageError("missing command, one of: %s" %
                                     ", ".join(config.COMMANDS))
        cfg_file = args.pop("config_file", None)
        cfg = config.RunConfig(args, cfg_file, environ)
        logging.basicConfig(level=getattr(logging, cfg.log_level.upper(),
                                          logging.INFO),
                            stream=sys.stderr)
        cfg.dump()
        return COMMAND_HANDLERS[cfg.command](cfg)
    except (excepts.UsageError, excepts.DomainError) as excp:
        logger.error("%s", excp)
        sys.stderr.write("spherecodes: %s\n" % excp)
        return EXIT_USAGE
    except excepts.GeneralException as excp:
        logger.error("%s", excp)
        sys.stderr.write("spherecodes: %s\n" % excp)
        return EXIT_FAILURE
