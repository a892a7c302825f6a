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

"""Curve kinds for ``bounds --kind``. Each kind takes x = ln(rho) and a
parameter dictionary (keys as in the run configuration).

Example
-------
    In python interpreter:

    # from spherecodes.lib import reg, curves
    # reg.curve('shannon')(0.0, {})
"""

import logging

from spherecodes.lib import bounds
from spherecodes.lib import excepts
from spherecodes.lib import reg

logger = logging.getLogger(__name__)


def _param(params, key, kind):
    value = params.get(key)
    if value in (None, ""):
        raise excepts.UsageError("curve %s needs --%s" % (kind, key))
    return value


def tvz_params(params, kind="tvz_line"):
    """TVZParams from p and t, or p and tau."""
    p = _param(params, "p", kind)
    lam = params.get("lambda") or bounds.COROLLARY_LAMBDA
    if params.get("t") not in (None, ""):
        return bounds.TVZParams(p, params["t"], lam)
    return bounds.TVZParams.from_tau(p, _param(params, "tau", kind), lam)


@reg.add_curve()
def shannon(x, params):
    return bounds.shannon_rate_log(x)


@reg.add_curve()
def lattice(x, params):
    return bounds.lattice_rate_log(x)


@reg.add_curve()
def lattice_shifted(x, params):
    return bounds.lattice_shifted_rate_log(x)


@reg.add_curve()
def lachaud_stern(x, params):
    return bounds.lachaud_stern_rate_log(x)


@reg.add_curve()
def gilbert_yaglom(x, params):
    return bounds.gilbert_yaglom_rate_log(
        int(_param(params, "q", "gilbert_yaglom")), x)


@reg.add_curve()
def tvz_line(x, params):
    return bounds.tvz_line_log(tvz_params(params), x)


@reg.add_curve(name="tvz")
def tvz(x, params):
    """Short name of tvz_line."""
    return tvz_line(x, params)


@reg.add_curve()
def envelope(x, params):
    return bounds.envelope_point_log(x, _param(params, "c", "envelope"))[0]


@reg.add_curve()
def scaled_shannon(x, params):
    return _param(params, "lambda", "scaled_shannon") * \
        bounds.shannon_rate_log(x)


@reg.add_curve()
def scaled_lattice(x, params):
    return _param(params, "lambda", "scaled_lattice") * \
        bounds.lattice_rate_log(x)


@reg.add_curve()
def tangent(x, params):
    line = bounds.tangent_line(_param(params, "x0", "tangent"),
                               _param(params, "lambda", "tangent"))
    return line.rate_log(x)
