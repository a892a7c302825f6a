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

"""Zope registry of named plugins: curve kinds and verification criteria.

A curve kind is registered without requirements and found by its name. A
criterion is registered for the group interfaces of
:mod:`spherecodes.lib.groups` it belongs to.

Example
-------
    In python interpreter:

    # from spherecodes.lib import reg, groups
    # reg.registry.lookup([], reg.ICurve, 'shannon')
    # reg.registry.lookupAll([groups.ILargeExample], reg.ICriterion)

"""

import logging
from zope import interface  # pylint: disable=F0401
from zope.interface import adapter

logger = logging.getLogger(__name__)

logger.debug("Create a new Zope registry.")
registry = adapter.AdapterRegistry()


# pylint: disable=E0239,E0211,W0222
class ICurve(interface.Interface):
    def __call__(x, params):  # Zope Interfaces are defined without 'self'
        """Rate of the curve at x = ln(rho), or None outside its domain."""


class ICriterion(interface.Interface):
    def __call__(config):
        """Run one verification criterion, return a detail dictionary."""


def _provide(obj, iface):
    # Informative only, lookups go through the registry.
    provides = list(interface.directlyProvidedBy(obj))
    provides.append(iface)
    interface.directlyProvides(obj, provides)


def add_curve(name=None):
    """Register a rate curve under a kind name.

    Parameters
    ----------
    name : str, optional.
        Curve kind. If not specified use the function name.

    Returns
    -------
    callable
        Unmodified function.

    """
    def builder(curve):
        kind = name or curve.__name__
        registry.register([], ICurve, kind, curve)
        logger.debug("Add curve kind: %s.", kind)
        _provide(curve, ICurve)
        return curve
    return builder


def add_criterion(req, name=None):
    """Register a verification criterion for group interfaces.

    Parameters
    ----------
    req : list
        Group interfaces, the criterion runs when any of them is selected.
    name : str, optional.
        Criterion name. If not specified use the function name.

    Returns
    -------
    callable
        Unmodified function.

    """
    def builder(criterion):
        crit_name = name or criterion.__name__
        for iface in req:
            registry.register([iface], ICriterion, crit_name, criterion)
        logger.debug("Add criterion: %s for %s.", crit_name, repr(req))
        _provide(criterion, ICriterion)
        return criterion
    return builder


def curve(kind):
    """Registered curve for a kind, None if unknown."""
    return registry.lookup([], ICurve, kind)


def curve_kinds():
    """Names of all registered curve kinds, sorted."""
    return sorted(name for name, _ in registry.lookupAll([], ICurve))
