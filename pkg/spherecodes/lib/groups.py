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

"""Zope interfaces that name groups of verification criteria. A composite
group extends its members, so a registry lookup for the composite finds the
criteria of every member.

Marker of interface must exactly correspond to a value of ``verify --only``.

Example
-------
    In python interpreter:

    # from spherecodes.lib import reg, groups
    # reg.registry.lookup([], groups.ICriterionGroup, 'large')
    # reg.registry.lookupAll([groups.ILargeExample], reg.ICriterion)

"""

from zope import interface  # pylint: disable=F0401
from spherecodes.lib import reg


registry = reg.registry


def add_group_info(marker):
    """Decorator for interface classes. Simplify adding a group to registry.

    Parameters
    ----------
    marker : str
        Marker that is associated with an interface.  In terms of zope
        interfaces it is a "name of the adapter".

    Returns
    -------
    Interface
        Unmodified interface class.

    """
    def class_builder(cls):
        for c in cls.__bases__:
            registry.register([], c, marker, cls)
        return cls
    return class_builder


def lookup(marker):
    """Group interface for a marker, None if unknown."""
    return registry.lookup([], ICriterionGroup, marker)


def markers():
    """All group markers, sorted."""
    return sorted(set(name for name, _ in
                      registry.lookupAll([], ICriterionGroup)))


# pylint: disable=E0239
class ICriterionGroup(interface.Interface):
    """Base class for all criterion groups.
    """


@add_group_info(marker='counting')
class ICounting(ICriterionGroup):
    pass


@add_group_info(marker='saddle')
class ISaddle(ICriterionGroup):
    pass


@add_group_info(marker='bounds')
class IBounds(ICriterionGroup):
    pass


@add_group_info(marker='corollary')
class ICorollary(ICriterionGroup):
    pass


@add_group_info(marker='region')
class IRegion(ICriterionGroup):
    pass


@add_group_info(marker='tangent')
class ITangent(ICriterionGroup):
    pass


@add_group_info(marker='primality')
class IPrimality(ICriterionGroup):
    pass


@add_group_info(marker='lee')
class ILee(ICriterionGroup):
    pass


@add_group_info(marker='gilbert')
class IGilbert(ICriterionGroup):
    pass


@add_group_info(marker='concat')
class IConcat(ICriterionGroup):
    pass


@add_group_info(marker='yaglom')
class IYaglom(ICriterionGroup):
    pass


@add_group_info(marker='envelope')
class IEnvelope(ICriterionGroup):
    pass


@add_group_info(marker='theta')
class ITheta(ICriterionGroup):
    pass


# Composite groups.
@add_group_info(marker='thm8')
@add_group_info(marker='large')
class ILargeExample(IRegion, ITangent, IPrimality):
    pass


@add_group_info(marker='construct')
class IConstruct(ILee, IGilbert, IConcat, IYaglom):
    pass


@add_group_info(marker='all')
class IAll(ICounting, ISaddle, IBounds, ICorollary, ILargeExample, IConstruct,
           IEnvelope, ITheta):
    pass
