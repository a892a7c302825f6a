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

"""Spherical codes from codes over Z_q: embed, Yaglom lift with
R = sqrt(n a), scale to the unit sphere of R^(n+1).
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from spherecodes.lib import euclid
from spherecodes.lib import excepts
from spherecodes.lib import utils

logger = logging.getLogger(__name__)

NORM_TOL = 1e-9
PAIR_LIMIT = 20000
"""Point sets up to this size get all pairs checked."""


@dataclass
class SphericalCodeResult(object):
    """Unit sphere points of a lifted code.

    Attributes
    ----------
    points : ndarray
        (N, n+1) unit vectors, the whole code or a sample of it.
    size : int
        Number of codewords of the code, at least N.
    n : int
        Length of the code over Z_q.
    rho : float
        Squared minimum distance measured over points, None for one point.
    rho_floor : float
        d_floor / (n a), None without a floor.
    label : str
        "exhaustive" when points is the whole code, "sampled" otherwise.
    """
    points: np.ndarray
    size: int
    n: int
    rho: float
    rho_floor: float = None
    label: str = "exhaustive"

    @property
    def dimension(self):
        return self.n + 1

    @property
    def binary_rate(self):
        """log2 |C| / (n+1)."""
        return utils.log2_int(self.size) / (self.n + 1)

    def summary(self):
        return {
            "n": self.n,
            "dimension": self.dimension,
            "size": self.size,
            "log2_size": utils.log2_int(self.size),
            "points": int(self.points.shape[0]),
            "rho": self.rho,
            "rho_floor": self.rho_floor,
            "distance": self.label,
            "binary_rate": self.binary_rate,
        }


def unit_points(words, q):
    """Embed rows of residues and lift them onto the unit sphere."""
    c = euclid.Constellation.for_q(q)
    words = np.atleast_2d(np.asarray(words, dtype=np.int64))
    n = words.shape[1]
    radius = math.sqrt(n * float(c.a))
    return euclid.yaglom_lift_many(euclid.embed_words(c, words),
                                   radius) / radius


def to_spherical(words, q, d_floor=None, size=None, workers=1):
    """Spherical code of a code over Z_q.

    Parameters
    ----------
    words : array
        (N, n) residues: all codewords, or a sample when size is given.
    q : int
    d_floor : int, optional
        Guaranteed squared Euclidean distance of the code.
    size : int, optional
        Number of codewords, len(words) by default.
    workers : int
        Threads of the distance scan.

    Returns
    -------
    SphericalCodeResult

    Raises
    ------
    DomainError
        No words.
    NumericError
        A point off the unit sphere by more than 1e-9.

    """
    words = np.atleast_2d(np.asarray(words, dtype=np.int64))
    if words.size == 0:
        raise excepts.DomainError("no words to lift")
    size = words.shape[0] if size is None else int(size)
    n = words.shape[1]
    pts = unit_points(words, q)
    err = float(np.abs(np.linalg.norm(pts, axis=1) - 1.0).max())
    if err > NORM_TOL:
        raise excepts.NumericError("lifted point off the unit sphere by %r" %
                                   err)
    label = "exhaustive" if size == pts.shape[0] else "sampled"
    if pts.shape[0] < 2:
        rho = None
    elif pts.shape[0] <= PAIR_LIMIT:
        rho = float(euclid.min_sq_distance(pts, workers=workers))
    else:
        rho = float(euclid.min_sq_distance(pts[:PAIR_LIMIT], workers=workers))
        label = "sampled"
    c = euclid.Constellation.for_q(q)
    rho_floor = None
    if d_floor is not None:
        rho_floor = float(d_floor) / (n * float(c.a))
    result = SphericalCodeResult(pts, size, n, rho, rho_floor, label)
    logger.info("Spherical code: %d points in R^%d, rho %s (%s), floor %s.",
                pts.shape[0], n + 1, rho, label, rho_floor)
    return result
