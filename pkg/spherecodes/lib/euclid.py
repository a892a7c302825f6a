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

"""Z_q on the real line, Euclidean and Lee weights, and the Yaglom lift.

Distances are squared Euclidean distances throughout. For odd q = 2s+1 the
residues sit at -s..s; for even q = 2s+2 at the half integers
-s-1/2..s+1/2, the natural representatives -s..s+1 shifted by -1/2.

"""

import logging
import functools
import math
from concurrent import futures
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from spherecodes.lib import excepts

logger = logging.getLogger(__name__)

LIFT_TOLERANCE = 1e-9
"""Relative slack for the ball membership test of the Yaglom lift."""
BLOCK_ROWS = 512
"""Rows per block of the pairwise distance scan."""


@dataclass(frozen=True)
class Constellation(object):
    """Alphabet Z_q with its real representatives.

    Parameters
    ----------
    q : int
        Alphabet size, q >= 2.

    Attributes
    ----------
    s : int
        q = 2s+1 or q = 2s+2.
    points : tuple of Fraction
        Representative of residue r at index r.
    a : Fraction
        Largest squared representative, s^2 or (s+1/2)^2.

    """
    q: int

    def __post_init__(self):
        if int(self.q) != self.q or self.q < 2:
            raise excepts.DomainError("alphabet size must be >= 2, got %r" %
                                      (self.q,))

    @classmethod
    @functools.lru_cache(maxsize=None)
    def for_q(cls, q):
        return cls(int(q))

    @property
    def odd(self):
        return self.q % 2 == 1

    @property
    def s(self):
        return (self.q - 1) // 2 if self.odd else (self.q - 2) // 2

    @property
    def points(self):
        return tuple(self.representative(r) for r in range(self.q))

    @property
    def a(self):
        if self.odd:
            return Fraction(self.s ** 2)
        return (Fraction(self.s) + Fraction(1, 2)) ** 2

    @property
    def radius_sq(self):
        return self.a

    @property
    def max_weight(self):
        """Largest per-coordinate Euclidean weight, an integer."""
        return (self.q // 2) ** 2

    def centered(self, r):
        """Natural representative of residue r: -s..s, or -s..s+1."""
        top = self.s if self.odd else self.s + 1
        return r if r <= top else r - self.q

    def representative(self, r):
        if not 0 <= r < self.q:
            raise excepts.DomainError("residue %r out of range for q=%d" %
                                      (r, self.q))
        rep = Fraction(self.centered(r))
        if not self.odd:
            rep -= Fraction(1, 2)
        return rep

    def weight_table(self):
        """Euclidean weight min(r^2, (q-r)^2) of every residue."""
        r = np.arange(self.q, dtype=np.int64)
        return np.minimum(r * r, (self.q - r) ** 2)

    def lee_table(self):
        r = np.arange(self.q, dtype=np.int64)
        return np.minimum(r, self.q - r)

    def float_points(self):
        return np.array([float(p) for p in self.points])

    def check(self, residues):
        """Residues as an int array, DomainError if any is out of range."""
        arr = np.asarray(residues, dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            bad = arr[(arr < 0) | (arr >= self.q)].ravel()[0]
            raise excepts.DomainError("residue %d out of range for q=%d" %
                                      (bad, self.q))
        return arr


@dataclass(frozen=True)
class Word(object):
    """Element of Z_q^n."""
    residues: tuple
    q: int

    def __post_init__(self):
        object.__setattr__(self, "residues", tuple(int(r) for r in
                                                   self.residues))
        if not self.residues:
            raise excepts.DomainError("empty word")
        Constellation.for_q(self.q).check(self.residues)

    @property
    def n(self):
        return len(self.residues)

    def __sub__(self, other):
        _same_length(self, other)
        return Word(tuple((u - v) % self.q for u, v in
                          zip(self.residues, other.residues)), self.q)


@dataclass(frozen=True)
class RealPoint(object):
    """Point of R^n."""
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if not all(math.isfinite(c) for c in self.coords):
            raise excepts.DomainError("non finite coordinate in %r" %
                                      (self.coords,))

    @property
    def dimension(self):
        return len(self.coords)

    def norm_sq(self):
        return sum(c * c for c in self.coords)

    def as_array(self):
        return np.array([float(c) for c in self.coords])


def _residues(c, w):
    if isinstance(w, Word):
        if w.q != c.q:
            raise excepts.DomainError("word over Z_%d, constellation Z_%d" %
                                      (w.q, c.q))
        return c.check(w.residues)
    return c.check(w)


def _same_length(u, v):
    nu = u.n if isinstance(u, Word) else len(u)
    nv = v.n if isinstance(v, Word) else len(v)
    if nu != nv:
        raise excepts.DomainError("length mismatch: %d != %d" % (nu, nv))


def embed(c, w):
    """Map a word to its constellation point, exactly.

    Parameters
    ----------
    c : Constellation
    w : Word or sequence of int

    Returns
    -------
    RealPoint
        Fraction coordinates, squared norm at most n*a.

    """
    res = _residues(c, w)
    return RealPoint(tuple(c.representative(int(r)) for r in res))


def embed_words(c, words):
    """Vectorised embed of an (N, n) residue array, float (exact for
    half integers)."""
    words = c.check(words)
    return c.float_points()[words]


def euclid_weight(c, w):
    """Sum of min(r^2, (q-r)^2) over the coordinates."""
    res = _residues(c, w)
    return int(c.weight_table()[res].sum())


def lee_weight(c, w):
    """Sum of min(r, q-r) over the coordinates."""
    res = _residues(c, w)
    return int(c.lee_table()[res].sum())


def sq_euclid_distance(c, u, v):
    """Squared Euclidean distance of two words, an integer.

    Raises
    ------
    DomainError
        Length mismatch or residue out of range.

    """
    _same_length(u, v)
    diff = (_residues(c, u) - _residues(c, v)) % c.q
    return int(c.weight_table()[diff].sum())


def word_weights(c, words, table=None):
    """Weights of the rows of an (N, n) residue array."""
    if table is None:
        table = c.weight_table()
    return table[np.asarray(words, dtype=np.int64)].sum(axis=-1)


def yaglom_lift(p, R):
    """Lift a point of the ball B(n, R) to the sphere S(n, R) in R^(n+1).

    Parameters
    ----------
    p : RealPoint
    R : float
        Radius, positive.

    Returns
    -------
    RealPoint
        (p, sqrt(R^2 - p.p)), float coordinates.

    Raises
    ------
    DomainError
        p.p exceeds R^2 by more than LIFT_TOLERANCE * R^2.

    """
    lifted = yaglom_lift_many(np.asarray([[float(x) for x in p.coords]]), R)
    return RealPoint(tuple(float(x) for x in lifted[0]))


def yaglom_lift_many(points, R):
    """Vectorised Yaglom lift of the rows of an (N, n) array."""
    R = float(R)
    if not R > 0:
        raise excepts.DomainError("radius must be positive, got %r" % R)
    points = np.asarray(points, dtype=float)
    r2 = R * R
    norms = np.einsum("ij,ij->i", points, points)
    excess = norms - r2
    worst = int(np.argmax(excess)) if len(norms) else 0
    if len(norms) and excess[worst] > LIFT_TOLERANCE * r2:
        raise excepts.DomainError(
            "point outside ball: |p|^2 - R^2 = %r" % float(excess[worst]))
    last = np.sqrt(np.clip(r2 - norms, 0.0, None))
    return np.hstack([points, last[:, None]])


def _block_min_words(words, table, q, start, stop):
    block = words[start:stop]
    best = None
    for i in range(block.shape[0]):
        rest = words[start + i + 1:]
        if not rest.shape[0]:
            continue
        val = int(table[(rest - block[i]) % q].sum(axis=1).min())
        best = val if best is None else min(best, val)
    return best


def _block_min_points(points, start, stop):
    block = points[start:stop]
    best = None
    for i in range(block.shape[0]):
        rest = points[start + i + 1:]
        if not rest.shape[0]:
            continue
        diff = rest - block[i]
        val = float(np.einsum("ij,ij->i", diff, diff).min())
        best = val if best is None else min(best, val)
    return best


def min_sq_distance(points, constellation=None, workers=1):
    """Exact minimum squared distance over all pairs.

    Parameters
    ----------
    points : sequence
        RealPoint objects or rows of reals; with a constellation, Word
        objects or rows of residues.
    constellation : Constellation, optional
        Given for words: the distance is the integer difference weight.
    workers : int
        Threads for the row blocks, the result does not depend on it.

    Returns
    -------
    int or float

    Raises
    ------
    DomainError
        Fewer than 2 points, unequal dimensions.

    """
    if len(points) < 2:
        raise excepts.DomainError("need at least 2 points, got %d" %
                                  len(points))
    if constellation is not None:
        rows = [constellation.check(p.residues if isinstance(p, Word) else p)
                for p in points]
    else:
        rows = [p.as_array() if isinstance(p, RealPoint)
                else np.asarray(p, dtype=float) for p in points]
    if len(set(len(r) for r in rows)) != 1:
        raise excepts.DomainError("points of unequal dimension")
    data = np.vstack(rows)
    if constellation is not None:
        table = constellation.weight_table()
        task = functools.partial(_block_min_words, data, table,
                                 constellation.q)
    else:
        task = functools.partial(_block_min_points, data)
    blocks = [(i, min(i + BLOCK_ROWS, data.shape[0]))
              for i in range(0, data.shape[0], BLOCK_ROWS)]
    if workers and workers > 1:
        with futures.ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda b: task(*b), blocks))
    else:
        results = [task(*b) for b in blocks]
    return min(r for r in results if r is not None)
