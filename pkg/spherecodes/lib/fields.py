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

"""Finite fields GF(p) and GF(p^k) through galois.

GF(p^k) is built on the lexicographically smallest monic irreducible
polynomial of degree k, so element coefficient vectors are reproducible.
"""

import functools
import logging
from dataclasses import dataclass

import galois
import numpy as np

from spherecodes.lib import excepts
from spherecodes.lib import primes

logger = logging.getLogger(__name__)


def check_prime(p):
    p = int(p)
    if p < 2 or not primes.primality_check(p):
        raise excepts.DomainError("%d is not prime" % p)
    return p


@functools.lru_cache(maxsize=None)
def prime_field(p):
    """GF(p) field array class."""
    return galois.GF(check_prime(p))


@functools.lru_cache(maxsize=None)
def modulus(p, k):
    """Smallest monic irreducible polynomial of degree k over GF(p)."""
    return galois.irreducible_poly(check_prime(p), int(k), method="min")


@functools.lru_cache(maxsize=None)
def extension_field(p, k):
    """GF(p^k) field array class.

    Raises
    ------
    DomainError
        p not prime, k < 1.

    """
    if int(k) < 1:
        raise excepts.DomainError("extension degree must be >= 1, got %r" % k)
    if int(k) == 1:
        return prime_field(p)
    poly = modulus(p, k)
    logger.debug("GF(%d^%d) modulo %s", p, k, poly)
    return galois.GF(int(p) ** int(k), irreducible_poly=poly)


@functools.lru_cache(maxsize=None)
def primitive_root(p):
    """Smallest positive primitive root mod p."""
    return int(galois.primitive_root(check_prime(p)))


def is_irreducible(poly):
    return bool(poly.is_irreducible())


@dataclass(frozen=True)
class FieldElement(object):
    """Element of GF(p^k) as its k coefficients over GF(p), highest degree
    first (the order of galois' vector())."""
    coeffs: tuple
    p: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if any(not 0 <= c < self.p for c in self.coeffs):
            raise excepts.DomainError("coefficient outside [0, %d): %r" %
                                      (self.p, self.coeffs))

    @property
    def k(self):
        return len(self.coeffs)

    @classmethod
    def from_field(cls, element):
        field = type(element)
        return cls(tuple(np.asarray(element.vector()).ravel()),
                   field.characteristic)

    def to_field(self):
        field = extension_field(self.p, self.k)
        return field.Vector(list(self.coeffs))


def axioms_hold(field, samples=200, seed=0):
    """Spot check associativity, distributivity and inverses on random
    triples.

    Returns
    -------
    dict
        Failure count per axiom, all zero for a field.

    """
    a, b, c = (field.Random(samples, seed=seed + i) for i in range(3))
    nonzero = a[a != 0]
    failures = {
        "add_assoc": int(np.count_nonzero((a + b) + c != a + (b + c))),
        "mul_assoc": int(np.count_nonzero((a * b) * c != a * (b * c))),
        "distrib": int(np.count_nonzero(a * (b + c) != a * b + a * c)),
        "commute": int(np.count_nonzero(a * b != b * a)),
        "inverse": int(np.count_nonzero(nonzero * nonzero ** -1 != 1)),
    }
    if any(failures.values()):
        logger.warning("Field axioms fail in %s: %s", field.name, failures)
    return failures
