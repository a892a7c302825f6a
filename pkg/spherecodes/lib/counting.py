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

"""Euclidean ball sizes in Z_q^n and their saddle point exponent.

The per-coordinate weight enumerator of Z_q is f(z) = sum c_w z^w over the
Euclidean weights w. The number of words of weight at most r = lambda*n
grows like 2^(n*E) with

    E = log2 f(mu) - lambda*log2 mu,    mu f'(mu) = lambda f(mu).

The solver works with u = ln z: the mean weight m(u) = z f'(z)/f(z) is the
mean of a tilted distribution over the weights, its derivative in u is the
variance, so m is strictly increasing and Newton steps in u are well
behaved. Sums are evaluated as log-sum-exp.

"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from spherecodes.lib import excepts
from spherecodes.lib import euclid
from spherecodes.lib import utils

logger = logging.getLogger(__name__)

Z_LO = 1e-30
"""Lower end of the saddle point bracket."""
BISECTION_STEPS = 120
NEWTON_STEPS = 10
MAX_ITERATIONS = 200
RESIDUAL_TOL = 1e-12
NEWTON_TOL = 1e-14
TAIL_TOL = 1e-18
"""Largest dropped theta tail, relative to the truncated sum."""
THETA_TRUNCATION = 64


@dataclass(frozen=True)
class WeightEnumerator(object):
    """Per-coordinate weight enumerator.

    Parameters
    ----------
    coeffs : dict
        Weight -> count, counts positive.
    q : int
        Alphabet size, 0 for the theta series.
    truncation : int
        Largest index i of a theta term z^(i^2), 0 for finite q.

    """
    coeffs: dict
    q: int
    truncation: int = 0
    _weights: np.ndarray = field(init=False, repr=False, compare=False)
    _logc: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        items = sorted((int(w), int(c)) for w, c in self.coeffs.items()
                       if c)
        if not items or items[0] != (0, 1):
            raise excepts.DomainError("enumerator needs count 1 at weight 0")
        object.__setattr__(self, "_weights",
                           np.array([w for w, _ in items], dtype=float))
        object.__setattr__(self, "_logc",
                           np.array([math.log(c) for _, c in items]))

    @classmethod
    def theta(cls, truncation=THETA_TRUNCATION):
        """1 + 2 sum_{i <= truncation} z^(i^2)."""
        if truncation < 1:
            raise excepts.DomainError("theta truncation must be >= 1")
        coeffs = {0: 1}
        coeffs.update((i * i, 2) for i in range(1, truncation + 1))
        return cls(coeffs, 0, truncation)

    @property
    def total(self):
        return sum(self.coeffs.values())

    @property
    def max_weight(self):
        return int(self._weights[-1])

    @property
    def mean_weight(self):
        """f'(1)/f(1), the weight of a uniform random symbol."""
        return sum(w * c for w, c in self.coeffs.items()) / float(self.total)

    def terms(self):
        """(weight, count) pairs, weight ascending."""
        return sorted(self.coeffs.items())

    def log_value(self, u):
        """ln f(e^u)."""
        t = self._logc + self._weights * u
        top = t.max()
        return float(top + math.log(np.exp(t - top).sum()))

    def moments(self, u):
        """Mean and variance of the weight tilted by z = e^u."""
        t = self._logc + self._weights * u
        prob = np.exp(t - t.max())
        prob /= prob.sum()
        mean = float(np.dot(prob, self._weights))
        var = float(np.dot(prob, (self._weights - mean) ** 2))
        return mean, var

    def value(self, z):
        return sum(c * z ** w for w, c in self.coeffs.items())

    def derivative(self, z):
        return sum(w * c * z ** (w - 1) for w, c in self.coeffs.items() if w)


@dataclass(frozen=True)
class SaddleSolution(object):
    """Solution of z f'(z) = lambda f(z).

    ``clamped`` is set when lambda is at or above the mean weight: the ball
    holds almost every word, mu is reported as 1 and the exponent as
    log2 of the alphabet size.
    """
    lam: float
    mu: float
    exponent: float
    log_mu: float = 0.0
    residual: float = 0.0
    iterations: int = 0
    clamped: bool = False


def enumerator(q):
    """Euclidean weight enumerator of Z_q.

    Odd q = 2s+1: 1 + 2 sum_{i<=s} z^(i^2). Even q = 2s+2: the same plus
    z^((s+1)^2) once for the element q/2, so that f(1) = q.

    Raises
    ------
    DomainError
        q < 2.

    """
    if int(q) != q or q < 2:
        raise excepts.DomainError("alphabet size must be >= 2, got %r" % q)
    c = euclid.Constellation.for_q(q)
    coeffs = {0: 1}
    coeffs.update((i * i, 2) for i in range(1, c.s + 1))
    if not c.odd:
        coeffs[(c.s + 1) ** 2] = 1
    return WeightEnumerator(coeffs, int(q))


def ball_sizes(q, n, r):
    """Exact V(n, q, 0..r) from one convolution pass.

    Parameters
    ----------
    q : int
    n : int
        Length, >= 1.
    r : int
        Largest radius, squared Euclidean, >= 0.

    Returns
    -------
    list of int
        Entry j is the number of words of Z_q^n of weight <= j.

    """
    n, r = int(n), int(r)
    if n < 1:
        raise excepts.DomainError("length must be >= 1, got %d" % n)
    if r < 0:
        raise excepts.DomainError("radius must be >= 0, got %d" % r)
    f = enumerator(q)
    top = min(r, n * f.max_weight)
    terms = [(w, c) for w, c in f.terms() if w <= top]
    poly = np.zeros(top + 1, dtype=object)
    poly[0] = 1
    # Coefficients of f^n up to degree top, Python ints.
    for _ in range(n):
        new = poly * terms[0][1]
        for w, c in terms[1:]:
            new[w:] += poly[:top + 1 - w] * c
        poly = new
    sizes = list(np.cumsum(poly))
    full = q ** n
    sizes.extend([full] * (r - top))
    return [int(s) for s in sizes]


def ball_size(q, n, r):
    """Number of words of Z_q^n with Euclidean weight <= r."""
    return ball_sizes(q, n, r)[-1]


def ball_exponent(q, n, r):
    """log2 V(n, q, r) / n."""
    return utils.log2_int(ball_size(q, n, r)) / n


def _solve(f, lam):
    if not (lam > 0 and math.isfinite(lam)):
        raise excepts.DomainError("lambda must be positive, got %r" % lam)
    if f.q:
        if lam > f.max_weight:
            raise excepts.DomainError(
                "lambda %r above the largest weight %d" % (lam, f.max_weight))
        if lam >= f.mean_weight:
            logger.debug("Clamp saddle at lambda %r >= mean weight %r.", lam,
                         f.mean_weight)
            return SaddleSolution(lam, 1.0, math.log2(f.total), clamped=True)

    iterations = 0

    def mean(u):
        return f.moments(u)[0]

    u_lo = math.log(Z_LO)
    while mean(u_lo) >= lam:
        u_lo *= 2
        iterations += 1
    u_hi = 0.0
    while mean(u_hi) <= lam:
        u_hi += utils.LN2
        iterations += 1
        if iterations > MAX_ITERATIONS:
            break
    for _ in range(BISECTION_STEPS):
        if iterations > MAX_ITERATIONS:
            break
        mid = 0.5 * (u_lo + u_hi)
        if mean(mid) < lam:
            u_lo = mid
        else:
            u_hi = mid
        iterations += 1
    u = 0.5 * (u_lo + u_hi)
    for _ in range(NEWTON_STEPS):
        m, var = f.moments(u)
        if abs(m - lam) <= NEWTON_TOL * lam or var <= 0:
            break
        step = (m - lam) / var
        if not u_lo <= u - step <= u_hi:
            break
        u -= step
        iterations += 1
    if iterations > MAX_ITERATIONS:
        raise excepts.NumericError("no saddle point after %d iterations, "
                                   "lambda %r" % (iterations, lam))
    m = mean(u)
    residual = abs(m - lam) / lam
    if residual > RESIDUAL_TOL:
        raise excepts.NumericError("saddle residual %r at lambda %r" %
                                   (residual, lam))
    exponent = (f.log_value(u) - lam * u) / utils.LN2
    return SaddleSolution(lam, math.exp(u), exponent, log_mu=u,
                          residual=residual, iterations=iterations)


def saddle_solve(f, lam):
    """Saddle point exponent of the ball of radius lambda*n.

    Parameters
    ----------
    f : WeightEnumerator
    lam : float
        Normalized radius, 0 < lam <= largest weight.

    Returns
    -------
    SaddleSolution
        Clamped to log2 q when lam >= f'(1)/f(1).

    Raises
    ------
    DomainError
        lam out of range.
    NumericError
        No convergence in 200 iterations, residual above 1e-12.

    """
    return _solve(f, float(lam))


def theta_saddle(lam, truncation=THETA_TRUNCATION):
    """Saddle point of the truncated theta series 1 + 2 sum z^(i^2).

    Raises
    ------
    NumericError
        The dropped tail at mu exceeds 1e-18 of the truncated sum; the
        message names the degree that suffices.

    """
    f = WeightEnumerator.theta(truncation)
    sol = _solve(f, float(lam))
    u = sol.log_mu
    need = None
    if u >= 0:
        need = "unbounded"
    else:
        # tail <= 2 mu^((T+1)^2) / (1 - mu^(2T+3))
        t1 = truncation + 1
        log_tail = (utils.LN2 + t1 * t1 * u -
                    math.log1p(-math.exp((2 * t1 + 1) * u)))
        if log_tail - f.log_value(u) > math.log(TAIL_TOL):
            bound = math.log(TAIL_TOL) + f.log_value(u) - utils.LN2 - 1.0
            need = int(math.ceil(math.sqrt(bound / u)))
    if need is not None:
        raise excepts.NumericError(
            "theta truncation %d too short at lambda %r, need degree %s" %
            (truncation, lam, need))
    return sol


def gaussian_exponent(lam):
    """1/2 log2(2 pi e lambda): the continuous volume limit."""
    if not lam > 0:
        raise excepts.DomainError("lambda must be positive, got %r" % lam)
    return 0.5 * math.log2(2 * math.pi * math.e * lam)


def theta_defect(lam, truncation=THETA_TRUNCATION):
    """Theta saddle exponent minus the continuous volume exponent.

    Positive and close to 2 exp(-2 pi^2 lambda)/ln 2.
    """
    return theta_saddle(lam, truncation).exponent - gaussian_exponent(lam)


def large_alphabet_gap(lam, truncation=THETA_TRUNCATION):
    """Limit of the Gilbert-Yaglom rate minus R_L as q grows with
    lambda = s^2 rho fixed: 1 + 1/2 log2(lambda) - theta exponent."""
    return (1.0 + 0.5 * math.log2(lam) -
            theta_saddle(lam, truncation).exponent)
