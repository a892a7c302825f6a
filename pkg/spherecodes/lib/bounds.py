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

"""Rate bounds for spherical codes as functions of the squared minimum
distance rho.

Every curve has a ``*_log`` form taking x = ln(rho); rho itself is never
formed below exp(-700). Rates are binary rates per dimension.

Notation
--------
R_S
    Shannon curve 1 - 1/2 log2(rho (4 - rho)).
R_L
    Lattice curve -1/2 log2(rho).
TVZ line
    Rate of Yaglom mapped concatenations of geometric codes over GF(p^k)
    with Lee metric BCH inner codes of length p-1 and t roots.
Region
    Points (x, y = ln p) where the TVZ line lies above the tangent of
    lambda*R_L at x.

"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from spherecodes.lib import counting
from spherecodes.lib import euclid
from spherecodes.lib import excepts
from spherecodes.lib import primes
from spherecodes.lib import reg
from spherecodes.lib import utils

logger = logging.getLogger(__name__)

LN4 = math.log(4.0)
LATTICE_SHIFT = 1.30
COROLLARY_LAMBDA = 0.98
EXP_GUARD = 700.0
"""exp() arguments above this are treated as +inf."""
F_Q_CLAMP = 60 * math.log(10)
"""f_Q is 1 once its exponent (p-t-1)/2 * ln p exceeds this."""
ROOT_STEPS = 200


@dataclass(frozen=True)
class BoundPoint(object):
    """One curve sample. rho is None below exp(-700)."""
    x: float
    rate: float
    curve: str = ""

    @property
    def rho(self):
        return utils.exp_or_none(self.x)


def _log_rho(rho):
    if not rho > 0:
        raise excepts.DomainError("rho must be positive, got %r" % (rho,))
    return math.log(rho)


def shannon_rate_log(x):
    """R_S at rho = e^x, x < ln 4."""
    if not x < LN4:
        raise excepts.DomainError("rho outside (0, 4): ln(rho) = %r" % x)
    # ln(4 - e^x) = ln 4 + log1p(-e^x / 4)
    return 1.0 - (x + LN4 + math.log1p(-math.exp(x) / 4.0)) / (2 * utils.LN2)


def shannon_rate(rho):
    """Shannon curve R_S(rho) = 1 - 1/2 log2(rho (4 - rho)), 0 < rho < 4.

    Examples
    --------
    >>> shannon_rate(2.0)
    0.0

    """
    if not 0 < rho < 4:
        raise excepts.DomainError("rho outside (0, 4): %r" % (rho,))
    # 4 - rho is exact near 4, e^ln(rho) is not
    return 1.0 - (math.log(rho) + math.log(4.0 - rho)) / (2 * utils.LN2)


def lattice_rate_log(x):
    return -x / (2 * utils.LN2)


def lattice_rate(rho):
    """R_L(rho) = -1/2 log2(rho)."""
    return lattice_rate_log(_log_rho(rho))


def lattice_shifted_rate_log(x):
    return lattice_rate_log(x) - LATTICE_SHIFT


def lattice_shifted_rate(rho):
    """R_L(rho) - 1.30."""
    return lattice_rate(rho) - LATTICE_SHIFT


def lachaud_stern_rate_log(x):
    return 0.5 * shannon_rate_log(x)


def lachaud_stern_rate(rho):
    """Half the Shannon curve."""
    return 0.5 * shannon_rate(rho)


def shannon_lattice_gap(rho):
    """R_S - R_L = -1/2 log2(1 - rho/4), exactly."""
    if not 0 < rho < 4:
        raise excepts.DomainError("rho outside (0, 4): %r" % (rho,))
    return -0.5 * math.log1p(-rho / 4.0) / utils.LN2


def gilbert_yaglom_rate_log(q, x):
    """Gilbert-Yaglom rate at rho = e^x, 0 < rho <= 1.

    The saddle point is taken at lambda = a*rho, a the squared radius of
    the constellation. Past the clamp of the saddle solver the rate is 0.
    """
    if x > 0:
        raise excepts.DomainError("rho must be <= 1, got ln(rho) = %r" % x)
    c = euclid.Constellation.for_q(q)
    lam = float(c.a) * math.exp(x)
    if lam == 0.0:
        return math.log2(q)
    sol = counting.saddle_solve(counting.enumerator(q), lam)
    if sol.clamped:
        return 0.0
    return math.log2(q) - sol.exponent


def gilbert_yaglom_rate(q, rho):
    """log2 q - log2 f(mu) + a rho log2 mu with mu f'(mu) = a rho f(mu).

    Raises
    ------
    DomainError
        rho outside (0, 1].

    """
    if not 0 < rho <= 1:
        raise excepts.DomainError("rho outside (0, 1]: %r" % (rho,))
    return gilbert_yaglom_rate_log(q, math.log(rho))


@dataclass(frozen=True)
class TVZParams(object):
    """Prime p, number of roots t of the inner code, scaling lambda.

    Raises
    ------
    DomainError
        p < 7, t outside [1, (p+1)/2] or p + t even.

    """
    p: int
    t: int
    lam: float = COROLLARY_LAMBDA

    def __post_init__(self):
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(self, "t", int(self.t))
        if self.p < 7:
            raise excepts.DomainError("TVZ line needs p >= 7, got %d" % self.p)
        if not 1 <= self.t <= (self.p + 1) // 2:
            raise excepts.DomainError("t must be in [1, (p+1)/2], got %d" %
                                      self.t)
        if (self.p - self.t - 1) % 2:
            raise excepts.DomainError("p must be congruent to t+1 mod 2")

    @classmethod
    def from_tau(cls, p, tau, lam=COROLLARY_LAMBDA):
        """Nearest t to tau*(p-1) with the parity of p+1."""
        if not 0 < tau < 1:
            raise excepts.DomainError("tau outside (0, 1): %r" % (tau,))
        p = int(p)
        target = Fraction(str(tau)) * (p - 1)
        t = int(round(target))
        if (p - t - 1) % 2:
            t = t + 1 if t + 1 - target <= target - (t - 1) else t - 1
        while t < 1:
            t += 2
        return cls(p, t, lam)

    @classmethod
    def large_example(cls, lam=COROLLARY_LAMBDA):
        """Instance of the 137 digit prime."""
        return cls.from_tau(primes.LARGE_P, primes.LARGE_TAU, lam)

    @property
    def y(self):
        """ln p."""
        return math.log(self.p)

    @property
    def tau(self):
        return self.t / (self.p - 1)

    @property
    def log_f_q(self):
        """ln f_Q, f_Q = 1 - 1/(p^((p-t-1)/2) - 1); 0 when clamped."""
        k = (self.p - self.t - 1) // 2
        if k * self.y > F_Q_CLAMP:
            logger.debug("f_Q clamped to 1: exponent %r > %r", k * self.y,
                         F_Q_CLAMP)
            return 0.0
        return math.log1p(-1.0 / (self.p ** k - 1))

    @property
    def slope_scale(self):
        """(p-t-1) log2 p / (p-1), the rate at rho = 0 over f_Q."""
        return (1.0 - self.tau) * self.y / utils.LN2

    @property
    def log_intercept(self):
        """ln of the rho-intercept 8 t f_Q / (p-1)^3."""
        return (math.log(8 * self.t) + self.log_f_q -
                3 * math.log(self.p - 1))


def tvz_line_log(params, x):
    """TVZ line at rho = e^x: K (f_Q - rho (p-1)^3 / (8t)).

    May be negative past the rho-intercept.
    """
    f_q = math.exp(params.log_f_q)
    log_term = x + 3 * math.log(params.p - 1) - math.log(8 * params.t)
    if log_term > EXP_GUARD:
        return -math.inf
    return params.slope_scale * (f_q - math.exp(log_term))


def tvz_line(params, rho):
    """TVZ line rate at rho >= 0.

    Examples
    --------
    p = 7, t = 2, rho = 0 gives 4/6 log2(7) 47/48 = 1.8326...

    """
    if rho < 0:
        raise excepts.DomainError("rho must be >= 0, got %r" % rho)
    if rho == 0:
        return tvz_line_log(params, -math.inf)
    return tvz_line_log(params, math.log(rho))


@dataclass(frozen=True)
class TangentLine(object):
    """X/A + Y/B = 1, the tangent of lambda*R_L at rho0 = e^x0.

    A = rho0 (1 - ln rho0) is kept as its logarithm log_a.
    """
    log_a: float
    B: float
    x0: float
    lam: float

    @property
    def A(self):
        return utils.exp_or_none(self.log_a)

    @property
    def rho0(self):
        return utils.exp_or_none(self.x0)

    def rate_log(self, x):
        """Y of the line at X = e^x."""
        d = x - self.log_a
        if d > EXP_GUARD:
            return -math.inf
        return self.B * (1.0 - math.exp(d))

    def rate(self, rho):
        return self.rate_log(_log_rho(rho))


def tangent_line(x0=None, lam=COROLLARY_LAMBDA, rho0=None):
    """Tangent of (rho, lambda*R_L(rho)) at rho0.

    Parameters
    ----------
    x0 : float
        ln(rho0); give this or rho0.
    lam : float
    rho0 : float, optional

    Raises
    ------
    DomainError
        rho0 >= e, the intercept A is not positive.

    """
    if x0 is None:
        if rho0 is None:
            raise excepts.DomainError("tangent needs x0 or rho0")
        x0 = _log_rho(rho0)
    if not x0 < 1:
        raise excepts.DomainError("tangent degenerate: ln(rho0) = %r >= 1" %
                                  x0)
    return TangentLine(log_a=x0 + math.log1p(-x0),
                       B=lam * (1 - x0) / (2 * utils.LN2),
                       x0=x0, lam=lam)


def _region_domain(x, y):
    if not y > 0:
        raise excepts.DomainError("y = ln p must be positive, got %r" % y)
    if not x < 1:
        raise excepts.DomainError("x must be < 1, got %r" % x)


def region_residual(x, y, lam=COROLLARY_LAMBDA):
    """F = exp(x+2y)(1-x) + 4 lambda (1-x)/y - 8; feasible iff F <= 0.

    Returns +inf when x + 2y > 700.
    """
    _region_domain(x, y)
    if x + 2 * y > EXP_GUARD:
        return math.inf
    return math.exp(x + 2 * y) * (1 - x) + 4 * lam * (1 - x) / y - 8


def tau_window(x, y, lam=COROLLARY_LAMBDA):
    """(tau_lo, tau_hi): the t/(p-1) for which the TVZ line dominates the
    tangent at x. Nonempty iff region_residual <= 0."""
    _region_domain(x, y)
    if x + 2 * y > EXP_GUARD:
        lo = math.inf
    else:
        lo = (1 - x) * math.exp(x + 2 * y) / 8
    return lo, 1 - lam * (1 - x) / (2 * y)


def _bisect(func, lo, hi, steps=ROOT_STEPS):
    """Root of func on [lo, hi], signs at the ends differ."""
    f_lo = func(lo)
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        f_mid = func(mid)
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def tau_admissible_interval(tau, y, lam=COROLLARY_LAMBDA):
    """x-interval on which tau lies inside tau_window(x, y).

    The upper window bound gives x >= 1 - 2y(1-tau)/lambda; the lower one
    gives x + ln(1-x) <= ln(8 tau) - 2y, increasing in x < 0.

    Returns
    -------
    tuple or None
        (x_lo, x_hi), None when empty.

    """
    if not 0 < tau < 1:
        raise excepts.DomainError("tau outside (0, 1): %r" % (tau,))
    x_lo = 1 - 2 * y * (1 - tau) / lam
    target = math.log(8 * tau) - 2 * y
    if target >= 0:
        x_hi = 0.0
    else:
        def g(x):
            return x + math.log1p(-x) - target
        left = target
        while g(left) > 0:
            left *= 2
        x_hi = _bisect(g, left, 0.0)
    if x_lo > x_hi:
        return None
    return x_lo, x_hi


def tvz_tangent_margin(params, x, lam=None):
    """TVZ line minus lambda*R_L at x: how far the TVZ line is above the
    tangent of lambda*R_L at its tangency point."""
    lam = params.lam if lam is None else lam
    return tvz_line_log(params, x) - lam * lattice_rate_log(x)


def tangency_point(params, lam=None):
    """x where tvz_tangent_margin is largest; the TVZ line is then
    parallel to the tangent there."""
    lam = params.lam if lam is None else lam
    # K rho (p-1)^3/(8t) = lambda/(2 ln 2) at the optimum
    return (math.log(lam / (2 * utils.LN2 * params.slope_scale)) +
            math.log(8 * params.t) - 3 * math.log(params.p - 1))


def dominance_interval(params, lam=None):
    """x-interval where the TVZ line is above lambda*R_L.

    Returns
    -------
    tuple or None
        Roots of the margin around the tangency point, None when the
        margin is not positive anywhere.

    """
    lam = params.lam if lam is None else lam
    x_star = tangency_point(params, lam)

    def margin(x):
        return tvz_tangent_margin(params, x, lam)

    if margin(x_star) <= 0:
        logger.info("TVZ line never above %r R_L.", lam)
        return None
    width = 1e-3
    while margin(x_star - width) > 0:
        width *= 2
    left = _bisect(margin, x_star - width, x_star)
    width = 1e-3
    while margin(x_star + width) > 0:
        width *= 2
    right = _bisect(margin, x_star, x_star + width)
    return left, right


def corollary_margin_log(x):
    """R_L - 1.30 - 0.98 R_S at rho = e^x."""
    return (lattice_shifted_rate_log(x) -
            COROLLARY_LAMBDA * shannon_rate_log(x))


def envelope_point_log(x, c):
    """Envelope of the TVZ lines at x for x + 2y = c, 8 tau = (1-x) e^c.

    Returns
    -------
    tuple
        (rate, y, tau).

    Raises
    ------
    DomainError
        x >= 0, y <= 0 or tau outside (0, 1).

    """
    if not x < 0:
        raise excepts.DomainError("envelope needs x < 0, got %r" % x)
    y = (c - x) / 2.0
    if not y > 0:
        raise excepts.DomainError("envelope needs y = (c-x)/2 > 0, got %r" % y)
    log_tau = math.log1p(-x) + c - math.log(8)
    if not log_tau < 0:
        raise excepts.DomainError("envelope needs tau = (1-x)e^c/8 < 1, "
                                  "got %r" % math.exp(min(log_tau, EXP_GUARD)))
    tau = math.exp(log_tau)
    rate = (1 - 1 / (1 - x)) * (1 - tau) * y / utils.LN2
    return rate, y, tau


def envelope_point(x, c, lam=COROLLARY_LAMBDA):
    """Envelope as a BoundPoint. lam is the scale of the Shannon curve it is
    compared with and does not enter the rate."""
    rate = envelope_point_log(x, c)[0]
    return BoundPoint(x, rate, "envelope")


def envelope_slope_log(x, c):
    """d ln R / dx of the envelope: negative where the rate decreases."""
    tau = envelope_point_log(x, c)[2]
    return (1.0 / (x * (1 - x)) - 1.0 / (c - x) +
            math.exp(c) / (8 * (1 - tau)))


def envelope_sweep(lam, c_values, x_values):
    """Where the envelope is above lambda*R_S.

    Returns
    -------
    dict
        c -> list of (x_first, x_last) runs of consecutive x_values on
        which the envelope is defined and strictly above lam*R_S.

    """
    found = {}
    for c in c_values:
        runs, start, last = [], None, None
        for x in x_values:
            try:
                above = (envelope_point_log(x, c)[0] >
                         lam * shannon_rate_log(x))
            except excepts.DomainError:
                above = False
            if above and start is None:
                start = x
            if not above and start is not None:
                runs.append((start, last))
                start = None
            last = x
        if start is not None:
            runs.append((start, last))
        found[c] = runs
        if runs:
            logger.info("Envelope c=%r above %r R_S on %s", c, lam, runs)
    return found


def concatenation_line(rho, n, k, q, d_e):
    """Rate of the concatenation line at rho.

    Inner [n, k] code over Z_q of squared Euclidean distance d_e, outer
    codes over GF(q^k) on the TVZ line:

        R n / (k log2 q) + rho n s^2 / d_e = 1 - 1/(q^(k/2) - 1)

    """
    s = euclid.Constellation.for_q(q).s
    defect = 1.0 / (q ** (k / 2.0) - 1)
    return math.log2(q) * k / n * (1 - defect - rho * n * s * s / d_e)


def concatenation_rate(n, k, q, d_e, outer_rate, outer_delta):
    """(rho floor, binary rate) of one concatenation instance.

    rho >= Delta d_e / (n s^2) and R = log2(q) k/n * outer rate.
    """
    s = euclid.Constellation.for_q(q).s
    return (outer_delta * d_e / (n * s * s),
            math.log2(q) * k / n * outer_rate)


def emit_curve(kind, params, x_min, x_max, samples):
    """Sample a registered curve kind uniformly in x = ln(rho).

    Parameters
    ----------
    kind : str
        Curve kind registered with reg.add_curve.
    params : dict
        Kind parameters (lambda, q, p, t, tau, c, x0).
    x_min, x_max : float
    samples : int

    Returns
    -------
    list of BoundPoint
        Negative rates and points outside the curve domain are skipped.

    Raises
    ------
    UsageError
        Unknown kind, bad range.

    """
    curve = reg.curve(kind)
    if curve is None:
        raise excepts.UsageError("unknown curve kind %r, known: %s" %
                                 (kind, ", ".join(reg.curve_kinds())))
    if int(samples) < 1:
        raise excepts.UsageError("samples must be >= 1, got %r" % samples)
    if x_min > x_max:
        raise excepts.UsageError("x range is empty: %r > %r" % (x_min, x_max))
    points = []
    for x in utils.linspace(x_min, x_max, samples):
        try:
            rate = curve(x, params)
        except excepts.DomainError as excp:
            logger.debug("Skip %s at x=%r: %s", kind, x, excp)
            continue
        if rate is None or rate < 0:
            logger.debug("Skip %s at x=%r: rate %r", kind, x, rate)
            continue
        points.append(BoundPoint(x, rate, kind))
    return points
