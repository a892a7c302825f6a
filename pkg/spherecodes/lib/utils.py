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

"""Common spherecodes utility functions.
"""

import logging
import math

import numpy as np

logger = logging.getLogger(__name__)

LN2 = math.log(2.0)
"""Natural logarithm of 2."""
LOG_FLOOR = -700.0
"""Below exp(LOG_FLOOR) a value is kept in log space only."""
DEFAULT_SEED = 0
"""Seed for every randomized check unless overridden."""

_YES = ("y", "yes", "t", "true", "on", "1")
_NO = ("n", "no", "f", "false", "off", "0")


def is_yes(string):
    """Interpret yes/no strings.

    Parameters
    ----------
    string : str
        String to check.

    Note
    ----
    True values are y, yes, t, true, on and 1; false values are n, no, f,
    false, off and 0. Raises ValueError if val is anything else.
    """
    val = str(string).strip().lower()
    if val in _YES:
        return True
    if val in _NO:
        return False
    raise ValueError("invalid truth value %r" % (string,))


def fmt(value):
    """Full precision text for a number: repr of floats round-trips."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    value = float(value)
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return repr(value)


def exp_or_none(x):
    """exp(x), or None when x is below the log-space floor."""
    if x < LOG_FLOOR:
        return None
    return math.exp(x)


def log2_int(value):
    """Base 2 logarithm of an arbitrarily large positive integer."""
    value = int(value)
    if value <= 0:
        raise ValueError("log2 of non-positive integer %d" % value)
    return math.log2(value)


def rng(seed=None):
    """Deterministic numpy generator, seeded with DEFAULT_SEED if None."""
    if seed is None:
        seed = DEFAULT_SEED
    return np.random.default_rng(int(seed))


def linspace(lo, hi, samples):
    """Uniform samples including both ends; one sample gives lo."""
    samples = int(samples)
    if samples == 1:
        return [float(lo)]
    step = (float(hi) - float(lo)) / (samples - 1)
    return [float(lo) + i * step for i in range(samples)]


def mixed_radix(q, n):
    """Powers q^(n-1), ..., q, 1: dot with a word gives its lex index."""
    return q ** np.arange(n - 1, -1, -1, dtype=np.int64)


def all_words(q, n):
    """All q^n words of Z_q^n in lexicographic order, shape (q^n, n)."""
    idx = np.arange(q ** n, dtype=np.int64)
    return (idx[:, None] // mixed_radix(q, n)[None, :]) % q
