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

"""Miller-Rabin primality for arbitrary precision integers.
"""

import logging
import random

from spherecodes.lib import utils

logger = logging.getLogger(__name__)

LARGE_P = int(
    "5432455719452623343140299649993224712642268405087"
    "972148236533041723675544652674874508958455203602044198462638584629866"
    "4106668659730094751")
"""137 digit prime of the attainable region example."""
LARGE_TAU = 0.00155359
"""t/(p-1) of the attainable region example."""
LARGE_X = -640.48
"""ln(rho) of the attainable region example."""

DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
DETERMINISTIC_LIMIT = 3317044064679887385961981
"""The bases above decide every n below this bound."""


def _is_witness(a, d, s, n):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = pow(x, 2, n)
        if x == n - 1:
            return False
    return True


def primality_check(n, rounds=64, seed=None):
    """Miller-Rabin test.

    Parameters
    ----------
    n : int
        Candidate, arbitrary precision.
    rounds : int
        Random bases tried when n is above the deterministic range.
    seed : int, optional
        Seed of the base generator, utils.DEFAULT_SEED by default.

    Returns
    -------
    bool
        Exact below 3.3e24, otherwise wrong with probability < 4^-rounds
        for a composite n.

    """
    n = int(n)
    if n < 2:
        return False
    for small in DETERMINISTIC_BASES:
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < DETERMINISTIC_LIMIT:
        bases = DETERMINISTIC_BASES
    else:
        gen = random.Random(utils.DEFAULT_SEED if seed is None else seed)
        bases = [gen.randrange(2, n - 1) for _ in range(rounds)]
    for a in bases:
        if _is_witness(a, d, s, n):
            if n >= DETERMINISTIC_LIMIT:
                logger.info("Composite: witness %d for %d digit number.", a,
                            len(str(n)))
            return False
    return True
