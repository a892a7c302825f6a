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

"""
Weight enumerators, exact ball sizes and saddle point exponents.
"""

import math

import numpy as np
from avocado import Test

from spherecodes.lib import counting
from spherecodes.lib import euclid
from spherecodes.lib import excepts
from spherecodes.lib import utils


def brute_ball(q, n):
    c = euclid.Constellation.for_q(q)
    weights = euclid.word_weights(c, utils.all_words(q, n))
    return np.bincount(weights)


class EnumeratorTest(Test):

    def test_examples(self):
        self.assertEqual(counting.enumerator(5).coeffs, {0: 1, 1: 2, 4: 2})
        self.assertEqual(counting.enumerator(3).coeffs, {0: 1, 1: 2})
        self.assertEqual(counting.enumerator(4).coeffs, {0: 1, 1: 2, 4: 1})

    def test_mass_and_symmetry(self):
        for q in range(2, 20):
            f = counting.enumerator(q)
            self.assertEqual(f.total, q)
            self.assertEqual(f.coeffs[0], 1)
            table = euclid.Constellation.for_q(q).weight_table()
            self.assertEqual(f.coeffs, dict(zip(*np.unique(
                table, return_counts=True))))

    def test_bad_q(self):
        self.assertRaises(excepts.DomainError, counting.enumerator, 1)

    def test_theta(self):
        f = counting.WeightEnumerator.theta(3)
        self.assertEqual(f.coeffs, {0: 1, 1: 2, 4: 2, 9: 2})
        self.assertEqual(f.q, 0)


class BallSizeTest(Test):

    def test_examples(self):
        self.assertEqual(counting.ball_size(5, 1, 1), 3)
        self.assertEqual(counting.ball_size(7, 3, 0), 1)
        self.assertEqual(counting.ball_size(3, 4, 2), 33)

    def test_exhaustive(self):
        for q in range(2, 9):
            for n in range(1, 5):
                c = euclid.Constellation.for_q(q)
                top = n * c.max_weight
                expected = np.cumsum(brute_ball(q, n))
                got = counting.ball_sizes(q, n, top)
                self.assertEqual(got, [int(v) for v in expected])
                self.assertEqual(got[-1], q ** n)

    def test_monotone(self):
        for n in (1, 3, 5):
            sizes = counting.ball_sizes(6, n, 40)
            self.assertEqual(sizes, sorted(sizes))
            for q in range(2, 9):
                self.assertLessEqual(counting.ball_size(q, n, 7),
                                     counting.ball_size(q + 1, n, 7))

    def test_beyond_max(self):
        self.assertEqual(counting.ball_size(3, 2, 100), 9)

    def test_bad_args(self):
        self.assertRaises(excepts.DomainError, counting.ball_size, 3, 0, 1)
        self.assertRaises(excepts.DomainError, counting.ball_size, 3, 2, -1)


class SaddleTest(Test):

    def test_q3_closed_form(self):
        sol = counting.saddle_solve(counting.enumerator(3), 0.5)
        self.assertAlmostEqual(sol.mu, 0.5, delta=1e-12)
        self.assertAlmostEqual(sol.exponent, 1.5, delta=1e-12)
        self.assertFalse(sol.clamped)
        for lam in (0.05, 0.2, 0.6):
            sol = counting.saddle_solve(counting.enumerator(3), lam)
            self.assertAlmostEqual(sol.mu, lam / (2 * (1 - lam)),
                                   delta=1e-12 * sol.mu)

    def test_q5_closed_form(self):
        sol = counting.saddle_solve(counting.enumerator(5), 1.0)
        self.assertAlmostEqual(sol.mu, 6 ** -0.25, delta=1e-13)

    def test_residual_and_bracket(self):
        for q in (2, 3, 4, 5, 7, 8, 11, 16):
            f = counting.enumerator(q)
            for frac in (0.01, 0.3, 0.7, 0.99):
                lam = frac * f.mean_weight
                sol = counting.saddle_solve(f, lam)
                mu = sol.mu
                resid = mu * f.derivative(mu) - lam * f.value(mu)
                self.assertLessEqual(abs(resid), 1e-12 * lam * f.value(mu))
                self.assertLess(f.moments(math.log(mu / 2))[0], lam)
                self.assertGreater(f.moments(math.log(2 * mu))[0], lam)
                self.assertGreaterEqual(sol.exponent, 0.0)
                self.assertLessEqual(sol.exponent, math.log2(q) + 1e-12)

    def test_small_lambda(self):
        sol = counting.saddle_solve(counting.enumerator(5), 1e-9)
        self.assertLess(sol.exponent, 1e-6)

    def test_clamp(self):
        f = counting.enumerator(3)
        sol = counting.saddle_solve(f, 0.9)
        self.assertTrue(sol.clamped)
        self.assertEqual(sol.exponent, math.log2(3))

    def test_out_of_range(self):
        f = counting.enumerator(3)
        self.assertRaises(excepts.DomainError, counting.saddle_solve, f, 0.0)
        self.assertRaises(excepts.DomainError, counting.saddle_solve, f, -1)
        self.assertRaises(excepts.DomainError, counting.saddle_solve, f, 1.5)

    def test_ball_convergence(self):
        n = 2000
        exponent = counting.ball_exponent(3, n, n // 2)
        self.assertAlmostEqual(exponent, 1.5, delta=0.02)


class ThetaTest(Test):

    def test_large_q_agreement(self):
        theta = counting.theta_saddle(0.5, 64)
        finite = counting.saddle_solve(counting.enumerator(101), 0.5)
        self.assertAlmostEqual(theta.mu, finite.mu, delta=1e-12)

    def test_small_lambda(self):
        self.assertLess(counting.theta_saddle(1e-9).exponent, 1e-6)

    def test_truncation_too_short(self):
        self.assertRaises(excepts.NumericError, counting.theta_saddle,
                          50.0, 4)

    def test_defect_constant(self):
        # first Poisson summation correction of the theta series
        expected = 2 * math.exp(-2 * math.pi ** 2) / math.log(2)
        defect = counting.theta_defect(1.0)
        self.assertGreater(defect, 0.0)
        self.assertLessEqual(defect, 1e-7)
        self.assertAlmostEqual(defect / expected, 1.0, delta=1e-3)

    def test_gap_limit(self):
        limit = 1 - 0.5 * math.log2(2 * math.pi * math.e)
        for lam in (1.0, 2.0, 4.0):
            self.assertAlmostEqual(counting.large_alphabet_gap(lam), limit,
                                   delta=1e-6)
