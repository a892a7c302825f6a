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
Lifting codes over Z_q onto the unit sphere.
"""

import math

import numpy as np
from avocado import Test

from spherecodes.lib import codes
from spherecodes.lib import excepts
from spherecodes.lib import spherical
from spherecodes.lib import utils


class SphericalTest(Test):

    def test_ternary_line(self):
        result = spherical.to_spherical([[0], [1], [2]], 3)
        self.assertEqual(result.dimension, 2)
        self.assertEqual(result.label, "exhaustive")
        self.assertAlmostEqual(result.rho, 2.0, places=12)
        self.assertTrue(np.allclose(result.points,
                                    [[0, 1], [1, 0], [-1, 0]]))

    def test_unit_norms(self):
        for q, n in ((2, 3), (4, 2), (7, 3)):
            pts = spherical.unit_points(utils.all_words(q, n), q)
            self.assertEqual(pts.shape, (q ** n, n + 1))
            self.assertTrue(np.allclose(np.linalg.norm(pts, axis=1), 1.0,
                                        atol=1e-12))

    def test_floor(self):
        code = codes.greedy_gilbert(5, 3, 4)
        result = spherical.to_spherical(code.words, 5, code.metric_floor)
        a = 4.0
        self.assertAlmostEqual(result.rho_floor, 4 / (3 * a))
        self.assertGreaterEqual(result.rho, result.rho_floor - 1e-12)

    def test_sampled(self):
        words = utils.all_words(3, 3)[:10]
        result = spherical.to_spherical(words, 3, size=27)
        self.assertEqual(result.label, "sampled")
        self.assertEqual(result.size, 27)
        self.assertAlmostEqual(result.binary_rate, math.log2(27) / 4)

    def test_single_word(self):
        result = spherical.to_spherical([[1, 2]], 5)
        self.assertIsNone(result.rho)
        self.assertEqual(result.summary()["points"], 1)

    def test_workers(self):
        words = utils.all_words(5, 3)
        one = spherical.to_spherical(words, 5, workers=1)
        four = spherical.to_spherical(words, 5, workers=4)
        self.assertEqual(one.rho, four.rho)

    def test_empty(self):
        self.assertRaises(excepts.DomainError, spherical.to_spherical,
                          np.zeros((0, 3)), 5)
