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
Greedy Gilbert codes, Lee BCH codes, Reed-Solomon outer codes and their
concatenation.
"""

from unittest import mock

import numpy as np
from avocado import Test

from spherecodes.lib import codes
from spherecodes.lib import excepts
from spherecodes.lib import utils


class LinearCodeTest(Test):

    def test_dependent_rows(self):
        self.assertRaises(excepts.DomainError, codes.LinearCode, 5,
                          [[1, 2], [2, 4]], 1)

    def test_not_prime(self):
        self.assertRaises(excepts.DomainError, codes.LinearCode, 6,
                          [[1, 2]], 1)

    def test_parity_check(self):
        code = codes.LinearCode(5, [[1, 0, 2], [0, 1, 3]], 1)
        self.assertEqual(code.parity_check().shape, (1, 3))
        self.assertFalse(code.syndromes(code.codewords()).any())
        self.assertTrue(code.syndromes([[1, 0, 0]]).any())

    def test_codewords(self):
        code = codes.LinearCode(3, [[1, 1]], 2)
        self.assertEqual(code.codewords().tolist(), [[0, 0], [1, 1], [2, 2]])

    def test_scale_guard(self):
        code = codes.LinearCode(7, np.eye(9, dtype=np.int64), 1)
        self.assertRaises(excepts.ScaleGuardError, code.codewords)

    def test_nearest(self):
        code = codes.LinearCode(5, [[1, 2]], 2)
        word, dist = codes.nearest_codeword(code, [2, 4])
        self.assertEqual(word.tolist(), [2, 4])
        self.assertEqual(dist, 0)
        # [1, 1] is 1 from [1, 2] and [0, 0] is 2 from it
        word, dist = codes.nearest_codeword(code, [1, 1])
        self.assertEqual(word.tolist(), [1, 2])
        self.assertEqual(dist, 1)


class GilbertTest(Test):

    def test_whole_space(self):
        code = codes.greedy_gilbert(2, 3, 1)
        self.assertEqual(code.size, 8)

    def test_bound(self):
        self.assertEqual(codes.gilbert_lower_bound(3, 4, 3), 3)
        for q, n, d in ((3, 4, 3), (5, 3, 4), (4, 4, 5), (5, 4, 8)):
            code = codes.greedy_gilbert(q, n, d)
            self.assertGreaterEqual(code.size,
                                    codes.gilbert_lower_bound(q, n, d))
            self.assertGreaterEqual(codes.verify_min_distance(code).value, d)
            self.assertFalse(code.words[0].any())

    def test_lexicographic(self):
        words = codes.greedy_gilbert(3, 3, 2).words
        order = np.lexsort(words.T[::-1])
        self.assertEqual(order.tolist(), list(range(len(words))))

    def test_large_ball(self):
        # a radius d-1 ball over the listing limit falls back to a scan
        for q, n, d in ((3, 4, 3), (5, 3, 4), (4, 4, 5)):
            listed = codes.greedy_gilbert(q, n, d)
            with mock.patch.object(codes, "LOW_WEIGHT_LIMIT", 4):
                scanned = codes.greedy_gilbert(q, n, d)
            self.assertEqual(scanned.words.tolist(), listed.words.tolist())

    def test_guards(self):
        self.assertRaises(excepts.ScaleGuardError, codes.greedy_gilbert, 10,
                          8, 2)
        self.assertRaises(excepts.DomainError, codes.greedy_gilbert, 3, 2, 0)


class LeeBCHTest(Test):

    def test_generator(self):
        code = codes.lee_bch(7, 2)
        self.assertEqual((code.n, code.k), (6, 4))
        self.assertEqual(code.alpha, 3)
        # (z - 1)(z - 3) = z^2 + 3z + 3 over Z_7
        self.assertEqual(code.generator[0].tolist(), [3, 3, 1, 0, 0, 0])
        self.assertEqual(code.generator[3].tolist(), [0, 0, 0, 3, 3, 1])
        self.assertEqual(code.metric_floor, 4)

    def test_all_ones(self):
        # 1 is a root, so a codeword sums to 0 mod p
        for p, t in ((5, 2), (7, 2), (11, 4)):
            code = codes.lee_bch(p, t)
            self.assertTrue(code.syndromes(np.ones((1, p - 1))).any())

    def test_low_weight_word(self):
        # Lee weight 3, below the floor of 4
        code = codes.lee_bch(7, 2)
        self.assertTrue(code.syndromes([[0, 6, 0, 6, 0, 6]]).any())

    def admissible(self):
        """(p, t) with parity, p^(p-1-t) <= 10^6."""
        for p in (5, 7, 11, 13):
            for t in range(1, (p + 1) // 2 + 1):
                if (p - t - 1) % 2 == 0 and p ** (p - 1 - t) <= 10 ** 6:
                    yield p, t

    def test_floors(self):
        cases = list(self.admissible())
        self.assertEqual(cases, [(5, 2), (7, 2), (7, 4), (11, 6)])
        for p, t in cases:
            code = codes.lee_bch(p, t)
            self.assertEqual(code.metric_floor, 2 * t)
            for metric, (holds, res) in codes.lee_floor_holds(code).items():
                self.assertTrue(holds, "%r %s %r" % (code, metric, res))
                self.assertEqual(res.engine, codes.ENGINE_EXHAUSTIVE)

    def test_low_weight_engine(self):
        code = codes.lee_bch(7, 2)
        table = codes.weight_table(7)
        exact = codes.min_weights(code, ("euclid",))["euclid"].value
        self.assertEqual(codes.low_weight_min(code, table, exact).value,
                         exact)
        below = codes.low_weight_min(code, table, exact - 1)
        self.assertIsNone(below.value)
        self.assertEqual(below.guaranteed, exact)

    def test_large_code(self):
        code = codes.lee_bch(11, 2)
        found = codes.min_weights(code, ("lee", "euclid"))
        for res in found.values():
            self.assertEqual(res.engine, codes.ENGINE_LOW_WEIGHT)
            self.assertGreaterEqual(res.guaranteed, 4)

    def test_parity(self):
        self.assertRaises(excepts.DomainError, codes.lee_bch, 7, 3)
        code = codes.lee_bch(7, 1, check_parity=False)
        self.assertEqual((code.k, code.metric_floor), (5, 2))

    def test_bad_arguments(self):
        self.assertRaises(excepts.DomainError, codes.lee_bch, 3, 1)
        self.assertRaises(excepts.DomainError, codes.lee_bch, 9, 2)
        self.assertRaises(excepts.DomainError, codes.lee_bch, 7, 6)


class ReedSolomonTest(Test):

    def test_parameters(self):
        rs = codes.rs_code(7, 4, 8, 4)
        self.assertEqual(rs.distance, 5)
        self.assertEqual(rs.rate, 0.5)
        self.assertEqual(rs.size, 2401 ** 4)

    def test_witness(self):
        for k_out in (1, 2, 4):
            rs = codes.rs_code(7, 2, 8, k_out)
            weights = rs.weights(rs.distance_witness()[np.newaxis, :])
            self.assertEqual(weights.tolist(), [rs.distance])

    def test_min_distance(self):
        gen = utils.rng(1)
        rs = codes.rs_code(5, 2, 6, 3)
        msgs = rs.random_messages(500, gen)
        msgs = msgs[np.any(msgs != 0, axis=1)]
        weights = rs.weights(msgs)
        self.assertEqual(weights.dtype, np.int64)
        self.assertEqual(weights.shape, (msgs.shape[0],))
        self.assertGreaterEqual(int(weights.min()), rs.distance)

    def test_too_long(self):
        self.assertRaises(excepts.DomainError, codes.rs_code, 5, 1, 6, 2)
        self.assertRaises(excepts.DomainError, codes.rs_code, 7, 1, 4, 5)


class ConcatenationTest(Test):

    def test_pipeline(self):
        inner = codes.lee_bch(7, 2)
        code = codes.concatenate(codes.rs_code(7, 4, 8, 4), inner)
        self.assertEqual(code.n, 48)
        self.assertEqual(code.metric_floor, 20)
        gen = utils.rng(0)
        words = code.sample_words(50, gen)
        self.assertEqual(words.shape, (50, 48))
        blocks = words.reshape(-1, inner.n)
        self.assertFalse(inner.syndromes(blocks).any())
        md = code.sampled_min_distance(2000, gen)
        self.assertEqual(md.engine, codes.ENGINE_SAMPLED)
        self.assertGreaterEqual(md.value, 20)
        rho, rate = code.concatenation_rate()
        self.assertAlmostEqual(rho, 5 / 108.0, places=15)

    def test_exhaustive(self):
        inner = codes.lee_bch(5, 2)
        code = codes.concatenate(codes.rs_code(5, 2, 3, 2), inner)
        self.assertEqual(code.size, 625)
        md = codes.verify_min_distance(code)
        self.assertEqual(md.engine, codes.ENGINE_EXHAUSTIVE)
        self.assertGreaterEqual(md.value, code.metric_floor)

    def test_linear(self):
        code = codes.concatenate(codes.rs_code(7, 4, 8, 4),
                                 codes.lee_bch(7, 2))
        gen = utils.rng(5)
        m1 = code.random_messages(20, gen)
        m2 = code.random_messages(20, gen)
        self.assertTrue(np.array_equal(
            code.encode(m1 + m2), (code.encode(m1) + code.encode(m2)) % 7))

    def test_mismatch(self):
        self.assertRaises(excepts.DomainError, codes.concatenate,
                          codes.rs_code(7, 3, 8, 4), codes.lee_bch(7, 2))

    def test_binary_rate(self):
        self.assertEqual(codes.binary_rate(8, 3), 0.75)
