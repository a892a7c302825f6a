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
Prime and extension fields through galois.
"""

import galois
import numpy as np
from avocado import Test

from spherecodes.lib import excepts
from spherecodes.lib import fields


class PrimeFieldTest(Test):

    def test_order(self):
        for p in (2, 5, 7, 11):
            self.assertEqual(fields.prime_field(p).order, p)

    def test_not_prime(self):
        for n in (0, 1, 9, 91):
            self.assertRaises(excepts.DomainError, fields.prime_field, n)

    def test_primitive_root(self):
        self.assertEqual(fields.primitive_root(5), 2)
        self.assertEqual(fields.primitive_root(7), 3)
        self.assertEqual(fields.primitive_root(11), 2)
        gf = fields.prime_field(7)
        powers = set(int(v) for v in gf(3) ** np.arange(6))
        self.assertEqual(powers, set(range(1, 7)))


class ExtensionFieldTest(Test):

    def test_order(self):
        self.assertEqual(fields.extension_field(7, 4).order, 2401)
        self.assertEqual(fields.extension_field(5, 1).order, 5)
        self.assertRaises(excepts.DomainError, fields.extension_field, 7, 0)

    def test_modulus(self):
        self.assertEqual(fields.modulus(2, 3), galois.Poly([1, 0, 1, 1]))
        poly = fields.modulus(7, 4)
        self.assertEqual(poly.degree, 4)
        self.assertEqual(int(poly.coeffs[0]), 1)
        self.assertTrue(fields.is_irreducible(poly))

    def test_axioms(self):
        for p, k in ((2, 3), (5, 2), (7, 4)):
            failures = fields.axioms_hold(fields.extension_field(p, k))
            self.assertEqual(sum(failures.values()), 0)

    def test_cached(self):
        self.assertIs(fields.extension_field(7, 4),
                      fields.extension_field(7, 4))


class FieldElementTest(Test):

    def test_vector_form(self):
        gf = fields.extension_field(7, 4)
        for value in (0, 1, 8, 2400):
            elem = fields.FieldElement.from_field(gf(value))
            self.assertEqual(elem.k, 4)
            self.assertEqual(elem.p, 7)
            self.assertEqual(elem.to_field(), gf(value))

    def test_bad_coefficient(self):
        self.assertRaises(excepts.DomainError, fields.FieldElement, (7, 0),
                          7)
