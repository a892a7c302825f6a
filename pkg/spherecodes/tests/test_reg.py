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
Curve kinds and criterion groups in the zope registry.
"""

from avocado import Test

from spherecodes.lib import bounds
from spherecodes.lib import criteria
from spherecodes.lib import curves
from spherecodes.lib import excepts
from spherecodes.lib import groups
from spherecodes.lib import reg


class CurveRegistryTest(Test):

    def test_kinds(self):
        kinds = reg.curve_kinds()
        for kind in ("shannon", "lattice", "lattice_shifted",
                     "lachaud_stern", "gilbert_yaglom", "tvz_line", "tvz",
                     "envelope", "scaled_shannon", "scaled_lattice",
                     "tangent"):
            self.assertIn(kind, kinds)
        self.assertIsNone(reg.curve("nope"))
        self.assertIs(reg.curve("shannon"), curves.shannon)

    def test_provides(self):
        self.assertTrue(reg.ICurve.providedBy(curves.lattice))
        self.assertTrue(reg.ICriterion.providedBy(criteria.theta_defect))

    def test_alias(self):
        params = {"p": 7, "t": 2}
        self.assertEqual(reg.curve("tvz")(-3.0, params),
                         reg.curve("tvz_line")(-3.0, params))

    def test_tau_param(self):
        params = curves.tvz_params({"p": 11, "tau": 0.3})
        self.assertEqual(params.t, 4)

    def test_missing_param(self):
        self.assertRaises(excepts.UsageError, reg.curve("envelope"), -5.0,
                          {})
        self.assertRaises(excepts.UsageError, reg.curve("gilbert_yaglom"),
                          -1.0, {"q": None})
        self.assertRaises(excepts.UsageError, reg.curve("tvz_line"), -1.0,
                          {"p": 7})

    def test_scaled(self):
        params = {"lambda": 0.5}
        self.assertEqual(reg.curve("scaled_shannon")(-2.0, params),
                         0.5 * bounds.shannon_rate_log(-2.0))
        line = reg.curve("tangent")(-3.0, {"lambda": 0.98, "x0": -3.0})
        self.assertAlmostEqual(line, 0.98 * bounds.lattice_rate_log(-3.0))


class GroupTest(Test):

    def names(self, marker):
        iface = groups.lookup(marker)
        return set(name for name, _ in
                   reg.registry.lookupAll([iface], reg.ICriterion))

    def test_markers(self):
        markers = groups.markers()
        for marker in ("counting", "saddle", "bounds", "corollary", "region",
                       "tangent", "primality", "large", "thm8", "lee",
                       "gilbert", "concat", "yaglom", "envelope", "theta",
                       "construct", "all"):
            self.assertIn(marker, markers)
        self.assertIsNone(groups.lookup("nope"))

    def test_composite(self):
        self.assertEqual(self.names("large"),
                         set(["region_boundary", "tvz_above_tangent",
                              "large_prime"]))
        self.assertIs(groups.lookup("thm8"), groups.lookup("large"))
        self.assertEqual(self.names("construct"),
                         set(["lee_bch_floors", "gilbert_bound",
                              "concatenated_pipeline", "yaglom_expansion"]))
        self.assertEqual(self.names("all"), set(criteria.ORDER))

    def test_select(self):
        self.assertEqual([name for name, _ in criteria.select("saddle")],
                         ["saddle_exponent"])
        self.assertEqual([name for name, _ in criteria.select("large")],
                         ["region_boundary", "tvz_above_tangent",
                          "large_prime"])
        self.assertEqual([name for name, _ in criteria.select("theta_defect")],
                         ["theta_defect"])
        self.assertEqual([name for name, _ in criteria.select()],
                         list(criteria.ORDER))
        self.assertRaises(excepts.UsageError, criteria.select, "nope")
