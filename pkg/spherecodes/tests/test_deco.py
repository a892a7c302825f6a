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
Logging decorator.
"""

import logging

from avocado import Test

from spherecodes.lib import deco
from spherecodes.lib import excepts


@deco.log(level=logging.INFO, name="spherecodes.test")
def double(x):
    """Twice x."""
    return 2 * x


@deco.log(level=logging.INFO, name="spherecodes.test")
def refuse(x):
    raise excepts.DomainError("no %r" % x)


class LogTest(Test):

    def test_wraps(self):
        self.assertEqual(double.__name__, "double")
        self.assertEqual(double.__doc__, "Twice x.")
        self.assertFalse(hasattr(double, "last_seconds"))

    def test_enter_exit(self):
        with self.assertLogs("spherecodes.test", logging.INFO) as logs:
            self.assertEqual(double(3), 6)
        self.assertEqual(len(logs.output), 2)
        self.assertIn("Entering double", logs.output[0])
        self.assertIn("Exiting double", logs.output[1])

    def test_exit_on_error(self):
        with self.assertLogs("spherecodes.test", logging.INFO) as logs:
            self.assertRaises(excepts.DomainError, refuse, 1)
        self.assertIn("Exiting refuse", logs.output[-1])
