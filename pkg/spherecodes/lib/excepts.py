#!/usr/bin/env python
# -*- coding: utf-8 -*-

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


"""Exceptions raised by spherecodes. Make sure all user-defined exceptions
inherit from GeneralException.
"""


class GeneralException(Exception):
    """Base class for user defined exceptions.
    """
    message = "General Exception"

    def __init__(self, *value):
        super(GeneralException, self).__init__(*value)
        self.value = value

    def __str__(self):
        if not self.value:
            return self.message
        if len(self.value) == 1 and isinstance(self.value[0], str):
            return "%s: %s" % (self.message, self.value[0])
        return "%s: %s" % (self.message,
                           repr(self.value[0] if len(self.value) == 1
                                else self.value))

    def __repr__(self):
        return "%s(%s: %s)" % (self.__class__.__name__, self.message,
                               repr(self.value[0] if len(self.value) == 1
                                    else self.value))


class DomainError(GeneralException, ValueError):
    """Mathematical argument is outside the domain of an operation.
    """
    message = "domain error"


class NumericError(GeneralException, ArithmeticError):
    """Numerical procedure failed: no convergence, truncation too short.
    """
    message = "numeric error"


class UsageError(GeneralException):
    """Bad command line or config parameter, unknown kind, scale guard.
    """
    message = "usage error"


class ScaleGuardError(UsageError):
    """Requested instance is too large for exhaustive processing.
    """
    message = "scale guard exceeded"


class VerificationFailure(GeneralException, AssertionError):
    """Verification criterion does not hold.
    """
    message = "verification failed"
