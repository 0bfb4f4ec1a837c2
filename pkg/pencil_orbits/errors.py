from __future__ import absolute_import
from __future__ import division
from __future__ import print_function


class PrecisionError(ArithmeticError):
    """Finite p-adic precision is not enough to certify a result."""


class VerificationError(AssertionError):
    """An oracle disagrees with the closed form it checks."""
