from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from fractions import Fraction
from functools import reduce
from math import gcd

import sympy

_X = sympy.Symbol('x')


def _lcm(a, b):
    return a * b // gcd(a, b)


def _primitive_part(coeffs):
    """Scale rational coefficients by a positive constant to coprime integers."""
    coeffs = [Fraction(int(c.p), int(c.q)) if hasattr(c, 'q') else Fraction(c) for c in coeffs]
    den = reduce(_lcm, (c.denominator for c in coeffs), 1)
    ints = [int(c * den) for c in coeffs]
    content = reduce(gcd, ints, 0)
    return [c // content for c in ints] if content else ints


class IntPolynomial(object):
    """Univariate integer polynomial, coefficients indexed by degree."""

    def __init__(self, coeffs):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_high_to_low(cls, coeffs):
        return cls(list(reversed(list(coeffs))))

    @classmethod
    def from_poly(cls, poly):
        """Primitive integer multiple (positive scaling) of a sympy Poly in one variable."""
        return cls.from_high_to_low(_primitive_part(poly.all_coeffs()))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def derivative(self):
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def to_poly(self):
        return sympy.Poly(list(reversed(self.coeffs)) or [0], _X, domain='ZZ')

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return 'IntPolynomial({})'.format(list(self.coeffs))


def sturm_chain(p):
    # type: (IntPolynomial) -> list
    """Sturm sequence of the squarefree part of p (sympy.sturm), members scaled to primitive integer polynomials.

    Members are only determined up to positive constants, so sign variations are unchanged.
    """
    if p.is_zero:
        raise ValueError('Sturm chain of the zero polynomial')
    return [IntPolynomial.from_poly(q) for q in sympy.sturm(p.to_poly())]


def sturm_real_roots(p):
    # type: (IntPolynomial) -> int
    """Number of distinct real roots of p."""
    if p.is_zero:
        raise ValueError('real roots of the zero polynomial')
    if p.degree == 0:
        return 0
    return int(p.to_poly().sqf_part().count_roots())
