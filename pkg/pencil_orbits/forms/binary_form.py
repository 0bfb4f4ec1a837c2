from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from functools import reduce
from math import gcd

import sympy
from sympy import divisors

from pencil_orbits.algebra import IntPolynomial, sturm_real_roots


def _hom_mul(p, q):
    # coefficient lists of x^(deg-i) y^i
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _hom_pow(p, k):
    out = [1]
    for _ in range(k):
        out = _hom_mul(out, p)
    return out


def cubic_discriminant(f0, f1, f2, f3):
    return 18 * f0 * f1 * f2 * f3 - 4 * f1 ** 3 * f3 + f1 ** 2 * f2 ** 2 - 4 * f0 * f2 ** 3 - 27 * f0 ** 2 * f3 ** 2


class BinaryForm(object):
    """f(x, y) = sum_i f_i x^(N-i) y^i with integer coefficients and odd degree N >= 3."""

    def __init__(self, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        degree = len(coeffs) - 1
        if degree < 3 or degree % 2 == 0:
            raise ValueError('binary form degree must be odd and at least 3, got {}'.format(degree))
        self.coeffs = coeffs

    @classmethod
    def from_text(cls, text):
        # "1,0,0,-2"
        return cls(int(c.strip()) for c in text.strip().split(','))

    def to_text(self):
        return ','.join(str(c) for c in self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def n(self):
        return (self.degree - 1) // 2

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self.coeffs == other.coeffs

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return 'BinaryForm({})'.format(self.to_text())

    def __call__(self, x, y):
        n = self.degree
        return sum(c * x ** (n - i) * y ** i for i, c in enumerate(self.coeffs))

    def dehomogenize(self):
        """f(x, 1) as an IntPolynomial; its degree drops when f is divisible by y."""
        return IntPolynomial.from_high_to_low(self.coeffs)

    def reduce(self, modulus):
        return BinaryForm(c % modulus for c in self.coeffs)

    def swap(self):
        """f(y, x)."""
        return BinaryForm(reversed(self.coeffs))

    def act(self, gamma):
        # type: (list) -> BinaryForm
        """Substitution f(a x + b y, c x + d y) for gamma = [[a, b], [c, d]]."""
        (a, b), (c, d) = gamma
        n = self.degree
        out = [0] * (n + 1)
        for i, fi in enumerate(self.coeffs):
            if fi == 0:
                continue
            term = _hom_mul(_hom_pow([a, b], n - i), _hom_pow([c, d], i))
            for j, t in enumerate(term):
                out[j] += fi * t
        return BinaryForm(out)


def height(f):
    # type: (BinaryForm) -> int
    return max(abs(c) for c in f.coeffs)


def is_primitive(f):
    return reduce(gcd, f.coeffs, 0) == 1


def discriminant(f):
    # type: (BinaryForm) -> int
    """Discriminant normalised so that disc(x^3 - 2y^3) = -108.

    Degree 3 uses the closed form. Otherwise f is moved by a unimodular shift y -> y + t x
    until the x^N coefficient is nonzero and sympy's polynomial discriminant is taken.
    """
    if f.degree == 3:
        return cubic_discriminant(*f.coeffs)
    if not any(f.coeffs):
        return 0
    shifted = f
    t = 0
    while shifted[0] == 0:
        t += 1
        shifted = f.act([[1, 0], [t, 1]])
    x = sympy.Symbol('x')
    poly = sympy.Poly(list(shifted.coeffs), x)
    return int(sympy.discriminant(poly))


def signature(f):
    # type: (BinaryForm) -> int
    """Number of real roots of f on the projective line."""
    if discriminant(f) == 0:
        raise ValueError('signature needs a nonzero discriminant: {}'.format(f))
    roots = sturm_real_roots(f.dehomogenize())
    return roots + 1 if f[0] == 0 else roots


def has_rational_root(f):
    """Whether f vanishes at some point of P^1(Q)."""
    if f[0] == 0 or f[-1] == 0:
        return True
    for q in divisors(abs(f[0])):
        for p in divisors(abs(f[-1])):
            if gcd(p, q) == 1 and (f(p, q) == 0 or f(-p, q) == 0):
                return True
    return False


def irreducibility(f):
    # type: (BinaryForm) -> tuple
    """(verdict, exact). Exact at degree 3; above that only a necessary filter is run."""
    if not any(f.coeffs) or discriminant(f) == 0 or has_rational_root(f):
        return False, True
    return True, f.degree == 3


def is_irreducible(f):
    return irreducibility(f)[0]


class FormClass(object):

    def __init__(self, disc, height_, signature_, irreducible, primitive, exact=True):
        self.disc = disc
        self.height = height_
        self.signature = signature_
        self.irreducible = irreducible
        self.primitive = primitive
        self.exact = exact

    def as_dict(self):
        return dict(vars(self))

    def __repr__(self):
        return 'FormClass({})'.format(', '.join('{}={}'.format(k, v) for k, v in sorted(vars(self).items())))


def classify(f):
    # type: (BinaryForm) -> FormClass
    disc = discriminant(f)
    irreducible, exact = irreducibility(f)
    return FormClass(disc=disc,
                     height_=height(f),
                     signature_=signature(f) if disc != 0 else None,
                     irreducible=irreducible,
                     primitive=is_primitive(f),
                     exact=exact)
