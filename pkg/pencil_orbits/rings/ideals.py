from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
import logging
from fractions import Fraction
from functools import reduce
from math import gcd

from sympy import Matrix, factorint
from sympy.matrices.normalforms import hermite_normal_form
from tqdm import tqdm

from pencil_orbits.errors import VerificationError
from pencil_orbits.forms import discriminant

logger = logging.getLogger(__name__)


def _hnf_rows(vectors):
    """Canonical basis of the Z-span of vectors, as rows (d1,0,0), (x,d2,0), (y,z,d3)."""
    m = Matrix(3, len(vectors), lambda i, j: vectors[j][i])
    if m.rank() < 3:
        raise ValueError('generators do not span a full-rank lattice')
    w = hermite_normal_form(m)
    return tuple(tuple(int(w[i, j]) for i in range(3)) for j in range(3))


def _lattice_coords(rows, v):
    """Integer coordinates of v in the triangular basis, or None."""
    (d1, _, _), (x, d2, _), (y, z, d3) = rows
    v0, v1, v2 = v
    if v2 % d3:
        return None
    c2 = v2 // d3
    r1 = v1 - z * c2
    if r1 % d2:
        return None
    c1 = r1 // d2
    r0 = v0 - x * c1 - y * c2
    if r0 % d1:
        return None
    return r0 // d1, c1, c2


class FracIdeal(object):
    """(1/den) L for a full-rank lattice L inside the ring, with gcd(den, L) = 1."""

    def __init__(self, den, rows):
        common = reduce(gcd, (c for row in rows for c in row), den)
        self.den = den // common
        self.rows = tuple(tuple(c // common for c in row) for row in rows)

    @classmethod
    def unit(cls):
        return cls(1, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @classmethod
    def from_generators(cls, generators, den=1):
        return cls(den, _hnf_rows(list(generators)))

    @property
    def index(self):
        """[L : lattice] scaled back by den^3; the norm of the ideal."""
        d1, d2, d3 = (self.rows[i][i] for i in range(3))
        return Fraction(d1 * d2 * d3, self.den ** 3)

    def contains(self, element, den=1):
        scaled = [Fraction(c * self.den, den) for c in element]
        if any(c.denominator != 1 for c in scaled):
            return False
        return _lattice_coords(self.rows, [int(c) for c in scaled]) is not None

    def is_integral(self):
        return self.den == 1

    def __eq__(self, other):
        return isinstance(other, FracIdeal) and (self.den, self.rows) == (other.den, other.rows)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.den, self.rows))

    def __repr__(self):
        return 'FracIdeal(1/{} * {})'.format(self.den, list(self.rows))

    def as_dict(self):
        return {'den': self.den, 'basis': [list(r) for r in self.rows]}


def principal_ideal(ring, alpha, den=1):
    return FracIdeal.from_generators([ring.mul(alpha, e) for e in (ring.ONE, ring.OMEGA, ring.THETA)], den)


def ideal_mul(ring, first, second):
    products = [ring.mul(u, v) for u in first.rows for v in second.rows]
    return FracIdeal.from_generators(products, first.den * second.den)


def is_ideal(ring, lattice):
    """Closure of the underlying lattice under multiplication by w and t."""
    return all(_lattice_coords(lattice.rows, ring.mul(e, g)) is not None
               for g in lattice.rows for e in (ring.OMEGA, ring.THETA))


def squares_to_unit(ring, ideal):
    return ideal_mul(ring, ideal, ideal) == FracIdeal.unit()


# LOCAL SEARCH ----

def _exponent_triples(j):
    for e1 in range(j, 2 * j + 1):
        for e2 in range(0, e1 + 1):
            e3 = 3 * j - e1 - e2
            if 0 <= e3 <= e1:
                yield e1, e2, e3


def _square_is_scalar(ring, rows, scale):
    products = [ring.mul(u, v) for u, v in itertools.combinations_with_replacement(rows, 2)]
    if any(c % scale for prod in products for c in prod):
        return False
    return _hnf_rows([[c // scale for c in prod] for prod in products]) == FracIdeal.unit().rows


def local_two_torsion(ring, p, j):
    """Ideals I = (1/p^j) J with J primitive, p^2j R <= J <= R, [R : J] = p^3j and I^2 = R.

    d1 w and d1 t lie in J, which forces d2 | d1, d3 | d1 and d2 | x; d1 >= p^j follows from the index.
    """
    found = []
    scale = p ** (2 * j)
    for e1, e2, e3 in _exponent_triples(j):
        d1, d2, d3 = p ** e1, p ** e2, p ** e3
        for x, y, z in itertools.product(range(0, d1, d2), range(d1), range(d2)):
            rows = ((d1, 0, 0), (x, d2, 0), (y, z, d3))
            if all(c % p == 0 for row in rows for c in row):
                continue
            lattice = FracIdeal(1, rows)
            if not is_ideal(ring, lattice):
                continue
            if _square_is_scalar(ring, rows, scale):
                found.append(FracIdeal(p ** j, rows))
    return found


class TwoTorsionResult(object):

    def __init__(self, ring, ideals, local_counts, bound, complete):
        self.ring = ring
        self.ideals = ideals
        self.local_counts = local_counts
        self.bound = bound
        self.complete = complete

    @property
    def count(self):
        return len(self.ideals)

    def as_dict(self):
        return {'form': self.ring.form.to_text(), 'count': self.count, 'bound': self.bound,
                'complete': self.complete, 'local_counts': {str(p): c for p, c in self.local_counts.items()},
                'ideals': [i.as_dict() for i in self.ideals]}


def _is_power_of_two(n):
    return n > 0 and n & (n - 1) == 0


def two_torsion_ideals(ring, bound=None, progress=False):
    """Fractional ideals I with I^2 = R, searched as I = (1/m) J one prime power m = p^j <= bound at a time.

    Only p with p^2j | disc(f) can carry such ideals. Without a bound the search covers every such
    prime power and the list is complete.
    """
    disc = discriminant(ring.form)
    if disc == 0:
        raise ValueError('degenerate form {} has no ring of rank 3 over Q'.format(ring.form.to_text()))
    support = {p: v // 2 for p, v in factorint(abs(disc)).items() if v >= 2}
    complete = bound is None or all(p ** j <= bound for p, j in support.items())

    local_lists = {}
    bar = tqdm(sorted(support.items()), disable=not progress)
    bar.set_description('two-torsion search')
    for p, top in bar:
        ideals = [FracIdeal.unit()]
        for j in range(1, top + 1):
            if bound is not None and p ** j > bound:
                break
            ideals.extend(local_two_torsion(ring, p, j))
        local_lists[p] = ideals
        logger.debug('p=%d: %d local two-torsion ideals', p, len(ideals))

    ideals = [reduce(lambda left, right: ideal_mul(ring, left, right), combo, FracIdeal.unit())
              for combo in itertools.product(*local_lists.values())]
    local_counts = {p: len(v) for p, v in local_lists.items()}
    if not _is_power_of_two(len(ideals)):
        raise VerificationError('{} two-torsion ideals for {}; expected a power of 2'.format(
            len(ideals), ring.form.to_text()))
    for ideal in ideals:
        if not squares_to_unit(ring, ideal):
            raise VerificationError('{} does not square to the unit ideal'.format(ideal))
    return TwoTorsionResult(ring, ideals, local_counts, bound, complete)
