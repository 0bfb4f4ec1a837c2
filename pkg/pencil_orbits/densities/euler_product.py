from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
from fractions import Fraction

import mpmath
from mpmath import iv
from mpmath.libmp import to_rational
from sympy import primerange
from tqdm import tqdm

from pencil_orbits.densities.masses import full_local_mass, projective_local_mass

logger = logging.getLogger(__name__)

# pi(x) < 1.25506 x / ln x for x > 1
_PRIME_COUNT_CONSTANT = '2.51012'


class EulerFamily(object):
    """Local factors f_p with 1 <= f_p <= (1 - p^-2)^-tail_exponent for every p."""

    def __init__(self, name, factor, tail_exponent=None):
        self.name = name
        self.factor = factor
        self.tail_exponent = tail_exponent


def euler_family(name, degree=3):
    n = (degree - 1) // 2
    if name == 'full':
        return EulerFamily('full', lambda p: full_local_mass(p, n), degree - 1)
    if name == 'projective':
        return EulerFamily('projective', projective_local_mass, 1)
    if name == 'trivial':
        return EulerFamily('trivial', lambda p: Fraction(1), 0)
    raise ValueError('unknown Euler family {}'.format(name))


def reference_value(name, degree=3, dps=40):
    """High-precision value the family's product converges to."""
    with mpmath.workdps(dps):
        if name == 'full':
            value = mpmath.mpf(1)
            for i in range(2, degree + 1):
                value *= mpmath.zeta(i)
            return value
        if name == 'projective':
            return mpmath.zeta(2) / mpmath.zeta(4)
        if name == 'trivial':
            return mpmath.mpf(1)
    raise ValueError('no reference value for {}'.format(name))


def _exact(endpoint):
    return Fraction(*to_rational(endpoint))


def _decimal(value, digits=12):
    return mpmath.nstr(mpmath.mpf(value.numerator) / value.denominator, digits)


def tail_bound(cutoff, exponent, refined=True):
    """Interval [1, U] containing prod_{p > cutoff} f_p.

    U is ((P+1)/P)^c from the telescoping product over all integers above P; for P >= 17 the
    prime-counting bound sum_{p > P} p^-2 <= 2.51012 / (P ln P) may tighten it.
    """
    if exponent == 0:
        return iv.mpf(1)
    big_p = iv.mpf(cutoff)
    upper = ((big_p + 1) / big_p) ** exponent
    if refined and cutoff >= 17:
        sparse = iv.exp(exponent * iv.mpf(_PRIME_COUNT_CONSTANT) / (big_p * iv.ln(big_p)) / (1 - 1 / big_p ** 2))
        if _exact(sparse._mpi_[1]) < _exact(upper._mpi_[1]):
            upper = sparse
    return iv.mpf([1, upper.b])


class EulerProduct(object):

    def __init__(self, family, cutoff, factors, partial, tail):
        self.family = family
        self.cutoff = cutoff
        self.factors = factors
        self.partial = partial
        self.tail = tail
        self.value = partial * tail

    def bounds(self):
        """Exact rational endpoints of the enclosure."""
        lo, hi = self.value._mpi_
        return _exact(lo), _exact(hi)

    @property
    def width(self):
        lo, hi = self.bounds()
        return hi - lo

    def contains(self, value):
        lo, hi = self.bounds()
        if isinstance(value, mpmath.mpf):
            value = _exact(value._mpf_)
        return lo <= Fraction(value) <= hi

    def as_dict(self):
        lo, hi = self.bounds()
        return {'family': self.family, 'cutoff': self.cutoff, 'primes': len(self.factors),
                'lower': str(lo), 'upper': str(hi),
                'lower_decimal': _decimal(lo), 'upper_decimal': _decimal(hi)}


def euler_product(family, cutoff, degree=3, refined=True, progress=False):
    # type: (object, int, int, bool, bool) -> EulerProduct
    """Interval enclosure of prod_p f_p from the exact factors at p <= cutoff and a rigorous tail."""
    if not isinstance(family, EulerFamily):
        family = euler_family(family, degree)
    if family.tail_exponent is None:
        raise ValueError('family {} has no proven tail bound; refusing a possibly divergent product'.format(
            family.name))
    factors = []
    partial = iv.mpf(1)
    primes = list(primerange(2, cutoff + 1))
    bar = tqdm(primes, disable=not progress)
    bar.set_description('{} factors'.format(family.name))
    for p in bar:
        f_p = Fraction(family.factor(p))
        if not 1 <= f_p:
            raise ValueError('factor at p={} is below 1'.format(p))
        factors.append((p, f_p))
        partial = partial * (iv.mpf(f_p.numerator) / iv.mpf(f_p.denominator))
    tail = tail_bound(cutoff, family.tail_exponent, refined=refined)
    result = EulerProduct(family.name, cutoff, factors, partial, tail)
    logger.info('%s Euler product up to %d: [%s, %s]', family.name, cutoff, result.value.a, result.value.b)
    return result
