from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from fractions import Fraction

from pencil_orbits.pencils import group_point_count


class LocalDensity(object):
    """An exact p-adic quantity together with the formula it came from."""

    def __init__(self, p, n, value, description):
        # type: (int, int, Fraction, str) -> None
        assert value > 0, 'local density must be positive'
        self.p = p
        self.n = n
        self.value = Fraction(value)
        self.description = description

    def as_dict(self):
        return {'p': self.p, 'n': self.n, 'value': str(self.value), 'description': self.description}

    def __repr__(self):
        return 'LocalDensity({}, p={}, n={}, {})'.format(self.description, self.p, self.n, self.value)


def _one_minus(p, i):
    return 1 - Fraction(1, p ** i)


def vol_GN(p, n):
    # type: (int, int) -> Fraction
    """Vol(G_N(Z_p)) = (1 - p^-1)(1 - p^-(n+1)) prod_{i=2}^n (1 - p^-i)^2."""
    value = _one_minus(p, 1) * _one_minus(p, n + 1)
    for i in range(2, n + 1):
        value *= _one_minus(p, i) ** 2
    return value


def xi(p, n):
    return 1 / vol_GN(p, n)


def vol_SLnxSLn1(p, n):
    # type: (int, int) -> Fraction
    value = _one_minus(p, n + 1)
    for i in range(2, n + 1):
        value *= _one_minus(p, i) ** 2
    return value


def group_dimension(group_tag, n):
    size = 2 * n + 1
    return {
        'SL_N': size * size - 1,
        'G_N': size * size - n * (n + 1) - 1,
        'L_N': n * (n + 1) // 2 + (n + 1) * (n + 2) // 2 - 2,
        'H1': n * (n + 1),
        'H2': n * n + (n + 1) ** 2 - 1,
        'SLnxSLn1': n * n - 1 + (n + 1) ** 2 - 1,
    }[group_tag]


def volume_by_count(group_tag, p, n=1):
    """#G(F_p) / p^dim G from exhaustive enumeration; equals Vol(G(Z_p)) for these smooth groups."""
    return Fraction(group_point_count(group_tag, p, n), p ** group_dimension(group_tag, n))


def local_densities(p, n):
    return [LocalDensity(p, n, vol_GN(p, n), 'Vol(G_N(Z_p))'),
            LocalDensity(p, n, xi(p, n), 'xi_{p,n}'),
            LocalDensity(p, n, vol_SLnxSLn1(p, n), 'Vol((SL_n x SL_n+1)(Z_p))')]
