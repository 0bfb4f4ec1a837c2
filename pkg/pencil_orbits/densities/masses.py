from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
from fractions import Fraction
from math import comb

import numpy as np

from pencil_orbits.densities import matrix_counts
from pencil_orbits.densities.volumes import xi
from pencil_orbits.invariants import projective_mask_mod_p


# PROJECTIVE MASSES, N = 3 ----

def s_mass(p, a, b, c, d):
    # type: (int, int, int, int, int) -> int
    """Projective pairs in W_3^0(F_p) whose top-right rows are (a, b) in A and (c, d) in B."""
    a, b, c, d = (x % p for x in (a, b, c, d))
    if (a * d - b * c) % p:
        return p ** 6
    if (a, b, c, d) != (0, 0, 0, 0):
        return p ** 5 * (p - 1)
    return 0


def w0_pairs_mod_p(p):
    """All of W_3^0(F_p) as two stacks of 3 x 3 matrices, with the top-right quadruple of each pair."""
    values = np.array(list(itertools.product(range(p), repeat=10)), dtype=np.int64)
    count = values.shape[0]
    a = np.zeros((count, 3, 3), dtype=np.int64)
    b = np.zeros((count, 3, 3), dtype=np.int64)
    # a12 a13 b12 b13 | a22 a23 a33 b22 b23 b33
    for m, (i, j), col in ((a, (0, 1), 0), (a, (0, 2), 1), (b, (0, 1), 2), (b, (0, 2), 3),
                           (a, (1, 1), 4), (a, (1, 2), 5), (a, (2, 2), 6),
                           (b, (1, 1), 7), (b, (1, 2), 8), (b, (2, 2), 9)):
        m[:, i, j] = values[:, col]
        m[:, j, i] = values[:, col]
    return a, b, values[:, :4]


def s_mass_by_enumeration(p):
    """{(a, b, c, d): projective count} from a scan of all p^10 pairs."""
    a, b, quads = w0_pairs_mod_p(p)
    mask = projective_mask_mod_p(a, b, p)
    index = ((quads[:, 0] * p + quads[:, 1]) * p + quads[:, 2]) * p + quads[:, 3]
    totals = np.bincount(index[mask], minlength=p ** 4)
    return {quad: int(totals[i]) for i, quad in enumerate(itertools.product(range(p), repeat=4))}


def projective_slice_mass(p, k):
    # type: (int, int) -> Fraction
    """Mass of projective pairs with nu_p(lambda) = k - 1, weighted by |lambda|_p."""
    if k < 1:
        raise ValueError('slice index starts at 1')
    quad = (1, 0, 0, 1) if k == 1 else (0, 1, 0, 0)
    return Fraction(p ** (1 - k)) * Fraction(1, p ** (4 * k)) * matrix_counts.c_count(p, k) * \
        s_mass(p, *quad) * Fraction(1, p ** 6)


def projective_local_mass(p):
    # type: (int) -> Fraction
    """xi times the sum of all projective slices; the slices from k = 2 on form a geometric series."""
    first, second, third, fourth = (projective_slice_mass(p, k) for k in range(1, 5))
    ratio = third / second
    assert fourth / third == ratio, 'projective slices are not geometric'
    return xi(p, 1) * (first + second / (1 - ratio))


# FULL MASSES ----

def full_slice_mass(p, n, avec, bvec):
    # type: (int, int, tuple, tuple) -> Fraction
    """xi-normalized |lambda|-mass of the slice with antidiagonal valuations a, b.

    Inner orbit mass p^(sum (n-i) a_i + i b_i) times |lambda|_p^3 where nu_p(lambda) = sum (n+1-i) a_i + i b_i.
    """
    if len(avec) != n or len(bvec) != n:
        raise ValueError('need {} entries in each valuation vector'.format(n))
    inner = sum((n - i) * a + i * b for i, (a, b) in enumerate(zip(avec, bvec), start=1))
    level = sum((n + 1 - i) * a + i * b for i, (a, b) in enumerate(zip(avec, bvec), start=1))
    return Fraction(p ** inner, p ** (3 * level))


def _slice_ratios(p, n):
    base = full_slice_mass(p, n, (0,) * n, (0,) * n)
    ratios = []
    for pos in range(2 * n):
        v = [0] * (2 * n)
        v[pos] = 1
        ratios.append(full_slice_mass(p, n, tuple(v[:n]), tuple(v[n:])) / base)
    return base, ratios


def full_local_mass(p, n):
    # type: (int, int) -> Fraction
    """Sum of all slices; the slice mass is multiplicative in the coordinates, so each one is geometric."""
    base, ratios = _slice_ratios(p, n)
    value = base
    for r in ratios:
        value /= 1 - r
    return value


def closed_full_local_mass(p, n):
    value = Fraction(1)
    for i in range(2, 2 * n + 2):
        value /= 1 - Fraction(1, p ** i)
    return value


def truncated_full_local_mass(p, n, depth):
    # type: (int, int, int) -> tuple
    """(sum of slices with sum a_i + b_i <= depth, exact bound on the omitted tail).

    Every coordinate ratio is at most p^-2, so the tail is at most sum_{t > depth} C(t+2n-1, 2n-1) p^-2t.
    """
    dims = 2 * n
    total = Fraction(0)
    for t in range(depth + 1):
        for cut in itertools.combinations(range(t + dims - 1), dims - 1):
            bounds = (-1,) + cut + (t + dims - 1,)
            v = [bounds[i + 1] - bounds[i] - 1 for i in range(dims)]
            total += full_slice_mass(p, n, tuple(v[:n]), tuple(v[n:]))
    r = Fraction(1, p * p)
    head = sum(comb(t + dims - 1, dims - 1) * r ** t for t in range(depth + 1))
    return total, (1 - r) ** -dims - head
