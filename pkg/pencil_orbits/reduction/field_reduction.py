from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
from fractions import Fraction
from functools import reduce
from math import gcd

from pencil_orbits.algebra import ExactMatrix, inverse, solve
from pencil_orbits.forms import BinaryForm, discriminant
from pencil_orbits.invariants import hyperdeterminant, inv_coefficients, lambda_matrix, section_q, section_inv
from pencil_orbits.pencils import BlockGroupElement
from pencil_orbits.reduction.trace import ReductionTrace

logger = logging.getLogger(__name__)


def alignment_element(top_a, top_b, target_a, target_b, group_tag='SLnxSLn1'):
    # type: (ExactMatrix, ExactMatrix, ExactMatrix, ExactMatrix, str) -> BlockGroupElement
    """diag(g', g'') with g' T g''^T equal to the target top-right pencil of the same lambda.

    The signed maximal minors move as C(g' T G) = det(g') det(G) G^-1 C(T), so G = g''^T = C C0^-1.
    What is left is a left factor R with T G = R T0; it is read off the columns where the target A
    block carries its antidiagonal ones.
    """
    n = top_a.rows
    c = lambda_matrix(top_a, top_b)
    c0 = lambda_matrix(target_a, target_b)
    g = c @ inverse(c0)
    t1_a, t1_b = top_a @ g, top_b @ g
    cols = [n - i for i in range(n)]
    r = t1_a.submatrix(range(n), cols)
    if r @ target_a != t1_a or r @ target_b != t1_b:
        raise AssertionError('top-right pencils with equal minors are not left-equivalent')
    return BlockGroupElement.block_diagonal(inverse(r), g.T, group_tag)


def elementary_factors(g):
    # type: (BlockGroupElement) -> list
    """Lower-triangular g = D E_1 ... E_(N-1), returned in the order they act: E_(N-1) first, D last.

    D is diagonal and E_j is unipotent with its only off-diagonal entries in column j.
    """
    m = g.matrix
    size = m.rows
    diag = [m.entry(i, i) for i in range(size)]
    unit = [[Fraction(m.entry(i, j)) / diag[i] for j in range(size)] for i in range(size)]
    factors = []
    for j in range(size - 1):
        entries = [[1 if r == c else (unit[r][j] if c == j and r > j else 0) for c in range(size)]
                   for r in range(size)]
        factors.append(('column {}'.format(j + 1), BlockGroupElement(ExactMatrix(entries), g.group_tag)))
    d = ExactMatrix([[diag[i] if i == j else 0 for j in range(size)] for i in range(size)])
    factors.append(('diagonal', BlockGroupElement(d, g.group_tag)))
    return list(reversed(factors[:-1])) + [factors[-1]]


def reduce_LN_field(w):
    # type: (SymPair) -> tuple
    """Canonical form section_q(N, lambda) of a pair in Wtop0 under L_N(Q), with the trace reaching it."""
    if not w.in_space('Wtop0'):
        raise ValueError('L_N reduction needs a pair in Wtop0')
    lam = hyperdeterminant(w)
    if lam == 0:
        raise ValueError('L_N reduction needs a nonzero lambda')
    target = section_q(w.size, lam)
    top_a, top_b = w.top_right()
    target_a, target_b = target.top_right()
    g = alignment_element(top_a, top_b, target_a, target_b, group_tag='L_N')
    trace = ReductionTrace(w.with_tag('Wtop0'))
    for label, step in elementary_factors(g):
        trace.apply(label, step)
    assert trace.end == target, 'L_N reduction missed its target'
    logger.debug('L_N reduction in %d steps, lambda %s', len(trace), lam)
    return trace.end, trace


def _integral_scaled(coeffs):
    den = reduce(lambda x, y: x * y // gcd(x, y), (Fraction(c).denominator for c in coeffs), 1)
    return BinaryForm(int(Fraction(c) * den) for c in coeffs)


def _unipotent_clearing(w):
    """H1 element clearing the off-diagonal part of both lower-right blocks.

    H1 moves the lower blocks as X -> X + T^t U^t + U T; the off-diagonal conditions form a square system in U.
    """
    n, size = w.n, w.size
    top_a, top_b = w.top_right()
    low_a, low_b = w.lower_right()
    positions = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]
    unknowns = [(r, c) for r in range(n + 1) for c in range(n)]
    columns = []
    for r, c in unknowns:
        e = ExactMatrix([[1 if (i, j) == (r, c) else 0 for j in range(n)] for i in range(n + 1)])
        delta_a = top_a.T @ e.T + e @ top_a
        delta_b = top_b.T @ e.T + e @ top_b
        columns.append([delta_a.entry(i, j) for i, j in positions] + [delta_b.entry(i, j) for i, j in positions])
    system = ExactMatrix([list(row) for row in zip(*columns)])
    rhs = ExactMatrix([[-low_a.entry(i, j)] for i, j in positions] + [[-low_b.entry(i, j)] for i, j in positions])
    u = solve(system, rhs)
    shear = ExactMatrix([[u.entry(unknowns.index((r, c)), 0) for c in range(n)] for r in range(n + 1)])
    assert size == 2 * n + 1
    return BlockGroupElement.unipotent(shear)


def reduce_GN_field(w):
    # type: (SymPair) -> tuple
    """Canonical form section_inv(inv(w)) of a pair in W0 under G_N(Q), with the trace reaching it.

    Steps: align the top-right pencil with section_q(N, lambda), rescale lambda to 1 inside H2, align
    again, then clear the lower blocks with one H1 element.
    """
    if not w.in_space('W0'):
        raise ValueError('G_N reduction needs a pair in W0')
    coeffs = inv_coefficients(w)
    if discriminant(_integral_scaled(coeffs)) == 0:
        raise ValueError('G_N reduction needs a nonzero discriminant')
    lam = hyperdeterminant(w)
    if lam == 0:
        raise ValueError('G_N reduction needs a nonzero lambda')
    n, size = w.n, w.size
    trace = ReductionTrace(w.with_tag('W0'))

    def align(q0):
        target_a, target_b = section_q(size, q0).top_right()
        top_a, top_b = trace.end.top_right()
        trace.apply('SLnxSLn1', alignment_element(top_a, top_b, target_a, target_b))

    align(lam)
    if lam != 1:
        top = ExactMatrix([[1 / Fraction(lam) if i == j == 0 else (1 if i == j else 0) for j in range(n)]
                           for i in range(n)])
        bottom = ExactMatrix([[lam if i == j == 0 else (1 if i == j else 0) for j in range(n + 1)]
                              for i in range(n + 1)])
        trace.apply('H2', BlockGroupElement.block_diagonal(top, bottom, 'H2'))
        align(1)
    trace.apply('H1', _unipotent_clearing(trace.end))
    canonical = section_inv(coeffs)
    assert trace.end == canonical, 'G_N reduction missed section_inv'
    logger.debug('G_N reduction in %d steps, lambda %s', len(trace), lam)
    return canonical, trace
