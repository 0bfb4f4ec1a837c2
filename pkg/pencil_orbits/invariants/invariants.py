from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from fractions import Fraction
from functools import lru_cache

from pencil_orbits.algebra import ExactMatrix, det_bareiss, pencil_det
from pencil_orbits.forms import BinaryForm
from pencil_orbits.pencils import SymPair, act, space_violations


class LambdaValue(object):
    """Value of the hyperdeterminant together with the space it was read from."""

    def __init__(self, value, source):
        self.value = value
        self.source = source

    def __int__(self):
        return int(self.value)

    def __eq__(self, other):
        if isinstance(other, LambdaValue):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return 'LambdaValue({}, {})'.format(self.value, self.source)


def inv(w):
    # type: (SymPair) -> BinaryForm
    """(-1)^n det(xA - yB) as a binary form; modular pairs give reduced coefficients."""
    coeffs = pencil_det(w.a, w.b)
    sign = (-1) ** w.n
    if w.modulus is not None:
        return BinaryForm((sign * c) % w.modulus for c in coeffs)
    return BinaryForm(sign * c for c in coeffs)


def inv_coefficients(w):
    """Same as inv, but keeps rational coefficients of pairs over Q."""
    sign = (-1) ** w.n
    return [sign * c for c in pencil_det(w.a, w.b)]


def lambda_matrix(top_a, top_b):
    # type: (ExactMatrix, ExactMatrix) -> ExactMatrix
    """(n+1) x (n+1) matrix whose row i holds the coefficients x^n .. y^n of the signed minor g_i.

    g_i = (-1)^(i+1) det(x A^(i) - y B^(i)), A^(i) being the top-right block with column i removed.
    """
    n = top_a.rows
    rows = []
    for i in range(n + 1):
        keep = [j for j in range(n + 1) if j != i]
        a_i = top_a.submatrix(range(n), keep)
        b_i = top_b.submatrix(range(n), keep)
        sign = (-1) ** i
        rows.append([sign * c for c in pencil_det(a_i, b_i)])
    return ExactMatrix(rows, modulus=top_a.modulus)


def hyperdeterminant(w):
    # type: (SymPair) -> object
    """lambda(w): determinant of the coefficient matrix of the signed maximal minors of the top-right pencil.

    Pairs in W0 are read through their projection onto Wtop, which only drops the lower-right blocks.
    """
    if space_violations(w.a, w.b, 'W0'):
        raise ValueError('hyperdeterminant needs a pair in W0 or Wtop, got tag {}'.format(w.space_tag))
    top_a, top_b = w.top_right()
    return det_bareiss(lambda_matrix(top_a, top_b))


def lambda_value(w):
    # type: (SymPair) -> LambdaValue
    source = 'Wtop' if w.in_space('Wtop') else 'W0'
    return LambdaValue(hyperdeterminant(w), source)


def _section_q_entries(size, corner):
    n = (size - 1) // 2
    a = [[0] * size for _ in range(size)]
    b = [[0] * size for _ in range(size)]
    for i in range(1, n + 1):
        j = size + 1 - i
        a[i - 1][j - 1] = a[j - 1][i - 1] = 1
    for i in range(2, n + 1):
        j = size - i
        b[i - 1][j - 1] = b[j - 1][i - 1] = 1
    b[0][size - 2] = b[size - 2][0] = corner
    return a, b


@lru_cache(maxsize=None)
def corner_sign(size):
    """lambda of the section with corner entry 1; lambda is linear in that corner."""
    a, b = _section_q_entries(size, 1)
    sign = hyperdeterminant(SymPair(ExactMatrix(a), ExactMatrix(b), space_tag='Wtop0'))
    assert sign in (1, -1), 'unexpected section lambda {}'.format(sign)
    return sign


def section_q(size, q0):
    # type: (int, object) -> SymPair
    """Pair in Wtop0 with lambda exactly q0: antidiagonal ones in A, shifted antidiagonal in B."""
    if q0 == 0:
        raise ValueError('section_q needs a nonzero lambda')
    if size < 3 or size % 2 == 0:
        raise ValueError('size must be odd and at least 3, got {}'.format(size))
    a, b = _section_q_entries(size, corner_sign(size) * q0)
    w = SymPair(ExactMatrix(a), ExactMatrix(b), space_tag='Wtop0')
    assert hyperdeterminant(w) == q0, 'section_q lost its lambda'
    return w


def section_unknowns(size):
    """Lower-block diagonal entries solved by section_inv, one per coefficient of inv, in solve order.

    Coefficient i of x^(N-i) y^i is governed by A_(n+k, n+k) for i = 2k - 2 and by B_(n+k, n+k)
    for i = 2k - 1 (1-based k), each with a unit pivot.
    """
    n = (size - 1) // 2
    return [('a' if i % 2 == 0 else 'b', n + i // 2) for i in range(size + 1)]


def section_inv(f):
    # type: (BinaryForm) -> SymPair
    """Pair in W00 with inv = f and lambda = 1, integral when f is. f may also be a list of rationals.

    Starts from the top-right blocks of section_q(N, 1) with a zero lower block, then fixes the
    unknowns of section_unknowns one coefficient at a time; every other lower-block entry stays 0.
    """
    coeffs = list(f)
    size = len(coeffs) - 1
    base = section_q(size, 1)
    mats = {'a': base.a.to_list(), 'b': base.b.to_list()}

    def coefficient(i):
        return inv_coefficients(SymPair(ExactMatrix(mats['a']), ExactMatrix(mats['b']), space_tag='W00'))[i]

    for i, (which, d) in enumerate(section_unknowns(size)):
        c0 = coefficient(i)
        mats[which][d][d] = 1
        pivot = coefficient(i) - c0
        assert pivot in (1, -1), 'coefficient {} has pivot {}'.format(i, pivot)
        mats[which][d][d] = (coeffs[i] - c0) * pivot
    w = SymPair(ExactMatrix(mats['a']), ExactMatrix(mats['b']), space_tag='W00')
    assert inv_coefficients(w) == coeffs, 'section_inv failed for {}'.format(f)
    return w


def lambda_scaling(h, w):
    """lambda(h . w) == det(h'')^-1 lambda(w) for h in G_N acting on w in W0."""
    _, _, bottom = h.blocks()
    lhs = hyperdeterminant(act(h, w))
    rhs = Fraction(hyperdeterminant(w)) / det_bareiss(bottom)
    if w.modulus is not None:
        return (lhs - rhs.numerator * pow(rhs.denominator, -1, w.modulus)) % w.modulus == 0
    return lhs == rhs
