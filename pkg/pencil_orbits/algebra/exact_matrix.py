from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
from fractions import Fraction
from math import gcd

import numpy as np
import sympy

ZZ = 'ZZ'
QQ = 'QQ'

_T = sympy.Symbol('t')


def _to_exact(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if hasattr(value, 'p') and hasattr(value, 'q'):
        # sympy Integer / Rational
        return Fraction(int(value.p), int(value.q))
    raise TypeError('entry {!r} is not an exact integer or rational'.format(value))


def _demote(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value


def exact_div(num, den):
    """Division that stays in Z when both operands are integers and the quotient is exact."""
    if isinstance(num, int) and isinstance(den, int):
        assert num % den == 0, '{} is not divisible by {}'.format(num, den)
        return num // den
    return _demote(Fraction(num) / den)


class ExactMatrix(object):
    """Dense matrix over Z, Q or Z/mZ.

    Entries live in a read-only numpy object array. Modular entries are kept reduced to [0, m).
    Rational matrices whose entries are all integral are demoted to Z, so the ring tag always
    describes the smallest ring holding the entries.
    """

    def __init__(self, entries, modulus=None):
        rows = [[_to_exact(x) for x in row] for row in entries]
        n_cols = len(rows[0]) if rows else 0
        if any(len(row) != n_cols for row in rows):
            raise ValueError('ragged matrix rows')
        if modulus is not None:
            modulus = int(modulus)
            if modulus < 2:
                raise ValueError('modulus must be at least 2')
            if any(isinstance(x, Fraction) and x.denominator != 1 for row in rows for x in row):
                raise ValueError('rational entries in a modular matrix')
            rows = [[int(x) % modulus for x in row] for row in rows]
        else:
            rows = [[_demote(x) for x in row] for row in rows]
            if any(isinstance(x, Fraction) for row in rows for x in row):
                rows = [[Fraction(x) for x in row] for row in rows]
        data = np.empty((len(rows), n_cols), dtype=object)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                data[i, j] = x
        data.flags.writeable = False
        self._data = data
        self.modulus = modulus

    # CONSTRUCTORS ----

    @classmethod
    def identity(cls, n, modulus=None):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], modulus=modulus)

    @classmethod
    def zeros(cls, rows, cols, modulus=None):
        return cls([[0] * cols for _ in range(rows)], modulus=modulus)

    @classmethod
    def from_text(cls, text, modulus=None):
        # "0,0,1;0,1,0;1,0,0"
        rows = [[Fraction(x.strip()) for x in row.split(',')] for row in text.strip().split(';')]
        return cls(rows, modulus=modulus)

    @classmethod
    def block(cls, top_left, top_right, bottom_left, bottom_right):
        top = [list(a) + list(b) for a, b in zip(top_left.to_list(), top_right.to_list())]
        bottom = [list(a) + list(b) for a, b in zip(bottom_left.to_list(), bottom_right.to_list())]
        return cls(top + bottom, modulus=top_left.modulus)

    # PROPERTIES ----

    @property
    def rows(self):
        return self._data.shape[0]

    @property
    def cols(self):
        return self._data.shape[1]

    @property
    def shape(self):
        return self._data.shape

    @property
    def is_square(self):
        return self.rows == self.cols

    @property
    def ring(self):
        if self.modulus is not None:
            return 'ZZ/{}'.format(self.modulus)
        if any(isinstance(x, Fraction) for x in self._data.flat):
            return QQ
        return ZZ

    @property
    def is_integral(self):
        return self.modulus is None and self.ring == ZZ

    @property
    def T(self):
        return ExactMatrix(self._data.T.tolist(), modulus=self.modulus)

    def to_list(self):
        return self._data.tolist()

    def to_text(self):
        return ';'.join(','.join(str(x) for x in row) for row in self.to_list())

    def entry(self, i, j):
        return self._data[i, j]

    def __getitem__(self, key):
        i, j = key
        return self._data[i, j]

    def submatrix(self, row_idx, col_idx):
        return ExactMatrix([[self._data[i, j] for j in col_idx] for i in row_idx], modulus=self.modulus)

    def minor_matrix(self, i, j):
        rows = [r for r in range(self.rows) if r != i]
        cols = [c for c in range(self.cols) if c != j]
        return self.submatrix(rows, cols)

    # ARITHMETIC ----

    def _check_compatible(self, other):
        if self.modulus != other.modulus:
            raise ValueError('mixing matrices over different rings')

    def __add__(self, other):
        self._check_compatible(other)
        if self.shape != other.shape:
            raise ValueError('shape mismatch {} vs {}'.format(self.shape, other.shape))
        return ExactMatrix((self._data + other._data).tolist(), modulus=self.modulus)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor):
        factor = _to_exact(factor)
        return ExactMatrix([[factor * x for x in row] for row in self.to_list()], modulus=self.modulus)

    def __matmul__(self, other):
        self._check_compatible(other)
        if self.cols != other.rows:
            raise ValueError('cannot multiply {} by {}'.format(self.shape, other.shape))
        return ExactMatrix(self._data.dot(other._data).tolist() if self.cols else
                           [[0] * other.cols for _ in range(self.rows)], modulus=self.modulus)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self @ other
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.modulus == other.modulus and self.shape == other.shape and \
            all(x == y for x, y in zip(self._data.flat, other._data.flat))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.modulus, self.shape, tuple(self._data.flat)))

    def __repr__(self):
        ring = '' if self.modulus is None else ' mod {}'.format(self.modulus)
        return 'ExactMatrix({}{})'.format(self.to_text(), ring)

    # RING CHANGES ----

    def lift(self):
        """Integer matrix of the representatives in [0, m)."""
        return ExactMatrix(self.to_list())

    def reduce(self, modulus):
        if self.ring == QQ:
            denominators = [x.denominator for x in self._data.flat]
            if any(gcd(d, modulus) != 1 for d in denominators):
                raise ValueError('denominator not invertible mod {}'.format(modulus))
            return ExactMatrix([[x.numerator * pow(x.denominator, -1, modulus) for x in row]
                                for row in self.to_list()], modulus=modulus)
        return ExactMatrix(self.to_list(), modulus=modulus)

    def to_rational(self):
        if self.modulus is not None:
            raise ValueError('modular matrix has no rational form')
        return ExactMatrix(self.to_list())

    def is_symmetric(self):
        return self.is_square and all(self._data[i, j] == self._data[j, i]
                                      for i in range(self.rows) for j in range(i))


# KERNELS ----

def det_bareiss(m):
    # type: (ExactMatrix) -> object
    """Fraction-free determinant. Over Z/mZ the integer lift is used and the result reduced."""
    if not m.is_square:
        raise ValueError('determinant of a non-square {} matrix'.format(m.shape))
    if m.modulus is not None:
        return det_bareiss(m.lift()) % m.modulus
    n = m.rows
    if n == 0:
        return 1
    a = [list(row) for row in m.to_list()]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return _demote(sign * a[n - 1][n - 1])


def cofactor_det(m):
    # type: (ExactMatrix) -> object
    """Laplace expansion along the first row. Slow; used as an oracle."""
    if not m.is_square:
        raise ValueError('determinant of a non-square {} matrix'.format(m.shape))
    rows = m.to_list()

    def expand(mat):
        if not mat:
            return 1
        if len(mat) == 1:
            return mat[0][0]
        total = 0
        for j, x in enumerate(mat[0]):
            if x == 0:
                continue
            sub = [row[:j] + row[j + 1:] for row in mat[1:]]
            total += (-1) ** j * x * expand(sub)
        return total

    value = _demote(expand(rows))
    return value % m.modulus if m.modulus is not None else value


def adjugate(m):
    # type: (ExactMatrix) -> ExactMatrix
    if not m.is_square:
        raise ValueError('adjugate of a non-square {} matrix'.format(m.shape))
    n = m.rows
    if n == 1:
        return ExactMatrix([[1]], modulus=m.modulus)
    base = m.lift() if m.modulus is not None else m
    adj = [[(-1) ** (i + j) * det_bareiss(base.minor_matrix(j, i)) for j in range(n)] for i in range(n)]
    return ExactMatrix(adj, modulus=m.modulus)


def minor_gcd(m, k):
    # type: (ExactMatrix, int) -> int
    """gcd of all k x k minors of an integer matrix; 0 when they all vanish."""
    if not m.is_integral:
        raise ValueError('minor_gcd needs an integer matrix, got {}'.format(m.ring))
    if k < 1 or k > min(m.rows, m.cols):
        raise ValueError('minor size {} out of range for {} matrix'.format(k, m.shape))
    result = 0
    for row_idx in itertools.combinations(range(m.rows), k):
        for col_idx in itertools.combinations(range(m.cols), k):
            result = gcd(result, det_bareiss(m.submatrix(row_idx, col_idx)))
            if result == 1:
                return 1
    return abs(result)


def _to_sympy(m):
    return sympy.Matrix(m.rows, m.cols, lambda i, j: _sympify_exact(m.entry(i, j)))


def _sympify_exact(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def solve(m, rhs):
    # type: (ExactMatrix, ExactMatrix) -> ExactMatrix
    """Exact solution X of m X = rhs for square invertible m over Q."""
    if not m.is_square or m.rows != rhs.rows:
        raise ValueError('incompatible system {} / {}'.format(m.shape, rhs.shape))
    if m.modulus is not None or rhs.modulus is not None:
        raise ValueError('solve works over Q; use inverse for modular matrices')
    if det_bareiss(m) == 0:
        raise ValueError('singular system')
    return ExactMatrix(_to_sympy(m).LUsolve(_to_sympy(rhs)).tolist())


def inverse(m):
    # type: (ExactMatrix) -> ExactMatrix
    if not m.is_square:
        raise ValueError('inverse of a non-square {} matrix'.format(m.shape))
    det = det_bareiss(m)
    if m.modulus is not None:
        if gcd(det, m.modulus) != 1:
            raise ValueError('matrix not invertible mod {}'.format(m.modulus))
        return ExactMatrix(_to_sympy(m).inv_mod(m.modulus).tolist(), modulus=m.modulus)
    if det == 0:
        raise ValueError('singular matrix')
    return ExactMatrix(_to_sympy(m).inv().tolist())


# PENCILS ----

def pencil_det(a, b):
    # type: (ExactMatrix, ExactMatrix) -> list
    """Coefficients c_0..c_N of det(xA - yB), c_i multiplying x^(N-i) y^i.

    Evaluates det(tA - B) at t = 0..N and interpolates exactly.
    """
    if not a.is_square or a.shape != b.shape:
        raise ValueError('pencil needs two square matrices of equal size, got {} and {}'
                         .format(a.shape, b.shape))
    if a.modulus != b.modulus:
        raise ValueError('pencil matrices over different rings')
    if a.modulus is not None:
        coeffs = pencil_det(a.lift(), b.lift())
        return [int(c) % a.modulus for c in coeffs]
    n = a.rows
    points = [(t, _sympify_exact(det_bareiss(a.scale(t) - b))) for t in range(n + 1)]
    poly = sympy.Poly(sympy.interpolate(points, _T), _T)
    return [_demote(_to_exact(poly.coeff_monomial(_T ** (n - i)))) for i in range(n + 1)]


def symbolic_pencil_det(a, b):
    # type: (ExactMatrix, ExactMatrix) -> list
    """Same coefficients as pencil_det, by symbolic expansion in sympy."""
    x, y = sympy.symbols('x y')
    n = a.rows
    mat = sympy.Matrix(n, n, lambda i, j: x * _sympify_exact(a.entry(i, j)) - y * _sympify_exact(b.entry(i, j)))
    poly = sympy.Poly(sympy.expand(mat.det(method='berkowitz')), x, y)
    coeffs = [sympy.Rational(poly.coeff_monomial(x ** (n - i) * y ** i)) for i in range(n + 1)]
    return [_demote(Fraction(int(c.p), int(c.q))) for c in coeffs]
