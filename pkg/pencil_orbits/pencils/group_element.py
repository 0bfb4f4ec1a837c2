from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
from fractions import Fraction

import numpy as np

from pencil_orbits.algebra import ExactMatrix, det_bareiss, inverse

GROUP_TAGS = ('SL_N', 'G_N', 'L_N', 'H1', 'H2', 'SLnxSLn1')


def _is_one(value, modulus):
    return value % modulus == 1 % modulus if modulus is not None else value == 1


def _block_dets(matrix, n):
    size = matrix.rows
    top = matrix.submatrix(range(n), range(n))
    bottom = matrix.submatrix(range(n, size), range(n, size))
    return det_bareiss(top), det_bareiss(bottom)


def zero_pattern(group_tag, size):
    """Boolean mask of the entries forced to vanish in the group."""
    if group_tag not in GROUP_TAGS:
        raise ValueError('unknown group tag {}'.format(group_tag))
    n = (size - 1) // 2
    mask = np.zeros((size, size), dtype=bool)
    if group_tag == 'SL_N':
        return mask
    mask[:n, n:] = True
    if group_tag in ('H2', 'SLnxSLn1', 'L_N'):
        mask[n:, :n] = True
    if group_tag in ('L_N', 'H1'):
        mask |= np.triu(np.ones((size, size), dtype=bool), 1)
    if group_tag == 'H1':
        mask[:n, :n] |= ~np.eye(n, dtype=bool)
        mask[n:, n:] |= ~np.eye(size - n, dtype=bool)
    return mask


def group_violations(matrix, group_tag):
    # type: (ExactMatrix, str) -> list
    if not matrix.is_square or matrix.rows < 3 or matrix.rows % 2 == 0:
        return ['shape {}'.format(matrix.shape)]
    size = matrix.rows
    n = (size - 1) // 2
    modulus = matrix.modulus
    bad = ['entry ({}, {})'.format(i, j) for i, j in zip(*np.nonzero(zero_pattern(group_tag, size)))
           if matrix.entry(i, j) != 0]
    if group_tag == 'H1' and not all(_is_one(matrix.entry(i, i), modulus) for i in range(size)):
        bad.append('diagonal')
    if group_tag in ('SLnxSLn1', 'L_N'):
        if not all(_is_one(d, modulus) for d in _block_dets(matrix, n)):
            bad.append('block determinants')
    elif not _is_one(det_bareiss(matrix), modulus):
        bad.append('determinant')
    return bad


class BlockGroupElement(object):
    """A full N x N matrix carrying the name of the block subgroup it lies in."""

    def __init__(self, matrix, group_tag='SL_N'):
        # type: (ExactMatrix, str) -> None
        bad = group_violations(matrix, group_tag)
        if bad:
            raise ValueError('matrix is not in {}: {}'.format(group_tag, ', '.join(bad)))
        self.matrix = matrix
        self.group_tag = group_tag

    @classmethod
    def identity(cls, size, group_tag='SL_N', modulus=None):
        return cls(ExactMatrix.identity(size, modulus=modulus), group_tag)

    @classmethod
    def block_diagonal(cls, top, bottom, group_tag='SLnxSLn1'):
        n = top.rows
        return cls(ExactMatrix.block(top, ExactMatrix.zeros(n, n + 1, top.modulus),
                                     ExactMatrix.zeros(n + 1, n, top.modulus), bottom), group_tag)

    @classmethod
    def unipotent(cls, lower_left, group_tag='H1'):
        """[[I, 0], [X, I]] with X of shape (n+1) x n."""
        rows, n = lower_left.shape
        return cls(ExactMatrix.block(ExactMatrix.identity(n, lower_left.modulus),
                                     ExactMatrix.zeros(n, rows, lower_left.modulus), lower_left,
                                     ExactMatrix.identity(rows, lower_left.modulus)), group_tag)

    @property
    def size(self):
        return self.matrix.rows

    @property
    def n(self):
        return (self.size - 1) // 2

    def blocks(self):
        """(g', g''', g'') : top-left, bottom-left and bottom-right blocks."""
        n, size = self.n, self.size
        m = self.matrix
        return (m.submatrix(range(n), range(n)), m.submatrix(range(n, size), range(n)),
                m.submatrix(range(n, size), range(n, size)))

    def is_identity(self):
        return self.matrix == ExactMatrix.identity(self.size, modulus=self.matrix.modulus)

    def reduce(self, modulus):
        return BlockGroupElement(self.matrix.reduce(modulus), self.group_tag)

    def __matmul__(self, other):
        tag = self.group_tag if self.group_tag == other.group_tag else 'SL_N'
        product = self.matrix @ other.matrix
        if tag == 'SL_N' and not group_violations(product, 'G_N'):
            tag = 'G_N'
        return BlockGroupElement(product, tag)

    __mul__ = __matmul__

    def inverse(self):
        return BlockGroupElement(inverse(self.matrix), self.group_tag)

    def __eq__(self, other):
        return isinstance(other, BlockGroupElement) and self.matrix == other.matrix

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return 'BlockGroupElement({}, {})'.format(self.matrix.to_text(), self.group_tag)


# RANDOM ELEMENTS ----

def _random_entry(rng, bound, rational):
    num = int(rng.randint(-bound, bound + 1))
    if rational:
        return Fraction(num, int(rng.randint(1, bound + 1)))
    return num


def _random_unit_lower(rng, size, bound, rational):
    return [[1 if i == j else (_random_entry(rng, bound, rational) if j < i else 0) for j in range(size)]
            for i in range(size)]


def _random_sl(rng, size, bound, rational):
    """Unit lower times unit upper triangular; over Q also a determinant-one diagonal twist."""
    lower = ExactMatrix(_random_unit_lower(rng, size, bound, rational))
    upper = ExactMatrix(_random_unit_lower(rng, size, bound, rational)).T
    m = lower @ upper
    if rational and size > 1:
        scale = Fraction(int(rng.randint(1, bound + 1)), int(rng.randint(1, bound + 1)))
        diag = ExactMatrix([[scale if i == j == 0 else (1 / scale if i == j == 1 else (1 if i == j else 0))
                             for j in range(size)] for i in range(size)])
        m = m @ diag
    return m


def _random_diagonal(rng, size, rational, bound):
    # determinant one; over Z only signs
    if rational:
        entries = [Fraction(int(rng.randint(1, bound + 1)), int(rng.randint(1, bound + 1))) *
                   int(rng.choice([-1, 1])) for _ in range(size - 1)]
    else:
        entries = [int(rng.choice([-1, 1])) for _ in range(size - 1)]
    prod = Fraction(1)
    for e in entries:
        prod *= e
    return entries + [1 / prod]


def random_element(group_tag, size, rng, rational=False, bound=3):
    """Random element of the named group over Z (rational=False) or Q, seeded through rng."""
    n = (size - 1) // 2
    if group_tag == 'SL_N':
        return BlockGroupElement(_random_sl(rng, size, bound, rational), 'SL_N')
    if group_tag == 'L_N':
        top = _random_diagonal(rng, n, rational, bound) if n > 1 else [1]
        bottom = _random_diagonal(rng, n + 1, rational, bound)
        diag = top + bottom
        lower = _random_unit_lower(rng, size, bound, rational)
        entries = [[diag[i] * lower[i][j] if (i < n) == (j < n) else 0 for j in range(size)]
                   for i in range(size)]
        return BlockGroupElement(ExactMatrix(entries), 'L_N')
    if group_tag == 'SLnxSLn1':
        top = _random_sl(rng, n, bound, rational) if n > 1 else ExactMatrix([[1]])
        return BlockGroupElement.block_diagonal(top, _random_sl(rng, n + 1, bound, rational), 'SLnxSLn1')
    if group_tag == 'H1':
        lower_left = ExactMatrix([[_random_entry(rng, bound, rational) for _ in range(n)] for _ in range(n + 1)])
        return BlockGroupElement.unipotent(lower_left)
    if group_tag in ('H2', 'G_N'):
        if rational:
            unit = Fraction(int(rng.randint(1, bound + 1)), int(rng.randint(1, bound + 1)))
        else:
            unit = 1
        sign = int(rng.choice([-1, 1]))
        top = _random_sl(rng, n, bound, rational) if n > 1 else ExactMatrix([[1]])
        top = top @ ExactMatrix([[sign * unit if i == j == 0 else (1 if i == j else 0) for j in range(n)]
                                 for i in range(n)])
        bottom = _random_sl(rng, n + 1, bound, rational)
        bottom = bottom @ ExactMatrix([[1 / Fraction(sign * unit) if i == j == 0 else (1 if i == j else 0)
                                        for j in range(n + 1)] for i in range(n + 1)])
        h2 = BlockGroupElement.block_diagonal(top, bottom, 'H2')
        if group_tag == 'H2':
            return h2
        h1 = random_element('H1', size, rng, rational=rational, bound=bound)
        return BlockGroupElement(h1.matrix @ h2.matrix, 'G_N')
    raise ValueError('unknown group tag {}'.format(group_tag))


# POINT COUNTS ----

def _batch_det(arr):
    # integer Laplace expansion over a stack of square matrices
    size = arr.shape[-1]
    if size == 1:
        return arr[..., 0, 0]
    total = np.zeros(arr.shape[:-2], dtype=np.int64)
    for j in range(size):
        sub = np.delete(np.delete(arr, 0, axis=-2), j, axis=-1)
        total = total + (-1) ** j * arr[..., 0, j] * _batch_det(sub)
    return total


def group_point_count(group_tag, p, n=1):
    """#G(F_p) by exhaustive enumeration of the entries the group leaves free."""
    size = 2 * n + 1
    mask = zero_pattern(group_tag, size)
    free = [(i, j) for i in range(size) for j in range(size) if not mask[i, j]]
    if group_tag == 'H1':
        free = [(i, j) for i, j in free if i != j]
    values = np.array(list(itertools.product(range(p), repeat=len(free))), dtype=np.int64)
    stack = np.zeros((values.shape[0], size, size), dtype=np.int64)
    if group_tag == 'H1':
        stack[:, range(size), range(size)] = 1
    for col, (i, j) in enumerate(free):
        stack[:, i, j] = values[:, col]
    if group_tag in ('SLnxSLn1', 'L_N'):
        ok = (_batch_det(stack[:, :n, :n]) % p == 1 % p) & (_batch_det(stack[:, n:, n:]) % p == 1 % p)
    else:
        ok = _batch_det(stack) % p == 1 % p
    return int(np.count_nonzero(ok))
