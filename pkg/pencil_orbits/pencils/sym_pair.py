from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from pencil_orbits.algebra import ExactMatrix

SPACE_TAGS = ('W', 'W0', 'W00', 'Wtop', 'Wtop0')


def space_violations(a, b, tag):
    # type: (ExactMatrix, ExactMatrix, str) -> list
    """(matrix, i, j) positions, 0-based, where the pair breaks the vanishing pattern of tag."""
    if tag not in SPACE_TAGS:
        raise ValueError('unknown space tag {}'.format(tag))
    size = a.rows
    n = (size - 1) // 2
    bad = []
    for i in range(size):
        for j in range(size):
            # 1-based indices in the conditions below
            r, c = i + 1, j + 1
            zero_a = zero_b = False
            if tag != 'W' and r <= n and c <= n:
                zero_a = zero_b = True
            if tag in ('Wtop', 'Wtop0') and r >= n + 1 and c >= n + 1:
                zero_a = zero_b = True
            if tag in ('Wtop0', 'W00'):
                zero_a = zero_a or r + c <= 2 * n + 1
                zero_b = zero_b or r + c <= 2 * n
            if zero_a and a.entry(i, j) != 0:
                bad.append(('A', i, j))
            if zero_b and b.entry(i, j) != 0:
                bad.append(('B', i, j))
    return bad


class SymPair(object):
    """Pair (A, B) of symmetric N x N matrices over Z, Q or Z/mZ, validated against a space tag."""

    def __init__(self, a, b, space_tag='W'):
        # type: (ExactMatrix, ExactMatrix, str) -> None
        if not a.is_square or a.shape != b.shape:
            raise ValueError('pair needs two square matrices of equal size, got {} and {}'.format(a.shape, b.shape))
        if a.modulus != b.modulus:
            raise ValueError('pair matrices over different rings')
        if a.rows < 3 or a.rows % 2 == 0:
            raise ValueError('pair size must be odd and at least 3, got {}'.format(a.rows))
        if not a.is_symmetric() or not b.is_symmetric():
            raise ValueError('pair matrices must be symmetric')
        bad = space_violations(a, b, space_tag)
        if bad:
            raise ValueError('pair is not in {}: nonzero entries at {}'.format(space_tag, bad[:4]))
        self.a = a
        self.b = b
        self.space_tag = space_tag

    @classmethod
    def from_lists(cls, a, b, space_tag='W', modulus=None):
        return cls(ExactMatrix(a, modulus=modulus), ExactMatrix(b, modulus=modulus), space_tag=space_tag)

    @classmethod
    def from_text(cls, text, space_tag='W', modulus=None):
        # "A=0,0,1;0,1,0;1,0,0;B=..."
        text = text.strip()
        if not text.startswith('A=') or ';B=' not in text:
            raise ValueError('pair text must look like "A=<matrix>;B=<matrix>"')
        a_text, b_text = text[2:].split(';B=')
        return cls(ExactMatrix.from_text(a_text, modulus=modulus), ExactMatrix.from_text(b_text, modulus=modulus),
                   space_tag=space_tag)

    def to_text(self):
        return 'A={};B={}'.format(self.a.to_text(), self.b.to_text())

    @property
    def size(self):
        return self.a.rows

    @property
    def n(self):
        return (self.size - 1) // 2

    @property
    def modulus(self):
        return self.a.modulus

    def top_right(self):
        """The n x (n+1) upper-right blocks of A and B."""
        n, size = self.n, self.size
        rows, cols = range(n), range(n, size)
        return self.a.submatrix(rows, cols), self.b.submatrix(rows, cols)

    def lower_right(self):
        n, size = self.n, self.size
        idx = range(n, size)
        return self.a.submatrix(idx, idx), self.b.submatrix(idx, idx)

    def project_top(self):
        """Drop the lower-right blocks; only defined on W0."""
        if space_violations(self.a, self.b, 'W0'):
            raise ValueError('projection onto Wtop needs a pair in W0')
        n, size = self.n, self.size

        def clear(m):
            return ExactMatrix([[0 if (i >= n and j >= n) else m.entry(i, j) for j in range(size)]
                                for i in range(size)], modulus=m.modulus)

        return SymPair(clear(self.a), clear(self.b), space_tag='Wtop')

    def with_tag(self, space_tag):
        return SymPair(self.a, self.b, space_tag=space_tag)

    def in_space(self, space_tag):
        return not space_violations(self.a, self.b, space_tag)

    def reduce(self, modulus):
        return SymPair(self.a.reduce(modulus), self.b.reduce(modulus), space_tag=self.space_tag)

    def lift(self):
        return SymPair(self.a.lift(), self.b.lift(), space_tag=self.space_tag)

    def __eq__(self, other):
        return isinstance(other, SymPair) and self.a == other.a and self.b == other.b

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return 'SymPair({}, {})'.format(self.to_text(), self.space_tag)
