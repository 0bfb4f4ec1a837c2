from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools

from pencil_orbits.algebra import ExactMatrix, det_bareiss
from pencil_orbits.forms import BinaryForm, discriminant


class CubicRing(object):
    """The ring with basis 1, w, t attached to a binary cubic form (a, b, c, d).

    w t = -ad,  w^2 = -ac + b w - a t,  t^2 = -bd + d w - c t.
    Elements are coordinate tuples (x0, x1, x2) meaning x0 + x1 w + x2 t.
    """

    ONE = (1, 0, 0)
    OMEGA = (0, 1, 0)
    THETA = (0, 0, 1)

    def __init__(self, f):
        # type: (BinaryForm) -> None
        if f.degree != 3:
            raise ValueError('cubic rings come from binary cubic forms, got degree {}'.format(f.degree))
        a, b, c, d = f
        self.form = f
        basis = (self.ONE, self.OMEGA, self.THETA)
        products = {
            (1, 1): (-a * c, b, -a),
            (1, 2): (-a * d, 0, 0),
            (2, 2): (-b * d, d, -c),
        }
        table = [[None] * 3 for _ in range(3)]
        for i, j in itertools.product(range(3), repeat=2):
            if i == 0 or j == 0:
                table[i][j] = basis[i + j]
            else:
                table[i][j] = products[(min(i, j), max(i, j))]
        self.table = table

    def mul(self, u, v):
        out = [0, 0, 0]
        for i, x in enumerate(u):
            if x == 0:
                continue
            for j, y in enumerate(v):
                if y == 0:
                    continue
                for k, z in enumerate(self.table[i][j]):
                    out[k] += x * y * z
        return tuple(out)

    def multiplication_matrix(self, u):
        """Columns are u * 1, u * w, u * t."""
        cols = [self.mul(u, e) for e in (self.ONE, self.OMEGA, self.THETA)]
        return ExactMatrix([[cols[j][i] for j in range(3)] for i in range(3)])

    def trace(self, u):
        m = self.multiplication_matrix(u)
        return sum(m.entry(i, i) for i in range(3))

    def trace_form(self):
        return ExactMatrix([[self.trace(self.table[i][j]) for j in range(3)] for i in range(3)])

    def discriminant(self):
        return det_bareiss(self.trace_form())

    def is_commutative(self):
        return all(self.table[i][j] == self.table[j][i] for i in range(3) for j in range(3))

    def is_associative(self):
        basis = (self.ONE, self.OMEGA, self.THETA)
        for x, y, z in itertools.product(basis, repeat=3):
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)):
                return False
        return True

    def __repr__(self):
        return 'CubicRing({})'.format(self.form.to_text())


def ring_from_form(f, degree=3):
    # type: (BinaryForm, int) -> CubicRing
    if degree != 3:
        raise ValueError('only cubic rings are supported')
    ring = CubicRing(f)
    assert ring.is_commutative() and ring.is_associative(), 'multiplication table of {} is not a ring'.format(f)
    assert ring.discriminant() == discriminant(f), 'ring discriminant differs from disc(f)'
    return ring
