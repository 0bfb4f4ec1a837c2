from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from pencil_orbits.algebra import ExactMatrix, inverse
from pencil_orbits.pencils.group_element import BlockGroupElement, GROUP_TAGS
from pencil_orbits.pencils.sym_pair import SymPair

# groups whose action preserves each space
PRESERVING_GROUPS = {
    'W': GROUP_TAGS,
    'W0': ('G_N', 'L_N', 'H1', 'H2', 'SLnxSLn1'),
    'W00': ('L_N', 'H1'),
    'Wtop': ('SLnxSLn1', 'L_N'),
    'Wtop0': ('L_N',),
}


def _matrix_for(g, w):
    m = g.matrix
    if w.modulus is not None and m.modulus != w.modulus:
        if m.modulus is not None:
            raise ValueError('group element mod {} cannot act on a pair mod {}'.format(m.modulus, w.modulus))
        m = m.reduce(w.modulus)
    elif w.modulus is None and m.modulus is not None:
        raise ValueError('modular group element cannot act on an integral pair')
    return m


def act(g, w):
    # type: (BlockGroupElement, SymPair) -> SymPair
    """g . (A, B) = (g A g^T, g B g^T)."""
    if g.size != w.size:
        raise ValueError('size mismatch: element {} on pair {}'.format(g.size, w.size))
    if g.group_tag not in PRESERVING_GROUPS[w.space_tag]:
        raise ValueError('{} does not preserve {}'.format(g.group_tag, w.space_tag))
    m = _matrix_for(g, w)
    return SymPair(m @ w.a @ m.T, m @ w.b @ m.T, space_tag=w.space_tag)


def act_gl2_twist(gamma, g, w):
    # type: (list, BlockGroupElement, SymPair) -> SymPair
    """(g (aA - bB) g^T, g (cA - dB) g^T) for gamma = [[a, b], [c, d]]; size 3 only."""
    if w.size != 3:
        raise ValueError('the GL2 twist is only defined for 3 x 3 pairs')
    (a, b), (c, d) = gamma
    if a * d - b * c == 0:
        raise ValueError('gamma must be invertible')
    twisted = SymPair(w.a.scale(a) - w.b.scale(b), w.a.scale(c) - w.b.scale(d), space_tag=w.space_tag)
    return act(g, twisted)


def split_frobenius(g, integral=None):
    # type: (BlockGroupElement, bool) -> tuple
    """g = h1 . h2 with h1 = [[I, 0], [g''' g'^-1, I]] in H1 and h2 = diag(g', g'') in H2.

    With integral=True (the default for integer g) a non-integral h1 is an error.
    """
    if g.group_tag not in ('G_N', 'H1', 'H2', 'L_N', 'SLnxSLn1'):
        raise ValueError('split_frobenius needs an element of G_N, got {}'.format(g.group_tag))
    top, lower_left, bottom = g.blocks()
    if integral is None:
        integral = g.matrix.is_integral
    shear = lower_left @ inverse(top)
    if integral and not shear.is_integral:
        raise ValueError('g\'\'\' g\'^-1 is not integral: {}'.format(shear.to_text()))
    h1 = BlockGroupElement.unipotent(shear)
    h2 = BlockGroupElement.block_diagonal(top, bottom, 'H2')
    return h1, h2


def conjugated_unipotent(h1, h2):
    # type: (BlockGroupElement, BlockGroupElement) -> BlockGroupElement
    """h1' with h1 h2 = h2 h1', lower block g''^-1 X g'."""
    _, shear, _ = h1.blocks()
    top, _, bottom = h2.blocks()
    return BlockGroupElement.unipotent(inverse(bottom) @ shear @ top)


def commute_identity_check(h1, h2):
    # type: (BlockGroupElement, BlockGroupElement) -> bool
    if h1.size != h2.size:
        raise ValueError('size mismatch {} vs {}'.format(h1.size, h2.size))
    h1_prime = conjugated_unipotent(h1, h2)
    return h1.matrix @ h2.matrix == h2.matrix @ h1_prime.matrix


def zero_pair(size, space_tag='W', modulus=None):
    z = ExactMatrix.zeros(size, size, modulus=modulus)
    return SymPair(z, z, space_tag=space_tag)
