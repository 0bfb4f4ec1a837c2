from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pencil_orbits.algebra import ExactMatrix
from pencil_orbits.forms import discriminant
from pencil_orbits.invariants import inv, section_inv
from pencil_orbits.pencils import BlockGroupElement, GROUP_TAGS, SPACE_TAGS, SymPair, act, act_gl2_twist, \
    commute_identity_check, group_point_count, group_violations, random_element, split_frobenius, zero_pair

seeds = st.integers(0, 2 ** 32 - 1)


@st.composite
def symmetric_lists(draw, size, entries):
    m = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            m[i][j] = m[j][i] = draw(entries)
    return m


@st.composite
def w0_pairs(draw, size=3, bound=4):
    n = size // 2
    a, b = [draw(symmetric_lists(size, st.integers(-bound, bound))) for _ in range(2)]
    for m in (a, b):
        for i in range(n):
            for j in range(n):
                m[i][j] = 0
    return SymPair.from_lists(a, b, space_tag='W0')


def _must_vanish(tag, n, r, c):
    """(A entry, B entry) forced to zero at 1-based (r, c)."""
    top = r <= n and c <= n
    bottom = r > n and c > n
    corner_a, corner_b = r + c <= 2 * n + 1, r + c <= 2 * n
    if tag == 'W':
        return False, False
    if tag == 'W0':
        return top, top
    if tag == 'W00':
        return top or corner_a, top or corner_b
    if tag == 'Wtop':
        return top or bottom, top or bottom
    return top or bottom or corner_a, top or bottom or corner_b


def test_pair_validation():
    with pytest.raises(ValueError):
        SymPair.from_lists([[0, 1, 0], [0, 0, 0], [0, 0, 0]], [[0] * 3] * 3)
    with pytest.raises(ValueError):
        SymPair.from_lists([[1, 0], [0, 1]], [[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        SymPair.from_lists([[1, 0, 0], [0, 0, 0], [0, 0, 0]], [[0] * 3] * 3, space_tag='W0')
    with pytest.raises(ValueError):
        zero_pair(3, space_tag='nowhere')


def test_pair_text_round_trip():
    w = section_inv((1, 0, 0, -2))
    again = SymPair.from_text(w.to_text(), space_tag='W00')
    assert again == w
    assert w.in_space('W0') and w.in_space('W00') and not w.in_space('Wtop')


def test_group_tags_validate():
    with pytest.raises(ValueError):
        BlockGroupElement(ExactMatrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]]), 'G_N')
    assert BlockGroupElement(ExactMatrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]]), 'SL_N').group_tag == 'SL_N'
    with pytest.raises(ValueError):
        BlockGroupElement.identity(3, group_tag='GL_N')


@given(st.sampled_from(SPACE_TAGS), st.sampled_from([3, 5]), st.data())
def test_pair_accepted_exactly_on_its_space(tag, size, data):
    entries = st.sampled_from([0, 0, 0, 1, -2])
    a, b = data.draw(symmetric_lists(size, entries)), data.draw(symmetric_lists(size, entries))
    n = size // 2
    expected = all(not ((zero_a and a[r - 1][c - 1]) or (zero_b and b[r - 1][c - 1]))
                   for r in range(1, size + 1) for c in range(1, size + 1)
                   for zero_a, zero_b in [_must_vanish(tag, n, r, c)])
    try:
        SymPair.from_lists(a, b, space_tag=tag)
        accepted = True
    except ValueError:
        accepted = False
    assert accepted == expected


@given(st.sampled_from(GROUP_TAGS), st.sampled_from([3, 5]), st.booleans(), seeds)
def test_random_elements_lie_in_their_groups(tag, size, rational, seed):
    g = random_element(tag, size, np.random.RandomState(seed), rational=rational)
    assert g.group_tag == tag
    assert not group_violations(g.matrix, tag)


def test_point_counts_over_f2():
    assert group_point_count('G_N', 2) == 24
    assert group_point_count('SLnxSLn1', 2) == 6
    assert group_point_count('H1', 2) == 4


@pytest.mark.parametrize('p, n', [(3, 1), (5, 1), (3, 2)])
def test_unipotent_point_count(p, n):
    assert group_point_count('H1', p, n) == p ** (n * n + n)


def test_identity_acts_trivially():
    w = section_inv((1, 2, 3, 4)).with_tag('W0')
    assert act(BlockGroupElement.identity(3, group_tag='G_N'), w) == w


@given(st.sampled_from([(1, 0, 0, -2), (2, -1, 3, 5), (1, 0, 1, 0, -1, 2)]), seeds)
@settings(max_examples=100)
def test_action_preserves_inv(coeffs, seed):
    w = section_inv(coeffs).with_tag('W0')
    g = random_element('G_N', w.size, np.random.RandomState(seed))
    assert inv(act(g, w)) == inv(w)


@given(w0_pairs(), seeds)
def test_action_composes(w, seed):
    rng = np.random.RandomState(seed)
    g1, g2 = random_element('G_N', 3, rng), random_element('G_N', 3, rng)
    assert act(g1 @ g2, w) == act(g1, act(g2, w))


def test_action_respects_spaces():
    w = section_inv((1, 0, 0, -2))
    rng = np.random.RandomState(2)
    with pytest.raises(ValueError):
        act(random_element('G_N', 3, rng), w)
    moved = act(random_element('H1', 3, rng), w)
    assert moved.in_space('W00')
    with pytest.raises(ValueError):
        act(BlockGroupElement.identity(5, group_tag='G_N'), w.with_tag('W0'))


def test_modular_action():
    w = section_inv((1, 0, 0, -2)).with_tag('W0').reduce(5)
    g = random_element('G_N', 3, np.random.RandomState(3))
    moved = act(g, w)
    assert moved.modulus == 5
    assert moved == act(g, section_inv((1, 0, 0, -2)).with_tag('W0')).reduce(5)
    with pytest.raises(ValueError):
        act(g.reduce(5), section_inv((1, 0, 0, -2)).with_tag('W0'))


def test_split_frobenius():
    rng = np.random.RandomState(4)
    for size in (3, 5):
        g = random_element('G_N', size, rng)
        h1, h2 = split_frobenius(g)
        assert h1.matrix @ h2.matrix == g.matrix
        assert commute_identity_check(h1, h2)


def test_products_and_inverses():
    rng = np.random.RandomState(5)
    g = random_element('G_N', 3, rng)
    h = random_element('H1', 3, rng)
    assert (g @ g.inverse()).is_identity()
    assert (g @ h).group_tag == 'G_N'


def test_gl2_twist_by_sign_change():
    w = section_inv((1, 0, 0, -2)).with_tag('W0')
    g = BlockGroupElement.identity(3, group_tag='G_N')
    twisted = act_gl2_twist([[1, 0], [0, -1]], g, w)
    assert twisted == w
    with pytest.raises(ValueError):
        act_gl2_twist([[1, 1], [1, 1]], g, w)


@given(w0_pairs(bound=3), st.lists(st.integers(-3, 3), min_size=4, max_size=4), seeds)
def test_gl2_twist_scales_discriminant(w, entries, seed):
    a, b, c, d = entries
    gamma = [[a, b], [c, d]]
    det_gamma = a * d - b * c
    if det_gamma == 0:
        with pytest.raises(ValueError):
            act_gl2_twist(gamma, BlockGroupElement.identity(3, group_tag='G_N'), w)
        return
    g = random_element('G_N', 3, np.random.RandomState(seed))
    twisted = act_gl2_twist(gamma, g, w)
    assert discriminant(inv(twisted)) == det_gamma ** 6 * discriminant(inv(w))
