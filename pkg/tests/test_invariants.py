from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pencil_orbits.forms import BinaryForm
from pencil_orbits.invariants import hyperdeterminant, inv, is_projective, lambda_scaling, lambda_value, \
    non_projective_primes, projective_mask_mod_p, projectivity_gcd, section_inv, section_q, section_unknowns
from pencil_orbits.pencils import SymPair, act, random_element, zero_pair

seeds = st.integers(0, 2 ** 32 - 1)


@st.composite
def symmetric_arrays(draw, size=3, bound=3):
    m = np.zeros((size, size), dtype=np.int64)
    for i in range(size):
        for j in range(i, size):
            m[i, j] = m[j, i] = draw(st.integers(-bound, bound))
    return m


@st.composite
def pairs(draw, bound=3):
    return SymPair.from_lists(draw(symmetric_arrays(bound=bound)).tolist(), draw(symmetric_arrays(bound=bound)).tolist())


def forms(degree, bound=6):
    return st.lists(st.integers(-bound, bound), min_size=degree + 1, max_size=degree + 1)


def test_inv_sign_convention():
    # (-1)^n det(xA - yB) with A = I, B = diag(1, 2, 3)
    w = SymPair.from_lists([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 2, 0], [0, 0, 3]])
    assert inv(w) == BinaryForm((-1, 6, -11, 6))


def test_section_q_has_lambda():
    for size in (3, 5):
        for q0 in (1, -1, 5, 12):
            w = section_q(size, q0)
            assert w.in_space('Wtop0')
            assert hyperdeterminant(w) == q0
    with pytest.raises(ValueError):
        section_q(3, 0)
    with pytest.raises(ValueError):
        section_q(4, 1)


def test_section_inv():
    for coeffs in ((1, 0, 0, -2), (3, -1, 4, 1), (2, 0, 1, 0, -1, 5)):
        w = section_inv(coeffs)
        assert w.in_space('W00')
        assert inv(w) == BinaryForm(coeffs)
        assert hyperdeterminant(w) == 1


def test_lambda_value_source():
    assert lambda_value(section_q(3, 7)).source == 'Wtop'
    assert lambda_value(section_inv((1, 0, 0, -2))).source == 'W0'
    assert lambda_value(section_q(3, 7)) == 7


def test_lambda_needs_w0():
    w = SymPair.from_lists([[1, 0, 0], [0, 0, 0], [0, 0, 0]], [[0] * 3] * 3)
    with pytest.raises(ValueError):
        hyperdeterminant(w)


@given(st.sampled_from([3, 5]), seeds)
def test_lambda_invariant_on_wtop(size, seed):
    w = section_q(size, 6).with_tag('Wtop')
    g = random_element('SLnxSLn1', size, np.random.RandomState(seed))
    assert hyperdeterminant(act(g, w)) == 6


@given(seeds)
def test_lambda_scales_by_lower_determinant(seed):
    rng = np.random.RandomState(seed)
    w = section_inv((1, 2, 0, -3)).with_tag('W0')
    assert lambda_scaling(random_element('G_N', 3, rng, rational=True), w)
    assert lambda_scaling(random_element('G_N', 3, rng), w.reduce(7))


@given(st.sampled_from([3, 5]).flatmap(forms))
def test_section_inv_round_trip(coeffs):
    w = section_inv(coeffs)
    assert w.in_space('W00')
    assert inv(w).coeffs == tuple(coeffs)
    assert hyperdeterminant(w) == 1


@pytest.mark.slow
@given(st.sampled_from([3, 5]).flatmap(forms))
@settings(max_examples=10 ** 4)
def test_section_inv_round_trip_at_scale(coeffs):
    w = section_inv(coeffs)
    assert inv(w).coeffs == tuple(coeffs)
    assert hyperdeterminant(w) == 1


def _solved_lower_diagonal(coeffs):
    """The section_unknowns entries, solved from det(xA - yB) by sympy as one linear system."""
    size = len(coeffs) - 1
    n = size // 2
    base = section_q(size, 1)
    mats = {'a': sympy.Matrix(base.a.to_list()), 'b': sympy.Matrix(base.b.to_list())}
    unknowns = []
    for which, d in section_unknowns(size):
        symbol = sympy.Symbol('{}{}'.format(which, d))
        mats[which][d, d] = symbol
        unknowns.append(symbol)
    x, y = sympy.symbols('x y')
    poly = sympy.Poly((-1) ** n * (x * mats['a'] - y * mats['b']).det(method='berkowitz'), x, y)
    equations = [poly.coeff_monomial(x ** (size - i) * y ** i) - c for i, c in enumerate(coeffs)]
    solutions = sympy.solve(equations, unknowns, dict=True)
    assert len(solutions) == 1
    return [solutions[0][s] for s in unknowns]


@pytest.mark.parametrize('coeffs', [(2, -1, 0, 3, 1, -4), (1, 0, -2, 5, 3, 0, -1, 2)])
def test_section_inv_matches_linear_solve(coeffs):
    w = section_inv(coeffs)
    mats = {'a': w.a, 'b': w.b}
    size = len(coeffs) - 1
    entries = [mats[which].entry(d, d) for which, d in section_unknowns(size)]
    assert entries == _solved_lower_diagonal(coeffs)
    n = size // 2
    # every other lower-block entry is zero
    for which in 'ab':
        for i in range(n, size):
            for j in range(n, size):
                if i != j:
                    assert mats[which].entry(i, j) == 0


def test_section_is_projective():
    w = section_inv((1, 0, 0, -2))
    assert is_projective(w)
    assert projectivity_gcd(w) == 1
    assert non_projective_primes(w) == []


def test_scaled_pair_fails_projectivity():
    w = section_inv((1, 0, 0, -2))
    doubled = SymPair(w.a.scale(2), w.b.scale(2))
    assert not is_projective(doubled)
    assert not is_projective(doubled, p=2)
    assert is_projective(doubled, p=3)
    assert 2 in non_projective_primes(doubled)


def test_zero_pair_projectivity():
    w = zero_pair(3)
    assert non_projective_primes(w) is None
    assert not is_projective(w)
    with pytest.raises(ValueError):
        is_projective(zero_pair(5))


@given(st.lists(st.tuples(symmetric_arrays(), symmetric_arrays()), min_size=1, max_size=30),
       st.sampled_from([2, 3, 5]))
def test_mask_matches_exact_test(stack, p):
    a = np.stack([pa for pa, _ in stack])
    b = np.stack([pb for _, pb in stack])
    mask = projective_mask_mod_p(a, b, p)
    expected = [is_projective(SymPair.from_lists(pa.tolist(), pb.tolist()), p=p) for pa, pb in stack]
    assert mask.tolist() == expected


@given(pairs(), seeds)
def test_projectivity_is_sl3_invariant(w, seed):
    g = random_element('SL_N', 3, np.random.RandomState(seed))
    moved = act(g, w)
    assert projectivity_gcd(moved) == projectivity_gcd(w)
    assert non_projective_primes(moved) == non_projective_primes(w)


@pytest.mark.slow
@given(pairs(bound=5), seeds)
@settings(max_examples=500)
def test_projectivity_is_sl3_invariant_along_orbits(w, seed):
    rng = np.random.RandomState(seed)
    for _ in range(50):
        assert is_projective(act(random_element('SL_N', 3, rng), w)) == is_projective(w)


@given(pairs(), symmetric_arrays(), symmetric_arrays(), st.sampled_from([2, 3, 5]))
def test_projectivity_depends_on_residue_only(w, da, db, p):
    shifted = SymPair.from_lists((np.array(w.a.to_list()) + p * da).tolist(),
                                 (np.array(w.b.to_list()) + p * db).tolist())
    assert is_projective(shifted, p) == is_projective(w, p)


@given(symmetric_arrays(), symmetric_arrays())
def test_even_top_row_fails_projectivity_at_two(a, b):
    for m in (a, b):
        m[0, 0] = 0
        m[0, 1:] *= 2
        m[1:, 0] = m[0, 1:]
    w = SymPair.from_lists(a.tolist(), b.tolist(), space_tag='W0')
    assert not is_projective(w, 2)
