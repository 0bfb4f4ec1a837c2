from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from pencil_orbits.algebra import ExactMatrix
from pencil_orbits.errors import PrecisionError
from pencil_orbits.forms import BinaryForm, discriminant
from pencil_orbits.invariants import hyperdeterminant, section_inv, section_q
from pencil_orbits.pencils import BlockGroupElement, SymPair, act, random_element, zero_pair
from pencil_orbits.reduction import LocalCountConfig, canonicalize_local, canonicalize_padic, check_partition, \
    domain_pair, elementary_factors, enumerate_local_reps, expected_key_count, inner_mass_by_enumeration, \
    local_orbit_count, orbit_equivalent_padic, reduce_GN_field, reduce_LN_field, valuation, working_precision

X3_MINUS_4Y3 = BinaryForm((1, 0, 0, -4))


# FUNDAMENTAL DOMAIN ----

def test_valuation():
    assert valuation(12, 2, 5) == 2
    assert valuation(-27, 3, 10) == 3
    assert valuation(0, 2, 5) == 5
    assert valuation(64, 2, 3) == 3


def test_expected_key_counts():
    assert expected_key_count(2, 1) == 1
    assert expected_key_count(2, 2) == 5
    assert expected_key_count(3, 1) == 2


@pytest.mark.parametrize('p, k, points', [(2, 1, 6), (2, 2, 168), (3, 1, 48)])
def test_partition(p, k, points):
    report = check_partition(p, k)
    assert report.keys == expected_key_count(p, k)
    assert report.points == points
    assert report.orbits >= report.keys


def test_canonical_point_certificate():
    w = domain_pair(3, 2, 1, 2, 4, 5)
    found = canonicalize_padic(w)
    assert act(found.certificate, w).with_tag('Wtop0') == found.pair
    assert found.lambda_valuation == valuation(hyperdeterminant(w.lift()) % 9, 3, 2) == 1
    assert found.pair.a.entry(0, 1) == 0
    again = canonicalize_padic(found.pair.with_tag('Wtop'))
    assert again.key == found.key


def test_canonical_point_errors():
    with pytest.raises(PrecisionError):
        canonicalize_padic(domain_pair(2, 1, 0, 0, 1, 0))
    with pytest.raises(ValueError):
        canonicalize_padic(SymPair.from_lists([[0, 0, 1], [0, 0, 0], [1, 0, 0]], [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
                                              space_tag='Wtop'))
    with pytest.raises(NotImplementedError):
        canonicalize_padic(zero_pair(5, space_tag='Wtop', modulus=4))


def _sl2_orbit(w, modulus):
    one = ExactMatrix([[1]], modulus=modulus)
    for a, b, c, d in itertools.product(range(modulus), repeat=4):
        if (a * d - b * c) % modulus == 1:
            g = BlockGroupElement.block_diagonal(one, ExactMatrix([[a, b], [c, d]], modulus=modulus))
            yield act(g, w)


def test_distinct_keys_are_distinct_orbits():
    # lambda = 2 mod 8: alpha = 0, beta = 1, so B_13 mod 2 separates the orbits
    w0, w1, w2 = (domain_pair(2, 3, 0, 1, 2, b13) for b13 in (0, 1, 2))
    assert canonicalize_padic(w0).key != canonicalize_padic(w1).key
    assert canonicalize_padic(w0).key == canonicalize_padic(w2).key
    orbit = list(_sl2_orbit(w0, 8))
    assert len(orbit) == 384
    assert w1 not in orbit
    assert w2 in orbit


def test_inner_mass():
    assert inner_mass_by_enumeration(2, 0, 0, 1) == 1
    assert inner_mass_by_enumeration(2, 0, 1, 2) == 2
    assert inner_mass_by_enumeration(2, 1, 0, 2) == 1
    assert inner_mass_by_enumeration(3, 0, 1, 2) == 3
    with pytest.raises(PrecisionError):
        inner_mass_by_enumeration(2, 1, 1, 2)


# LOCAL ORBITS ----

def test_working_precision():
    assert working_precision(0, 3) == 3
    assert working_precision(1, 3) == 4
    assert working_precision(2, 3) == 7
    assert working_precision(5, 3) == 16


def test_local_counts_x3_minus_4y3():
    at_two = local_orbit_count(X3_MINUS_4Y3, 2)
    assert at_two.counts() == [1, 2, 0]
    assert at_two.total == 3
    assert at_two.projective_total == 2
    assert at_two.complete
    at_three = local_orbit_count(X3_MINUS_4Y3, 3)
    assert at_three.counts() == [1, 0]
    assert at_three.projective_total == 1


def test_local_count_at_unramified_prime():
    result = local_orbit_count(BinaryForm((1, 0, 0, -2)), 5)
    assert result.counts() == [1]
    assert result.complete
    assert result.as_dict()['support_bound'] == 0


def test_truncated_count_is_incomplete():
    result = local_orbit_count(X3_MINUS_4Y3, 2, e_max=1)
    assert result.counts() == [1, 2]
    assert not result.complete


def test_precision_ceiling():
    with pytest.raises(PrecisionError):
        local_orbit_count(X3_MINUS_4Y3, 2, e_max=1, config=LocalCountConfig(max_precision=3))
    with pytest.raises(PrecisionError):
        enumerate_local_reps(X3_MINUS_4Y3, 2, 2, 2)


def test_local_count_rejections():
    with pytest.raises(NotImplementedError):
        local_orbit_count(BinaryForm((1, 0, 0, 0, 0, -2)), 2)
    with pytest.raises(ValueError):
        local_orbit_count(BinaryForm((1, 0, 0, 0)), 2)


def test_level_one_representatives_are_distinct():
    reps = enumerate_local_reps(X3_MINUS_4Y3, 2, 1, working_precision(1, 3))
    assert len(reps) == 2
    assert orbit_equivalent_padic(reps[0], reps[1]).verdict == 'distinct'
    assert orbit_equivalent_padic(reps[0], reps[0]).verdict == 'equivalent'


def test_equivalence_certificate_at_unit_lambda():
    rep, = enumerate_local_reps(X3_MINUS_4Y3, 2, 0, 3)
    rng = np.random.RandomState(0)
    for _ in range(5):
        moved = act(random_element('G_N', 3, rng), rep.pair).reduce(8)
        verdict = orbit_equivalent_padic(rep, moved)
        assert verdict.verdict == 'equivalent' and verdict.conclusive
        assert act(verdict.certificate, rep.entries) == moved


def test_equivalence_inconclusive_when_shallow():
    rep = enumerate_local_reps(X3_MINUS_4Y3, 2, 1, 4)[0]
    verdict = orbit_equivalent_padic(rep, rep, depth=3)
    assert verdict.verdict == 'inconclusive'
    assert not verdict.conclusive


def test_canonicalize_local_trace():
    rep = enumerate_local_reps(X3_MINUS_4Y3, 2, 1, 4)[1]
    g = random_element('G_N', 3, np.random.RandomState(1))
    w = act(g, rep.pair).reduce(16)
    canonical = canonicalize_local(w, 2)
    assert canonical.e == 1
    assert canonical.trace.replay() == canonical.pair
    assert act(canonical.certificate(), w) == canonical.pair
    order = ('first row', 'unit of lambda', 'B_13', 'A_23', 'B_23')
    labels = [step.label for step in canonical.trace]
    assert labels == sorted(labels, key=order.index)
    with pytest.raises(ValueError):
        canonicalize_local(w.lift(), 2)


# FIELD REDUCTION ----

def test_elementary_factors_multiply_back():
    g = random_element('L_N', 3, np.random.RandomState(2), rational=True)
    total = None
    for _, step in elementary_factors(g):
        total = step.matrix if total is None else step.matrix @ total
    assert total == g.matrix


def test_reduce_LN_field():
    rng = np.random.RandomState(3)
    target = section_q(3, 6)
    for _ in range(5):
        w = act(random_element('L_N', 3, rng, rational=True), target)
        canonical, trace = reduce_LN_field(w)
        assert canonical == target
        assert trace.replay() == canonical
        assert act(trace.total('L_N'), trace.start) == canonical


@given(st.integers(0, 2 ** 32 - 1))
@settings(max_examples=20)
def test_reduce_LN_field_five_by_five(seed):
    target = section_q(5, 6)
    w = act(random_element('L_N', 5, np.random.RandomState(seed), rational=True), target)
    canonical, trace = reduce_LN_field(w)
    assert canonical == target
    assert act(trace.total('L_N'), w) == canonical


def test_reduce_LN_rejects_zero_lambda():
    with pytest.raises(ValueError):
        reduce_LN_field(zero_pair(3, space_tag='Wtop0'))


def test_reduce_GN_field():
    rng = np.random.RandomState(4)
    for coeffs in ((1, 0, 0, -2), (2, -3, 1, 5), (1, 0, 0, 0, 0, -1)):
        canonical = section_inv(coeffs)
        w = act(random_element('G_N', canonical.size, rng, rational=True), canonical.with_tag('W0'))
        reduced, trace = reduce_GN_field(w)
        assert reduced == canonical
        assert act(trace.total('G_N'), trace.start) == canonical
        records = trace.to_records()
        assert len(records) == len(trace)
        assert {r['label'] for r in records} <= {'SLnxSLn1', 'H2', 'H1'}


def test_reduce_GN_field_is_idle_on_canonical_pairs():
    _, trace = reduce_GN_field(section_inv((1, 0, 0, -2)).with_tag('W0'))
    assert trace.total('G_N').is_identity()


def test_reduce_GN_field_rejects_singular_forms():
    with pytest.raises(ValueError):
        reduce_GN_field(section_inv((1, 0, 0, 0)).with_tag('W0'))


@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4), st.integers(0, 2 ** 32 - 1))
def test_integral_orbit_at_unit_lambda(coeffs, seed):
    assume(discriminant(BinaryForm(coeffs)) != 0)
    canonical = section_inv(coeffs)
    h = random_element('G_N', 3, np.random.RandomState(seed))
    w = act(h, canonical.with_tag('W0'))
    assert abs(hyperdeterminant(w)) == 1
    reduced, trace = reduce_GN_field(w)
    assert reduced == canonical
    total = trace.total('G_N')
    assert total.matrix.is_integral
    assert act(total, w) == canonical
