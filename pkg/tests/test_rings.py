from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from fractions import Fraction

import pytest

from pencil_orbits.census import projective_orbit_product, two_torsion_corpus
from pencil_orbits.forms import BinaryForm, discriminant
from pencil_orbits.rings import CubicRing, FracIdeal, ideal_mul, is_ideal, principal_ideal, ring_from_form, \
    squares_to_unit, two_torsion_ideals

X3_MINUS_4Y3 = BinaryForm((1, 0, 0, -4))


def test_ring_discriminant_matches_form():
    for coeffs in ((1, 0, 0, -2), (1, 2, 3, 4), (2, -1, 0, 5), (1, 0, -1, -1)):
        f = BinaryForm(coeffs)
        assert ring_from_form(f).discriminant() == discriminant(f)


def test_ring_axioms():
    ring = CubicRing(BinaryForm((3, -2, 5, 7)))
    assert ring.is_commutative()
    assert ring.is_associative()


def test_multiplication_table():
    ring = ring_from_form(X3_MINUS_4Y3)
    assert ring.mul(CubicRing.OMEGA, CubicRing.THETA) == (4, 0, 0)
    assert ring.mul(CubicRing.OMEGA, CubicRing.OMEGA) == (0, 0, -1)
    assert ring.mul(CubicRing.THETA, CubicRing.THETA) == (0, -4, 0)
    assert ring.mul(CubicRing.ONE, (5, 6, 7)) == (5, 6, 7)


def test_traces():
    ring = ring_from_form(BinaryForm((1, 2, 3, 4)))
    assert ring.trace(CubicRing.ONE) == 3
    assert ring.trace(CubicRing.OMEGA) == 2
    assert ring.trace(CubicRing.THETA) == -3


def test_only_cubic_rings():
    with pytest.raises(ValueError):
        CubicRing(BinaryForm((1, 0, 0, 0, 0, -2)))
    with pytest.raises(ValueError):
        ring_from_form(X3_MINUS_4Y3, degree=5)


# IDEALS ----

def test_unit_ideal():
    ring = ring_from_form(X3_MINUS_4Y3)
    unit = FracIdeal.unit()
    assert unit.is_integral()
    assert unit.index == 1
    assert is_ideal(ring, unit)
    assert squares_to_unit(ring, unit)
    assert unit.contains((1, 2, 3))
    assert unit.contains((1, 0, 0), den=2) is False


def test_principal_ideal():
    ring = ring_from_form(X3_MINUS_4Y3)
    two = principal_ideal(ring, (2, 0, 0))
    assert two.index == 8
    assert two.contains((2, 4, 6))
    assert not two.contains((1, 0, 0))
    half = FracIdeal(2, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert half.index == Fraction(1, 8)
    assert half.contains((1, 0, 0), den=2)
    assert ideal_mul(ring, two, half) == FracIdeal.unit()


def test_lattice_closure():
    ring = ring_from_form(X3_MINUS_4Y3)
    assert is_ideal(ring, FracIdeal(1, ((2, 0, 0), (0, 1, 0), (0, 0, 1))))
    assert not is_ideal(ring, FracIdeal(1, ((1, 0, 0), (0, 1, 0), (0, 0, 2))))


def test_generators_need_full_rank():
    with pytest.raises(ValueError):
        FracIdeal.from_generators([(1, 0, 0), (0, 1, 0)])


def test_fraction_normalisation():
    ideal = FracIdeal(4, ((2, 0, 0), (0, 2, 0), (0, 0, 2)))
    assert ideal == FracIdeal(2, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert ideal.as_dict() == {'den': 2, 'basis': [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}


# TWO-TORSION ----

def test_two_torsion_x3_minus_4y3():
    result = two_torsion_ideals(ring_from_form(X3_MINUS_4Y3))
    assert result.count == 2
    assert result.local_counts == {2: 2, 3: 1}
    assert result.complete
    assert FracIdeal.unit() in result.ideals
    assert all(squares_to_unit(result.ring, ideal) for ideal in result.ideals)


def test_two_torsion_squarefree_discriminant():
    result = two_torsion_ideals(ring_from_form(BinaryForm((1, 0, -1, -1))))
    assert result.count == 1
    assert result.local_counts == {}
    assert result.complete


def test_two_torsion_bounded_search():
    result = two_torsion_ideals(ring_from_form(X3_MINUS_4Y3), bound=1)
    assert result.count == 1
    assert not result.complete
    assert result.as_dict()['bound'] == 1


def test_two_torsion_matches_projective_orbits():
    assert projective_orbit_product(X3_MINUS_4Y3) == two_torsion_ideals(ring_from_form(X3_MINUS_4Y3)).count


@pytest.mark.slow
def test_two_torsion_corpus():
    corpus = two_torsion_corpus(20)
    assert corpus
    for f in corpus:
        assert two_torsion_ideals(ring_from_form(f)).count == projective_orbit_product(f), f.to_text()
