from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from pencil_orbits.rings.cubic_ring import CubicRing, ring_from_form
from pencil_orbits.rings.ideals import FracIdeal, TwoTorsionResult, principal_ideal, ideal_mul, is_ideal, \
    squares_to_unit, local_two_torsion, two_torsion_ideals
