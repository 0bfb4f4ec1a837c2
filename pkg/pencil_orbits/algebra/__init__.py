from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from pencil_orbits.algebra.exact_matrix import ExactMatrix, ZZ, QQ, det_bareiss, cofactor_det, adjugate, \
    minor_gcd, solve, inverse, pencil_det, symbolic_pencil_det, exact_div
from pencil_orbits.algebra.polynomial import IntPolynomial, sturm_chain, sturm_real_roots
