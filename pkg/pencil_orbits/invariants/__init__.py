from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from pencil_orbits.invariants.invariants import LambdaValue, inv, inv_coefficients, lambda_matrix, \
    hyperdeterminant, lambda_value, corner_sign, section_q, section_inv, section_unknowns, \
    lambda_scaling
from pencil_orbits.invariants.projectivity import projectivity_matrix, projectivity_gcd, is_projective, \
    non_projective_primes, projective_mask_mod_p, UPPER_ENTRIES
