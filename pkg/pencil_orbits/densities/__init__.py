from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from pencil_orbits.densities.volumes import LocalDensity, vol_GN, xi, vol_SLnxSLn1, group_dimension, \
    volume_by_count, local_densities
from pencil_orbits.densities.matrix_counts import c_double_prime, c_prime, c_count, count_cpp, \
    counts_by_enumeration
from pencil_orbits.densities.masses import s_mass, s_mass_by_enumeration, w0_pairs_mod_p, projective_slice_mass, \
    projective_local_mass, full_slice_mass, full_local_mass, closed_full_local_mass, truncated_full_local_mass
from pencil_orbits.densities.euler_product import EulerFamily, EulerProduct, euler_family, euler_product, \
    reference_value, tail_bound
from pencil_orbits.densities.change_of_variables import ChangeOfVariablesReport, verify_change_of_variables, \
    orbit_counts_at
