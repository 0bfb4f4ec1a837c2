from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from pencil_orbits.pencils.sym_pair import SymPair, SPACE_TAGS, space_violations
from pencil_orbits.pencils.group_element import BlockGroupElement, GROUP_TAGS, zero_pattern, group_violations, \
    random_element, group_point_count
from pencil_orbits.pencils.actions import act, act_gl2_twist, split_frobenius, conjugated_unipotent, \
    commute_identity_check, zero_pair, PRESERVING_GROUPS
