from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from pencil_orbits.forms.binary_form import BinaryForm, FormClass, cubic_discriminant, discriminant, height, \
    signature, is_primitive, has_rational_root, irreducibility, is_irreducible, classify
from pencil_orbits.forms.enumerate_forms import enumerate_forms, count_forms, height_shell
