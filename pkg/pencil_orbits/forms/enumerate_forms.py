from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools

from pencil_orbits.forms.binary_form import BinaryForm, cubic_discriminant, discriminant, signature, \
    irreducibility


def height_shell(degree, h):
    """Coefficient vectors of maximum absolute value exactly h, in lexicographic order."""
    if h == 0:
        yield (0,) * (degree + 1)
        return
    for coeffs in itertools.product(range(-h, h + 1), repeat=degree + 1):
        if max(abs(c) for c in coeffs) == h:
            yield coeffs


def _disc(coeffs):
    if len(coeffs) == 4:
        return cubic_discriminant(*coeffs)
    return discriminant(BinaryForm(coeffs))


def enumerate_forms(degree, height_bound, r=None, require_irreducible=True, allow_heuristic=False):
    """Stream of forms with every |f_i| <= height_bound, nonzero discriminant and r real roots.

    Forms come height shell by height shell, lexicographically inside a shell, so the stream for
    a bound X is a prefix of the stream for any larger bound. r=None keeps every signature.
    """
    if require_irreducible and degree > 3 and not allow_heuristic:
        raise ValueError('irreducibility above degree 3 is heuristic; pass allow_heuristic=True')
    for h in range(1, height_bound + 1):
        for coeffs in height_shell(degree, h):
            if _disc(coeffs) == 0:
                continue
            f = BinaryForm(coeffs)
            if r is not None and signature(f) != r:
                continue
            if require_irreducible and not irreducibility(f)[0]:
                continue
            yield f


def count_forms(degree, height_bound, r=None, require_irreducible=True, allow_heuristic=False):
    return sum(1 for _ in enumerate_forms(degree, height_bound, r=r, require_irreducible=require_irreducible,
                                          allow_heuristic=allow_heuristic))
