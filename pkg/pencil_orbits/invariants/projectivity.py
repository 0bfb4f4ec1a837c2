from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools

import numpy as np
from sympy import factorint

from pencil_orbits.algebra import ExactMatrix, adjugate, minor_gcd
from pencil_orbits.invariants.invariants import inv

# on-or-above-diagonal entries, uniform over the three C matrices
UPPER_ENTRIES = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


def projectivity_matrix(w):
    # type: (SymPair) -> ExactMatrix
    """3 x 6 integer matrix whose rows flatten C0 = -B adj(A) B + f1 B + f2 A, C1 = B and C2 = A.

    -B adj(A) B equals f0 B A^-1 B since f0 = -det A, and stays integral for singular A.
    """
    if w.size != 3:
        raise ValueError('projectivity is only defined for 3 x 3 pairs')
    pair = w.lift() if w.modulus is not None else w
    if not pair.a.is_integral or not pair.b.is_integral:
        raise ValueError('projectivity needs an integral pair')
    f = inv(pair)
    a, b = pair.a, pair.b
    c0 = -(b @ adjugate(a) @ b) + b.scale(f[1]) + a.scale(f[2])
    rows = [[m.entry(i, j) for i, j in UPPER_ENTRIES] for m in (c0, b, a)]
    return ExactMatrix(rows)


def projectivity_gcd(w):
    return minor_gcd(projectivity_matrix(w), 3)


def is_projective(w, p=None):
    # type: (SymPair, int) -> bool
    """Globally: gcd of the 3 x 3 minors equals 1. With p: that gcd is prime to p."""
    g = projectivity_gcd(w)
    if p is None:
        return g == 1
    return g % p != 0


def non_projective_primes(w):
    """Sorted primes at which w fails projectivity; None when every prime fails (all minors vanish)."""
    g = projectivity_gcd(w)
    if g == 0:
        return None
    return sorted(factorint(g))


# VECTORISED MOD-p SCAN ----

def _det3(m):
    return (m[..., 0, 0] * (m[..., 1, 1] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 1])
            - m[..., 0, 1] * (m[..., 1, 0] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 0])
            + m[..., 0, 2] * (m[..., 1, 0] * m[..., 2, 1] - m[..., 1, 1] * m[..., 2, 0]))


def _adj3(m):
    adj = np.zeros_like(m)
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != j]
            cols = [c for c in range(3) if c != i]
            sub = m[..., rows, :][..., cols]
            adj[..., i, j] = (-1) ** (i + j) * (sub[..., 0, 0] * sub[..., 1, 1] - sub[..., 0, 1] * sub[..., 1, 0])
    return adj


def projective_mask_mod_p(a, b, p):
    """Projectivity of a stack of 3 x 3 pairs mod p; a and b are integer arrays of shape (K, 3, 3)."""
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    adj_a = _adj3(a) % p
    # f1 = tr(adj(A) B), f2 = -tr(A adj(B))
    f1 = np.einsum('kij,kji->k', adj_a, b) % p
    f2 = -np.einsum('kij,kji->k', a, _adj3(b) % p) % p
    c0 = -np.einsum('kij,kjl,klm->kim', b, adj_a, b) % p
    c0 = (c0 + f1[:, None, None] * b + f2[:, None, None] * a) % p
    idx_i = [i for i, _ in UPPER_ENTRIES]
    idx_j = [j for _, j in UPPER_ENTRIES]
    m = np.stack([c0[:, idx_i, idx_j], b[:, idx_i, idx_j], a[:, idx_i, idx_j]], axis=1)
    full_rank = np.zeros(m.shape[0], dtype=bool)
    for cols in itertools.combinations(range(6), 3):
        full_rank |= _det3(m[:, :, list(cols)]) % p != 0
    return full_rank
