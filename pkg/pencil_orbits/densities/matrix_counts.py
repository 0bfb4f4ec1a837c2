from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools

import numpy as np


def c_double_prime(p, k):
    """#{M in M_2(Z/p^k) : det M = 0 mod p^k}."""
    return p ** (2 * k - 1) * (p ** k * (p + 1) - 1)


def c_prime(p, k):
    """#{M in M_2(Z/p^k) : nu_p(det M) = k - 1}; zero for k <= 0."""
    if k <= 0:
        return 0
    return p ** (2 * k - 1) * (p * p - 1) * (p ** k - 1)


def c_count(p, k):
    """As c_prime, restricted to M != 0 mod p."""
    # c_prime is looked up at call time
    return c_prime(p, k) - p ** 4 * c_prime(p, k - 2)


def count_cpp(p, k):
    # type: (int, int) -> tuple
    if k < 1:
        raise ValueError('k must be at least 1, got {}'.format(k))
    return c_double_prime(p, k), c_prime(p, k), c_count(p, k)


def _det_valuations(p, k):
    q = p ** k
    grid = np.array(list(itertools.product(range(q), repeat=4)), dtype=np.int64)
    det = (grid[:, 0] * grid[:, 3] - grid[:, 1] * grid[:, 2]) % q
    val = np.full(det.shape, k, dtype=np.int64)
    rest = det.copy()
    for v in range(k):
        hit = (val == k) & (rest % p != 0) & (det != 0)
        val[hit] = v
        rest = np.where(rest % p == 0, rest // p, rest)
    primitive = np.any(grid % p != 0, axis=1)
    return val, primitive


def counts_by_enumeration(p, k):
    # type: (int, int) -> tuple
    """(c'', c', c) by scanning all (p^k)^4 matrices."""
    val, primitive = _det_valuations(p, k)
    return (int(np.count_nonzero(val == k)), int(np.count_nonzero(val == k - 1)),
            int(np.count_nonzero((val == k - 1) & primitive)))
