from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
import logging
from collections import deque

import numpy as np
from sympy import factorint, multiplicity
from tqdm import tqdm

from pencil_orbits.algebra import ExactMatrix
from pencil_orbits.errors import PrecisionError, VerificationError
from pencil_orbits.invariants import hyperdeterminant
from pencil_orbits.pencils import BlockGroupElement, SymPair, act

logger = logging.getLogger(__name__)


def valuation(x, p, cap):
    # type: (int, int, int) -> int
    """nu_p(x), capped at cap; the cap stands in for nu_p(0)."""
    x = int(x)
    if x == 0:
        return cap
    return min(int(multiplicity(p, abs(x))), cap)


def require_cubic(w):
    if w.size != 3:
        raise NotImplementedError('p-adic orbit machinery is implemented for 3 x 3 pairs only')


def _prime_of(modulus):
    factors = factorint(modulus)
    if len(factors) != 1:
        raise ValueError('modulus {} is not a prime power'.format(modulus))
    (p, k), = factors.items()
    return p, k


def first_row_clearing(s, t, p, modulus):
    """SL_2 matrix G with (s, t) G = (0, 1) mod modulus, for a primitive vector (s, t)."""
    if t % p != 0:
        x, y = 0, pow(t, -1, modulus)
    else:
        x, y = pow(s, -1, modulus), 0
    return [[t % modulus, x], [(-s) % modulus, y]]


class DomainPoint(object):
    """Fundamental-domain representative of a top-right pair mod p^k.

    key = (alpha, b12 mod p^(k - alpha), b13 mod p^beta); alpha + beta = nu_p(lambda).
    """

    def __init__(self, pair, certificate, alpha, beta, key):
        self.pair = pair
        self.certificate = certificate
        self.alpha = alpha
        self.beta = beta
        self.key = key

    @property
    def lambda_valuation(self):
        return self.alpha + self.beta

    def __repr__(self):
        return 'DomainPoint(key={}, pair={})'.format(self.key, self.pair.to_text())


def canonicalize_padic(w):
    # type: (SymPair) -> DomainPoint
    """Representative of w in Wtop(Z/p^k) under (SL_1 x SL_2)(Z/p^k), with the element reaching it.

    The representative has A = p^alpha on the antidiagonal corner, B_12 carrying the rest of lambda and
    B_13 reduced into [0, p^beta). Raises PrecisionError when lambda vanishes mod p^k.
    """
    require_cubic(w)
    if w.modulus is None:
        raise ValueError('canonicalize_padic needs a pair over Z/p^k')
    if not w.in_space('Wtop'):
        raise ValueError('canonicalize_padic needs a pair in Wtop')
    modulus = w.modulus
    p, k = _prime_of(modulus)
    lam = hyperdeterminant(w.lift()) % modulus
    if lam == 0:
        raise PrecisionError('lambda vanishes mod {}^{}'.format(p, k))
    e = valuation(lam, p, k)

    a12, a13 = w.a.lift().entry(0, 1), w.a.lift().entry(0, 2)
    alpha = min(valuation(a12, p, k), valuation(a13, p, k))
    assert alpha <= e
    clear = first_row_clearing(a12 // p ** alpha, a13 // p ** alpha, p, modulus)
    g = ExactMatrix(clear, modulus=modulus)

    # second row after the clearing step, then a shear fixing the first row
    b12, b13 = w.b.lift().entry(0, 1), w.b.lift().entry(0, 2)
    u = (b12 * clear[0][0] + b13 * clear[1][0]) % modulus
    v = (b12 * clear[0][1] + b13 * clear[1][1]) % modulus
    beta = e - alpha
    assert valuation(u, p, k) == beta, 'second row valuation does not match lambda'
    unit = (u // p ** beta) % modulus
    tau = (-(v // p ** beta) * pow(unit, -1, modulus)) % modulus
    g = g @ ExactMatrix([[1, tau], [0, 1]], modulus=modulus)

    element = BlockGroupElement.block_diagonal(ExactMatrix([[1]], modulus=modulus), g.T, 'SLnxSLn1')
    rep = act(element, w.with_tag('Wtop')).with_tag('Wtop0')
    key = (alpha, (lam // p ** alpha) % p ** (k - alpha), rep.b.entry(0, 2) % p ** beta)
    assert rep.a.entry(0, 1) == 0 and rep.a.entry(0, 2) == p ** alpha % modulus
    assert rep.b.entry(0, 2) == key[2], 'shear left B_13 outside [0, p^beta)'
    return DomainPoint(rep, element, alpha, beta, key)


def domain_pair(p, k, a12, a13, b12, b13):
    """Wtop pair mod p^k with the given top-right rows."""
    a = [[0, a12, a13], [a12, 0, 0], [a13, 0, 0]]
    b = [[0, b12, b13], [b12, 0, 0], [b13, 0, 0]]
    return SymPair.from_lists(a, b, space_tag='Wtop', modulus=p ** k)


# EXHAUSTIVE ORACLES ----

def _all_rows(p, k):
    q = p ** k
    grid = np.array(list(itertools.product(range(q), repeat=4)), dtype=np.int64)
    lam = (grid[:, 1] * grid[:, 2] - grid[:, 0] * grid[:, 3]) % q
    return grid, lam


def expected_key_count(p, k):
    """Keys with nu(lambda) < k: (p - 1) p^(k-1-alpha) for each 0 <= alpha <= e < k."""
    return sum((p - 1) * p ** (k - 1 - alpha) for e in range(k) for alpha in range(e + 1))


class PartitionReport(object):

    def __init__(self, p, k, points, orbits, keys):
        self.p = p
        self.k = k
        self.points = points
        self.orbits = orbits
        self.keys = keys
        self.expected_keys = expected_key_count(p, k)

    def as_dict(self):
        return {'p': self.p, 'k': self.k, 'points': self.points, 'orbits': self.orbits, 'keys': self.keys,
                'expected_keys': self.expected_keys}


def check_partition(p, k, progress=False):
    # type: (int, int, bool) -> PartitionReport
    """Walk every (SL_1 x SL_2)(Z/p^k)-orbit on Wtop(Z/p^k) with lambda != 0 and check the canonical keys.

    Orbits come from a breadth-first search over the generators [[1,1],[0,1]] and [[1,0],[1,1]] of
    SL_2(Z/p^k). Every point must carry a valid certificate, the key must be constant along each orbit,
    the representative must canonicalize to itself, and the set of keys must have the predicted size.
    """
    q = p ** k
    grid, lam = _all_rows(p, k)
    pending = {tuple(int(x) for x in row) for row in grid[lam != 0]}
    n_points = len(pending)
    keys = set()
    n_orbits = 0
    bar = tqdm(total=n_points, disable=not progress)
    bar.set_description('orbits mod {}^{}'.format(p, k))
    while pending:
        seed = pending.pop()
        orbit_key = None
        queue = deque([seed])
        seen = {seed}
        n_orbits += 1
        while queue:
            a12, a13, b12, b13 = point = queue.popleft()
            w = domain_pair(p, k, a12, a13, b12, b13)
            found = canonicalize_padic(w)
            if act(found.certificate, w).with_tag('Wtop0') != found.pair:
                raise VerificationError('certificate fails at {}'.format(point))
            if orbit_key is None:
                orbit_key = found.key
                again = canonicalize_padic(found.pair.with_tag('Wtop'))
                if again.key != found.key or again.pair != found.pair:
                    raise VerificationError('representative {} is not idempotent'.format(found.pair))
            elif found.key != orbit_key:
                raise VerificationError('key changes along the orbit of {}'.format(seed))
            bar.update(1)
            # right multiplication of both rows by the two generators
            for nxt in ((a12, (a12 + a13) % q, b12, (b12 + b13) % q),
                        ((a12 + a13) % q, a13, (b12 + b13) % q, b13)):
                if nxt not in seen:
                    seen.add(nxt)
                    pending.discard(nxt)
                    queue.append(nxt)
        keys.add(orbit_key)
    bar.close()
    report = PartitionReport(p, k, n_points, n_orbits, len(keys))
    if report.keys != report.expected_keys:
        raise VerificationError('found {} keys, expected {}'.format(report.keys, report.expected_keys))
    logger.info('partition mod %d^%d: %d points, %d orbits, %d keys', p, k, n_points, n_orbits, len(keys))
    return report


def inner_mass_by_enumeration(p, alpha, beta, k):
    # type: (int, int, int, int) -> int
    """Number of fundamental-domain keys with lambda = p^(alpha + beta) and first-row valuation alpha.

    Counted over all of Wtop(Z/p^k); equals p^beta.
    """
    e = alpha + beta
    if k <= e:
        raise PrecisionError('precision {} does not exceed nu(lambda) = {}'.format(k, e))
    q = p ** k
    grid, lam = _all_rows(p, k)
    keys = set()
    for a12, a13, b12, b13 in grid[lam == p ** e % q]:
        if min(valuation(a12, p, k), valuation(a13, p, k)) != alpha:
            continue
        keys.add(canonicalize_padic(domain_pair(p, k, int(a12), int(a13), int(b12), int(b13))).key)
    return len(keys)
