from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import itertools
import logging
from fractions import Fraction

import numpy as np
from tqdm import tqdm

from pencil_orbits.densities.masses import projective_slice_mass
from pencil_orbits.densities.volumes import xi
from pencil_orbits.invariants import is_projective
from pencil_orbits.reduction import local_rep_candidates

logger = logging.getLogger(__name__)

# orbit counts and their projectivity below level k are functions of f mod p^(2k-1) for k <= 2
EXHAUSTIVE_DEPTH = 2


def _lambda_valuations(quads, p, k):
    q = p ** k
    lam = (quads[:, 1] * quads[:, 2] - quads[:, 0] * quads[:, 3]) % q
    val = np.full(lam.shape, k, dtype=np.int64)
    rest = lam.copy()
    for v in range(k):
        hit = (val == k) & (lam != 0) & (rest % p != 0)
        val[hit] = v
        rest = np.where(rest % p == 0, rest // p, rest)
    return val


def orbit_counts_at(f, p, k):
    """(orbits, projective orbits) above f with nu_p(lambda) < k."""
    total = projective = 0
    for e in range(k):
        for _, _, pair in local_rep_candidates(f, p, e):
            total += 1
            projective += is_projective(pair, p)
    return total, projective


class ChangeOfVariablesReport(object):
    """Both sides of  int #orbits(f) df = xi int |lambda| dw  truncated at nu_p(lambda) < k.

    boundary_mass is the measure of cells with lambda = 0 mod p^k; their |lambda|-mass is at most
    xi * boundary_mass * p^-k and is left out of both sides.
    """

    def __init__(self, p, k, orbit_side, lambda_side, projective_orbit_side, projective_lambda_side,
                 boundary_mass, sample=None, sigma=None, exact_lambda_side=None):
        self.p = p
        self.k = k
        self.orbit_side = orbit_side
        self.lambda_side = lambda_side
        self.projective_orbit_side = projective_orbit_side
        self.projective_lambda_side = projective_lambda_side
        self.boundary_mass = boundary_mass
        self.boundary_bound = xi(p, 1) * boundary_mass * Fraction(1, p ** k)
        self.sample = sample
        self.sigma = sigma
        # exact lambda-side mass; the sampled report estimates it
        self.exact_lambda_side = lambda_side if exact_lambda_side is None else exact_lambda_side

    @property
    def exhaustive(self):
        return self.sample is None

    @property
    def agrees(self):
        if self.exhaustive:
            return self.orbit_side == self.lambda_side and \
                self.projective_orbit_side == self.projective_lambda_side
        return abs(float(self.orbit_side) - float(self.lambda_side)) <= 3 * self.sigma

    def as_dict(self):
        return {'p': self.p, 'k': self.k, 'mode': 'exhaustive' if self.exhaustive else 'sampling',
                'orbit_side': str(self.orbit_side), 'lambda_side': str(self.lambda_side),
                'projective_orbit_side': str(self.projective_orbit_side),
                'projective_lambda_side': str(self.projective_lambda_side),
                'boundary_mass': str(self.boundary_mass), 'boundary_bound': str(self.boundary_bound),
                'exact_lambda_side': str(self.exact_lambda_side), 'sample': self.sample, 'sigma': self.sigma,
                'agrees': self.agrees}


def verify_change_of_variables(p, k, sample=None, seed=0, progress=False):
    # type: (int, int, int, int, bool) -> ChangeOfVariablesReport
    """Measure identity at n = 1, truncated at nu_p(lambda) < k.

    Orbit counts below level k depend on f mod p^(2k-1) only, and |lambda| only on the top-right
    quadruple mod p^k, so both integrals are finite sums. With sample set, both sides are Monte Carlo
    estimates and sigma is the standard error of their difference.
    """
    if k < 1:
        raise ValueError('depth must be at least 1')
    f_mod = p ** (2 * k - 1)
    q = p ** k
    quads = np.array(list(itertools.product(range(q), repeat=4)), dtype=np.int64)
    val = _lambda_valuations(quads, p, k)
    inside = val < k
    boundary = Fraction(int(np.count_nonzero(~inside)), q ** 4)
    weights = [Fraction(1, p ** v) for v in range(k)]
    lambda_side = xi(p, 1) * sum(weights[v] * int(np.count_nonzero(val == v)) for v in range(k)) / q ** 4
    projective_lambda_side = xi(p, 1) * sum(projective_slice_mass(p, j + 1) for j in range(k))

    if sample is None:
        if k > EXHAUSTIVE_DEPTH:
            raise ValueError('exhaustive mode covers depth <= {}; pass sample'.format(EXHAUSTIVE_DEPTH))
        total = projective = 0
        bar = tqdm(itertools.product(range(f_mod), repeat=4), total=f_mod ** 4, disable=not progress)
        bar.set_description('forms mod {}^{}'.format(p, 2 * k - 1))
        for f in bar:
            t, pr = orbit_counts_at(f, p, k)
            total += t
            projective += pr
        report = ChangeOfVariablesReport(p, k, Fraction(total, f_mod ** 4), lambda_side,
                                         Fraction(projective, f_mod ** 4), projective_lambda_side, boundary)
    else:
        rng = np.random.RandomState(seed)
        forms = rng.randint(0, f_mod, size=(sample, 4))
        counts = np.array([orbit_counts_at(tuple(int(x) for x in f), p, k) for f in forms], dtype=np.int64)
        cells = rng.randint(0, q ** 4, size=sample)
        lam_values = np.array([float(xi(p, 1) * weights[v]) if v < k else 0.0 for v in val[cells]])
        orbit_mean = Fraction(int(counts[:, 0].sum()), sample)
        lambda_mean = float(lam_values.mean())
        sigma = float(np.sqrt(counts[:, 0].var() / sample + lam_values.var() / sample))
        report = ChangeOfVariablesReport(p, k, orbit_mean, Fraction(lambda_mean),
                                         Fraction(int(counts[:, 1].sum()), sample), projective_lambda_side,
                                         boundary, sample=sample, sigma=sigma, exact_lambda_side=lambda_side)
    logger.info('change of variables p=%d k=%d: %s vs %s', p, k, report.orbit_side, report.lambda_side)
    return report
