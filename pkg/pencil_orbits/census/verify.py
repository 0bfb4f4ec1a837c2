from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import logging
from fractions import Fraction

import numpy as np
from sympy import factorint, primerange
from tqdm import tqdm

from pencil_orbits.densities import matrix_counts
from pencil_orbits.densities import closed_full_local_mass, euler_product, full_local_mass, projective_local_mass, \
    projective_slice_mass, reference_value, s_mass, s_mass_by_enumeration, verify_change_of_variables, \
    volume_by_count, vol_GN, vol_SLnxSLn1, xi
from pencil_orbits.forms import BinaryForm, discriminant, enumerate_forms
from pencil_orbits.invariants import section_inv
from pencil_orbits.pencils import act, random_element
from pencil_orbits.reduction import check_partition, inner_mass_by_enumeration, local_orbit_count, reduce_GN_field
from pencil_orbits.rings import ring_from_form, two_torsion_ideals

logger = logging.getLogger(__name__)

PROFILES = ('quick', 'full')
EULER_CUTOFF_FULL = 10 ** 6
QUICK_CORPUS = 3


class VerifyConfig(object):

    def __init__(self, profile='quick'):
        if profile not in PROFILES:
            raise ValueError('unknown profile {}, expected one of {}'.format(profile, PROFILES))
        self.profile = profile

    @property
    def full(self):
        return self.profile == 'full'

    def print(self):
        print('|-----------------------------------------|')
        print('|              VERIFY CONFIG              |')
        print('|-----------------------------------------|')
        for k, v in vars(self).items():
            print('|{:25}|{:15}|'.format(k, str(v)))
        print('|-----------------------------------------|')


class CheckResult(object):

    def __init__(self, name, anchor, identity, ok, detail):
        self.name = name
        self.anchor = anchor
        self.identity = identity
        self.ok = ok
        self.detail = detail

    def as_dict(self):
        return {'name': self.name, 'anchor': self.anchor, 'identity': self.identity, 'ok': self.ok,
                'detail': self.detail}


class VerifyReport(object):

    def __init__(self, profile, results):
        self.profile = profile
        self.results = results

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    @property
    def failures(self):
        return [r for r in self.results if not r.ok]

    def as_dict(self):
        return {'profile': self.profile, 'ok': self.ok, 'checks': [r.as_dict() for r in self.results]}

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


# CHECKS ----
# each returns a list of mismatch strings; empty means the identity holds

def check_matrix_counts(full):
    cases = [(2, 1), (2, 2), (3, 1)] + ([(2, 3), (3, 2)] if full else [])
    bad = []
    for p, k in cases:
        expected = matrix_counts.count_cpp(p, k)
        found = matrix_counts.counts_by_enumeration(p, k)
        if found != expected:
            bad.append('p={} k={}: enumerated {} vs formula {}'.format(p, k, found, expected))
    return bad


def check_s_masses(full):
    bad = []
    for p in ([2, 3] if full else [2]):
        for quad, count in s_mass_by_enumeration(p).items():
            if count != s_mass(p, *quad):
                bad.append('p={} {}: enumerated {} vs {}'.format(p, quad, count, s_mass(p, *quad)))
        if xi(p, 1) * projective_slice_mass(p, 1) != 1:
            bad.append('p={}: first projective slice is not 1/xi'.format(p))
    return bad


def check_local_masses(full):
    bad = []
    for p in primerange(2, 101 if full else 30):
        for n in (1, 2):
            if full_local_mass(p, n) != closed_full_local_mass(p, n):
                bad.append('full mass p={} n={}'.format(p, n))
        if projective_local_mass(p) != 1 + Fraction(1, p * p):
            bad.append('projective mass p={}'.format(p))
    return bad


def check_volumes(full):
    bad = []
    if volume_by_count('G_N', 2, 1) != vol_GN(2, 1):
        bad.append('G_3(F_2) count gives {}'.format(volume_by_count('G_N', 2, 1)))
    if volume_by_count('SLnxSLn1', 2, 1) != vol_SLnxSLn1(2, 1):
        bad.append('(SL_1 x SL_2)(F_2) count gives {}'.format(volume_by_count('SLnxSLn1', 2, 1)))
    if full and volume_by_count('G_N', 3, 1) != vol_GN(3, 1):
        bad.append('G_3(F_3) count gives {}'.format(volume_by_count('G_N', 3, 1)))
    return bad


def check_field_reduction(full, seed=0):
    rng = np.random.RandomState(seed)
    trials = 200 if full else 20
    sizes = (3, 5) if full else (3,)
    bad = []
    for size in sizes:
        done = 0
        while done < trials:
            coeffs = [int(c) for c in rng.randint(-5, 6, size=size + 1)]
            if coeffs[0] == 0 or discriminant(BinaryForm(coeffs)) == 0:
                continue
            canonical = section_inv(coeffs)
            g = random_element('G_N', size, rng, rational=True)
            reduced, _ = reduce_GN_field(act(g, canonical.with_tag('W0')))
            if reduced != canonical:
                bad.append('N={} f={}: reduced to {}'.format(size, coeffs, reduced))
            _, trace = reduce_GN_field(canonical.with_tag('W0'))
            if not trace.total('G_N').is_identity():
                bad.append('N={} f={}: self-reduction moved the canonical pair'.format(size, coeffs))
            done += 1
    return bad


def check_fundamental_domain(full):
    bad = []
    for p in ([2, 3] if full else [2]):
        for k in range(1, 4 if full else 3):
            report = check_partition(p, k)
            if report.keys != report.expected_keys:
                bad.append('p={} k={}: {} keys vs {}'.format(p, k, report.keys, report.expected_keys))
            for alpha in range(k):
                for beta in range(k - alpha):
                    count = inner_mass_by_enumeration(p, alpha, beta, k)
                    if count != p ** beta:
                        bad.append('p={} k={} a={} b={}: inner mass {}'.format(p, k, alpha, beta, count))
    return bad


def check_change_of_variables(full):
    bad = []
    for k in ((1, 2) if full else (1,)):
        report = verify_change_of_variables(2, k)
        if not report.agrees:
            bad.append('p=2 k={}: {} vs {}'.format(k, report.orbit_side, report.lambda_side))
    return bad


def check_euler_products(full):
    cutoff = EULER_CUTOFF_FULL if full else 1000
    bad = []
    for name in ('full', 'projective'):
        product = euler_product(name, cutoff)
        if not product.contains(reference_value(name)):
            bad.append('{} product up to {} misses its limit'.format(name, cutoff))
        if full and product.width >= Fraction(1, 10 ** 6):
            bad.append('{} product up to {} is wider than 1e-6'.format(name, cutoff))
    return bad


def two_torsion_corpus(count, max_disc=2000, max_local=9, max_height=4):
    """Irreducible cubics with |disc| <= max_disc and some p^2 | disc, small enough for the ideal search."""
    corpus = []
    for f in enumerate_forms(3, max_height):
        disc = abs(discriminant(f))
        if disc > max_disc:
            continue
        support = {p: v // 2 for p, v in factorint(disc).items() if v >= 2}
        if not support or any(p ** j > max_local for p, j in support.items()):
            continue
        corpus.append(f)
        if len(corpus) == count:
            break
    return corpus


def projective_orbit_product(f):
    disc = discriminant(f)
    product = 1
    for p, v in sorted(factorint(abs(disc)).items()):
        if v >= 2:
            product *= local_orbit_count(f, p).projective_total
    return product


def check_two_torsion(full, progress=False):
    forms = two_torsion_corpus(20 if full else QUICK_CORPUS)
    bad = []
    for f in tqdm(forms, disable=not progress, desc='two-torsion'):
        ideals = two_torsion_ideals(ring_from_form(f)).count
        orbits = projective_orbit_product(f)
        if ideals != orbits:
            bad.append('{}: {} two-torsion ideals vs {} projective orbits'.format(f.to_text(), ideals, orbits))
    return bad


# (name, anchor, identity, check); the anchor is the closed formula under test
CHECKS = [
    ('matrix_counts',
     "c''(k) = p^(2k-1)(p^k(p+1)-1); c'(k) = p^(2k-1)(p^2-1)(p^k-1); c(k) = c'(k) - p^4 c'(k-2)",
     "c''(k), c'(k), c(k) against all 2 x 2 matrices mod p^k", check_matrix_counts),
    ('s_masses',
     '#S_{a,b,c,d} = p^6 if ad - bc != 0; #S_{0,1,0,0} = p^5(p-1); #S_{0,0,0,0} = 0',
     'projective pairs per top-right quadruple in W_3^0(F_p)', check_s_masses),
    ('local_masses',
     'xi_{p,n} int |lambda| dw over W_N^0(Z_p) = prod_{i=2}^N (1 - p^-i)^-1; projective: 1 + p^-2',
     'slice sums equal prod (1 - p^-i)^-1 and 1 + p^-2', check_local_masses),
    ('group_volumes',
     'Vol(G_N(Z_p)) = xi_{p,n}^-1 = (1 - p^-1)(1 - p^-n-1) prod_{i=2}^n (1 - p^-i)^2',
     '#G(F_p) / p^dim G equals the volume formula', check_volumes),
    ('field_reduction',
     'inv^-1(f) in W_N^0(Q) is a single G_N(Q)-orbit through section_inv(f)',
     'G_N(Q)-translates reduce back to section_inv(f)', check_field_reduction),
    ('fundamental_domain',
     'keys (alpha, b12 mod p^(k-alpha), b13 mod p^beta), alpha + beta = nu_p(lambda), partition Wtop(Z/p^k)',
     'canonical keys partition Wtop(Z/p^k); inner mass p^b', check_fundamental_domain),
    ('change_of_variables',
     'int #(inv^-1(f) / G_N(Z_p)) df = xi_{p,n} int |lambda| dw, |J / J\'| = 1',
     'orbit-count integral equals xi times the |lambda| integral', check_change_of_variables),
    ('euler_products',
     'prod_p prod_{i=2}^3 (1 - p^-i)^-1 = zeta(2)zeta(3); prod_p (1 + p^-2) = zeta(2)/zeta(4)',
     'enclosures contain zeta(2)zeta(3) and zeta(2)/zeta(4)', check_euler_products),
    ('two_torsion',
     '#I(R_f)[2] = prod_p #(projective G_3(Z_p)-orbits above f)',
     '#I(R_f)[2] equals the product of projective local orbit counts', check_two_torsion),
]


def verify_all(config=None, progress=False):
    # type: (VerifyConfig, bool) -> VerifyReport
    """Run every oracle; a raised exception counts as a mismatch of its check."""
    config = config or VerifyConfig()
    results = []
    bar = tqdm(CHECKS, disable=not progress)
    for name, anchor, identity, check in bar:
        bar.set_description(name)
        try:
            bad = check(config.full)
        except Exception as e:  # pylint: disable=broad-except
            bad = ['{}: {}'.format(type(e).__name__, e)]
        results.append(CheckResult(name, anchor, identity, not bad, bad))
        if bad:
            logger.error('%s failed: %s', name, bad[:3])
        else:
            logger.info('%s ok', name)
    return VerifyReport(config.profile, results)
