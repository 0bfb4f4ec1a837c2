from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging

from pencil_orbits.algebra import ExactMatrix
from pencil_orbits.errors import PrecisionError, VerificationError
from pencil_orbits.forms import BinaryForm, discriminant
from pencil_orbits.invariants import hyperdeterminant, inv, is_projective
from pencil_orbits.pencils import BlockGroupElement, SymPair
from pencil_orbits.reduction.padic_domain import first_row_clearing, require_cubic, valuation
from pencil_orbits.reduction.trace import ReductionTrace

logger = logging.getLogger(__name__)


class LocalCountConfig(object):

    def __init__(self, margin=3, max_precision=60, double_check=True):
        self.margin = margin
        self.max_precision = max_precision
        self.double_check = double_check

    def print(self):
        print('|-----------------------------------------|')
        print('|           LOCAL COUNT CONFIG            |')
        print('|-----------------------------------------|')
        for k, v in vars(self).items():
            print('|{:25}|{:15}|'.format(k, str(v)))
        print('|-----------------------------------------|')


def working_precision(e, margin):
    """Precision at which canonical data of a level-e orbit are certified."""
    return max(e + margin, 3 * e + 1)


# REPRESENTATIVES ----

class LocalOrbitRep(object):
    """G_3(Z_p)-orbit representative above f with nu_p(lambda) = a_1 + b_1.

    pair is the exact integral representative; entries is its reduction mod p^precision.
    """

    def __init__(self, p, precision, avec, bvec, pair):
        # type: (int, int, tuple, tuple, SymPair) -> None
        self.p = p
        self.precision = precision
        self.avec = tuple(avec)
        self.bvec = tuple(bvec)
        self.pair = pair
        self.entries = pair.reduce(p ** precision)
        self.lambda_val = sum(self.avec) + sum(self.bvec)
        assert precision > self.lambda_val

    def __repr__(self):
        return 'LocalOrbitRep(p={}, a={}, b={}, {})'.format(self.p, self.avec, self.bvec, self.pair.to_text())


def _diagonal_entries(f, p_a, q_b, c, a23, b23):
    """Solve inv = f for the four diagonal entries; None when one of them is not integral."""
    f0, f1, f2, f3 = f
    a22, r = divmod(f0, p_a ** 2)
    if r:
        return None
    b22, r = divmod(-f1 - 2 * p_a * c * a22 + 2 * p_a * q_b * a23, p_a ** 2)
    if r:
        return None
    a33, r = divmod(f2 - 2 * p_a * c * b22 - c * c * a22 + 2 * q_b * (p_a * b23 + c * a23), q_b ** 2)
    if r:
        return None
    b33, r = divmod(-f3 - c * c * b22 + 2 * q_b * c * b23, q_b ** 2)
    if r:
        return None
    return a22, b22, a33, b33


def shaped_pair(p_a, q_b, c, a23, b23, a22, b22, a33, b33):
    a = [[0, 0, p_a], [0, a22, a23], [p_a, a23, a33]]
    b = [[0, q_b, c], [q_b, b22, b23], [c, b23, b33]]
    return SymPair.from_lists(a, b, space_tag='W0')


def local_rep_candidates(f, p, e):
    """Integral pairs of the reduced shape above f at level e, in a fixed order.

    Top-right blocks (0, p^a) and (p^b, c) with a + b = e; c and B_23 in [0, p^b), A_23 in [0, p^a).
    """
    f = tuple(f)
    for alpha in range(e + 1):
        beta = e - alpha
        p_a, q_b = p ** alpha, p ** beta
        if f[0] % (p_a ** 2):
            continue
        for c in range(q_b):
            for a23 in range(p_a):
                for b23 in range(q_b):
                    diag = _diagonal_entries(f, p_a, q_b, c, a23, b23)
                    if diag is None:
                        continue
                    yield alpha, beta, shaped_pair(p_a, q_b, c, a23, b23, *diag)


def enumerate_local_reps(f, p, e, k):
    # type: (BinaryForm, int, int, int) -> list
    """Orbit representatives above f at level e, reduced mod p^k and deduplicated."""
    if f.degree != 3:
        raise NotImplementedError('local representatives are implemented for cubic forms only')
    if discriminant(f) == 0:
        raise ValueError('local representatives need a nonzero discriminant')
    if k <= e:
        raise PrecisionError('precision {} cannot hold lambda of valuation {}'.format(k, e))
    reps = []
    for alpha, beta, pair in local_rep_candidates(f, p, e):
        assert inv(pair) == f, 'diagonal solve broke inv for {}'.format(pair)
        assert hyperdeterminant(pair) == p ** e
        rep = LocalOrbitRep(p, k, (alpha,), (beta,), pair)
        for kept in reps:
            verdict = orbit_equivalent_padic(rep, kept, depth=k)
            if verdict.verdict == 'inconclusive':
                raise PrecisionError('cannot separate level-{} representatives at precision {}'.format(e, k))
            if verdict.verdict == 'equivalent':
                logger.debug('dropping duplicate %s', rep)
                break
        else:
            reps.append(rep)
    return reps


# CANONICAL DATA MOD p^m ----

class LocalCanonical(object):
    """Reduced shape reached by G_3(Z/p^m); data = (alpha, beta, c, A_23, B_23)."""

    def __init__(self, pair, trace, alpha, beta, data, precision):
        self.pair = pair
        self.trace = trace
        self.alpha = alpha
        self.beta = beta
        self.data = data
        self.precision = precision

    @property
    def e(self):
        return self.alpha + self.beta

    def diagonal(self, modulus):
        a, b = self.pair.a, self.pair.b
        return tuple(x % modulus for x in (a.entry(1, 1), b.entry(1, 1), a.entry(2, 2), b.entry(2, 2)))

    def certificate(self):
        return self.trace.total('G_N')


def _entry(w, m, i, j):
    return w.a.lift().entry(i, j) if m == 'A' else w.b.lift().entry(i, j)


def canonicalize_local(w, p):
    # type: (SymPair, int) -> LocalCanonical
    """Bring w in W0(Z/p^m) to the reduced shape of its level with explicit G_3(Z/p^m) elements.

    Steps: clear the first row of A, rescale the unit of lambda away, shear B_13 into [0, p^beta),
    then two unipotent steps put A_23 into [0, p^alpha) and B_23 into [0, p^beta).
    """
    require_cubic(w)
    modulus = w.modulus
    if modulus is None:
        raise ValueError('canonicalize_local needs a pair over Z/p^m')
    m = valuation(modulus, p, modulus)
    if p ** m != modulus:
        raise ValueError('modulus {} is not a power of {}'.format(modulus, p))
    lam = hyperdeterminant(w.lift()) % modulus
    if lam == 0:
        raise PrecisionError('lambda vanishes mod {}^{}'.format(p, m))
    e = valuation(lam, p, m)
    trace = ReductionTrace(w.with_tag('W0'))
    one = ExactMatrix([[1]], modulus=modulus)

    a12, a13 = _entry(w, 'A', 0, 1), _entry(w, 'A', 0, 2)
    alpha = min(valuation(a12, p, m), valuation(a13, p, m))
    clear = ExactMatrix(first_row_clearing(a12 // p ** alpha, a13 // p ** alpha, p, modulus), modulus=modulus)
    trace.apply('first row', BlockGroupElement.block_diagonal(one, clear.T, 'SLnxSLn1'))

    u = _entry(trace.end, 'B', 0, 1)
    beta = e - alpha
    assert valuation(u, p, m) == beta
    unit = u // p ** beta
    scale_top = ExactMatrix([[pow(unit, -1, modulus)]], modulus=modulus)
    scale_bottom = ExactMatrix([[1, 0], [0, unit]], modulus=modulus)
    trace.apply('unit of lambda', BlockGroupElement.block_diagonal(scale_top, scale_bottom, 'H2'))

    tau = -(_entry(trace.end, 'B', 0, 2) // p ** beta)
    shear = ExactMatrix([[1, 0], [tau, 1]], modulus=modulus)
    trace.apply('B_13', BlockGroupElement.block_diagonal(one, shear, 'SLnxSLn1'))

    u1 = -(_entry(trace.end, 'A', 1, 2) // p ** alpha)
    trace.apply('A_23', BlockGroupElement.unipotent(ExactMatrix([[u1], [0]], modulus=modulus)))
    u2 = -(_entry(trace.end, 'B', 1, 2) // p ** beta)
    trace.apply('B_23', BlockGroupElement.unipotent(ExactMatrix([[0], [u2]], modulus=modulus)))

    end = trace.end
    assert end.a.entry(0, 1) == 0 and end.a.entry(0, 2) == p ** alpha % modulus
    assert end.b.entry(0, 1) == p ** beta % modulus
    data = (alpha, beta, end.b.entry(0, 2), end.a.entry(1, 2), end.b.entry(1, 2))
    logger.debug('canonical data %s mod %d^%d in %d steps', data, p, m, len(trace))
    return LocalCanonical(end, trace, alpha, beta, data, m)


# EQUIVALENCE ----

class EquivalenceVerdict(object):

    VERDICTS = ('equivalent', 'distinct', 'inconclusive')

    def __init__(self, verdict, precision, certificate=None, reason=''):
        assert verdict in self.VERDICTS
        self.verdict = verdict
        self.precision = precision
        self.certificate = certificate
        self.reason = reason

    @property
    def conclusive(self):
        return self.verdict != 'inconclusive'

    def __repr__(self):
        return 'EquivalenceVerdict({}, precision={}, {})'.format(self.verdict, self.precision, self.reason)


def _residues(r):
    if isinstance(r, LocalOrbitRep):
        return r.p, r.precision, r.entries
    if r.modulus is None:
        raise ValueError('equivalence needs a representative or a pair over Z/p^k')
    return None, None, r


def orbit_equivalent_padic(r1, r2, depth=None, p=None):
    # type: (object, object, int, int) -> EquivalenceVerdict
    """Decide G_3(Z/p^depth)-equivalence of two representatives above the same form.

    Both are brought to canonical data. Distinct data, or diagonals differing mod p^(depth - 3e),
    mean distinct orbits; matching data gives a certificate g with g . r1 = r2 mod p^(depth - 3e).
    """
    p1, k1, w1 = _residues(r1)
    p2, k2, w2 = _residues(r2)
    p = p1 or p2 or p
    if p is None or (p1 and p2 and p1 != p2):
        raise ValueError('equivalence needs one common prime')
    k1 = k1 or valuation(w1.modulus, p, w1.modulus)
    k2 = k2 or valuation(w2.modulus, p, w2.modulus)
    m = min(k1, k2) if depth is None else depth
    if m > min(k1, k2):
        raise ValueError('depth {} exceeds the precision of the representatives'.format(m))
    modulus = p ** m
    w1, w2 = w1.lift().reduce(modulus), w2.lift().reduce(modulus)
    lam1 = hyperdeterminant(w1.lift()) % modulus
    lam2 = hyperdeterminant(w2.lift()) % modulus
    if lam1 == 0 or lam2 == 0:
        return EquivalenceVerdict('inconclusive', m, reason='lambda vanishes mod p^{}'.format(m))
    e1, e2 = valuation(lam1, p, m), valuation(lam2, p, m)
    if e1 != e2:
        return EquivalenceVerdict('distinct', m, reason='lambda valuations {} and {}'.format(e1, e2))
    if m < 3 * e1 + 1:
        return EquivalenceVerdict('inconclusive', m, reason='depth below 3e + 1 = {}'.format(3 * e1 + 1))
    c1, c2 = canonicalize_local(w1, p), canonicalize_local(w2, p)
    if c1.data != c2.data:
        return EquivalenceVerdict('distinct', m, reason='canonical data {} and {}'.format(c1.data, c2.data))
    check = p ** (m - 3 * e1)
    if c1.diagonal(check) != c2.diagonal(check):
        return EquivalenceVerdict('distinct', m, reason='diagonals differ mod p^{}'.format(m - 3 * e1))
    certificate = c2.certificate().inverse() @ c1.certificate()
    return EquivalenceVerdict('equivalent', m, certificate=certificate)


# COUNTS ----

class LocalOrbitCount(object):

    def __init__(self, f, p, levels, support_bound, e_max):
        self.f = f
        self.p = p
        self.levels = levels
        self.support_bound = support_bound
        self.e_max = e_max

    @property
    def total(self):
        return sum(level['count'] for level in self.levels)

    @property
    def projective_total(self):
        return sum(level['projective'] for level in self.levels)

    @property
    def complete(self):
        # nu_p(disc) >= 2 nu_p(lambda) for every orbit above f
        return self.e_max >= self.support_bound

    @property
    def precision(self):
        return max(level['precision'] for level in self.levels)

    def counts(self):
        return [level['count'] for level in self.levels]

    def as_dict(self):
        return {'form': self.f.to_text(), 'prime': self.p, 'levels': self.levels, 'total': self.total,
                'projective_total': self.projective_total, 'precision': self.precision,
                'complete': self.complete, 'e_max': self.e_max, 'support_bound': self.support_bound}


def local_orbit_count(f, p, e_max=None, config=None):
    # type: (BinaryForm, int, int, LocalCountConfig) -> LocalOrbitCount
    """Number of G_3(Z_p)-orbits above f for each level e <= e_max, with projective sub-counts."""
    config = config or LocalCountConfig()
    if f.degree != 3:
        raise NotImplementedError('local orbit counts are implemented for cubic forms only')
    disc = discriminant(f)
    if disc == 0:
        raise ValueError('local orbit counts need a nonzero discriminant')
    bound = valuation(disc, p, abs(disc)) // 2
    e_max = bound if e_max is None else e_max
    levels = []
    for e in range(e_max + 1):
        k = working_precision(e, config.margin)
        if k > config.max_precision:
            raise PrecisionError('level {} needs precision {} above the ceiling {}'.format(
                e, k, config.max_precision))
        reps = enumerate_local_reps(f, p, e, k)
        projective = sum(1 for rep in reps if is_projective(rep.pair, p))
        levels.append({'e': e, 'count': len(reps), 'projective': projective, 'precision': k})
        logger.debug('f=%s p=%d e=%d: %d orbits, %d projective', f.to_text(), p, e, len(reps), projective)
    result = LocalOrbitCount(f, p, levels, bound, e_max)
    if config.double_check:
        if levels[0]['count'] != 1 or levels[0]['projective'] != 1:
            raise VerificationError('unit-lambda level above {} at p={} is not a single projective orbit'.format(
                f.to_text(), p))
        if bound == 0 and result.total != 1:
            raise VerificationError('p={} does not divide disc but {} orbits were found'.format(p, result.total))
    return result
