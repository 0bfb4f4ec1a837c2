from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import pandas as pd
from sympy import factorint
from tqdm import tqdm

from pencil_orbits.densities import euler_product, reference_value
from pencil_orbits.errors import PrecisionError
from pencil_orbits.forms import BinaryForm, discriminant, enumerate_forms, height, signature
from pencil_orbits.reduction import LocalCountConfig, local_orbit_count

logger = logging.getLogger(__name__)

THREADS_ENV = 'PENCIL_ORBITS_THREADS'

CSV_COLUMNS = ['form', 'height', 'signature', 'disc', 'primes', 'local_counts', 'local_projective',
               'global_count', 'projective_count', 'precision', 'complete', 'excluded', 'reason']


class CensusConfig(object):

    def __init__(self,
                 degree=3,
                 height=10,
                 signature=1,
                 output='csv',
                 threads=1,
                 emax=None,
                 margin=3,
                 double_check=True,
                 height_ceiling=40,
                 allow_heuristic=False,
                 euler_cutoff=1000,
                 progress=True):
        self.degree = degree
        self.height = height
        self.signature = signature
        self.output = output
        self.threads = threads
        self.emax = emax
        self.margin = margin
        self.double_check = double_check
        self.height_ceiling = height_ceiling
        self.allow_heuristic = allow_heuristic
        self.euler_cutoff = euler_cutoff
        self.progress = progress

    def local_config(self):
        return LocalCountConfig(margin=self.margin, double_check=self.double_check)

    def print(self):
        print('|-----------------------------------------|')
        print('|              CENSUS CONFIG              |')
        print('|-----------------------------------------|')
        for k, v in vars(self).items():
            print('|{:25}|{:15}|'.format(k, str(v)))
        print('|-----------------------------------------|')


def threads_from_env(default=1):
    value = os.environ.get(THREADS_ENV)
    if not value:
        return default
    threads = int(value)
    if threads < 1:
        raise ValueError('{} must be a positive integer, got {}'.format(THREADS_ENV, value))
    return threads


class CensusRow(object):
    """Global reducible-orbit count above one form, assembled from local counts at the candidate primes."""

    def __init__(self, f, disc, signature_, local, excluded=False, reason=''):
        self.f = f
        self.disc = disc
        self.signature = signature_
        self.height = height(f)
        self.local = local
        self.excluded = excluded
        self.reason = reason

    @property
    def primes(self):
        return sorted(self.local)

    @property
    def global_count(self):
        if self.excluded:
            return None
        count = 1
        for p in self.primes:
            count *= self.local[p].total
        return count

    @property
    def projective_count(self):
        if self.excluded:
            return None
        count = 1
        for p in self.primes:
            count *= self.local[p].projective_total
        return count

    @property
    def complete(self):
        return not self.excluded and all(self.local[p].complete for p in self.primes)

    @property
    def precision(self):
        return max([self.local[p].precision for p in self.primes] or [0])

    def is_squarefree(self):
        return all(v == 1 for v in factorint(abs(self.disc)).values())

    def to_record(self):
        return {'form': self.f.to_text(),
                'height': self.height,
                'signature': self.signature,
                'disc': self.disc,
                'primes': ';'.join(str(p) for p in self.primes),
                'local_counts': ';'.join('{}:{}'.format(p, '/'.join(str(c) for c in self.local[p].counts()))
                                         for p in self.primes),
                'local_projective': ';'.join('{}:{}'.format(p, self.local[p].projective_total)
                                             for p in self.primes),
                'global_count': self.global_count,
                'projective_count': self.projective_count,
                'precision': self.precision,
                'complete': self.complete,
                'excluded': self.excluded,
                'reason': self.reason}


def candidate_primes(disc, double_check=True):
    """Primes that may carry orbits with nu_p(lambda) > 0: p^2 | disc, plus nu_p(disc) = 1 when double checking."""
    return sorted(p for p, v in factorint(abs(disc)).items() if v >= 2 or (double_check and v == 1))


def census_row(f, config=None):
    # type: (BinaryForm, CensusConfig) -> CensusRow
    config = config or CensusConfig()
    disc = discriminant(f)
    local = {}
    try:
        for p in candidate_primes(disc, config.double_check):
            local[p] = local_orbit_count(f, p, e_max=config.emax, config=config.local_config())
    except PrecisionError as e:
        logger.warning('excluding %s: %s', f.to_text(), e)
        return CensusRow(f, disc, signature(f), local, excluded=True, reason=str(e))
    row = CensusRow(f, disc, signature(f), local)
    assert row.global_count >= 1, 'no unit-lambda orbit above {}'.format(f.to_text())
    assert row.projective_count <= row.global_count
    return row


def _row_job(args):
    coeffs, config = args
    return census_row(BinaryForm(coeffs), config)


class CensusSummary(object):

    def __init__(self, config, rows, references):
        self.config = config
        self.rows = rows
        self.references = references

    @property
    def included(self):
        return [row for row in self.rows if not row.excluded]

    @property
    def exclusion_rate(self):
        if not self.rows:
            return Fraction(0)
        return Fraction(len(self.rows) - len(self.included), len(self.rows))

    def average(self, projective=False, rows=None):
        rows = self.included if rows is None else rows
        if not rows:
            return None
        values = [row.projective_count if projective else row.global_count for row in rows]
        return Fraction(sum(values), len(values))

    def squarefree_rows(self):
        return [row for row in self.included if row.is_squarefree()]

    def trajectory(self, heights):
        """Running averages at smaller height bounds, read off the height-ordered prefix."""
        points = []
        for x in heights:
            rows = [row for row in self.included if row.height <= x]
            points.append({'height': x, 'forms': len(rows),
                           'average': _fmt(self.average(rows=rows)),
                           'projective_average': _fmt(self.average(projective=True, rows=rows))})
        return points

    def as_dict(self):
        return {'degree': self.config.degree,
                'height': self.config.height,
                'signature': self.config.signature,
                'forms': len(self.rows),
                'excluded': len(self.rows) - len(self.included),
                'exclusion_rate': str(self.exclusion_rate),
                'average': _fmt(self.average()),
                'average_decimal': _decimal(self.average()),
                'projective_average': _fmt(self.average(projective=True)),
                'projective_average_decimal': _decimal(self.average(projective=True)),
                'squarefree_forms': len(self.squarefree_rows()),
                'squarefree_projective_average': _fmt(self.average(projective=True, rows=self.squarefree_rows())),
                'references': self.references}


def _fmt(value):
    return None if value is None else str(value)


def _decimal(value, digits=6):
    return None if value is None else round(float(value), digits)


def reference_constants(degree=3, cutoff=1000):
    refs = {}
    for name in ('full', 'projective'):
        product = euler_product(name, cutoff, degree=degree)
        lo, hi = product.bounds()
        refs[name] = {'value': str(reference_value(name, degree, dps=20)),
                      'enclosure': [str(lo), str(hi)], 'cutoff': cutoff}
    return refs


def census(config=None):
    # type: (CensusConfig) -> CensusSummary
    """Rows for every irreducible form of height <= X and the given signature, in height-shell order."""
    config = config or CensusConfig()
    if config.height > config.height_ceiling:
        raise ValueError('height {} above the ceiling {}'.format(config.height, config.height_ceiling))
    if config.degree == 3 and config.signature not in (1, 3):
        raise ValueError('cubic forms have 1 or 3 real roots, got signature {}'.format(config.signature))
    forms = list(enumerate_forms(config.degree, config.height, r=config.signature,
                                 allow_heuristic=config.allow_heuristic))
    logger.info('census over %d forms of height <= %d', len(forms), config.height)
    jobs = [(f.coeffs, config) for f in forms]
    if config.threads > 1:
        with ProcessPoolExecutor(max_workers=config.threads) as executor:
            stream = executor.map(_row_job, jobs, chunksize=16)
            rows = list(tqdm(stream, total=len(jobs), disable=not config.progress, desc='census'))
    else:
        bar = tqdm(jobs, disable=not config.progress)
        bar.set_description('census X={} r={}'.format(config.height, config.signature))
        rows = [_row_job(job) for job in bar]
    summary = CensusSummary(config, rows, reference_constants(config.degree, config.euler_cutoff))
    logger.info('average %s, projective average %s, exclusion rate %s', summary.average(),
                summary.average(projective=True), summary.exclusion_rate)
    return summary


def rows_frame(rows):
    return pd.DataFrame([row.to_record() for row in rows], columns=CSV_COLUMNS)


def write_rows(rows, output, stream):
    frame = rows_frame(rows)
    if output == 'csv':
        stream.write(frame.to_csv(index=False))
    elif output == 'json':
        if len(frame):
            stream.write(frame.to_json(orient="records", lines=True).rstrip("\n"))
            stream.write('\n')
    else:
        raise ValueError('unknown output format {}'.format(output))


def write_summary(summary, stream):
    stream.write(json.dumps(summary.as_dict(), sort_keys=True))
    stream.write('\n')
