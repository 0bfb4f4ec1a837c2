from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import io
import json

import numpy as np
import pandas as pd
import pytest

from pencil_orbits.census import CSV_COLUMNS, CensusConfig, VerifyConfig, candidate_primes, census, census_row, \
    threads_from_env, verify_all, write_rows, write_summary
from pencil_orbits.census.census import THREADS_ENV
from pencil_orbits.census.verify import CHECKS, EULER_CUTOFF_FULL, QUICK_CORPUS, two_torsion_corpus
from pencil_orbits.census.main import EXIT_MISMATCH, EXIT_OK, EXIT_PRECISION, main
from pencil_orbits.densities import matrix_counts
from pencil_orbits.forms import BinaryForm
from pencil_orbits.invariants import section_inv
from pencil_orbits.pencils import act, random_element

X3_MINUS_4Y3 = BinaryForm((1, 0, 0, -4))


def _small_config(**kwargs):
    kwargs.setdefault('height', 1)
    kwargs.setdefault('euler_cutoff', 100)
    kwargs.setdefault('progress', False)
    return CensusConfig(**kwargs)


# ROWS ----

def test_candidate_primes():
    assert candidate_primes(-432) == [2, 3]
    assert candidate_primes(-23) == [23]
    assert candidate_primes(-23, double_check=False) == []


def test_row_x3_minus_4y3():
    row = census_row(X3_MINUS_4Y3, _small_config())
    assert row.primes == [2, 3]
    assert row.global_count == 3
    assert row.projective_count == 2
    assert row.complete
    record = row.to_record()
    assert record['local_counts'] == '2:1/2/0;3:1/0'
    assert record['local_projective'] == '2:2;3:1'
    assert not row.is_squarefree()


def test_row_squarefree_disc():
    row = census_row(BinaryForm((1, 0, -1, -1)), _small_config())
    assert row.disc == -23
    assert row.is_squarefree()
    assert row.global_count == row.projective_count == 1


def test_row_excluded_on_precision():
    row = census_row(X3_MINUS_4Y3, _small_config(margin=70))
    assert row.excluded
    assert row.global_count is None
    assert 'precision' in row.reason


# CENSUS ----

def test_small_census():
    summary = census(_small_config())
    assert summary.rows
    assert all(row.height == 1 and row.signature == 1 for row in summary.rows)
    assert summary.exclusion_rate == 0
    assert summary.average() >= 1
    assert summary.average(projective=True) <= summary.average()
    assert summary.trajectory([1])[0]['forms'] == len(summary.rows)
    refs = summary.as_dict()['references']
    assert set(refs) == {'full', 'projective'}


def test_census_output_is_deterministic():
    first, second = io.StringIO(), io.StringIO()
    write_rows(census(_small_config()).rows, 'csv', first)
    write_rows(census(_small_config()).rows, 'csv', second)
    assert first.getvalue() == second.getvalue()
    assert first.getvalue().splitlines()[0] == ','.join(CSV_COLUMNS)


def test_json_rows_and_summary():
    summary = census(_small_config())
    stream = io.StringIO()
    write_rows(summary.rows, 'json', stream)
    lines = stream.getvalue().splitlines()
    assert len(lines) == len(summary.rows)
    assert json.loads(lines[0])['form'] == summary.rows[0].f.to_text()
    stream = io.StringIO()
    write_summary(summary, stream)
    assert json.loads(stream.getvalue())['forms'] == len(summary.rows)
    with pytest.raises(ValueError):
        write_rows(summary.rows, 'xml', io.StringIO())


def test_census_rejections():
    with pytest.raises(ValueError):
        census(_small_config(height=41))
    with pytest.raises(ValueError):
        census(_small_config(signature=2))


@pytest.mark.slow
def test_census_prefix_and_threads():
    small = census(_small_config())
    large = census(_small_config(height=2, threads=2))
    assert [r.f for r in large.rows[:len(small.rows)]] == [r.f for r in small.rows]
    assert [r.global_count for r in large.rows[:len(small.rows)]] == [r.global_count for r in small.rows]


def test_threads_from_env(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)
    assert threads_from_env() == 1
    monkeypatch.setenv(THREADS_ENV, '4')
    assert threads_from_env() == 4
    monkeypatch.setenv(THREADS_ENV, '0')
    with pytest.raises(ValueError):
        threads_from_env()


# VERIFY ----

def test_verify_profiles():
    assert VerifyConfig('full').full
    with pytest.raises(ValueError):
        VerifyConfig('thorough')


def test_verify_profiles_scale():
    assert EULER_CUTOFF_FULL == 10 ** 6
    corpus = two_torsion_corpus(QUICK_CORPUS)
    assert len(corpus) == QUICK_CORPUS >= 2
    assert len(set(corpus)) == len(corpus)


def test_verify_detects_a_broken_count(monkeypatch):
    monkeypatch.setattr(matrix_counts, 'c_prime', lambda p, k: 0)
    report = verify_all(VerifyConfig('quick'))
    assert not report.ok
    assert 'matrix_counts' in [r.name for r in report.failures]


# COMMAND LINE ----

def test_cli_local_count(capsys):
    assert main(['local-count', '--form', '1,0,0,-4', '--prime', '2']) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload['total'] == 3
    assert payload['projective_total'] == 2


def test_cli_precision_exit(capsys):
    assert main(['local-count', '--form', '1,0,0,-4', '--prime', '2', '--margin', '70']) == EXIT_PRECISION


def test_cli_two_torsion(capsys):
    assert main(['ring', 'two-torsion', '--form', '1,0,0,-4']) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload['count'] == 2
    assert payload['complete']


def test_cli_invariants(capsys):
    pair = section_inv((1, 0, 0, -2)).to_text()
    assert main(['invariants', '--pair', pair]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload['form'] == '1,0,0,-2'
    assert payload['disc'] == '-108'
    assert payload['lambda'] == '1'
    assert payload['projective'] is True


def test_cli_reduce(capsys):
    canonical = section_inv((1, 0, 0, -2))
    g = random_element('G_N', 3, np.random.RandomState(0), rational=True)
    pair = act(g, canonical.with_tag('W0')).to_text()
    assert main(['reduce', '--pair', pair]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload['canonical'] == canonical.to_text()


def test_cli_densities(capsys):
    assert main(['densities', 'euler', '--family', 'projective', '--cutoff', '100']) == EXIT_OK
    assert json.loads(capsys.readouterr().out)['family'] == 'projective'
    assert main(['densities', 'verify', '--prime', '2', '--depth', '1']) == EXIT_OK
    assert json.loads(capsys.readouterr().out)['ok']


def test_cli_census(capsys, tmpdir):
    out = str(tmpdir.join('rows.csv'))
    assert main(['census', '--height', '1', '--euler-cutoff', '100', '--out', out]) == EXIT_OK
    with open(out) as fh:
        assert fh.readline().strip() == ','.join(CSV_COLUMNS)
    with open(out + '.summary.json') as fh:
        assert json.load(fh)['height'] == 1


def test_cli_verify_all(capsys, tmpdir, monkeypatch):
    out = str(tmpdir.join('verify.json'))
    assert main(['verify-all', '--out', out]) == EXIT_OK
    with open(out) as fh:
        report = json.load(fh)
    assert report['ok']
    assert [c['name'] for c in report['checks']] == [c[0] for c in CHECKS]
    assert all(c['anchor'] for c in report['checks'])
    monkeypatch.setattr(matrix_counts, 'c_prime', lambda p, k: 0)
    assert main(['verify-all', '--out', out]) == EXIT_MISMATCH


def test_cli_census_stdout_is_pure_csv(capsys):
    assert main(['census', '--height', '1', '--euler-cutoff', '100', '--no-double-check']) == EXIT_OK
    captured = capsys.readouterr()
    frame = pd.read_csv(io.StringIO(captured.out))
    assert list(frame.columns) == CSV_COLUMNS
    summary_lines = [line for line in captured.err.splitlines() if line.startswith('{')]
    assert len(frame) == json.loads(summary_lines[-1])['forms']


def test_cli_rejects_underscore_flags():
    with pytest.raises(SystemExit):
        main(['census', '--height', '1', '--euler_cutoff', '100'])
