from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import argparse
import json
import logging
import sys
from contextlib import redirect_stdout
from fractions import Fraction
from os import path

from pencil_orbits.census.census import CensusConfig, census, threads_from_env, write_rows, write_summary
from pencil_orbits.census.verify import VerifyConfig, verify_all
from pencil_orbits.densities import closed_full_local_mass, euler_product, full_local_mass, matrix_counts, \
    projective_local_mass, s_mass, s_mass_by_enumeration, verify_change_of_variables
from pencil_orbits.densities.change_of_variables import EXHAUSTIVE_DEPTH
from pencil_orbits.errors import PrecisionError, VerificationError
from pencil_orbits.forms import BinaryForm, discriminant
from pencil_orbits.invariants import hyperdeterminant, inv, is_projective, non_projective_primes
from pencil_orbits.pencils import SymPair
from pencil_orbits.reduction import LocalCountConfig, local_orbit_count, reduce_GN_field, reduce_LN_field
from pencil_orbits.resources_out import RES_OUT_DIR
from pencil_orbits.rings import ring_from_form, two_torsion_ideals

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 2
EXIT_PRECISION = 3


def _emit(payload, out=None):
    text = json.dumps(payload, sort_keys=True, indent=2)
    if out:
        with open(out, 'w') as fh:
            fh.write(text + '\n')
    else:
        print(text)


def _show_config(config):
    with redirect_stdout(sys.stderr):
        config.print()


# SUBCOMMANDS ----

def run_census(args):
    config = CensusConfig(degree=args.degree,
                          height=args.height,
                          signature=args.signature,
                          output=args.output,
                          threads=args.threads or threads_from_env(),
                          emax=args.emax,
                          margin=args.margin,
                          double_check=not args.no_double_check,
                          allow_heuristic=args.allow_heuristic,
                          euler_cutoff=args.euler_cutoff,
                          progress=args.verbose)
    if args.verbose:
        _show_config(config)
    summary = census(config=config)
    if args.out:
        with open(args.out, 'w') as fh:
            write_rows(summary.rows, config.output, fh)
        with open(args.out + '.summary.json', 'w') as fh:
            write_summary(summary, fh)
    else:
        # stdout carries the rows alone
        write_rows(summary.rows, config.output, sys.stdout)
        write_summary(summary, sys.stderr)
    return EXIT_OK


def run_local_count(args):
    config = LocalCountConfig(margin=args.margin)
    result = local_orbit_count(BinaryForm.from_text(args.form), args.prime, e_max=args.emax, config=config)
    _emit(result.as_dict(), args.out)
    return EXIT_OK


def run_reduce(args):
    if args.group == 'L_N':
        w = SymPair.from_text(args.pair, space_tag='Wtop0')
        canonical, trace = reduce_LN_field(w)
    else:
        w = SymPair.from_text(args.pair, space_tag='W0')
        canonical, trace = reduce_GN_field(w)
    _emit({'input': w.to_text(), 'group': args.group, 'canonical': canonical.to_text(),
           'trace': trace.to_records(), 'total': trace.total(args.group).matrix.to_text()}, args.out)
    return EXIT_OK


def run_invariants(args):
    w = SymPair.from_text(args.pair)
    f = inv(w)
    payload = {'pair': w.to_text(), 'form': f.to_text(), 'disc': str(discriminant(f))}
    payload['lambda'] = str(hyperdeterminant(w)) if w.in_space('W0') else None
    if w.size == 3:
        payload['projective'] = is_projective(w)
        payload['non_projective_primes'] = non_projective_primes(w)
    _emit(payload, args.out)
    return EXIT_OK


def run_densities_verify(args):
    p, depth = args.prime, args.depth
    checks = []
    for k in range(1, depth + 1):
        expected = matrix_counts.count_cpp(p, k)
        found = matrix_counts.counts_by_enumeration(p, k)
        checks.append({'name': 'matrix_counts', 'k': k, 'ok': found == expected,
                       'formula': list(expected), 'enumerated': list(found)})
    if p <= 3:
        enumerated = s_mass_by_enumeration(p)
        checks.append({'name': 's_mass', 'ok': all(c == s_mass(p, *q) for q, c in enumerated.items())})
    checks.append({'name': 'full_local_mass', 'ok': all(full_local_mass(p, n) == closed_full_local_mass(p, n)
                                                        for n in (1, 2))})
    checks.append({'name': 'projective_local_mass', 'value': str(projective_local_mass(p)),
                   'ok': projective_local_mass(p) == 1 + Fraction(1, p * p)})
    sample = None if depth <= EXHAUSTIVE_DEPTH else args.sample
    report = verify_change_of_variables(p, depth, sample=sample, progress=args.verbose)
    checks.append(dict(report.as_dict(), name='change_of_variables', ok=report.agrees))
    ok = all(c['ok'] for c in checks)
    _emit({'prime': p, 'depth': depth, 'ok': ok, 'checks': checks}, args.out)
    return EXIT_OK if ok else EXIT_MISMATCH


def run_densities_euler(args):
    product = euler_product(args.family, args.cutoff, degree=args.degree, progress=args.verbose)
    _emit(product.as_dict(), args.out)
    return EXIT_OK


def run_ring_two_torsion(args):
    ring = ring_from_form(BinaryForm.from_text(args.form))
    result = two_torsion_ideals(ring, bound=args.bound, progress=args.verbose)
    _emit(result.as_dict(), args.out)
    return EXIT_OK


def run_verify_all(args):
    config = VerifyConfig(profile=args.profile)
    if args.verbose:
        _show_config(config)
    report = verify_all(config=config, progress=args.verbose)
    out = args.out or path.join(RES_OUT_DIR, 'verify_{}.json'.format(config.profile))
    _emit(report.as_dict(), out)
    print(report.to_json())
    return EXIT_OK if report.ok else EXIT_MISMATCH


# PARSER ----

def build_parser():
    parser = argparse.ArgumentParser(prog='pencil_orbits')
    parser.add_argument('--verbose', action='store_true', default=False, dest='verbose',
                        help='Debug logging, configs and progress bars on stderr')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('census', help='Height-ordered census of global reducible-orbit counts')
    p.add_argument('--degree', action='store', type=int, default=3, dest='degree')
    p.add_argument('--height', action='store', type=int, default=10, dest='height',
                   help='Largest coefficient size X')
    p.add_argument('--signature', action='store', type=int, default=1, dest='signature',
                   help='Number of real roots r')
    p.add_argument('--output', action='store', choices=('csv', 'json'), default='csv', dest='output')
    p.add_argument('--threads', action='store', type=int, default=None, dest='threads',
                   help='Worker processes; falls back to $PENCIL_ORBITS_THREADS, then 1')
    p.add_argument('--emax', action='store', type=int, default=None, dest='emax',
                   help='Highest lambda valuation counted; default covers every level that can occur')
    p.add_argument('--margin', action='store', type=int, default=3, dest='margin')
    p.add_argument('--euler-cutoff', action='store', type=int, default=1000, dest='euler_cutoff')
    p.add_argument('--allow-heuristic', action='store_true', default=False, dest='allow_heuristic',
                   help='Accept the heuristic irreducibility filter above degree 3')
    p.add_argument('--no-double-check', action='store_true', default=False, dest='no_double_check',
                   help='Skip primes exactly dividing the discriminant')
    p.add_argument('--out', action='store', default=None, dest='out')
    p.set_defaults(run=run_census)

    p = sub.add_parser('local-count', help='Local orbit counts above a cubic form at one prime')
    p.add_argument('--form', action='store', required=True, dest='form', help='"f0,f1,f2,f3"')
    p.add_argument('--prime', action='store', type=int, required=True, dest='prime')
    p.add_argument('--emax', action='store', type=int, default=None, dest='emax')
    p.add_argument('--margin', action='store', type=int, default=3, dest='margin')
    p.add_argument('--out', action='store', default=None, dest='out')
    p.set_defaults(run=run_local_count)

    p = sub.add_parser('reduce', help='Canonical form of a rational pair under G_N or L_N')
    p.add_argument('--pair', action='store', required=True, dest='pair', help='"A=..;..;B=..;.."')
    p.add_argument('--group', action='store', choices=('G_N', 'L_N'), default='G_N', dest='group')
    p.add_argument('--out', action='store', default=None, dest='out')
    p.set_defaults(run=run_reduce)

    p = sub.add_parser('invariants', help='inv(w), disc, lambda and projectivity of a pair')
    p.add_argument('--pair', action='store', required=True, dest='pair')
    p.add_argument('--out', action='store', default=None, dest='out')
    p.set_defaults(run=run_invariants)

    p = sub.add_parser('densities', help='Local density oracles and Euler products')
    dens = p.add_subparsers(dest='action')
    dens.required = True
    d = dens.add_parser('verify')
    d.add_argument('--prime', action='store', type=int, required=True, dest='prime')
    d.add_argument('--depth', action='store', type=int, default=1, dest='depth')
    d.add_argument('--sample', action='store', type=int, default=2000, dest='sample',
                   help='Monte Carlo sample size beyond the exhaustive depth')
    d.add_argument('--out', action='store', default=None, dest='out')
    d.set_defaults(run=run_densities_verify)
    d = dens.add_parser('euler')
    d.add_argument('--family', action='store', choices=('full', 'projective', 'trivial'), default='full',
                   dest='family')
    d.add_argument('--cutoff', action='store', type=int, default=1000, dest='cutoff')
    d.add_argument('--degree', action='store', type=int, default=3, dest='degree')
    d.add_argument('--out', action='store', default=None, dest='out')
    d.set_defaults(run=run_densities_euler)

    p = sub.add_parser('ring', help='Cubic ring computations')
    ring = p.add_subparsers(dest='action')
    ring.required = True
    r = ring.add_parser('two-torsion')
    r.add_argument('--form', action='store', required=True, dest='form')
    r.add_argument('--bound', action='store', type=int, default=None, dest='bound')
    r.add_argument('--out', action='store', default=None, dest='out')
    r.set_defaults(run=run_ring_two_torsion)

    p = sub.add_parser('verify-all', help='Run every oracle; exit 2 on any mismatch')
    p.add_argument('--profile', action='store', choices=('quick', 'full'), default='quick', dest='profile')
    p.add_argument('--out', action='store', default=None, dest='out')
    p.set_defaults(run=run_verify_all)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(asctime)s %(name)s %(levelname)s %(message)s')
    try:
        return args.run(args)
    except VerificationError as e:
        logger.error('verification mismatch: %s', e)
        return EXIT_MISMATCH
    except PrecisionError as e:
        logger.error('precision failure: %s', e)
        return EXIT_PRECISION


if __name__ == '__main__':
    sys.exit(main())
