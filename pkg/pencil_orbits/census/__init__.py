from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from pencil_orbits.census.census import CensusConfig, CensusRow, CensusSummary, census, census_row, \
    candidate_primes, reference_constants, rows_frame, write_rows, write_summary, threads_from_env, CSV_COLUMNS
from pencil_orbits.census.verify import VerifyConfig, VerifyReport, CheckResult, verify_all, two_torsion_corpus, \
    projective_orbit_product, CHECKS
