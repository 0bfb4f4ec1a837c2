from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from pencil_orbits.reduction.trace import ReductionTrace, TraceStep
from pencil_orbits.reduction.field_reduction import reduce_LN_field, reduce_GN_field, alignment_element, \
    elementary_factors
from pencil_orbits.reduction.padic_domain import valuation, canonicalize_padic, check_partition, \
    inner_mass_by_enumeration, expected_key_count, domain_pair, DomainPoint, PartitionReport
from pencil_orbits.reduction.local_orbits import LocalCountConfig, LocalOrbitRep, LocalCanonical, \
    EquivalenceVerdict, LocalOrbitCount, enumerate_local_reps, canonicalize_local, orbit_equivalent_padic, \
    local_orbit_count, local_rep_candidates, working_precision
