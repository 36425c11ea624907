"""Prime sum graphs: matchings, Hamilton cycles, case analysis, and scans.

The prime sum graph G_n has vertices {1..n} and an edge between u and v
exactly when u+v is prime. This package constructs prime-pair perfect
matchings of {1..2n}, builds Hamilton cycles of G_2n from witness prime
pairs, mechanizes the residue-class case analysis for even prime gaps up
to 246, and scans large even ranges for witness existence.
"""

from .primes import (
    CapacityError,
    PrimeSet,
    SegmentSpec,
    build_prime_set,
    is_prime_u64,
    next_prime_in,
    primes_in_range,
    shared_prime_set,
)
from .graph import EdgeClass, PrimeSumGraph
from .matching import PairMatching, greenfield_matching, validate_matching
from .hamilton import (
    DifferenceSet,
    HamiltonCycle,
    Witness,
    cycle_from_witness,
    difference_set,
    find_witness,
    labeling,
    smallest_hamiltonian_prime_set_check,
    union_cycle_structure,
    validate_cycle,
)
from .oracle import brute_hamilton, brute_matching_exists
from .residue_cases import (
    CaseReport,
    RepresentativeCase,
    ResidueForm,
    analyze_forms,
    enumerate_forms,
    find_representative,
    forms_for_gap,
    run_full_case_analysis,
    validate_paper_row,
)
from .scan import ScanReport, scan_bertrand_variant, scan_witnesses

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "PrimeSet",
    "SegmentSpec",
    "build_prime_set",
    "is_prime_u64",
    "next_prime_in",
    "primes_in_range",
    "shared_prime_set",
    "EdgeClass",
    "PrimeSumGraph",
    "PairMatching",
    "greenfield_matching",
    "validate_matching",
    "DifferenceSet",
    "HamiltonCycle",
    "Witness",
    "cycle_from_witness",
    "difference_set",
    "find_witness",
    "labeling",
    "smallest_hamiltonian_prime_set_check",
    "union_cycle_structure",
    "validate_cycle",
    "brute_hamilton",
    "brute_matching_exists",
    "CaseReport",
    "RepresentativeCase",
    "ResidueForm",
    "analyze_forms",
    "enumerate_forms",
    "find_representative",
    "forms_for_gap",
    "run_full_case_analysis",
    "validate_paper_row",
    "ScanReport",
    "scan_bertrand_variant",
    "scan_witnesses",
    "__version__",
]
