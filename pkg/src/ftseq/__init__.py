"""Fault-tolerant measurement sequences for stabilizer codes."""

from .codes import (
    PauliOperator,
    StabilizerCode,
    five_qubit_code,
    hamming_parity_check,
    quantum_hamming_code,
    symplectic_anticommute,
)
from .faultsim import FaultScenario, build_lookup_decoder, classify_residual, observed_syndrome, run_campaign
from .ftcheck import (
    check_block_split_properties,
    check_operational,
    check_theorem1_literal,
    check_theorem2,
    delayed_syndrome,
)
from .gf2 import BitMatrix, BitVector, Gf2Polynomial, circulant_from_poly, kernel, mat_mul, mat_rank, solve_in_rowspace
from .search import SearchConfig, SearchResult, enumerate_solutions, search_min_sequence, verify_certificate
from .syndromes import (
    MeasurementSequence,
    SyndromeMatrix,
    apply_transform,
    baseline_css_sequence,
    build_transform_C,
    check_self_dual_symmetry,
    sequence_from_transform,
    syndrome_matrix,
)

__version__ = "0.1.0"
