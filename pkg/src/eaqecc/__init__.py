"""Entanglement-assisted stabilizer codes from classical quaternary codes.

Build codes from GF(4) parity-check matrices, decompose arbitrary Pauli
generator sets into symplectic pairs plus an isotropic part, analyze
distance and bounds, and simulate table-based syndrome decoding over a
depolarizing channel.
"""

from importlib import resources

from .pauli import (
    PauliString,
    format_pauli,
    gf4_to_pauli,
    identity,
    multiply,
    parse_pauli,
    pauli_to_gf4,
    symplectic_product,
)
from .symplectic import (
    Decomposition,
    GeneratorSet,
    SymplecticMatrix,
    commutation_matrix,
    find_encoding_symplectic,
    gram_schmidt_decompose,
    group_equal_up_to_phase,
    reduce_independent,
)
from .builder import (
    ClassicalCode,
    CodeParameters,
    EaqeccCode,
    build_code,
    extend_generators,
    parameters,
    quaternary_to_stabilizer,
)
from .analysis import (
    BoundsReport,
    check_correctable_set,
    hashing_rates,
    in_isotropic,
    min_distance_bruteforce,
    nondegenerate_distinct_syndromes,
    singleton_report,
    syndrome_of,
)
from .simulate import (
    CatalyticLedger,
    CounterRng,
    DepolarizingChannel,
    SyndromeTable,
    TrialResult,
    build_syndrome_table,
    catalytic_schedule,
    decode_error,
    run_trials,
    sample_error,
)

__version__ = "0.1.0"


def example_code_path(name: str = "h4.code") -> str:
    """Filesystem path of a bundled example classical-code file."""
    return str(resources.files(__package__).joinpath("data", name))


__all__ = [
    "PauliString",
    "identity",
    "multiply",
    "symplectic_product",
    "parse_pauli",
    "format_pauli",
    "pauli_to_gf4",
    "gf4_to_pauli",
    "GeneratorSet",
    "Decomposition",
    "SymplecticMatrix",
    "reduce_independent",
    "commutation_matrix",
    "gram_schmidt_decompose",
    "group_equal_up_to_phase",
    "find_encoding_symplectic",
    "ClassicalCode",
    "EaqeccCode",
    "CodeParameters",
    "quaternary_to_stabilizer",
    "extend_generators",
    "build_code",
    "parameters",
    "syndrome_of",
    "in_isotropic",
    "check_correctable_set",
    "min_distance_bruteforce",
    "nondegenerate_distinct_syndromes",
    "BoundsReport",
    "singleton_report",
    "hashing_rates",
    "DepolarizingChannel",
    "CounterRng",
    "sample_error",
    "SyndromeTable",
    "build_syndrome_table",
    "decode_error",
    "TrialResult",
    "run_trials",
    "CatalyticLedger",
    "catalytic_schedule",
    "example_code_path",
]
