"""s-overlap cycles for permutations, strings and juggling sequences."""

from .core import (
    DomainError,
    JugglingSequence,
    MultisetSpec,
    ParameterError,
    ball_count,
    block_decompose,
    block_rotation_exponent,
    enumerate_juggling_sequences,
    enumerate_k_permutations,
    enumerate_multiset_permutations,
    enumerate_surjective_strings,
    permutation_sequence,
    reduce_digit,
    rotate,
    validate_juggling,
)
from .engine import (
    InfeasibleError,
    OverlapCycle,
    TransitionDigraph,
    VerificationReport,
    assemble_ocycle,
    build_digraph,
    construct_ocycle,
    euler_tour,
    existence_predicate,
    is_balanced,
    verify_ocycle,
    weak_components,
)

__version__ = "0.1.0"
