"""Partial Steiner triple systems with a prescribed maximum partial
parallel class: constructions, an exact PPC solver, block-count bounds,
Room squares and one-factorizations, and sequencing search."""

from .bounds import (
    BoundRecord,
    beta_exact_known,
    beta_lower,
    beta_upper,
    bound_table,
    f_threshold,
    gap_bound,
    packing_number,
)
from .construct import (
    ConstructionWitness,
    check_sts27_triples,
    construct_bose,
    factor_join,
    factor_join_odd,
    factor_join_packed,
    max_packing,
    psts7_fixture,
)
from .core import (
    Block,
    Design,
    DegreeProfile,
    OutOfRange,
    PairViolation,
    ParseError,
    RepeatedPoint,
    ToolkitError,
    degree_profile,
    deserialize,
    read_ppc_comments,
    serialize,
    validate,
)
from .onefactor import (
    FactorSelection,
    OneFactorization,
    RoomSquare,
    room_from_text,
    room_square,
    room_to_text,
    round_robin,
    select_factors,
    validate_room,
)
from .oracle import BetaResult, brute_beta, brute_max_ppc
from .ppc import ExtensionProfile, PpcResult, extension_profile, greedy_ppc, solve_max_ppc
from .sequence import (
    SearchOutcome,
    Sequencing,
    check_sequencing,
    find_sequencing,
    sequencing_from_text,
    sequencing_to_text,
    sufficient_conditions,
)

__all__ = [
    "BetaResult",
    "Block",
    "BoundRecord",
    "ConstructionWitness",
    "Design",
    "DegreeProfile",
    "ExtensionProfile",
    "FactorSelection",
    "OneFactorization",
    "OutOfRange",
    "PairViolation",
    "ParseError",
    "PpcResult",
    "RepeatedPoint",
    "RoomSquare",
    "SearchOutcome",
    "Sequencing",
    "ToolkitError",
    "beta_exact_known",
    "beta_lower",
    "beta_upper",
    "bound_table",
    "brute_beta",
    "brute_max_ppc",
    "check_sequencing",
    "check_sts27_triples",
    "construct_bose",
    "degree_profile",
    "deserialize",
    "extension_profile",
    "f_threshold",
    "factor_join",
    "factor_join_odd",
    "factor_join_packed",
    "find_sequencing",
    "gap_bound",
    "greedy_ppc",
    "max_packing",
    "packing_number",
    "psts7_fixture",
    "read_ppc_comments",
    "room_from_text",
    "room_square",
    "room_to_text",
    "round_robin",
    "select_factors",
    "sequencing_from_text",
    "sequencing_to_text",
    "serialize",
    "solve_max_ppc",
    "sufficient_conditions",
    "validate",
    "validate_room",
]

__version__ = "0.1.0"
