"""Exact character theory of symmetric groups at desk scale.

The package computes irreducible character values of S_n three independent
ways (Murnaghan-Nakayama recursion, near-hook closed forms, induced-character
recursions), multiplies conjugacy classes in the class algebra with an
enumeration oracle as a cross-check, and classifies the pairs of classes on
which every non-linear character vanishes.
"""

from .characters import (
    CharTable,
    CharTableCacheError,
    RimHookRemoval,
    border_strip_removals,
    character_table,
    degree,
    hook_length,
    load_table,
    mn_char,
    save_table,
)
from .class_algebra import (
    BruteForceLimitError,
    class_representative,
    conjugacy_class,
    cycle_type,
    deterministic_triples,
    merge_lemma_check,
    predicted_coefficient,
    structure_constant,
    structure_constant_bruteforce,
)
from .formulas import (
    NearHookShape,
    hook_char_recursive,
    induced_value,
    near_hook_value,
    shape_partition,
    two_row_char_recursive,
)
from .partitions import (
    DominanceResult,
    Partition,
    centralizer_order,
    class_size,
    conjugate,
    dominance_compare,
    format_partition,
    is_hook,
    merge_parts,
    multiplicities,
    parse_partition,
    partitions_of,
    sign_value,
)
from .vanishing import (
    CoveringPairReport,
    TheoremCheck,
    covers_all_nonlinear,
    find_covering_pairs,
    k_of_sn,
    vanishing_set,
    verify_main_theorem,
)

__version__ = "0.1.0"

__all__ = [
    "BruteForceLimitError",
    "CharTable",
    "CharTableCacheError",
    "CoveringPairReport",
    "DominanceResult",
    "NearHookShape",
    "Partition",
    "RimHookRemoval",
    "TheoremCheck",
    "border_strip_removals",
    "centralizer_order",
    "character_table",
    "class_representative",
    "class_size",
    "conjugacy_class",
    "conjugate",
    "covers_all_nonlinear",
    "cycle_type",
    "degree",
    "deterministic_triples",
    "dominance_compare",
    "find_covering_pairs",
    "format_partition",
    "hook_char_recursive",
    "hook_length",
    "induced_value",
    "is_hook",
    "k_of_sn",
    "load_table",
    "merge_lemma_check",
    "merge_parts",
    "mn_char",
    "multiplicities",
    "near_hook_value",
    "parse_partition",
    "partitions_of",
    "predicted_coefficient",
    "save_table",
    "shape_partition",
    "sign_value",
    "structure_constant",
    "structure_constant_bruteforce",
    "two_row_char_recursive",
    "vanishing_set",
    "verify_main_theorem",
]
