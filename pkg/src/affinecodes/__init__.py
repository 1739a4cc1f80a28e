"""Affine permutations, cyclic decompositions, codes, and bounded-partition sums."""

from .codes import (
    DECREASING,
    INCREASING,
    ZERO,
    CyclicDecomposition,
    IdentityInput,
    NotContained,
    NotMaximal,
    affine_code,
    canonical_decomposition,
    code_descents,
    code_of,
    code_to_permutation,
    is_horizontal_strip,
    is_vertical_strip,
    k_conjugate_perm,
    mirror_code,
    ld,
    li,
    max_right_set,
    rd,
    ri,
    two_row_maximize,
)
from .cyclic import (
    ImproperSet,
    NotConnected,
    SizeTooSmall,
    UdNormalForm,
    WouldBeEmpty,
    WouldBeImproper,
    connected_components,
    d_element,
    d_word,
    interval_adjust,
    is_i_dominant_ud,
    normalize_ud,
    u_element,
    u_word,
)
from .insertion import (
    BoundExceeded,
    DescentViolation,
    InsertionTrace,
    NotReduced,
    NotStandard,
    RecordingTableau,
    count_reduced_words,
    enumerate_reduced_words,
    insert,
    insert_word,
    reverse_insert,
)
from .nilcox import (
    IndexTooLarge,
    NilCoxSum,
    NotFound,
    NotUnique,
    dominant_summand,
    e,
    e_lambda,
    h,
    h_lambda,
    is_left_compatible,
    k_schur,
    split_groupings,
    verify_split_product,
    weak_strip,
    weak_strips,
)
from .permutations import (
    AffinePermutation,
    BadSum,
    RankMismatch,
    RepeatedResidueClass,
    WrongLength,
    is_reduced,
)
from .shapes import (
    NotACore,
    SizeMismatch,
    conjugate,
    dominates,
    from_core,
    grassmannian_perm,
    grassmannian_word,
    hook,
    k_boundary,
    k_conjugate_partition,
    split_components,
    split_row_column_bound_check,
    to_core,
)

__version__ = "0.1.0"

__all__ = [
    "AffinePermutation",
    "BadSum",
    "BoundExceeded",
    "CyclicDecomposition",
    "DECREASING",
    "DescentViolation",
    "INCREASING",
    "IdentityInput",
    "ImproperSet",
    "IndexTooLarge",
    "InsertionTrace",
    "NilCoxSum",
    "NotACore",
    "NotConnected",
    "NotContained",
    "NotFound",
    "NotMaximal",
    "NotReduced",
    "NotStandard",
    "NotUnique",
    "RankMismatch",
    "RecordingTableau",
    "RepeatedResidueClass",
    "SizeMismatch",
    "SizeTooSmall",
    "UdNormalForm",
    "WouldBeEmpty",
    "WouldBeImproper",
    "WrongLength",
    "ZERO",
    "affine_code",
    "canonical_decomposition",
    "code_descents",
    "code_of",
    "code_to_permutation",
    "conjugate",
    "connected_components",
    "count_reduced_words",
    "d_element",
    "d_word",
    "dominant_summand",
    "dominates",
    "e",
    "e_lambda",
    "enumerate_reduced_words",
    "from_core",
    "grassmannian_perm",
    "grassmannian_word",
    "h",
    "h_lambda",
    "hook",
    "insert",
    "insert_word",
    "interval_adjust",
    "is_horizontal_strip",
    "is_i_dominant_ud",
    "is_left_compatible",
    "is_reduced",
    "is_vertical_strip",
    "k_boundary",
    "k_conjugate_partition",
    "k_conjugate_perm",
    "mirror_code",
    "k_schur",
    "ld",
    "li",
    "max_right_set",
    "normalize_ud",
    "rd",
    "reverse_insert",
    "ri",
    "split_components",
    "split_groupings",
    "split_row_column_bound_check",
    "to_core",
    "two_row_maximize",
    "u_element",
    "u_word",
    "verify_split_product",
    "weak_strip",
    "weak_strips",
]
