"""Cyclic Burrows-Wheeler transform on byte words, with exact rank-based
inversion, Lyndon word tooling, the word/permutation correspondence, and a
demonstration move-to-front/run-length pipeline."""

from .bwt import (
    CONTAINER_MAGIC,
    BwtContainer,
    Permutation,
    bwt_transform,
    invert_bwt,
    permutation_from_bwt,
    pi_of,
    sigma,
    sort_conjugates_fast,
    sort_conjugates_naive,
    suffix_array,
    word_from,
)
from .errors import (
    ContainerFormatError,
    EmptyWordError,
    Error,
    InvalidBwtError,
    LimitExceededError,
    NotLyndonError,
    NotPrimitiveError,
)
from .gessel_reutenauer import (
    DEFAULT_ENUMERATION_LIMIT,
    BijectionReport,
    TableRow,
    binary_special_case_check,
    descent_bound_check,
    descents,
    enumerate_lyndon_colyndon,
    gr_map,
    is_co_lyndon,
    rho,
    verify_theorem1,
)
from .lyndon import (
    LyndonFactorization,
    is_lyndon,
    lyndon_factorize,
    lyndon_words,
    word_type,
)
from .pipeline import (
    PIPELINE_MAGIC,
    compress,
    decompress,
    mtf_decode,
    mtf_encode,
    rle_decode,
    rle_encode,
)
from .words import (
    ParikhVector,
    Word,
    canonical_rotation,
    conjugates,
    ensure_primitive,
    is_primitive,
    least_rotation_index,
    parikh,
    primitive_root,
    rank,
    rotate,
)

__version__ = "0.1.0"

__all__ = [
    "BijectionReport",
    "BwtContainer",
    "CONTAINER_MAGIC",
    "ContainerFormatError",
    "DEFAULT_ENUMERATION_LIMIT",
    "EmptyWordError",
    "Error",
    "InvalidBwtError",
    "LimitExceededError",
    "LyndonFactorization",
    "NotLyndonError",
    "NotPrimitiveError",
    "PIPELINE_MAGIC",
    "ParikhVector",
    "Permutation",
    "TableRow",
    "Word",
    "binary_special_case_check",
    "bwt_transform",
    "canonical_rotation",
    "compress",
    "conjugates",
    "decompress",
    "descent_bound_check",
    "descents",
    "ensure_primitive",
    "enumerate_lyndon_colyndon",
    "gr_map",
    "invert_bwt",
    "is_co_lyndon",
    "is_lyndon",
    "is_primitive",
    "least_rotation_index",
    "lyndon_factorize",
    "lyndon_words",
    "mtf_decode",
    "mtf_encode",
    "parikh",
    "permutation_from_bwt",
    "pi_of",
    "primitive_root",
    "rank",
    "rho",
    "rle_decode",
    "rle_encode",
    "rotate",
    "sigma",
    "sort_conjugates_fast",
    "sort_conjugates_naive",
    "suffix_array",
    "verify_theorem1",
    "word_from",
    "word_type",
]
