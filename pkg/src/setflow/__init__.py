"""Exact-arithmetic toolkit for intersecting set families on small ground sets.

Enumerates maximal intersecting families, computes the permutation path
sum over hypercube edges by two independent routes, decides empty-
minimality, and builds and verifies the star-coefficient decomposition of
a family's embedding vector. All arithmetic is integer-exact.
"""

from .constructions import MiddleLayerChoice, central_families, lift_swap, near_central
from .decomposition import (
    ChvatalReport,
    Decomposition,
    NotEmptyMinimalError,
    VerifyResult,
    build_decomposition,
    chvatal_check,
    is_empty_minimal,
    verify_decomposition,
)
from .enumeration import (
    ComplementaryPairTable,
    canonicalize,
    enumerate_downsets,
    enumerate_maximal_intersecting,
)
from .families import (
    Family,
    FamilyFlags,
    FamilyVector,
    SubFamily,
    classify,
    element_mask,
    elements_of,
    family_dual,
    family_vector,
    full_mask,
    link,
    link_preimage,
    mask_from_elements,
    set_complement,
    star,
    star_vector,
    submasks,
)
from .flows import (
    AxisFlow,
    PathTrace,
    Shift,
    ShiftKind,
    TraceStep,
    apply_shift,
    divergence,
    edge_rank,
    edge_set,
    pathsum_bruteforce,
    pathsum_formula,
    pathsum_formula_edge,
    shift_trace,
)
from .serialization import (
    FamilyFormatError,
    axisflow_to_json,
    decomposition_to_json,
    family_to_json,
    parse_axisflow,
    parse_decomposition,
    parse_family,
)
from .survey import SurveyRecord, run_survey

__all__ = [
    "AxisFlow",
    "ChvatalReport",
    "ComplementaryPairTable",
    "Decomposition",
    "Family",
    "FamilyFlags",
    "FamilyFormatError",
    "FamilyVector",
    "MiddleLayerChoice",
    "NotEmptyMinimalError",
    "PathTrace",
    "Shift",
    "ShiftKind",
    "SubFamily",
    "SurveyRecord",
    "TraceStep",
    "VerifyResult",
    "apply_shift",
    "axisflow_to_json",
    "build_decomposition",
    "canonicalize",
    "central_families",
    "chvatal_check",
    "classify",
    "decomposition_to_json",
    "divergence",
    "edge_rank",
    "edge_set",
    "element_mask",
    "elements_of",
    "enumerate_downsets",
    "enumerate_maximal_intersecting",
    "family_dual",
    "family_to_json",
    "family_vector",
    "full_mask",
    "is_empty_minimal",
    "lift_swap",
    "link",
    "link_preimage",
    "mask_from_elements",
    "near_central",
    "parse_axisflow",
    "parse_decomposition",
    "parse_family",
    "pathsum_bruteforce",
    "pathsum_formula",
    "pathsum_formula_edge",
    "run_survey",
    "set_complement",
    "shift_trace",
    "star",
    "star_vector",
    "submasks",
    "verify_decomposition",
]
