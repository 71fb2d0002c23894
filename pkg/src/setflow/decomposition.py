"""Empty-minimality and the star-coefficient decomposition of a family.

A maximal intersecting family is empty-minimal when, on its dual's path
sum, the edge at the empty set is a (non-strict) minimum along every axis.
For such families the embedding vector decomposes exactly as a convex
combination of star vectors plus nonnegative single-edge differences; all
coefficients are integers over the fixed denominator n!.

The builder derives coefficients from the dual path sum; the verifier
checks the algebraic identity from scratch and shares no flow computation
with the builder, so a bug in either cannot mask the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .families import (
    Family,
    classify,
    family_dual,
    family_vector,
    full_mask,
    star_vector,
)
from .flows import AxisFlow, edge_set, pathsum_formula


class NotEmptyMinimalError(ValueError):
    """Raised when a decomposition is requested for a non-empty-minimal family."""

    def __init__(self, witness: tuple[int, int]):
        a, A = witness
        super().__init__(
            f"family is not empty-minimal: axis {a} attains a smaller value "
            f"on the edge at base set mask {A} than at the empty set"
        )
        self.witness = witness


def _require_maximal_intersecting(F: Family) -> None:
    if not classify(F).maximal_intersecting:
        raise ValueError("input family must be maximal intersecting (self-dual and superset-closed)")


def _dual_flow(F: Family) -> AxisFlow:
    return pathsum_formula(family_dual(F))


def _minimality_witness(L: AxisFlow) -> tuple[int, int] | None:
    """First (axis, base set) whose edge value undercuts the empty-set edge."""
    for a in range(1, L.n + 1):
        row = L.axes[a - 1]
        base = row[0]  # edge_rank(0, a) == 0
        for r, v in enumerate(row):
            if v < base:
                return (a, edge_set(r, a))
    return None


def is_empty_minimal(F: Family) -> tuple[bool, tuple[int, int] | None]:
    """Decide empty-minimality of a maximal intersecting family.

    Returns (True, None) or (False, (axis, base set mask)) with the first
    witness edge in axis-then-mask order. Ties with the empty-set edge are
    allowed (the minimum is non-strict).
    """
    _require_maximal_intersecting(F)
    return _verdict(_dual_flow(F))


def _verdict(L: AxisFlow) -> tuple[bool, tuple[int, int] | None]:
    w = _minimality_witness(L)
    return (w is None, w)


@dataclass(frozen=True)
class Decomposition:
    """Star coefficients and edge slacks, integer numerators over n!.

    ``c_num[a - 1]`` is the numerator of the weight of the full star at a;
    ``lambda_num`` maps an oriented edge (A, A | {a}) to the numerator of
    its slack. Only nonzero slacks are materialized.
    """

    n: int
    c_num: tuple[int, ...]
    lambda_num: Mapping[tuple[int, int], int] = field(default_factory=dict)

    @property
    def denominator(self) -> int:
        return math.factorial(self.n)


def build_decomposition(F: Family) -> Decomposition:
    """Construct the decomposition of an empty-minimal family.

    c_num[a] is the dual path sum on the edge at the empty set; each edge's
    slack is its excess over that axis minimum. Rejects non-empty-minimal
    input, carrying the witness edge.
    """
    _require_maximal_intersecting(F)
    L = _dual_flow(F)
    ok, witness = _verdict(L)
    if not ok:
        raise NotEmptyMinimalError(witness)
    c_num = tuple(L.axes[a - 1][0] for a in range(1, L.n + 1))
    lam: dict[tuple[int, int], int] = {}
    for a in range(1, L.n + 1):
        base = L.axes[a - 1][0]
        bit = 1 << (a - 1)
        for r, v in enumerate(L.axes[a - 1]):
            if v != base:
                A = edge_set(r, a)
                lam[(A, A | bit)] = v - base
    if sum(c_num) != math.factorial(L.n) or any(v < 0 for v in c_num):
        raise AssertionError("star coefficients violate the conservation total")
    return Decomposition(L.n, c_num, lam)


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_decomposition(F: Family, D: Decomposition) -> VerifyResult:
    """Check the decomposition identity in exact integers scaled by n!.

    Verifies the coefficient-sum and nonnegativity constraints, the edge
    shape of every slack key, and, at every vertex C, that n! * V_F[C]
    equals the star contribution plus slack inflow minus slack outflow.
    Nothing is recomputed from any path sum.
    """
    if F.n != D.n:
        raise ValueError("family and decomposition live on different ground sets")
    n = F.n
    nfact = math.factorial(n)
    if len(D.c_num) != n:
        return VerifyResult(False, "expected one star coefficient per axis")
    for a, c in enumerate(D.c_num, start=1):
        if c < 0:
            return VerifyResult(False, f"star coefficient for axis {a} is negative")
    if sum(D.c_num) != nfact:
        return VerifyResult(False, f"star coefficients sum to {sum(D.c_num)}, expected {nfact}")

    full = full_mask(n)
    slack_in_out = [0] * (1 << n)
    for (A, B), num in D.lambda_num.items():
        step = B ^ A
        if not (0 <= A <= full and 0 <= B <= full and B == A | step and A & step == 0 and step.bit_count() == 1):
            return VerifyResult(False, f"slack key ({A}, {B}) is not an oriented single-element edge")
        if num < 0:
            return VerifyResult(False, f"slack on edge ({A}, {B}) is negative")
        slack_in_out[B] += num
        slack_in_out[A] -= num

    vF = family_vector(F)
    csum = sum(D.c_num)
    for C in range(1 << n):
        star_part = 0
        for a in range(1, n + 1):
            if C & (1 << (a - 1)):
                star_part += D.c_num[a - 1]
        star_part = 2 * star_part - csum
        if nfact * vF[C] != star_part + slack_in_out[C]:
            return VerifyResult(False, f"identity fails at vertex mask {C}")
    return VerifyResult(True)


@dataclass(frozen=True)
class ChvatalReport:
    dot: int
    identity_ok: bool
    star_dots: tuple[int, ...]
    bound_ok: bool


def chvatal_check(F: Family, G: Family) -> ChvatalReport:
    """Dot-product comparison of a maximal intersecting family with a downset.

    Computes dot = V_F . V_G, checks the counting identity
    dot == 4|F & G| - 2|G|, and checks dot against the best full-star dot
    product. F must be maximal intersecting and G subset-closed.
    """
    if F.n != G.n:
        raise ValueError("families live on different ground sets")
    _require_maximal_intersecting(F)
    if not classify(G).subset_closed:
        raise ValueError("comparison family must be subset-closed")
    vF = family_vector(F)
    vG = family_vector(G)
    dot = vF.dot(vG)
    inter = (F.members & G.members).bit_count()
    identity_ok = dot == 4 * inter - 2 * len(G)
    star_dots = tuple(star_vector(F.n, a).dot(vG) for a in range(1, F.n + 1))
    return ChvatalReport(
        dot=dot,
        identity_ok=identity_ok,
        star_dots=star_dots,
        bound_ok=dot <= max(star_dots),
    )
