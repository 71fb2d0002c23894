"""Shift operators and the path sum over the hypercube edge graph.

Every member of a family, driven by toggle shifts in the order given by a
permutation of [n], walks an edge path from itself to its complement. The
path sum accumulates those walks over all n! permutations into one signed
integer per oriented edge. Edge values are stored up-positive: a move
toward the larger set adds +1, a move toward the smaller set adds -1.

Two independent evaluations are provided: direct enumeration of all
permutations (``pathsum_bruteforce``) and the closed factorial-weight
formula driven by link preimages (``pathsum_formula``). They agree on
every edge for every family; the test suite holds them to that.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Mapping

from .families import Family, element_mask, full_mask, link_preimage

_FACT = tuple(math.factorial(k) for k in range(17))

MAX_BRUTEFORCE_N = 6


class ShiftKind(enum.Enum):
    """The two injective set movers used to build paths."""

    TOGGLE = "toggle"  # XOR the axis element into every member
    FILL = "fill"      # add the axis element when the enlarged set is absent


@dataclass(frozen=True)
class Shift:
    kind: ShiftKind
    axis: int


def apply_shift(shift: Shift, F: Family) -> tuple[Family, dict[int, int]]:
    """Apply one shift to every member; returns (image family, move map).

    The move map sends each member mask to its image; fixed points map to
    themselves. Both shift kinds are injective on any family.
    """
    bit = element_mask(shift.axis, F.n)
    moves: dict[int, int] = {}
    if shift.kind is ShiftKind.TOGGLE:
        for m in F.masks():
            moves[m] = m ^ bit
    else:
        for m in F.masks():
            up = m | bit
            moves[m] = up if up not in F else m
    image = Family.from_masks(F.n, moves.values())
    if len(image) != len(F):
        raise AssertionError("shift move map failed to be injective")
    return image, moves


@dataclass(frozen=True)
class TraceStep:
    before: Family
    moves: Mapping[int, int]
    after: Family


@dataclass(frozen=True)
class PathTrace:
    """Record of a prefix of shifts applied along a permutation."""

    kind: ShiftKind
    order: tuple[int, ...]
    start: Family
    steps: tuple[TraceStep, ...]

    @property
    def end_family(self) -> Family:
        return self.steps[-1].after if self.steps else self.start


def shift_trace(kind: ShiftKind, order: tuple[int, ...], F: Family, k: int | None = None) -> PathTrace:
    """Apply the first k shifts of the given kind along ``order``.

    ``order`` must be a permutation of [n]; k defaults to n.
    """
    n = F.n
    if sorted(order) != list(range(1, n + 1)):
        raise ValueError(f"order {order!r} is not a permutation of [{n}]")
    if k is None:
        k = n
    if not 0 <= k <= n:
        raise ValueError(f"prefix length must be in 0..{n}, got {k!r}")
    steps = []
    cur = F
    for i in range(k):
        after, moves = apply_shift(Shift(kind, order[i]), cur)
        steps.append(TraceStep(cur, moves, after))
        cur = after
    return PathTrace(kind=kind, order=tuple(order), start=F, steps=tuple(steps))


def edge_rank(A: int, a: int) -> int:
    """Compact index of A among the subsets of [n] \\ {a}, ascending by mask."""
    b = a - 1
    low = A & ((1 << b) - 1)
    return low | ((A >> (b + 1)) << b)


def edge_set(rank: int, a: int) -> int:
    """Inverse of edge_rank: the rank-th subset of [n] \\ {a}."""
    b = a - 1
    low = rank & ((1 << b) - 1)
    return low | ((rank >> b) << (b + 1))


@dataclass(frozen=True)
class AxisFlow:
    """Signed integer flow on oriented hypercube edges, grouped per axis.

    ``axes[a - 1][edge_rank(A, a)]`` is the value on the oriented edge
    (A, A | {a}); positive means net up-crossings.
    """

    n: int
    axes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.axes) != self.n:
            raise ValueError("one value row per axis required")
        half = 1 << (self.n - 1)
        bound = _FACT[self.n] << self.n
        for row in self.axes:
            if len(row) != half:
                raise ValueError("axis rows must have length 2^(n-1)")
            for v in row:
                if abs(v) > bound:
                    raise ValueError(f"edge value {v} exceeds the n!*2^n sanity bound")

    def value(self, a: int, A: int) -> int:
        """Flow on the oriented edge (A, A | {a}); requires a not in A."""
        bit = element_mask(a, self.n)
        if A & bit:
            raise ValueError(f"edge base set must not contain the axis element {a}")
        if A & ~(full_mask(self.n)):
            raise ValueError("edge base set has bits above the ground set")
        return self.axes[a - 1][edge_rank(A, a)]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield (axis, base set A, value) over all oriented edges."""
        for a in range(1, self.n + 1):
            for r, v in enumerate(self.axes[a - 1]):
                yield a, edge_set(r, a), v


def pathsum_bruteforce(F: Family) -> AxisFlow:
    """Path sum by enumerating all n! permutations (n <= 6).

    For each permutation, every member is driven by toggle shifts through
    all n axes; each up-move adds +1 and each down-move adds -1 on the
    oriented edge it crosses.
    """
    n = F.n
    if n > MAX_BRUTEFORCE_N:
        raise ValueError(f"brute-force path sum requires n <= {MAX_BRUTEFORCE_N}")
    acc = [[0] * (1 << (n - 1)) for _ in range(n)]
    members0 = list(F.masks())
    for order in permutations(range(1, n + 1)):
        cur = members0
        for a in order:
            bit = 1 << (a - 1)
            b = a - 1
            lowm = bit - 1
            row = acc[b]
            nxt = []
            for m in cur:
                if m & bit:
                    t = m ^ bit
                    row[(t & lowm) | ((t >> (b + 1)) << b)] -= 1
                else:
                    t = m | bit
                    row[(m & lowm) | ((m >> (b + 1)) << b)] += 1
                nxt.append(t)
            cur = nxt
    return AxisFlow(n, tuple(tuple(r) for r in acc))


def _axis_preimages(F: Family, a: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Link preimages of the two decisive one-point links over {a}.

    Returns (sets whose link is exactly {empty set}, sets whose link is
    exactly {{a}}), both sorted, masks in ambient coordinates.
    """
    bit = element_mask(a, F.n)
    plus = link_preimage(F, a, (0,))
    minus = link_preimage(F, a, (bit,))
    return plus.masks(), minus.masks()


def pathsum_formula_edge(F: Family, a: int, A: int) -> int:
    """Closed form for the path-sum value on the oriented edge (A, A | {a}).

    Each preimage member B contributes |A xor B|! * (n - 1 - |A xor B|)!,
    positively from the {empty set} preimage and negatively from the {{a}}
    preimage (the latter vanishes for subset-closed families).
    """
    n = F.n
    bit = element_mask(a, n)
    if A & bit:
        raise ValueError(f"edge base set must not contain the axis element {a}")
    if not 0 <= A <= full_mask(n):
        raise ValueError("edge base set has bits above the ground set")
    plus, minus = _axis_preimages(F, a)
    total = 0
    for B in plus:
        k = (A ^ B).bit_count()
        total += _FACT[k] * _FACT[n - 1 - k]
    for B in minus:
        k = (A ^ B).bit_count()
        total -= _FACT[k] * _FACT[n - 1 - k]
    return total


def pathsum_formula(F: Family) -> AxisFlow:
    """Path sum of a family via the factorial-weight formula (n <= 16)."""
    n = F.n
    half = 1 << (n - 1)
    axes = []
    for a in range(1, n + 1):
        plus, minus = _axis_preimages(F, a)
        row = []
        for r in range(half):
            A = edge_set(r, a)
            total = 0
            for B in plus:
                k = (A ^ B).bit_count()
                total += _FACT[k] * _FACT[n - 1 - k]
            for B in minus:
                k = (A ^ B).bit_count()
                total -= _FACT[k] * _FACT[n - 1 - k]
            row.append(total)
        axes.append(tuple(row))
    return AxisFlow(n, tuple(axes))


def divergence(L: AxisFlow, A: int) -> int:
    """Net outflow at vertex A under the up-positive orientation.

    Sum of values on edges leaving A upward minus values on edges entering
    A from below.
    """
    if not 0 <= A <= full_mask(L.n):
        raise ValueError("vertex mask has bits above the ground set")
    total = 0
    for a in range(1, L.n + 1):
        bit = 1 << (a - 1)
        if A & bit:
            total -= L.axes[a - 1][edge_rank(A ^ bit, a)]
        else:
            total += L.axes[a - 1][edge_rank(A, a)]
    return total
