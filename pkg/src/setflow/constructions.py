"""Family builders: central families, near-central swaps, lift-and-swap.

Central families are maximal intersecting families whose members all have
size at least n/2. For odd n there is exactly one; for even n each one is
an intersecting choice of one set from every complementary pair in the
middle layer, topped with everything larger. The near-central swap trades
a small dual-subfamily of the odd central family for an intersecting
middle-layer family. Lift-and-swap embeds a family into a one-larger
ground set and swaps one minimal member for its enlarged complement,
producing maximal intersecting families that are never empty-minimal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .families import Family, classify, family_dual, full_mask, submasks

MAX_CENTRAL_N = 6


@dataclass(frozen=True)
class MiddleLayerChoice:
    """An intersecting pick of one set from each complementary middle pair."""

    n: int
    selection: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n % 2 != 0:
            raise ValueError("middle-layer choices exist only for even ground sets")
        half = self.n // 2
        full = full_mask(self.n)
        seen_pairs = set()
        for m in self.selection:
            if m.bit_count() != half:
                raise ValueError(f"selection member {m} does not have size {half}")
            pair = min(m, m ^ full)
            if pair in seen_pairs:
                raise ValueError("selection takes both sides of a complementary pair")
            seen_pairs.add(pair)
        expected = math.comb(self.n, half) // 2
        if len(seen_pairs) != expected:
            raise ValueError(f"selection must cover all {expected} middle pairs")
        sel = self.selection
        for i, a in enumerate(sel):
            for b in sel[i + 1:]:
                if a & b == 0:
                    raise ValueError("selection is not pairwise intersecting")


def _middle_selections(n: int) -> list[tuple[int, ...]]:
    """Backtrack over middle pairs, keeping only intersecting selections."""
    half = n // 2
    full = full_mask(n)
    pairs = sorted(
        (m, m ^ full)
        for m in range(1 << n)
        if m.bit_count() == half and m < (m ^ full)
    )
    out: list[tuple[int, ...]] = []

    def rec(idx: int, chosen: list[int]) -> None:
        if idx == len(pairs):
            out.append(tuple(chosen))
            return
        for cand in pairs[idx]:
            if all(cand & c for c in chosen):
                chosen.append(cand)
                rec(idx + 1, chosen)
                chosen.pop()

    rec(0, [])
    return out


def central_families(n: int) -> list[Family]:
    """Every central maximal intersecting family on [n], 1 <= n <= 6."""
    if not isinstance(n, int) or not 1 <= n <= MAX_CENTRAL_N:
        raise ValueError(f"central family generation requires 1 <= n <= {MAX_CENTRAL_N}")
    if n % 2 == 1:
        threshold = (n + 1) // 2
        bits = 0
        for m in range(1 << n):
            if m.bit_count() >= threshold:
                bits |= 1 << m
        return [Family(n, bits)]
    half = n // 2
    upper = 0
    for m in range(1 << n):
        if m.bit_count() > half:
            upper |= 1 << m
    fams = []
    for sel in _middle_selections(n):
        MiddleLayerChoice(n, sel)  # revalidates the generator's output
        bits = upper
        for m in sel:
            bits |= 1 << m
        fams.append(Family(n, bits))
    fams.sort(key=lambda F: F.members)
    return fams


def near_central(F: Family, G: Family) -> Family:
    """Swap the dual of G out of a central family and G in.

    F must be the central family on an odd ground set [2m + 1]; G must be
    intersecting, live entirely in the size-m layer, and satisfy
    |G| <= C(2m, m) / 2. With G empty, F is returned unchanged.
    """
    n = F.n
    if n % 2 == 0:
        raise ValueError("near-central swap requires an odd ground set")
    if G.n != n:
        raise ValueError("modifier family must live on the same ground set")
    if not classify(F).central:
        raise ValueError("base family must be central")
    m = n // 2
    for mask in G.masks():
        if mask.bit_count() != m:
            raise ValueError(f"modifier members must have size {m}")
    if not classify(G).intersecting:
        raise ValueError("modifier family must be intersecting")
    bound = math.comb(2 * m, m) // 2
    if len(G) > bound:
        raise ValueError(f"modifier family has {len(G)} members, more than the bound {bound}")
    dual_bits = family_dual(G).members
    return Family(n, (F.members & ~dual_bits) | G.members)


def lift_swap(F: Family, A: int) -> Family:
    """Lift F to [n + 1] and swap the minimal member A for its complement.

    A must be a member of the maximal intersecting family F with no proper
    subset in F, and its size pair {|A|, n - |A|} must not be the balanced
    pair {floor(n/2), ceil(n/2)}. The result is maximal intersecting on
    [n + 1] and never empty-minimal.
    """
    n = F.n
    if not classify(F).maximal_intersecting:
        raise ValueError("input family must be maximal intersecting")
    if A not in F:
        raise ValueError("swap set must be a member of the family")
    for sub in submasks(A):
        if sub != A and sub in F:
            raise ValueError("swap set must be minimal (no proper subset in the family)")
    k = A.bit_count()
    if {k, n - k} == {n // 2, (n + 1) // 2}:
        raise ValueError(
            f"swap set size {k} is excluded: {{|A|, n - |A|}} must differ from "
            f"{{{n // 2}, {(n + 1) // 2}}}"
        )
    lifted = 0
    new_bit = 1 << n
    for m in F.masks():
        lifted |= 1 << m
        lifted |= 1 << (m | new_bit)
    lifted &= ~(1 << A)
    lifted |= 1 << (full_mask(n + 1) ^ A)
    return Family(n + 1, lifted)
