"""Exhaustive family generators: maximal intersecting families and downsets.

Maximal intersecting families are generated as the solutions of the
self-dual + superset-closed constraint system, by backtracking over the
table of complementary subset pairs with unit propagation: putting A into
the family forces every superset of A in and (through the pairing) every
subset of A's complement out. Downsets reuse the same propagation idea in
the subset direction. Output order is always ascending membership bitset.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .families import Family, full_mask

_UNDEC, _IN, _OUT = 0, 1, 2

MAX_MAXIMAL_N = 7
MAX_DOWNSET_N = 5
MAX_CANONICAL_N = 7


@dataclass(frozen=True)
class ComplementaryPairTable:
    """All complementary subset pairs (A, A^c), A the smaller mask.

    Pairs are ordered by decreasing |A| then by mask, which makes the
    backtracking branch on the most balanced pairs first.
    """

    n: int
    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def build(cls, n: int) -> "ComplementaryPairTable":
        full = full_mask(n)
        pairs = [(A, A ^ full) for A in range(1 << n) if A < (A ^ full)]
        pairs.sort(key=lambda p: (-p[0].bit_count(), p[0]))
        return cls(n, tuple(pairs))

    def __post_init__(self) -> None:
        full = full_mask(self.n)
        seen = 0
        for small, big in self.pairs:
            if small | big != full or small & big != 0:
                raise ValueError(f"({small}, {big}) is not a complementary pair on [{self.n}]")
            if seen & (1 << small) or seen & (1 << big):
                raise ValueError("pair table covers a subset twice")
            seen |= (1 << small) | (1 << big)
        if seen != (1 << (1 << self.n)) - 1:
            raise ValueError("pair table does not cover the whole power set")


def _force_in(state: bytearray, x: int, full: int) -> bool:
    """Mark x and all its supersets as members; pair partners go out.

    Membership states of a mask and its complement are always written
    together, so a conflict surfaces as hitting an _OUT mark. Returns False
    on conflict (the state is then garbage and must be discarded).
    """
    stack = [x]
    while stack:
        y = stack.pop()
        s = state[y]
        if s == _IN:
            continue
        if s == _OUT:
            return False
        state[y] = _IN
        state[y ^ full] = _OUT
        missing = full & ~y
        while missing:
            low = missing & -missing
            stack.append(y | low)
            missing ^= low
    return True


def _family_from_state(n: int, state: bytearray) -> Family:
    bits = 0
    for m in range(1 << n):
        if state[m] == _IN:
            bits |= 1 << m
    return Family(n, bits)


def _backtrack_maximal(n: int, pairs: tuple[tuple[int, int], ...]) -> list[Family]:
    full = full_mask(n)
    out: list[Family] = []

    def rec(state: bytearray, idx: int) -> None:
        while idx < len(pairs) and state[pairs[idx][0]] != _UNDEC:
            idx += 1
        if idx == len(pairs):
            out.append(_family_from_state(n, state))
            return
        for choice in pairs[idx]:
            branch = bytearray(state)
            if _force_in(branch, choice, full):
                rec(branch, idx + 1)

    rec(bytearray(1 << n), 0)
    out.sort(key=lambda F: F.members)
    return out


def enumerate_maximal_intersecting(n: int) -> list[Family]:
    """All maximal intersecting families on [n], ascending membership bitset.

    Requires 1 <= n <= 7; counts grow as 1, 2, 4, 12, 81, 2646, 1422564.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_MAXIMAL_N:
        raise ValueError(f"maximal-intersecting enumeration requires 1 <= n <= {MAX_MAXIMAL_N}")
    return _backtrack_maximal(n, ComplementaryPairTable.build(n).pairs)


def enumerate_downsets(n: int) -> list[Family]:
    """All subset-closed families on [n] (the empty family included).

    Requires 1 <= n <= 5; counts are 3, 6, 20, 168, 7581.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_DOWNSET_N:
        raise ValueError(f"downset enumeration requires 1 <= n <= {MAX_DOWNSET_N}")
    order = sorted(range(1 << n), key=lambda m: (-m.bit_count(), m))
    out: list[Family] = []

    def force_down(state: bytearray, x: int) -> None:
        stack = [x]
        while stack:
            y = stack.pop()
            if state[y] == _IN:
                continue
            state[y] = _IN
            rest = y
            while rest:
                low = rest & -rest
                stack.append(y ^ low)
                rest ^= low

    def rec(state: bytearray, idx: int) -> None:
        while idx < len(order) and state[order[idx]] != _UNDEC:
            idx += 1
        if idx == len(order):
            out.append(_family_from_state(n, state))
            return
        m = order[idx]
        # larger sets are decided first, so excluding m constrains nothing below
        branch = bytearray(state)
        branch[m] = _OUT
        rec(branch, idx + 1)
        branch = bytearray(state)
        force_down(branch, m)
        rec(branch, idx + 1)

    rec(bytearray(1 << n), 0)
    out.sort(key=lambda F: F.members)
    return out


@lru_cache(maxsize=None)
def _permutation_mask_tables(n: int) -> tuple[tuple[int, ...], ...]:
    """For every relabeling of [n], the induced mask map A -> pi(A)."""
    tables = []
    for perm in itertools.permutations(range(n)):
        t = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            t[m] = t[m ^ low] | (1 << perm[low.bit_length() - 1])
        tables.append(tuple(t))
    return tuple(tables)


def canonicalize(F: Family) -> Family:
    """Least membership bitset over all relabelings of the ground set.

    Two families canonicalize identically iff one is a relabeling of the
    other. Requires n <= 7.
    """
    if F.n > MAX_CANONICAL_N:
        raise ValueError(f"canonicalization requires n <= {MAX_CANONICAL_N}")
    ms = list(F.masks())
    best = F.members
    for table in _permutation_mask_tables(F.n):
        bits = 0
        for m in ms:
            bits |= 1 << table[m]
        if bits < best:
            best = bits
    return Family(F.n, best)
