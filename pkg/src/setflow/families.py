"""Set families over small ground sets, encoded with bitmasks.

Conventions used throughout the package:

* The ground set [n] = {1, ..., n} with 1 <= n <= 16. Element ``i`` occupies
  bit ``i - 1`` of a subset mask, so subsets of [n] are exactly the ints in
  ``range(2 ** n)``.
* A family stores its membership as one wide integer: bit ``A`` of
  ``Family.members`` is set exactly when the subset with mask ``A`` belongs
  to the family. Families compare equal iff their membership integers do.

Everything here is immutable and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_GROUND = 16


def _check_ground(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_GROUND:
        raise ValueError(f"ground set size must be an int in 1..{MAX_GROUND}, got {n!r}")


def full_mask(n: int) -> int:
    """Mask of the whole ground set [n]."""
    _check_ground(n)
    return (1 << n) - 1


def element_mask(a: int, n: int) -> int:
    """Mask of the singleton {a}."""
    _check_ground(n)
    if not isinstance(a, int) or isinstance(a, bool) or not 1 <= a <= n:
        raise ValueError(f"element must be in 1..{n}, got {a!r}")
    return 1 << (a - 1)


def mask_from_elements(elements: Iterable[int], n: int) -> int:
    m = 0
    for a in elements:
        m |= element_mask(a, n)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """1-indexed elements of a mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def set_complement(A: int, n: int) -> int:
    """Complement [n] \\ A. Involutive."""
    full = full_mask(n)
    if not 0 <= A <= full:
        raise ValueError(f"mask {A!r} has bits above the ground set [{n}]")
    return full ^ A


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in increasing numeric order."""
    s = 0
    while True:
        yield s
        if s == mask:
            return
        s = (s - mask) & mask


@dataclass(frozen=True)
class Family:
    """A family of subsets of [n], membership held in one integer bitset."""

    n: int
    members: int

    def __post_init__(self) -> None:
        _check_ground(self.n)
        if not isinstance(self.members, int) or self.members < 0:
            raise ValueError("membership bitset must be a nonnegative int")
        if self.members.bit_length() > (1 << self.n):
            raise ValueError(f"membership bitset has entries outside P([{self.n}])")

    @classmethod
    def empty(cls, n: int) -> "Family":
        return cls(n, 0)

    @classmethod
    def powerset(cls, n: int) -> "Family":
        _check_ground(n)
        return cls(n, (1 << (1 << n)) - 1)

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Family":
        _check_ground(n)
        full = (1 << n) - 1
        bits = 0
        for m in masks:
            if not isinstance(m, int) or not 0 <= m <= full:
                raise ValueError(f"mask {m!r} is not a subset of [{n}]")
            bits |= 1 << m
        return cls(n, bits)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "Family":
        return cls.from_masks(n, (mask_from_elements(s, n) for s in sets))

    def __contains__(self, mask: int) -> bool:
        return 0 <= mask < (1 << self.n) and (self.members >> mask) & 1 == 1

    def __len__(self) -> int:
        return self.members.bit_count()

    def __iter__(self) -> Iterator[int]:
        return self.masks()

    def masks(self) -> Iterator[int]:
        """Member masks in increasing numeric order."""
        bits = self.members
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def sets(self) -> tuple[tuple[int, ...], ...]:
        """Members as 1-indexed element tuples, sorted by (size, mask)."""
        ms = sorted(self.masks(), key=lambda m: (m.bit_count(), m))
        return tuple(elements_of(m) for m in ms)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.sets())
        return f"Family(n={self.n}, {{{body}}})"


def family_dual(F: Family) -> Family:
    """Setwise complement {A^c : A in F}. Involutive, size-preserving."""
    full = full_mask(F.n)
    bits = 0
    for m in F.masks():
        bits |= 1 << (m ^ full)
    return Family(F.n, bits)


@dataclass(frozen=True)
class FamilyFlags:
    intersecting: bool
    self_dual: bool
    subset_closed: bool
    superset_closed: bool
    maximal_intersecting: bool
    central: bool


def classify(F: Family) -> FamilyFlags:
    """Structural predicates of a family.

    ``intersecting`` quantifies over all ordered pairs including A = B, so a
    family containing the empty set is never intersecting.
    ``maximal_intersecting`` is the self-dual + superset-closed
    characterization; ``central`` additionally requires 2|A| >= n for every
    member.
    """
    n = F.n
    full = full_mask(n)
    ms = list(F.masks())

    intersecting = True
    if 0 in F:
        intersecting = False
    else:
        for i, a in enumerate(ms):
            for b in ms[i + 1:]:
                if a & b == 0:
                    intersecting = False
                    break
            if not intersecting:
                break

    self_dual = True
    for A in range(1 << n):
        Ac = A ^ full
        if A > Ac:
            continue
        if (A in F) == (Ac in F):
            self_dual = False
            break

    subset_closed = True
    for m in ms:
        rest = m
        while rest:
            low = rest & -rest
            if (m ^ low) not in F:
                subset_closed = False
                break
            rest ^= low
        if not subset_closed:
            break

    superset_closed = True
    for m in ms:
        rest = full & ~m
        while rest:
            low = rest & -rest
            if (m | low) not in F:
                superset_closed = False
                break
            rest ^= low
        if not superset_closed:
            break

    maximal = self_dual and superset_closed
    central = maximal and all(2 * m.bit_count() >= n for m in ms)
    return FamilyFlags(
        intersecting=intersecting,
        self_dual=self_dual,
        subset_closed=subset_closed,
        superset_closed=superset_closed,
        maximal_intersecting=maximal,
        central=central,
    )


def star(F: Family, a: int) -> Family:
    """Members of F containing the element a."""
    bit = element_mask(a, F.n)
    bits = 0
    for m in F.masks():
        if m & bit:
            bits |= 1 << m
    return Family(F.n, bits)


@dataclass(frozen=True)
class FamilyVector:
    """The +-1/0 embedding of a family, indexed by subset masks.

    entry[A] is +1 when A is in F but its complement is not, -1 in the
    mirrored case, 0 otherwise; antisymmetry entry[A] == -entry[A^c] is
    forced by the definition.
    """

    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_ground(self.n)
        if len(self.entries) != 1 << self.n:
            raise ValueError("entry vector must have length 2^n")
        if any(e not in (-1, 0, 1) for e in self.entries):
            raise ValueError("entries must lie in {-1, 0, +1}")

    def __getitem__(self, mask: int) -> int:
        return self.entries[mask]

    def dot(self, other: "FamilyVector") -> int:
        if self.n != other.n:
            raise ValueError("vectors live on different ground sets")
        return sum(x * y for x, y in zip(self.entries, other.entries))


def family_vector(F: Family) -> FamilyVector:
    full = full_mask(F.n)
    entries = []
    for A in range(1 << F.n):
        in_f = A in F
        comp_in_f = (A ^ full) in F
        entries.append((1 if in_f else 0) - (1 if comp_in_f else 0))
    return FamilyVector(F.n, tuple(entries))


def star_vector(n: int, a: int) -> FamilyVector:
    """Embedding of the full star {A : a in A}; entry +1 iff a in A."""
    bit = element_mask(a, n)
    return FamilyVector(n, tuple(1 if A & bit else -1 for A in range(1 << n)))


@dataclass(frozen=True)
class SubFamily:
    """A family living on a sub-universe, masks kept in ambient coordinates.

    ``universe`` is the ambient mask of allowed elements; every member is a
    submask of it. No re-compaction is performed.
    """

    universe: int
    members: frozenset[int]

    def __post_init__(self) -> None:
        for m in self.members:
            if m & ~self.universe:
                raise ValueError(f"member {m!r} leaves the universe {self.universe!r}")

    def __contains__(self, mask: int) -> bool:
        return mask in self.members

    def __len__(self) -> int:
        return len(self.members)

    def masks(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


def link(F: Family, A: int, B: int) -> SubFamily:
    """Trace of F on universe A over the base set B: {C <= A : B | C in F}.

    B must be disjoint from A (a subset of [n] \\ A).
    """
    full = full_mask(F.n)
    if not 0 <= A <= full or not 0 <= B <= full:
        raise ValueError("A and B must be subsets of the ground set")
    if A & B:
        raise ValueError("base set B must be disjoint from the universe A")
    found = frozenset(C for C in submasks(A) if (B | C) in F)
    return SubFamily(A, found)


def link_preimage(F: Family, a: int, target: Iterable[int]) -> SubFamily:
    """All B <= [n] \\ {a} whose link over {a} equals the target family.

    ``target`` is given as masks over the universe {a}, i.e. a subset of
    {0, mask(a)}. The result lives on the universe [n] \\ {a}.
    """
    bit = element_mask(a, F.n)
    rest = full_mask(F.n) ^ bit
    if isinstance(target, SubFamily):
        if target.universe != bit:
            raise ValueError("target must live on the universe {a}")
        want = target.members
    else:
        want = frozenset(target)
        for m in want:
            if m & ~bit:
                raise ValueError(f"target member {m!r} is not a subset of {{{a}}}")
    found = []
    for B in submasks(rest):
        if link(F, bit, B).members == want:
            found.append(B)
    return SubFamily(rest, frozenset(found))
