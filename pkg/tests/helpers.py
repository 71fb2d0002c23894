"""Shared builders and independent brute-force oracles for the tests.

The oracles here deliberately avoid the library's generators and closed
formulas: maximality is decided by trying to extend the family, and the
reference family list comes from filtering every membership bitset.
"""

from setflow import Family, classify, elements_of


def fam(n, *sets):
    return Family.from_sets(n, sets)


def majority(n):
    """All subsets of odd [n] of size > n/2."""
    assert n % 2 == 1
    bits = 0
    for m in range(1 << n):
        if 2 * m.bit_count() > n:
            bits |= 1 << m
    return Family(n, bits)


def star_powerset(n, a):
    bit = 1 << (a - 1)
    bits = 0
    for m in range(1 << n):
        if m & bit:
            bits |= 1 << m
    return Family(n, bits)


def all_families(n):
    for f in range(1 << (1 << n)):
        yield Family(n, f)


def pairwise_intersecting(masks):
    # the quantifier includes A = B, so the empty set poisons a family
    if 0 in masks:
        return False
    return all(a & b for i, a in enumerate(masks) for b in masks[i:])


def oracle_inclusion_maximal_intersecting(F):
    """Intersecting, and no absent subset can be added keeping it so."""
    ms = list(F.masks())
    if not pairwise_intersecting(ms):
        return False
    for cand in range(1 << F.n):
        if cand not in F and pairwise_intersecting(ms + [cand]):
            return False
    return True


def brute_force_maximal_intersecting(n):
    """Reference enumeration: filter every membership bitset through classify."""
    return [F for F in all_families(n) if classify(F).maximal_intersecting]


def relabel(F, perm):
    """Image of a family under the relabeling i -> perm[i - 1]."""
    bits = 0
    for m in F.masks():
        img = 0
        for i in elements_of(m):
            img |= 1 << (perm[i - 1] - 1)
        bits |= 1 << img
    return Family(F.n, bits)
