"""Exhaustive invariant suites, shared by the CLI `verify` command and tests.

Each suite checks one structural identity over a complete small-n corpus
and reports the first counterexample on failure. All checks are exact
integer comparisons; there are no tolerances anywhere.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import permutations

from .decomposition import build_decomposition, is_empty_minimal, verify_decomposition
from .enumeration import enumerate_downsets, enumerate_maximal_intersecting
from .families import Family, family_dual, family_vector, full_mask, star_vector
from .flows import ShiftKind, divergence, pathsum_bruteforce, pathsum_formula, shift_trace
from .serialization import family_to_json

RANDOM_FAMILY_SEED = 0x5EED
RANDOM_FAMILY_COUNT = 100


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    n: int
    checked: int
    passed: bool
    detail: str | None = None


def random_families(n: int, count: int = RANDOM_FAMILY_COUNT, seed: int = RANDOM_FAMILY_SEED) -> list[Family]:
    """Deterministic pseudo-random families: each subset kept with odds 1/2."""
    rng = random.Random(seed * 1000003 + n)
    return [Family(n, rng.getrandbits(1 << n)) for _ in range(count)]


def _flow_corpus(n: int) -> list[Family]:
    """Families the path-sum oracle suites run over.

    All downsets (n <= 4; there are too many at n = 5), the duals of every
    maximal intersecting family, and seeded random families.
    """
    corpus: list[Family] = []
    if n <= 4:
        corpus.extend(enumerate_downsets(n))
    corpus.extend(family_dual(F) for F in enumerate_maximal_intersecting(n))
    corpus.extend(random_families(n))
    return corpus


def suite_formula(n: int) -> SuiteResult:
    """pathsum_formula against pathsum_bruteforce on every oriented edge."""
    if not 1 <= n <= 5:
        raise ValueError("formula suite runs for 1 <= n <= 5")
    checked = 0
    for F in _flow_corpus(n):
        if pathsum_formula(F) != pathsum_bruteforce(F):
            return SuiteResult("formula", n, checked, False, f"mismatch on {family_to_json(F)}")
        checked += 1
    return SuiteResult("formula", n, checked, True)


def suite_conservation(n: int) -> SuiteResult:
    """Divergence of the path sum at every vertex equals n! * (1_start - 1_end).

    Driving every member across all axes carries F onto its setwise
    complement image [n] xor F, so per permutation each vertex sources +1
    if it starts occupied and sinks -1 if it ends occupied.
    """
    if not 1 <= n <= 5:
        raise ValueError("conservation suite runs for 1 <= n <= 5")
    nfact = math.factorial(n)
    full = full_mask(n)
    checked = 0
    for F in _flow_corpus(n):
        L = pathsum_bruteforce(F)
        end_bits = 0
        for m in F.masks():
            end_bits |= 1 << (m ^ full)
        for A in range(1 << n):
            expected = nfact * (((F.members >> A) & 1) - ((end_bits >> A) & 1))
            if divergence(L, A) != expected:
                return SuiteResult(
                    "conservation", n, checked, False,
                    f"vertex mask {A} of {family_to_json(F)}",
                )
        checked += 1
    return SuiteResult("conservation", n, checked, True)


def suite_equivalence(n: int) -> SuiteResult:
    """Toggle and fill prefixes agree on every downset, permutation, prefix."""
    if not 1 <= n <= 4:
        raise ValueError("equivalence suite runs for 1 <= n <= 4")
    checked = 0
    for F in enumerate_downsets(n):
        for order in permutations(range(1, n + 1)):
            toggled = shift_trace(ShiftKind.TOGGLE, order, F)
            filled = shift_trace(ShiftKind.FILL, order, F)
            for k in range(n + 1):
                t_end = toggled.steps[k - 1].after if k else F
                f_end = filled.steps[k - 1].after if k else F
                if t_end != f_end:
                    return SuiteResult(
                        "equivalence", n, checked, False,
                        f"prefix {k} of {order} on {family_to_json(F)}",
                    )
                checked += 1
    return SuiteResult("equivalence", n, checked, True)


def suite_decomposition(n: int) -> SuiteResult:
    """Every empty-minimal family's decomposition verifies exactly."""
    if not 1 <= n <= 5:
        raise ValueError("decomposition suite runs for 1 <= n <= 5")
    checked = 0
    for F in enumerate_maximal_intersecting(n):
        minimal, _ = is_empty_minimal(F)
        if not minimal:
            continue
        result = verify_decomposition(F, build_decomposition(F))
        if not result:
            return SuiteResult(
                "decomposition", n, checked, False,
                f"{result.failure} for {family_to_json(F)}",
            )
        checked += 1
    return SuiteResult("decomposition", n, checked, True)


def suite_chvatal(n: int) -> SuiteResult:
    """Dot-product identity and star bound over all family/downset pairs.

    The inner product is evaluated literally on the embedding vectors; the
    identity side counts members through the membership bitsets. Inputs
    come straight from the two generators, so the per-pair classification
    preconditions of chvatal_check are known to hold and are not re-run.
    """
    if not 1 <= n <= 5:
        raise ValueError("chvatal suite runs for 1 <= n <= 5")
    fams = enumerate_maximal_intersecting(n)
    downs = enumerate_downsets(n)
    f_entries = [(F, family_vector(F).entries) for F in fams]
    stars = [star_vector(n, a).entries for a in range(1, n + 1)]
    checked = 0
    for G in downs:
        vg = family_vector(G).entries
        star_dots = [sum(x * y for x, y in zip(s, vg)) for s in stars]
        best = max(star_dots)
        g_size = len(G)
        for F, vf in f_entries:
            dot = sum(x * y for x, y in zip(vf, vg))
            inter = (F.members & G.members).bit_count()
            if dot != 4 * inter - 2 * g_size:
                return SuiteResult(
                    "chvatal", n, checked, False,
                    f"identity fails for {family_to_json(F)} vs {family_to_json(G)}",
                )
            if dot > best:
                return SuiteResult(
                    "chvatal", n, checked, False,
                    f"star bound fails for {family_to_json(F)} vs {family_to_json(G)}",
                )
            checked += 1
    return SuiteResult("chvatal", n, checked, True)


SUITES = {
    "formula": (suite_formula, range(1, 6)),
    "conservation": (suite_conservation, range(1, 6)),
    "equivalence": (suite_equivalence, range(1, 5)),
    "decomposition": (suite_decomposition, range(1, 6)),
    "chvatal": (suite_chvatal, range(1, 6)),
}
