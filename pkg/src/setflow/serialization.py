"""JSON formats for families, axis flows, and decompositions.

Family text format: {"n": int, "sets": [[int, ...], ...]} with 1-indexed
elements and strictly increasing inner lists, or {"n": int, "masks":
[uint, ...]} under the bit-(i-1) convention. Writers emit sets sorted by
(size, mask value) so output is deterministic and diffable.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .decomposition import Decomposition
from .families import Family
from .flows import AxisFlow


class FamilyFormatError(ValueError):
    """Malformed family/flow/decomposition text input."""


def family_to_obj(F: Family) -> dict[str, Any]:
    return {"n": F.n, "sets": [list(s) for s in F.sets()]}


def family_to_json(F: Family) -> str:
    return json.dumps(family_to_obj(F), separators=(",", ":"))


def _load(text: str | bytes) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FamilyFormatError(f"malformed JSON: {e}") from e


def obj_to_family(obj: Any) -> Family:
    if not isinstance(obj, dict):
        raise FamilyFormatError("family must be a JSON object")
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= 16:
        raise FamilyFormatError(f"'n' must be an int in 1..16, got {n!r}")
    has_sets = "sets" in obj
    has_masks = "masks" in obj
    if has_sets == has_masks:
        raise FamilyFormatError("exactly one of 'sets' or 'masks' is required")
    masks: list[int] = []
    if has_sets:
        sets = obj["sets"]
        if not isinstance(sets, list):
            raise FamilyFormatError("'sets' must be a list of lists")
        for s in sets:
            if not isinstance(s, list):
                raise FamilyFormatError(f"set {s!r} must be a list of elements")
            m = 0
            prev = 0
            for a in s:
                if not isinstance(a, int) or isinstance(a, bool) or not 1 <= a <= n:
                    raise FamilyFormatError(f"element {a!r} out of range 1..{n}")
                if a <= prev:
                    raise FamilyFormatError(f"set {s!r} is not strictly increasing")
                prev = a
                m |= 1 << (a - 1)
            masks.append(m)
    else:
        raw = obj["masks"]
        if not isinstance(raw, list):
            raise FamilyFormatError("'masks' must be a list of unsigned ints")
        for m in raw:
            if not isinstance(m, int) or isinstance(m, bool) or not 0 <= m < (1 << n):
                raise FamilyFormatError(f"mask {m!r} out of range for n={n}")
            masks.append(m)
    if len(set(masks)) != len(masks):
        raise FamilyFormatError("duplicate sets in family")
    return Family.from_masks(n, masks)


def parse_family(text: str | bytes) -> Family:
    """Parse the family text format; raises FamilyFormatError on bad input."""
    return obj_to_family(_load(text))


def axisflow_to_obj(L: AxisFlow) -> dict[str, Any]:
    return {"n": L.n, "axes": {str(a): list(L.axes[a - 1]) for a in range(1, L.n + 1)}}


def axisflow_to_json(L: AxisFlow) -> str:
    return json.dumps(axisflow_to_obj(L), separators=(",", ":"))


def obj_to_axisflow(obj: Any) -> AxisFlow:
    if not isinstance(obj, dict):
        raise FamilyFormatError("axis flow must be a JSON object")
    n = obj.get("n")
    axes_obj = obj.get("axes")
    if not isinstance(n, int) or not isinstance(axes_obj, dict):
        raise FamilyFormatError("axis flow needs integer 'n' and object 'axes'")
    rows = []
    for a in range(1, n + 1):
        row = axes_obj.get(str(a))
        if not isinstance(row, list) or not all(isinstance(v, int) for v in row):
            raise FamilyFormatError(f"axis {a} row missing or not an int list")
        rows.append(tuple(row))
    try:
        return AxisFlow(n, tuple(rows))
    except ValueError as e:
        raise FamilyFormatError(str(e)) from e


def parse_axisflow(text: str | bytes) -> AxisFlow:
    return obj_to_axisflow(_load(text))


def decomposition_to_obj(D: Decomposition) -> dict[str, Any]:
    lam = [
        {"from": A, "to": B, "num": num}
        for (A, B), num in sorted(D.lambda_num.items(), key=lambda kv: (kv[0][1], kv[0][0]))
    ]
    return {
        "n": D.n,
        "denominator": D.denominator,
        "c": list(D.c_num),
        "lambda": lam,
    }


def decomposition_to_json(D: Decomposition) -> str:
    return json.dumps(decomposition_to_obj(D), separators=(",", ":"))


def obj_to_decomposition(obj: Any) -> Decomposition:
    if not isinstance(obj, dict):
        raise FamilyFormatError("decomposition must be a JSON object")
    n = obj.get("n")
    if not isinstance(n, int) or not 1 <= n <= 16:
        raise FamilyFormatError("'n' must be an int in 1..16")
    if obj.get("denominator") != math.factorial(n):
        raise FamilyFormatError("'denominator' must equal n!")
    c = obj.get("c")
    if not isinstance(c, list) or len(c) != n or not all(isinstance(v, int) for v in c):
        raise FamilyFormatError("'c' must be a list of n integers")
    lam_raw = obj.get("lambda", [])
    if not isinstance(lam_raw, list):
        raise FamilyFormatError("'lambda' must be a list")
    lam: dict[tuple[int, int], int] = {}
    for entry in lam_raw:
        if not isinstance(entry, dict) or not all(
            isinstance(entry.get(k), int) for k in ("from", "to", "num")
        ):
            raise FamilyFormatError(f"slack entry {entry!r} needs integer from/to/num")
        lam[(entry["from"], entry["to"])] = entry["num"]
    return Decomposition(n, tuple(c), lam)


def parse_decomposition(text: str | bytes) -> Decomposition:
    return obj_to_decomposition(_load(text))
