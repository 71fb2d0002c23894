"""Survey of maximal intersecting families: flags, minimality, coefficients.

One record per family (or per isomorphism class with canonical mode).
Record computation is a pure function of the family, so surveys may fan
out over a process pool; results are merged and re-sorted by membership
bitset, making the serialized output identical for any worker count.
Timing is collected per record for the human summary but never serialized,
since report bytes must be reproducible run to run.
"""

from __future__ import annotations

import csv
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import IO, Any

from .decomposition import _dual_flow, _verdict
from .enumeration import canonicalize, enumerate_maximal_intersecting
from .families import Family, FamilyFlags, classify, elements_of

MAX_SURVEY_N = 6

SURVEY_CSV_COLUMNS = (
    "n",
    "family",
    "canonical",
    "size",
    "intersecting",
    "self_dual",
    "subset_closed",
    "superset_closed",
    "maximal_intersecting",
    "central",
    "empty_minimal",
    "witness_axis",
    "witness_set",
    "c_numerators",
)


@dataclass(frozen=True)
class SurveyRecord:
    family: Family
    canonical: Family
    flags: FamilyFlags
    empty_minimal: bool
    witness: tuple[int, int] | None
    c_num: tuple[int, ...] | None
    elapsed_us: int


def survey_family(F: Family) -> SurveyRecord:
    start = time.perf_counter_ns()
    flags = classify(F)
    L = _dual_flow(F)
    minimal, witness = _verdict(L)
    c_num = tuple(L.axes[a - 1][0] for a in range(1, F.n + 1)) if minimal else None
    elapsed = (time.perf_counter_ns() - start) // 1000
    return SurveyRecord(
        family=F,
        canonical=canonicalize(F),
        flags=flags,
        empty_minimal=minimal,
        witness=witness,
        c_num=c_num,
        elapsed_us=elapsed,
    )


def run_survey(n: int, canonical: bool = False, jobs: int = 1) -> tuple[list[SurveyRecord], dict[str, int]]:
    if not isinstance(n, int) or not 1 <= n <= MAX_SURVEY_N:
        raise ValueError(f"survey requires 1 <= n <= {MAX_SURVEY_N}")
    if jobs < 1:
        raise ValueError("worker count must be at least 1")
    fams = enumerate_maximal_intersecting(n)
    if canonical:
        reps = sorted({canonicalize(F).members for F in fams})
        fams = [Family(n, m) for m in reps]
    if jobs == 1 or len(fams) < 2 * jobs:
        records = [survey_family(F) for F in fams]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(survey_family, fams, chunksize=max(1, len(fams) // (4 * jobs))))
    records.sort(key=lambda r: r.family.members)
    summary = {
        "n": n,
        "total": len(records),
        "empty_minimal": sum(1 for r in records if r.empty_minimal),
        "central": sum(1 for r in records if r.flags.central),
    }
    return records, summary


def record_to_obj(rec: SurveyRecord) -> dict[str, Any]:
    flags = rec.flags
    witness = None
    if rec.witness is not None:
        a, A = rec.witness
        witness = {"axis": a, "set": list(elements_of(A))}
    return {
        "n": rec.family.n,
        "family": {"sets": [list(s) for s in rec.family.sets()]},
        "canonical": {"sets": [list(s) for s in rec.canonical.sets()]},
        "flags": {
            "intersecting": flags.intersecting,
            "self_dual": flags.self_dual,
            "subset_closed": flags.subset_closed,
            "superset_closed": flags.superset_closed,
            "maximal_intersecting": flags.maximal_intersecting,
            "central": flags.central,
        },
        "empty_minimal": rec.empty_minimal,
        "witness": witness,
        "c": list(rec.c_num) if rec.c_num is not None else None,
    }


def write_jsonl(records: list[SurveyRecord], summary: dict[str, int], out: IO[str]) -> None:
    for rec in records:
        out.write(json.dumps(record_to_obj(rec), separators=(",", ":")))
        out.write("\n")
    out.write(json.dumps({"summary": summary}, separators=(",", ":")))
    out.write("\n")


def write_csv(records: list[SurveyRecord], out: IO[str]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SURVEY_CSV_COLUMNS)
    for rec in records:
        flags = rec.flags
        wa, ws = ("", "")
        if rec.witness is not None:
            wa = str(rec.witness[0])
            ws = json.dumps(list(elements_of(rec.witness[1])), separators=(",", ":"))
        writer.writerow([
            rec.family.n,
            json.dumps([list(s) for s in rec.family.sets()], separators=(",", ":")),
            json.dumps([list(s) for s in rec.canonical.sets()], separators=(",", ":")),
            len(rec.family),
            str(flags.intersecting).lower(),
            str(flags.self_dual).lower(),
            str(flags.subset_closed).lower(),
            str(flags.superset_closed).lower(),
            str(flags.maximal_intersecting).lower(),
            str(flags.central).lower(),
            str(rec.empty_minimal).lower(),
            wa,
            ws,
            ";".join(map(str, rec.c_num)) if rec.c_num is not None else "",
        ])
