"""Claim registry engine: bounded universes, deterministic checks, reports.

Every structural law of the deviation calculus is registered as a claim with
a stable id, an executable checker, and the verdict it is expected to
produce. Universal claims sweep an exhaustively enumerated universe and
refute with the first counterexample in enumeration order; existential
claims stop at the first witness. Enumeration order is fixed (sizes by
total, then lexicographic), so for a fixed universe two runs produce
identical reports and reported witnesses are minimal for their claim.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator

from .finset import FiniteSet, Mapping, image, kernel_partition

VERDICT_VERIFIED = "verified"
VERDICT_COUNTEREXAMPLE = "counterexample-found-as-required"
VERDICT_REFUTED = "refuted-as-stated"
VERDICT_SKIPPED = "skipped"

VERDICTS = (VERDICT_VERIFIED, VERDICT_COUNTEREXAMPLE, VERDICT_REFUTED, VERDICT_SKIPPED)

MACHINE_SCHEMA = 1


@dataclass(frozen=True)
class Universe:
    """Bounds for the exhaustive sweeps."""

    max_set_size: int = 4
    max_triple_size: int = 3
    max_group_order: int = 12
    max_powerset_base: int = 4

    def __post_init__(self) -> None:
        for name in ("max_set_size", "max_triple_size", "max_group_order", "max_powerset_base"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.max_powerset_base > 12:
            raise ValueError("max_powerset_base is capped at 12")


CheckOutcome = tuple[str, object, int]


@dataclass(frozen=True)
class Claim:
    """One law bound to an executable checker and its expected verdict."""

    id: str
    law: str
    kind: str  # "universal" | "existential" | "report-only"
    expected: str
    checker: Callable[[Universe], CheckOutcome] = field(compare=False, repr=False)


@dataclass(frozen=True)
class Report:
    claim_id: str
    verdict: str
    expected: str
    witness: object
    instances: int
    elapsed_ms: float

    def ok(self) -> bool:
        return self.verdict == self.expected


def enumerate_mappings(dom: FiniteSet, cod: FiniteSet, limit: int | None = None) -> Iterator[Mapping]:
    """All mappings dom -> cod, lexicographic by table."""
    if limit is not None and (dom.size > limit or cod.size > limit):
        raise ValueError(f"carrier sizes exceed the bound {limit}")
    for table in product(range(cod.size), repeat=dom.size):
        yield Mapping(dom, cod, table)


def size_pairs(max_size: int) -> Iterator[tuple[int, int]]:
    """Signature sizes ordered by total, then first component."""
    for total in range(2 * max_size + 1):
        for nx in range(max_size + 1):
            ny = total - nx
            if 0 <= ny <= max_size:
                yield nx, ny


def size_triples(max_size: int) -> Iterator[tuple[int, int, int]]:
    for total in range(3 * max_size + 1):
        for nx in range(max_size + 1):
            for ny in range(max_size + 1):
                nz = total - nx - ny
                if 0 <= nz <= max_size:
                    yield nx, ny, nz


def mapping_witness(f: Mapping) -> dict:
    return f.to_json_dict()


def find_dev2_incomparability_counted(universe: Universe) -> tuple[dict | None, int]:
    """Counted search behind find_dev2_incomparability."""
    first = None
    second = None
    scanned = 0
    for n in range(universe.max_triple_size + 1):
        base = FiniteSet(n)
        maps = list(enumerate_mappings(base, base))
        devs = [image(f).complement().bits for f in maps]
        for i, f in enumerate(maps):
            for j, g in enumerate(maps):
                scanned += 1
                df, dg = devs[i], devs[j]
                if first is None and df & ~dg == 0 and df != dg:
                    first = {"size": n, "f": mapping_witness(f), "g": mapping_witness(g)}
                if second is None and dg & ~df == 0 and df != dg:
                    second = {"size": n, "f": mapping_witness(f), "g": mapping_witness(g)}
                if first and second:
                    witness = {
                        "dev2_f_strictly_below_g": first,
                        "dev2_g_strictly_below_f": second,
                    }
                    return witness, scanned
    return None, scanned


def find_dev2_incomparability(universe: Universe) -> dict | None:
    """Two mapping pairs on one shared carrier realizing both strict
    inclusions between the missed sets of the first and the second mapping.

    Returns None when the universe is too small to contain both patterns.
    """
    return find_dev2_incomparability_counted(universe)[0]


def check_rho_not_functor_counted(universe: Universe) -> tuple[dict | None, int]:
    """Counted search behind check_rho_not_functor."""
    scanned = 0
    for nx, ny in size_pairs(universe.max_set_size):
        x, y = FiniteSet(nx), FiniteSet(ny)
        maps = list(enumerate_mappings(x, y))
        for i, f in enumerate(maps):
            part_f, img_f = kernel_partition(f), image(f)
            for g in maps[i + 1 :]:
                scanned += 1
                part_g, img_g = kernel_partition(g), image(g)
                if part_f != part_g or img_f != img_g:
                    witness = {
                        "x_size": nx,
                        "y_size": ny,
                        "f": mapping_witness(f),
                        "g": mapping_witness(g),
                        "kernel_f": part_f.to_lists(),
                        "kernel_g": part_g.to_lists(),
                        "image_f": img_f.to_list(),
                        "image_g": img_g.to_list(),
                    }
                    return witness, scanned
    return None, scanned


def check_rho_not_functor(universe: Universe) -> dict | None:
    """Two mappings with one signature whose induced bijections differ in
    domain or codomain, so the induced-bijection assignment fixes neither.
    """
    return check_rho_not_functor_counted(universe)[0]


def registry() -> dict[str, Claim]:
    from .claims import REGISTRY

    return REGISTRY


def check_claim(claim: Claim | str, universe: Universe) -> Report:
    if isinstance(claim, str):
        reg = registry()
        if claim not in reg:
            raise KeyError(f"unknown claim id: {claim}")
        claim = reg[claim]
    start = time.perf_counter()
    verdict, witness, instances = claim.checker(universe)
    elapsed = (time.perf_counter() - start) * 1000.0
    if verdict not in VERDICTS:
        raise AssertionError(f"checker for {claim.id} produced unknown verdict {verdict}")
    if verdict in (VERDICT_REFUTED, VERDICT_COUNTEREXAMPLE) and witness is None:
        raise AssertionError(f"claim {claim.id} reported {verdict} without a witness")
    return Report(claim.id, verdict, claim.expected, witness, instances, elapsed)


def check_all(universe: Universe) -> tuple[Report, ...]:
    return tuple(check_claim(c, universe) for c in registry().values())


def machine_records(reports: tuple[Report, ...] | list[Report], include_millis: bool = False) -> str:
    """Line-delimited JSON, one record per claim plus a summary record.

    Timings are left out unless asked for, so that identical runs serialize
    to identical bytes.
    """
    lines = []
    for r in reports:
        record: dict = {
            "schema": MACHINE_SCHEMA,
            "type": "claim",
            "id": r.claim_id,
            "verdict": r.verdict,
            "expected": r.expected,
            "witness": r.witness,
            "instances": r.instances,
        }
        if include_millis:
            record["millis"] = round(r.elapsed_ms, 3)
        lines.append(json.dumps(record, sort_keys=True))
    counts: dict[str, int] = {}
    for r in reports:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    summary = {
        "schema": MACHINE_SCHEMA,
        "type": "summary",
        "claims": len(reports),
        "counts": counts,
        "all_expected": all(r.ok() for r in reports),
    }
    lines.append(json.dumps(summary, sort_keys=True))
    return "\n".join(lines) + "\n"


def text_report(reports: tuple[Report, ...] | list[Report], show_millis: bool = True) -> str:
    lines = []
    width = max((len(r.claim_id) for r in reports), default=0)
    for r in reports:
        mark = "ok " if r.ok() else "MISMATCH"
        timing = f"  {r.elapsed_ms:9.1f} ms" if show_millis else ""
        lines.append(
            f"{r.claim_id:<{width}}  {r.verdict:<33} [{mark}] {r.instances:>9} instances{timing}"
        )
        if r.witness is not None and (not r.ok() or r.verdict != VERDICT_VERIFIED):
            lines.append(f"{'':<{width}}    witness: {json.dumps(r.witness, sort_keys=True)}")
    good = sum(1 for r in reports if r.ok())
    lines.append(f"{good}/{len(reports)} claims produced their expected verdicts")
    return "\n".join(lines) + "\n"
