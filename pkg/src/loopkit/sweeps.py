"""Exhaustive verification sweeps over all small loops.

A sweep enumerates every normalized loop of the requested orders once
and evaluates a battery of checks on each.  Every check verifies a
proved statement, so any violation is build-breaking; the first
violating loop's full table is captured for reproduction without
re-enumeration.

Results are independent of the worker count: parts partition the
enumeration deterministically, counts add, and first violations merge by
lexicographic minimum of the table content.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from .core import ENUMERATION_CAP, LoopTable, TheoremViolation, enumerate_loops
from .catalog import UnsupportedFormat, render_json_envelope
from .identities import (
    IdentityId,
    check_identity,
    is_extra,
    is_moufang,
    squares_in_nucleus,
)
from .conditions import (
    cor_odd_verify,
    first_abc_gap,
    first_quad_gap,
    first_triple_gap,
    lemma_allthree,
    lemma_key_mfg,
    lemma_lip_equiv,
    thm_main_verify,
    triple_conditions,
    triple_coverage,
)
from .gf2ring import (
    THREE_VAR_CAP,
    OrderExceedsCap,
    RingIdentityId,
    oracle_equiv_ra2,
    oracle_equiv_srar,
    ring_identity_check,
)


class LoopFacts:
    """Lazily computed classification facts shared by all checks on one loop."""

    def __init__(self, loop: LoopTable):
        self.loop = loop

    @cached_property
    def right_bol(self) -> bool:
        return check_identity(self.loop, IdentityId.RIGHT_BOL) is None

    @cached_property
    def moufang(self) -> bool:
        return is_moufang(self.loop)

    @cached_property
    def srar(self) -> bool:
        return self.right_bol and first_quad_gap(self.loop) is None

    @cached_property
    def ra2(self) -> bool:
        # RA2 needs Moufang plus both triple coverages; reuse the cached
        # Moufang bit instead of calling is_ra2 (which would rescan it).
        if not self.moufang:
            return False
        return first_abc_gap(self.loop) is None and first_triple_gap(self.loop) is None

    @cached_property
    def coverage(self):
        return triple_coverage(self.loop)

    @cached_property
    def associative(self) -> bool:
        return check_identity(self.loop, IdentityId.ASSOCIATIVE) is None


CheckFn = Callable[[LoopFacts], str | None]


def _check_srar_ring_equiv(f: LoopFacts) -> str | None:
    if not oracle_equiv_srar(f.loop):
        return "ring right Bol brute force disagrees with the pointwise SRAR criterion"
    return None


def _check_alt_ring_equiv(f: LoopFacts) -> str | None:
    # Both half-equivalences on arbitrary loops.  Only an empirical fact,
    # and only up to order 5: at order 6 there are non-Moufang loops with
    # full coverage that fail a pointwise alternative law, which breaks
    # the ring law on a basis element.  Hence the order cap below.
    if not oracle_equiv_ra2(f.loop):
        return "ring alternative laws disagree with the pointwise coverage conditions"
    return None


def _check_alt_ring_equiv_moufang(f: LoopFacts) -> str | None:
    """Moufang-scoped alternative equivalence: both halves, and both together."""
    if not f.moufang:
        return None
    if not oracle_equiv_ra2(f.loop):
        return "Moufang loop: ring alternative laws disagree with pointwise coverage"
    ring_alt = (
        ring_identity_check(f.loop, RingIdentityId.RIGHT_ALTERNATIVE) is None
        and ring_identity_check(f.loop, RingIdentityId.LEFT_ALTERNATIVE) is None
    )
    cov_both = first_abc_gap(f.loop) is None and first_triple_gap(f.loop) is None
    if ring_alt != cov_both:
        return f"Moufang loop: alternative ring={ring_alt} but full coverage={cov_both}"
    return None


def _check_quad_all_three_or_one(f: LoopFacts) -> str | None:
    if not f.srar:
        return None
    w = lemma_allthree(f.loop)
    if w is not None:
        return f"quadruple condition set of size 0 or 2: {w.describe()}"
    n = f.loop.order
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if len(triple_conditions(f.loop, x, y, z)) in (0, 2):
                    return f"triple condition set of size 0 or 2 at ({x + 1},{y + 1},{z + 1})"
    return None


def _check_lip_equiv(f: LoopFacts) -> str | None:
    if not f.right_bol:
        return None
    w = lemma_lip_equiv(f.loop)
    if w is not None:
        return w.describe()
    return None


def _check_commute_or_lip_moufang(f: LoopFacts) -> str | None:
    if not f.right_bol:
        return None
    try:
        lemma_key_mfg(f.loop)
    except TheoremViolation as exc:
        return str(exc)
    return None


def _check_pair_coverage_implications(f: LoopFacts) -> str | None:
    if not f.right_bol:
        return None
    report = thm_main_verify(f.loop)
    if not report.all_ok():
        return f"pair-coverage implication failed: {report}"
    return None


def _check_pair_coverage_ra2(f: LoopFacts) -> str | None:
    if not f.right_bol:
        return None
    cov = f.coverage
    if (cov.de_everywhere or cov.df_everywhere or cov.ef_everywhere) and not f.ra2:
        return "pair coverage holds on a Bol loop that is not RA2"
    return None


def _check_odd_order_associative(f: LoopFacts) -> str | None:
    if f.loop.order % 2 == 0:
        return None
    if not cor_odd_verify(f.loop).implication_ok:
        return "odd-order SRAR loop is not associative"
    return None


def _check_ra2_implies_srar(f: LoopFacts) -> str | None:
    if f.ra2 and not f.srar:
        return "RA2 loop is not SRAR"
    return None


def _check_moufang_implies_bol(f: LoopFacts) -> str | None:
    if f.moufang and not f.right_bol:
        return "Moufang loop is not right Bol"
    return None


def _check_bol_implies_ralt_rip(f: LoopFacts) -> str | None:
    if not f.right_bol:
        return None
    w = check_identity(f.loop, IdentityId.RIGHT_ALTERNATIVE)
    if w is not None:
        return f"right Bol loop fails right alternative: {w.describe()}"
    w = check_identity(f.loop, IdentityId.RIP)
    if w is not None:
        return f"right Bol loop fails RIP: {w.describe()}"
    return None


def _check_bol_lip_implies_moufang(f: LoopFacts) -> str | None:
    if not f.right_bol:
        return None
    if check_identity(f.loop, IdentityId.LIP) is None and not f.moufang:
        return "right Bol loop with LIP is not Moufang"
    return None


def _check_extra_iff_moufang_squares_nucleus(f: LoopFacts) -> str | None:
    try:
        ext = is_extra(f.loop)
    except TheoremViolation as exc:
        return str(exc)
    rhs = f.moufang and squares_in_nucleus(f.loop)
    if ext != rhs:
        return f"extra={ext} but (Moufang and squares-in-nucleus)={rhs}"
    return None


@dataclass(frozen=True)
class SweepCheck:
    fn: CheckFn
    max_order: int


CHECKS: dict[str, SweepCheck] = {
    "srar_ring_equiv": SweepCheck(_check_srar_ring_equiv, THREE_VAR_CAP),
    "alt_ring_equiv": SweepCheck(_check_alt_ring_equiv, 5),
    "alt_ring_equiv_moufang": SweepCheck(_check_alt_ring_equiv_moufang, ENUMERATION_CAP),
    "quad_all_three_or_one": SweepCheck(_check_quad_all_three_or_one, ENUMERATION_CAP),
    "lip_equiv": SweepCheck(_check_lip_equiv, ENUMERATION_CAP),
    "commute_or_lip_moufang": SweepCheck(_check_commute_or_lip_moufang, ENUMERATION_CAP),
    "pair_coverage_implications": SweepCheck(_check_pair_coverage_implications, ENUMERATION_CAP),
    "pair_coverage_ra2": SweepCheck(_check_pair_coverage_ra2, ENUMERATION_CAP),
    "odd_order_associative": SweepCheck(_check_odd_order_associative, ENUMERATION_CAP),
    "ra2_implies_srar": SweepCheck(_check_ra2_implies_srar, ENUMERATION_CAP),
    "moufang_implies_bol": SweepCheck(_check_moufang_implies_bol, ENUMERATION_CAP),
    "bol_implies_ralt_rip": SweepCheck(_check_bol_implies_ralt_rip, ENUMERATION_CAP),
    "bol_lip_implies_moufang": SweepCheck(_check_bol_lip_implies_moufang, ENUMERATION_CAP),
    "extra_iff_moufang_squares_nucleus": SweepCheck(
        _check_extra_iff_moufang_squares_nucleus, ENUMERATION_CAP
    ),
}


@dataclass(frozen=True)
class SweepSpec:
    orders: tuple[int, ...]
    checks: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.orders or not self.checks:
            raise ValueError("orders and checks must be nonempty")
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ValueError(f"unknown checks: {unknown}")


@dataclass(frozen=True)
class SweepCell:
    order: int
    check: str
    loops_scanned: int
    violations: int
    first_violation: tuple[tuple[int, ...], ...] | None
    wall_time: float


@dataclass(frozen=True)
class SweepResult:
    cells: tuple[SweepCell, ...]

    def total_violations(self) -> int:
        return sum(c.violations for c in self.cells)


def _count_part(args: tuple[int, int, int]) -> int:
    """Count one enumeration part (picklable helper for process pools)."""
    order, part_index, part_count = args
    return enumerate_loops(
        order, lambda L: None, part_index=part_index, part_count=part_count
    )


def _sweep_part(args: tuple[int, tuple[str, ...], int, int]):
    """One enumeration part: returns (scanned, {check: [viol, first, time]})."""
    order, checks, part_index, part_count = args
    stats: dict[str, list] = {c: [0, None, 0.0] for c in checks}
    fns = {c: CHECKS[c].fn for c in checks}

    def visit(loop: LoopTable) -> None:
        facts = LoopFacts(loop)
        for name in checks:
            t0 = time.perf_counter()
            detail = fns[name](facts)
            st = stats[name]
            st[2] += time.perf_counter() - t0
            if detail is not None:
                st[0] += 1
                if st[1] is None:
                    st[1] = loop.raw_rows()

    scanned = enumerate_loops(order, visit, part_index=part_index, part_count=part_count)
    return scanned, stats


def run_sweep(spec: SweepSpec, jobs: int = 1) -> SweepResult:
    """Run every requested check over every loop of every requested order."""
    for order in spec.orders:
        if order > ENUMERATION_CAP:
            raise OrderExceedsCap(f"order {order} exceeds the enumeration cap {ENUMERATION_CAP}")
        for name in spec.checks:
            if order > CHECKS[name].max_order:
                raise OrderExceedsCap(
                    f"check {name} is capped at order {CHECKS[name].max_order}, got {order}"
                )

    cells: list[SweepCell] = []
    for order in spec.orders:
        tasks = [(order, spec.checks, k, jobs) for k in range(jobs)]
        if jobs <= 1:
            results = [_sweep_part(tasks[0])]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_sweep_part, tasks))
        scanned = sum(r[0] for r in results)
        for name in spec.checks:
            violations = sum(r[1][name][0] for r in results)
            firsts = [r[1][name][1] for r in results if r[1][name][1] is not None]
            first = min(firsts) if firsts else None
            wall = sum(r[1][name][2] for r in results)
            cells.append(SweepCell(order, name, scanned, violations, first, wall))
    return SweepResult(tuple(cells))


def render_sweep(result: SweepResult, fmt: str) -> bytes:
    """Serialize a sweep like the catalog reports (wall_time excluded)."""
    if fmt == "json":
        records = [
            {
                "order": c.order,
                "check": c.check,
                "loops_scanned": c.loops_scanned,
                "violations": c.violations,
                "first_violation": None if c.first_violation is None
                else [list(row) for row in c.first_violation],
            }
            for c in result.cells
        ]
        return render_json_envelope({"violations": result.total_violations()}, records)
    if fmt == "csv":
        lines = ["order,check,loops_scanned,violations"]
        lines += [
            f"{c.order},{c.check},{c.loops_scanned},{c.violations}" for c in result.cells
        ]
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == "text":
        lines = []
        for c in result.cells:
            line = (
                f"order={c.order} check={c.check} loops_scanned={c.loops_scanned} "
                f"violations={c.violations}"
            )
            if c.first_violation is not None:
                rows = " / ".join(" ".join(str(v) for v in row) for row in c.first_violation)
                line += f" first_violation=[{rows}]"
            lines.append(line)
        return ("\n".join(lines) + "\n").encode("utf-8")
    raise UnsupportedFormat(f"unknown report format {fmt!r}")
