"""Exhaustive verification sweeps with deterministic, parallel-safe output.

Each sweep enumerates every instance of its kind on n labeled points,
counts distinct lines through the generic relation evaluator (never
through the constructive process, which is what the sweeps
cross-validate), and folds the results into a summary.  Violations are
data, not exceptions: a sweep always completes and reports every
failing instance.

Work is partitioned into canonically ordered chunks (edge-bitmask
ranges for graphs and metrics, backtracking-tree prefixes for posets),
so output is byte-identical across runs and worker counts.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator

from .bounds import dbe_bound, min_pair_sum
from .construct import build_certificate, certificate_issues
from .core import line_mask_set, pair_list
from .enumeration import (
    GRAPH_ENUM_CAP,
    POSET_ENUM_CAP,
    _iter_states,
    poset_from_state,
    poset_state_prefixes,
)
from .errors import CapError, DomainError, LinesysError
from .graphs import Graph, graph_betweenness, is_extremal_graph
from .metrics import DisconnectedError, graph_shortest_path_metric, metric_betweenness
from .posets import is_extremal_poset, poset_betweenness

PAIR_SUM_SWEEP_CAP = 12

_CHUNK_MASKS = 1 << 14
_POSET_PREFIX_DEPTH = 3


@dataclass(frozen=True)
class VerificationReport:
    """Per-instance verification record.

    ``bound`` is n for graphs and metrics and the height-dependent bound
    for posets.  ``is_equality_case`` marks instances with no universal
    line and exactly n distinct lines; ``extremal_shape_match`` marks
    instances matching the extremal characterization of their kind (the
    chain-plus-point shape for posets, the clique-plus-point shape for
    graphs, extended by the empty graph when n = 3; always False for
    metrics, which have no characterization here).
    """

    structure_kind: str
    n: int
    instance_id: int | str
    line_count: int
    bound: int
    has_universal: bool
    meets_bound: bool
    is_equality_case: bool
    extremal_shape_match: bool

    def json_line(self) -> str:
        return json.dumps(
            {
                "structure_kind": self.structure_kind,
                "n": self.n,
                "instance_id": self.instance_id,
                "line_count": self.line_count,
                "bound": self.bound,
                "has_universal": self.has_universal,
                "meets_bound": self.meets_bound,
                "is_equality_case": self.is_equality_case,
                "extremal_shape_match": self.extremal_shape_match,
            }
        )


@dataclass
class _Fold:
    """Mergeable per-chunk aggregate."""

    enumerated: int = 0
    reported: int = 0
    checked: int = 0
    universal_count: int = 0
    violations: list = field(default_factory=list)
    equality_ids: list = field(default_factory=list)
    shape_ids: list = field(default_factory=list)
    mismatch_ids: list = field(default_factory=list)
    certificate_failures: list = field(default_factory=list)

    def merge(self, other: "_Fold") -> None:
        self.enumerated += other.enumerated
        self.reported += other.reported
        self.checked += other.checked
        self.universal_count += other.universal_count
        self.violations += other.violations
        self.equality_ids += other.equality_ids
        self.shape_ids += other.shape_ids
        self.mismatch_ids += other.mismatch_ids
        self.certificate_failures += other.certificate_failures


@dataclass(frozen=True)
class SweepSummary:
    kind: str
    n: int
    enumerated: int
    reported: int
    checked: int
    universal_count: int
    violations: tuple[VerificationReport, ...]
    equality_ids: tuple[int, ...]
    shape_match_ids: tuple[int, ...]
    certificate_failures: tuple[tuple[int, str], ...]
    issues: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.issues


def _graph_shape(g: Graph) -> bool:
    n = g.size
    if n >= 4:
        return is_extremal_graph(g)
    if n == 3:
        # Extremal shapes on 3 points, plus the empty graph.
        if all(row == 0 for row in g.adj):
            return True
        return any(
            g.adj[v].bit_count() <= 1
            and g.adj[u] >> w & 1
            for v, u, w in ((0, 1, 2), (1, 0, 2), (2, 0, 1))
        )
    return False


def graph_report(g: Graph, instance_id: int | str | None = None) -> VerificationReport:
    """Verification record for one graph: at least n distinct lines
    unless some line is universal, equality only on the extremal shape."""
    n = g.size
    masks = line_mask_set(graph_betweenness(g))
    count = len(masks)
    universal = (1 << n) - 1 in masks
    meets = universal or count >= n
    equality = not universal and count == n
    return VerificationReport(
        structure_kind="graph",
        n=n,
        instance_id=g.edge_mask() if instance_id is None else instance_id,
        line_count=count,
        bound=n,
        has_universal=universal,
        meets_bound=meets,
        is_equality_case=equality,
        extremal_shape_match=_graph_shape(g),
    )


def poset_report(p, instance_id: int | str | None = None):
    """Verification record and certificate defect for one poset.

    Returns (None, None) for height-1 posets: the height-dependent bound
    is not defined there.  The certificate is built and replayed only
    when no line is universal; its first defect (or construction error)
    is returned alongside the report.
    """
    n = p.size
    height = p.height
    if height < 2:
        return None, None
    masks = line_mask_set(poset_betweenness(p))
    count = len(masks)
    universal = (1 << n) - 1 in masks
    bound = dbe_bound(n, height)
    meets = universal or count >= bound
    equality = not universal and count == n
    cert_issue = None
    if not universal:
        try:
            issues = certificate_issues(build_certificate(p), p)
            if issues:
                cert_issue = issues[0]
        except LinesysError as exc:
            cert_issue = f"certificate construction failed: {exc}"
    if instance_id is None:
        from .enumeration import poset_code

        instance_id = poset_code(p)
    report = VerificationReport(
        structure_kind="poset",
        n=n,
        instance_id=instance_id,
        line_count=count,
        bound=bound,
        has_universal=universal,
        meets_bound=meets,
        is_equality_case=equality,
        extremal_shape_match=is_extremal_poset(p),
    )
    return report, cert_issue


def metric_report(m, instance_id: int | str) -> VerificationReport:
    """Verification record for one metric space: at least n distinct
    lines or a universal line (evidence sweep; no extremal shape)."""
    n = m.size
    masks = line_mask_set(metric_betweenness(m))
    count = len(masks)
    universal = (1 << n) - 1 in masks
    return VerificationReport(
        structure_kind="metric",
        n=n,
        instance_id=instance_id,
        line_count=count,
        bound=n,
        has_universal=universal,
        meets_bound=universal or count >= n,
        is_equality_case=not universal and count == n,
        extremal_shape_match=False,
    )


def _fold_report(fold: _Fold, report: VerificationReport, compare_shape: bool) -> None:
    fold.reported += 1
    if report.has_universal:
        fold.universal_count += 1
    else:
        fold.checked += 1
    if not report.meets_bound:
        fold.violations.append(report)
    if report.is_equality_case:
        fold.equality_ids.append(report.instance_id)
    if report.extremal_shape_match:
        fold.shape_ids.append(report.instance_id)
    if (
        compare_shape
        and not report.has_universal
        and report.is_equality_case != report.extremal_shape_match
    ):
        fold.mismatch_ids.append(report.instance_id)


def _run_chunk(args):
    kind, n, chunk, collect = args
    fold = _Fold()
    reports = [] if collect else None
    if kind == "graph":
        lo, hi = chunk
        fold.enumerated = hi - lo
        for mask in range(lo, hi):
            report = graph_report(Graph.from_mask(n, mask), mask)
            _fold_report(fold, report, compare_shape=True)
            if collect:
                reports.append(report)
    elif kind == "poset":
        for state in _iter_states(n, chunk):
            fold.enumerated += 1
            code = 0
            for s in state:
                code = code * 3 + s
            report, cert_issue = poset_report(poset_from_state(n, state), code)
            if report is None:
                continue
            _fold_report(fold, report, compare_shape=True)
            if cert_issue is not None:
                fold.certificate_failures.append((code, cert_issue))
            if collect:
                reports.append(report)
    elif kind == "metric":
        lo, hi = chunk
        fold.enumerated = hi - lo
        for mask in range(lo, hi):
            g = Graph.from_mask(n, mask)
            try:
                m = graph_shortest_path_metric(g)
            except DisconnectedError:
                continue
            report = metric_report(m, mask)
            _fold_report(fold, report, compare_shape=False)
            if collect:
                reports.append(report)
    else:
        raise DomainError(f"unknown sweep kind {kind!r}")
    return fold, reports


def _chunks(kind: str, n: int) -> list:
    if kind == "poset":
        return poset_state_prefixes(n, _POSET_PREFIX_DEPTH)
    total = 1 << len(pair_list(n))
    return [
        (lo, min(lo + _CHUNK_MASKS, total)) for lo in range(0, total, _CHUNK_MASKS)
    ]


def _check_domain(kind: str, n: int) -> None:
    if kind == "graph":
        if n > GRAPH_ENUM_CAP:
            raise CapError(f"graph sweeps support n <= {GRAPH_ENUM_CAP}, got {n}")
        if n < 3:
            raise DomainError(f"graph sweeps need n >= 3, got {n}")
    elif kind == "poset":
        if n > POSET_ENUM_CAP:
            raise CapError(f"poset sweeps support n <= {POSET_ENUM_CAP}, got {n}")
        if n < 2:
            raise DomainError(f"poset sweeps need n >= 2, got {n}")
    elif kind == "metric":
        if n > 6:
            raise CapError(f"metric sweeps support n <= 6, got {n}")
        if n < 2:
            raise DomainError(f"metric sweeps need n >= 2, got {n}")
    else:
        raise DomainError(f"unknown sweep kind {kind!r}")


def run_sweep(
    kind: str,
    n: int,
    workers: int = 1,
    report_sink: Callable[[VerificationReport], None] | None = None,
) -> SweepSummary:
    """Run one exhaustive sweep and fold the results into a summary.

    ``kind`` is "graph", "poset", or "metric".  With ``report_sink``
    every per-instance report is passed to it in canonical enumeration
    order (the JSON-lines writer of the command-line client plugs in
    here).  Worker processes split the canonical chunk list; the fold
    and the report stream are identical for every worker count.
    """
    _check_domain(kind, n)
    collect = report_sink is not None
    args = [(kind, n, chunk, collect) for chunk in _chunks(kind, n)]
    total = _Fold()

    def consume(result) -> None:
        fold, reports = result
        total.merge(fold)
        if collect:
            for report in reports:
                report_sink(report)

    if workers <= 1 or len(args) == 1:
        for arg in args:
            consume(_run_chunk(arg))
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(min(workers, len(args))) as pool:
            for result in pool.imap(_run_chunk, args):
                consume(result)

    issues = []
    if total.violations:
        issues.append(
            f"{len(total.violations)} instances fall below their line bound"
        )
    if total.certificate_failures:
        issues.append(
            f"{len(total.certificate_failures)} certificates failed to verify"
        )
    if total.mismatch_ids:
        issues.append(
            f"{len(total.mismatch_ids)} instances where equality cases and the "
            f"extremal shape disagree"
        )
    return SweepSummary(
        kind=kind,
        n=n,
        enumerated=total.enumerated,
        reported=total.reported,
        checked=total.checked,
        universal_count=total.universal_count,
        violations=tuple(total.violations),
        equality_ids=tuple(total.equality_ids),
        shape_match_ids=tuple(total.shape_ids),
        certificate_failures=tuple(total.certificate_failures),
        issues=tuple(issues),
    )


def iter_reports(kind: str, n: int) -> Iterator[VerificationReport]:
    """Stream every per-instance report in canonical order."""
    _check_domain(kind, n)
    for chunk in _chunks(kind, n):
        _fold_result, reports = _run_chunk((kind, n, chunk, True))
        yield from reports


@dataclass(frozen=True)
class PairSumSweepSummary:
    max_n: int
    cases: int
    mismatches: tuple[tuple[int, int, int, int], ...]
    smoothing_failures: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.smoothing_failures


def _exhaustive_min_pair_sum(n: int, parts: int) -> int:
    """Exhaustive search for the smallest within-group pair total.

    The objective is invariant under reordering the groups, so scanning
    weakly decreasing size lists covers the value of every split of n
    items into ``parts`` (possibly empty) groups.
    """
    best: int | None = None

    def descend(remaining: int, slots: int, cap: int, acc: int) -> None:
        nonlocal best
        if slots == 1:
            if remaining <= cap:
                total = acc + comb(remaining, 2)
                if best is None or total < best:
                    best = total
            return
        for first in range(min(cap, remaining), -1, -1):
            if first * (slots - 1) < remaining - first:
                break
            descend(remaining - first, slots - 1, first, acc + comb(first, 2))

    descend(n, parts, n, 0)
    assert best is not None
    return best


def pair_sum_sweep(max_n: int) -> PairSumSweepSummary:
    """Check the balanced-split formula against exhaustive search for
    all 1 <= parts <= n <= max_n, plus the one-point smoothing step
    (moving an item off the larger of two groups differing by more than
    one never increases the pair total)."""
    if max_n < 1:
        raise DomainError(f"need max_n >= 1, got {max_n}")
    if max_n > PAIR_SUM_SWEEP_CAP:
        raise CapError(
            f"pair-sum sweeps support max_n <= {PAIR_SUM_SWEEP_CAP}, got {max_n}"
        )
    mismatches = []
    cases = 0
    for n in range(1, max_n + 1):
        for parts in range(1, n + 1):
            cases += 1
            formula = min_pair_sum(n, parts)
            search = _exhaustive_min_pair_sum(n, parts)
            if formula != search:
                mismatches.append((n, parts, formula, search))
    smoothing_failures = [
        (big, small)
        for big in range(2, max_n + 1)
        for small in range(0, big - 1)
        if comb(big, 2) + comb(small, 2)
        < comb(big - 1, 2) + comb(small + 1, 2)
    ]
    return PairSumSweepSummary(
        max_n=max_n,
        cases=cases,
        mismatches=tuple(mismatches),
        smoothing_failures=tuple(smoothing_failures),
    )
