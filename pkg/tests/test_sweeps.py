import pytest

import linesys.sweeps as sweeps
from linesys import (
    CapError,
    DomainError,
    Graph,
    MetricSpace,
    Poset,
    dbe_bound,
    graph_report,
    iter_reports,
    metric_report,
    pair_list,
    pair_sum_sweep,
    poset_report,
    run_sweep,
)


def jsonl_of(kind, n, workers):
    lines = []
    summary = run_sweep(kind, n, workers=workers, report_sink=lambda r: lines.append(r.json_line()))
    return "\n".join(lines) + "\n", summary


# --- per-instance reports ---------------------------------------------------

def test_graph_report_fields_for_one_triangle_graph():
    r = graph_report(Graph.from_edges(4, [(0, 1), (0, 2), (1, 2)]))
    assert r.structure_kind == "graph"
    assert (r.n, r.line_count, r.bound) == (4, 4, 4)
    assert not r.has_universal
    assert r.meets_bound and r.is_equality_case and r.extremal_shape_match


def test_graph_report_universal_graph_meets_trivially():
    r = graph_report(Graph.from_edges(4, list(pair_list(4))))
    assert r.has_universal and r.meets_bound and not r.is_equality_case


def test_poset_report_skips_antichains():
    assert poset_report(Poset.from_covers(3, [])) == (None, None)


def test_poset_report_equality_and_certificate():
    p = Poset.from_covers(4, [(0, 1), (1, 2), (3, 2)])
    report, cert_issue = poset_report(p)
    assert report.bound == dbe_bound(4, 3) == 4
    assert report.line_count == 4
    assert report.is_equality_case and report.extremal_shape_match
    assert cert_issue is None


def test_metric_report_has_no_shape():
    m = MetricSpace.from_rows([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    r = metric_report(m, "inline")
    assert r.has_universal and not r.extremal_shape_match


def test_report_json_key_order():
    r = graph_report(Graph.from_edges(4, [(0, 1), (0, 2), (1, 2)]))
    line = r.json_line()
    keys = [
        "structure_kind", "n", "instance_id", "line_count", "bound",
        "has_universal", "meets_bound", "is_equality_case",
        "extremal_shape_match",
    ]
    positions = [line.index(f'"{k}"') for k in keys]
    assert positions == sorted(positions)


# --- sweeps -----------------------------------------------------------------

def test_graph_sweep_n4_equality_cases_are_the_one_triangle_graphs():
    summary = run_sweep("graph", 4)
    assert summary.enumerated == 64
    assert summary.ok
    assert not summary.violations
    one_triangle = {
        mask
        for mask in range(64)
        if graph_report(Graph.from_mask(4, mask)).line_count == 4
        and not graph_report(Graph.from_mask(4, mask)).has_universal
    }
    assert set(summary.equality_ids) == one_triangle
    assert set(summary.shape_match_ids) == one_triangle
    assert len(one_triangle) == 16


def test_graph_sweep_n3_equality_includes_the_empty_graph():
    summary = run_sweep("graph", 3)
    assert summary.ok
    assert 0 in summary.equality_ids
    assert 0 in summary.shape_match_ids
    # all 7 non-complete graphs have exactly 3 lines
    assert len(summary.equality_ids) == 7


def test_graph_sweep_n5_zero_violations():
    summary = run_sweep("graph", 5)
    assert summary.enumerated == 1024
    assert summary.ok and not summary.violations


def test_poset_sweep_n4_zero_violations():
    summary = run_sweep("poset", 4)
    assert summary.enumerated == 219
    assert summary.reported == 218  # the antichain has height 1
    assert summary.ok
    assert not summary.certificate_failures


def test_poset_sweep_n2_is_vacuous():
    summary = run_sweep("poset", 2)
    # chains have a universal line; the antichain has height 1
    assert summary.checked == 0
    assert summary.ok


def test_metric_sweep_n4():
    summary = run_sweep("metric", 4)
    assert summary.enumerated == 64
    assert summary.reported == 38  # connected graphs on 4 labeled vertices
    assert summary.ok


def test_sweep_domain_checks():
    with pytest.raises(CapError):
        run_sweep("graph", 9)
    with pytest.raises(DomainError):
        run_sweep("graph", 2)
    with pytest.raises(CapError):
        run_sweep("poset", 7)
    with pytest.raises(DomainError):
        run_sweep("unknown", 4)


def test_sweep_reports_stream_in_canonical_order():
    ids = [r.instance_id for r in iter_reports("graph", 4)]
    assert ids == list(range(64))
    poset_ids = [r.instance_id for r in iter_reports("poset", 3)]
    assert poset_ids == sorted(poset_ids)


def test_jsonl_output_byte_identical_across_worker_counts():
    for kind, n in (("graph", 4), ("poset", 4), ("metric", 4)):
        solo, s1 = jsonl_of(kind, n, workers=1)
        multi, s3 = jsonl_of(kind, n, workers=3)
        assert solo == multi, kind
        assert s1 == s3


def test_violations_are_reported_as_data_not_exceptions(monkeypatch):
    # Inflate the graph bound so every pair-line-only graph fails; the
    # sweep must complete and carry the failures in the summary.
    real = sweeps.graph_report

    def inflated(g, instance_id=None):
        r = real(g, instance_id)
        return sweeps.VerificationReport(
            structure_kind=r.structure_kind,
            n=r.n,
            instance_id=r.instance_id,
            line_count=r.line_count,
            bound=r.bound + 100,
            has_universal=r.has_universal,
            meets_bound=r.has_universal or r.line_count >= r.bound + 100,
            is_equality_case=r.is_equality_case,
            extremal_shape_match=r.extremal_shape_match,
        )

    monkeypatch.setattr(sweeps, "graph_report", inflated)
    summary = run_sweep("graph", 3, workers=1)
    assert not summary.ok
    assert summary.violations
    assert any("below their line bound" in issue for issue in summary.issues)


def test_certificate_failures_are_reported_as_data(monkeypatch):
    monkeypatch.setattr(
        sweeps, "certificate_issues", lambda cert, p: ["planted defect"]
    )
    summary = run_sweep("poset", 3, workers=1)
    assert summary.certificate_failures
    assert any("certificates failed" in issue for issue in summary.issues)


# --- pair-sum sweep ---------------------------------------------------------

def test_pair_sum_sweep_up_to_twelve():
    summary = pair_sum_sweep(12)
    assert summary.ok
    assert summary.cases == sum(range(1, 13))


def test_pair_sum_sweep_caps():
    with pytest.raises(CapError):
        pair_sum_sweep(13)
    with pytest.raises(DomainError):
        pair_sum_sweep(0)


def test_exhaustive_min_pair_sum_agrees_with_plain_composition_search():
    from itertools import product as cartesian
    from math import comb

    for n in range(1, 8):
        for parts in range(1, n + 1):
            plain = min(
                sum(comb(c, 2) for c in combo)
                for combo in cartesian(range(n + 1), repeat=parts)
                if sum(combo) == n
            )
            assert sweeps._exhaustive_min_pair_sum(n, parts) == plain
