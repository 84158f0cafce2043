from fractions import Fraction

import pytest

from linesys import (
    CycleError,
    ParseError,
    all_lines,
    graph_betweenness,
    parse_graph,
    parse_hypergraph,
    parse_metric,
    parse_poset,
    render_line_system,
)

GRAPH_K3_PLUS_ISOLATED = "4 3\n0 1\n0 2\n1 2\n"


def test_parse_graph():
    g = parse_graph(GRAPH_K3_PLUS_ISOLATED)
    assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 2)]
    assert g.size == 4


def test_parse_graph_errors_cite_line_and_column():
    with pytest.raises(ParseError) as err:
        parse_graph("3 2\n0 1\n0 x\n")
    assert err.value.line == 3 and err.value.column == 3
    with pytest.raises(ParseError) as err:
        parse_graph("3 1\n0 7\n")
    assert err.value.line == 2 and err.value.column == 3
    with pytest.raises(ParseError, match="self-loop"):
        parse_graph("3 1\n1 1\n")
    with pytest.raises(ParseError, match="duplicate edge"):
        parse_graph("3 2\n0 1\n1 0\n")
    with pytest.raises(ParseError, match="end of input"):
        parse_graph("3 2\n0 1\n")
    with pytest.raises(ParseError, match="extra token"):
        parse_graph("3 1\n0 1\n2\n")


def test_parse_poset_accepts_covers_or_full_relation():
    covers = parse_poset("3 2\n0 1\n1 2\n")
    full = parse_poset("3 3\n0 1\n1 2\n0 2\n")
    assert covers.succ == full.succ
    assert covers.height == 3


def test_parse_poset_errors():
    with pytest.raises(ParseError, match="itself"):
        parse_poset("3 1\n2 2\n")
    with pytest.raises(CycleError):
        parse_poset("3 2\n0 1\n1 0\n")


def test_parse_metric_exact_rationals():
    m = parse_metric("3\n0 1/2 1\n1/2 0 1/2\n1 1/2 0\n")
    assert m.dist[0][1] == Fraction(1, 2)
    decimal = parse_metric("2\n0 0.5\n0.5 0\n")
    assert decimal.dist[0][1] == Fraction(1, 2)


def test_parse_metric_rejects_junk():
    with pytest.raises(ParseError, match="exact rational") as err:
        parse_metric("2\n0 abc\nabc 0\n")
    assert err.value.line == 2 and err.value.column == 3


def test_parse_hypergraph():
    rel = parse_hypergraph("4 2\n0 1 2\n0 1 3\n")
    assert rel.has(0, 2, 1) and rel.has(0, 3, 1)
    with pytest.raises(ParseError, match="repeats"):
        parse_hypergraph("4 1\n0 1 1\n")


def test_render_round_trip():
    system = all_lines(graph_betweenness(parse_graph(GRAPH_K3_PLUS_ISOLATED)))
    text = render_line_system(system)
    rows = text.splitlines()
    assert rows[-1] == "count 4"
    parsed = {frozenset(int(tok) for tok in row.split()) for row in rows[:-1]}
    assert parsed == system.member_sets()


def test_render_is_sorted():
    system = all_lines(graph_betweenness(parse_graph(GRAPH_K3_PLUS_ISOLATED)))
    assert render_line_system(system) == "0 1 2\n0 3\n1 3\n2 3\ncount 4"
