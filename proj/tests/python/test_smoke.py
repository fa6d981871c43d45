import pytest

import nilgraph


def test_f7():
    s = nilgraph.fixture("f7")
    assert len(s) == 7
    assert not nilgraph.is_nilpotent(s)
    assert not nilgraph.is_positively_engel(s)
    assert nilgraph.nilpotency_class(s) is None
    u, e11 = s.labels.index("u"), s.labels.index("e_11")
    assert (min(u, e11), max(u, e11)) in nilgraph.graph_edges(s, "upper")
    assert nilgraph.graph_edges(s, "lower") == []


def test_table_round_trip():
    s = nilgraph.Semigroup([[0, 1], [1, 0]])
    assert nilgraph.nilpotency_class(s) == 1
    assert nilgraph.Semigroup.parse(s.to_text()) == s
    assert s.table == [[0, 1], [1, 0]]


def test_errors():
    with pytest.raises(nilgraph.NotAssociative):
        nilgraph.Semigroup([[1, 0], [0, 0]])
    with pytest.raises(nilgraph.ParseError):
        nilgraph.Semigroup.parse("2\n0 x\n")
    with pytest.raises(nilgraph.OrderTooLarge):
        nilgraph.count_semigroups(7)


def test_counts():
    assert [nilgraph.count_semigroups(n) for n in (1, 2, 3, 4)] == [1, 4, 18, 126]
    assert nilgraph.count_semigroups(3, "iso") == 24
    assert len(nilgraph.semigroups(3)) == 18


def test_analyze():
    r = nilgraph.analyze(nilgraph.fixture("s18"))
    assert r["order"] == 19
    assert r["nilpotent"] is False
    assert r["pe"] is True
    assert r["graphs"]["upper"]["empty"] is True


def test_dot():
    dot = nilgraph.graph_dot(nilgraph.fixture("c3"))
    assert dot.startswith("graph upper {")
    assert dot.count("--") == 3
