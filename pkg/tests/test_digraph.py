import pytest
from hypothesis import given, strategies as st

from twoblock.digraph import (
    Arc,
    build,
    condensation,
    degrees,
    delete,
    digraph_sha,
    parse_digraph,
    serialize,
    to_dot,
)
from twoblock.errors import DuplicateArc, NotPresent, OutOfRange, ParseError, SelfLoop

TRI2 = build(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


def arcs_lists(max_n=9):
    """Random (n, arcs) pairs without duplicates or loops."""

    def to_arcs(draw_pair):
        n, pick = draw_pair
        cand = [(u, v) for u in range(n) for v in range(n) if u != v]
        return n, [a for a, keep in zip(cand, pick) if keep]

    return st.integers(0, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n), st.lists(st.booleans(), min_size=n * (n - 1), max_size=n * (n - 1))
        )
    ).map(to_arcs)


def test_build_and_accessors():
    D = build(3, [(0, 1), (1, 2), (2, 0), (0, 2)])
    assert D.n == 3 and D.m == 4
    assert D.out(0) == (1, 2)
    assert D.in_(2) == (0, 1)
    assert D.has_arc(0, 2) and not D.has_arc(2, 1)
    assert D.out_degree(0) == 2 and D.in_degree(0) == 1
    assert D.sorted_arcs() == [Arc(0, 1), Arc(0, 2), Arc(1, 2), Arc(2, 0)]


def test_build_rejects_bad_arcs():
    with pytest.raises(OutOfRange):
        build(2, [(0, 2)])
    with pytest.raises(OutOfRange):
        build(2, [(-1, 0)])
    with pytest.raises(SelfLoop):
        build(2, [(1, 1)])
    with pytest.raises(DuplicateArc):
        build(2, [(0, 1), (0, 1)])


def test_degrees():
    d = degrees(TRI2)
    assert d.min_out == 1 and d.max_out == 2
    assert d.min_in == 1 and d.max_in == 2
    empty = degrees(build(0, []))
    assert empty.min_out is None and empty.max_in is None


def test_delete_vertex_relabels_densely():
    D, relabel = delete(TRI2, vertices=[2])
    assert relabel == {0: 0, 1: 1, 3: 2, 4: 3}
    assert D.n == 4
    assert D.sorted_arcs() == [Arc(0, 1), Arc(0, 2), Arc(2, 3), Arc(3, 0)]


def test_delete_arc_only():
    D, relabel = delete(TRI2, arcs=[(0, 3)])
    assert relabel == {v: v for v in range(5)}
    assert D.m == TRI2.m - 1


def test_delete_missing_raises():
    with pytest.raises(NotPresent):
        delete(TRI2, vertices=[9])
    with pytest.raises(NotPresent):
        delete(TRI2, arcs=[(1, 0)])


def test_condensation_two_triangles():
    # 0,1,2 and 3,4,5 each strongly connected, bridged by 2 -> 3
    D = build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)])
    c = condensation(D)
    assert c.components == ((0, 1, 2), (3, 4, 5))
    assert c.component_of[0] == 0 and c.component_of[4] == 1
    assert c.sink_component == (3, 4, 5)
    assert not c.is_strongly_connected
    assert condensation(TRI2).is_strongly_connected


def test_condensation_arcs_point_forward():
    D = build(4, [(3, 2), (2, 1), (1, 0)])
    c = condensation(D)
    for u, v in D.sorted_arcs():
        assert c.component_of[u] <= c.component_of[v]
    assert c.sink_component == (0,)


def test_parse_round_trip_concrete():
    text = "# a comment\n3 2\n\n0 1\n# another\n1 2\n"
    D = parse_digraph(text)
    assert D.n == 3 and D.m == 2
    assert serialize(D) == "3 2\n0 1\n1 2\n"


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "header"),
        ("x 2\n0 1\n1 0\n", "line 1"),
        ("2\n0 1\n", "line 1"),
        ("2 1\n0 1 2\n", "line 2"),
        ("2 2\n0 1\n", "2 arcs"),
        ("2 0\n0 1\n", "line 2"),
        ("2 1\n0 5\n", "line 2"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_digraph(text)
    assert fragment in str(err.value)


def test_serialize_is_sorted_and_newline_terminated():
    D = build(3, [(2, 0), (0, 1)])
    assert serialize(D) == "3 2\n0 1\n2 0\n"


def test_to_dot():
    D = build(3, [(1, 0)])
    dot = to_dot(D)
    assert "digraph" in dot
    assert "1 -> 0;" in dot
    assert "2;" in dot  # isolated vertex still present


def test_sha_frozen():
    assert digraph_sha(TRI2) == digraph_sha(parse_digraph(serialize(TRI2)))
    assert len(digraph_sha(TRI2)) == 16


@given(arcs_lists())
def test_parse_serialize_round_trip(pair):
    n, arcs = pair
    D = build(n, arcs)
    assert parse_digraph(serialize(D)) == D


@given(arcs_lists(), st.data())
def test_delete_preserves_untouched_degrees(pair, data):
    n, arcs = pair
    D = build(n, arcs)
    if n == 0:
        return
    v = data.draw(st.integers(0, n - 1))
    E, relabel = delete(D, vertices=[v])
    for u in range(n):
        if u == v:
            assert u not in relabel
            continue
        out_kept = [w for w in D.out(u) if w != v]
        assert E.out_degree(relabel[u]) == len(out_kept)


@given(arcs_lists())
def test_condensation_partitions_and_orders(pair):
    n, arcs = pair
    D = build(n, arcs)
    c = condensation(D)
    seen = sorted(v for comp in c.components for v in comp)
    assert seen == list(range(n))
    for u, v in D.sorted_arcs():
        assert c.component_of[u] <= c.component_of[v]
