import random

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from twinwidth.errors import InputError, InvariantError
from twinwidth.generators import complete, cycle, disjoint_union, empty, path
from twinwidth.ibp import (
    INF,
    IntervalBicliquePartition,
    SSSPStats,
    apsp,
    build_ibp,
    clique_ibp,
    diameter,
    format_ibp,
    parse_ibp,
    sssp,
)
from twinwidth.oracles import bfs_distances
from twinwidth.sequence import ContractionSequence, verify_sequence
from twinwidth.stabbing import StabbingStructure
from twinwidth.toolkit import SequenceSearchConfig, chain_sequence, greedy_sequence


def greedy(g, seed=0):
    return greedy_sequence(g, SequenceSearchConfig(rng_seed=seed))


def test_edgeless_has_no_bicliques():
    ibp = build_ibp(empty(4), chain_sequence(4), check=True)
    assert ibp.bicliques == ()
    _, dist = sssp(ibp, 2)
    assert dist == [INF, INF, 0, INF]


@pytest.mark.parametrize("n", [2, 3, 5, 9])
def test_clique_chain_pattern(n):
    ibp = build_ibp(complete(n), chain_sequence(n), check=True)
    assert len(ibp.bicliques) == n - 1
    assert sorted(ibp.bicliques) == sorted(clique_ibp(n).bicliques)
    assert ibp.position == tuple(range(n))


def test_path_frozen():
    seq = ContractionSequence(4, ((0, 1), (4, 2), (5, 3)))
    ibp = build_ibp(path(4), seq, check=True)
    assert len(ibp.bicliques) == 3
    assert ibp.position == (0, 1, 2, 3)
    assert len(ibp.bicliques) <= (verify_sequence(path(4), seq) + 1) * 3


def test_sssp_examples():
    parent, dist = sssp(clique_ibp(6), 3)
    assert dist == [1, 1, 1, 0, 1, 1]
    assert parent[3] == 3 and all(parent[v] == 3 for v in range(6))
    _, dist = sssp(path(4), 0)
    assert dist == [0, 1, 2, 3]
    parent, dist = sssp(disjoint_union(complete(2), complete(2)), 0)
    assert dist == [0, 1, INF, INF]
    assert parent[2] is None
    with pytest.raises(InputError):
        sssp(path(3), 3)


def test_diameters():
    assert diameter(cycle(6)) == 3
    assert diameter(clique_ibp(7)) == 1
    assert diameter(complete(5), chain_sequence(5)) == 1
    assert diameter(disjoint_union(complete(2), complete(2))) == INF
    assert diameter(IntervalBicliquePartition(1, (0,), ())) == 0


@given(graphs(max_n=10), st.integers(0, 1000))
def test_partition_and_distances(g, seed):
    seq = greedy(g, seed)
    ibp = build_ibp(g, seq)
    ibp.check(g)
    assert len(ibp.bicliques) <= (verify_sequence(g, seq) + 1) * max(g.n - 1, 0)
    rows = apsp(ibp)
    for s in range(g.n):
        assert rows[s] == bfs_distances(g, s)


@given(graphs(max_n=10), st.integers(0, 1000))
def test_parents_form_shortest_path_tree(g, seed):
    parent, dist = sssp(g, 0, greedy(g, seed))
    for v in range(g.n):
        if dist[v] == INF:
            assert parent[v] is None
        elif v != 0:
            assert g.has_edge(v, parent[v]) and dist[parent[v]] == dist[v] - 1


@given(graphs(max_n=10), st.integers(0, 1000))
def test_each_side_deleted_once(g, seed):
    ibp = build_ibp(g, greedy(g, seed))
    stats = SSSPStats()
    sssp(ibp, 0, stats=stats)
    assert len(stats.deleted_sides) == len(set(stats.deleted_sides)) == stats.side_deletions
    assert stats.side_deletions <= 2 * len(ibp.bicliques)
    assert stats.vertex_deletions <= g.n - 1


def test_check_catches_bad_partitions():
    with pytest.raises(InvariantError):
        IntervalBicliquePartition(3, (0, 1, 2), (((0, 1), (1, 2)),)).check()
    with pytest.raises(InvariantError):
        IntervalBicliquePartition(4, (0, 1, 2, 3), (((0, 1), (2, 3)), ((1, 2), (3, 3)))).check()
    with pytest.raises(InvariantError):
        clique_ibp(3).check(path(3))
    clique_ibp(3).check(complete(3))


def test_format_round_trip():
    g = cycle(7)
    ibp = build_ibp(g, greedy(g))
    assert parse_ibp(format_ibp(ibp)) == ibp
    assert format_ibp(clique_ibp(3)) == "b tww 3 2\n0 0 1 2\n1 1 2 2\npi 0 0\npi 1 1\npi 2 2\n"


@pytest.mark.parametrize(
    "text,line",
    [
        ("0 0 1 1\n", 1),
        ("b tww 2 1\n0 0 1 5\npi 0 0\npi 1 1\n", 2),
        ("b tww 2 1\n0 0 1 1\npi 0 0\npi 0 1\n", 4),
        ("b tww 2 1\n0 0 x 1\n", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(InputError) as exc:
        parse_ibp(text, source="f.ibp")
    assert exc.value.line == line and exc.value.source == "f.ibp"


def test_parse_errors_whole_file():
    with pytest.raises(InputError):
        parse_ibp("b tww 2 2\n0 0 1 1\npi 0 0\npi 1 1\n")
    with pytest.raises(InputError):
        parse_ibp("b tww 2 1\n0 0 1 1\npi 0 0\n")
    with pytest.raises(InputError):
        parse_ibp("")


intervals = st.lists(st.tuples(st.integers(0, 30), st.integers(0, 8)).map(lambda t: (t[0], t[0] + t[1])), max_size=40)


@given(intervals, st.lists(st.tuples(st.sampled_from("sidpq"), st.integers(0, 40), st.integers(0, 8)), max_size=60))
def test_stabbing_matches_naive(ivs, ops):
    s = StabbingStructure(ivs)
    live = set(range(len(ivs)))
    for op, a, b in ops:
        if op in "id" and ivs:
            i = a % len(ivs)
            if op == "i":
                s.insert(i)
                live.add(i)
            else:
                s.delete(i)
                live.discard(i)
        elif op == "s":
            assert sorted(s.stab(a)) == sorted(i for i in live if ivs[i][0] <= a <= ivs[i][1])
        elif op == "p":
            got = s.pop_stab(a)
            want = {i for i in live if ivs[i][0] <= a <= ivs[i][1]}
            assert sorted(got) == sorted(want)
            live -= want
        else:
            got = s.pop_intersecting(a, a + b)
            want = {i for i in live if ivs[i][0] <= a + b and a <= ivs[i][1]}
            assert sorted(got) == sorted(want)
            live -= want
        assert len(s) == len(live)
        assert all(s.is_live(i) == (i in live) for i in range(len(ivs)))


def test_stabbing_copy_is_independent():
    s = StabbingStructure([(0, 3), (2, 5)])
    c = s.copy()
    assert c.pop_stab(2) == [0, 1]
    assert s.stab(2) == [0, 1] and len(c) == 0
    with pytest.raises(ValueError):
        StabbingStructure([(3, 1)])


def test_stabbing_starts_empty():
    s = StabbingStructure([(0, 1), (1, 2)], live=False)
    assert s.stab(1) == [] and len(s) == 0
    s.insert(1)
    assert s.intersecting(0, 0) == [] and s.intersecting(0, 1) == [1]
