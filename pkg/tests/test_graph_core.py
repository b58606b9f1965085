import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from twinwidth.errors import InputError, InvalidContractionError, SequenceValidationError, StaleIdError
from twinwidth.generators import complete, cycle, empty, path
from twinwidth.graph import Graph
from twinwidth.sequence import (
    ContractionSequence,
    OrderedUnionTree,
    build_union_tree,
    complement_sequence,
    red_degree_profile,
    replay,
    trigraph_at,
    union_find_replay,
    verify_sequence,
)
from twinwidth.toolkit import SequenceSearchConfig, greedy_sequence, unit_interval_sequence
from twinwidth.trigraph import (
    BLACK,
    RED,
    Trigraph,
    enumerate_red_connected_sets,
    is_red_connected,
)

C4_TWINS = ContractionSequence(4, ((0, 2), (1, 3), (4, 5)))
P4_SEQ = ContractionSequence(4, ((0, 1), (4, 2), (5, 3)))


def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(InputError):
        Graph(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])


def test_graph_basics():
    g = cycle(4)
    assert g.m == 4 == len(g.edges)
    assert g.has_edge(3, 0) and g.has_edge(0, 3)
    assert g.neighbors(0) == {1, 3}
    assert g.complement().sorted_edges() == [(0, 2), (1, 3)]
    sub, kept = g.induced_subgraph([1, 2, 3])
    assert kept == [1, 2, 3] and sub.sorted_edges() == [(0, 1), (1, 2)]


def test_contract_path_end():
    t = Trigraph.from_graph(path(4))
    t.contract(0, 1, 4)
    assert t.color(4, 2) == RED
    assert t.color(4, 3) == 0
    assert t.red_degree(4) == 1


def test_contract_false_twins():
    t = Trigraph.from_graph(cycle(4))
    t.contract(0, 2, 4)
    assert t.color(4, 1) == BLACK and t.color(4, 3) == BLACK
    assert t.red_degree(4) == 0


def test_contract_mixed_neighbourhoods():
    # u, v plus eleven outside vertices u1 u2 x1..x7 v1 v2 with mixed colours
    names = ["u1", "u2", "x1", "x2", "x3", "x4", "x5", "x6", "x7", "v1", "v2", "u", "v"]
    ix = {s: i for i, s in enumerate(names)}
    black = [("u", s) for s in ("u2", "x1", "x2", "x4", "x6", "x7")]
    black += [("v", s) for s in ("x1", "x2", "x3", "x6", "x7", "v1", "v2")]
    red = [("u", s) for s in ("u1", "x3", "x5")] + [("v", s) for s in ("x4", "x5")]
    t = Trigraph.from_edges(
        range(len(names)),
        [(ix[a], ix[b]) for a, b in black],
        [(ix[a], ix[b]) for a, b in red],
    )
    z = 99
    t.contract(ix["u"], ix["v"], z)
    got_red = {names[x] for x in t.red_neighbors(z)}
    got_black = {names[x] for x in t.black_neighbors(z)}
    assert got_red == {"u1", "u2", "x3", "x4", "x5", "v1", "v2"}
    assert got_black == {"x1", "x2", "x6", "x7"}
    t.check_invariants()


def test_contract_errors():
    t = Trigraph.from_graph(path(3))
    with pytest.raises(InvalidContractionError):
        t.contract(0, 0, 3)
    t.contract(0, 1, 3)
    with pytest.raises(StaleIdError):
        t.contract(0, 2, 4)
    with pytest.raises(InvalidContractionError):
        t.contract(2, 3, 3)


def test_verify_small_sequences():
    assert verify_sequence(cycle(4), C4_TWINS) == 0
    assert verify_sequence(path(4), P4_SEQ) == 1
    g, seq = unit_interval_sequence(3, 3)
    assert g.n == 9
    assert verify_sequence(g, seq) <= 2


def test_verify_names_failing_step():
    bad = ContractionSequence(4, ((0, 1), (0, 2), (5, 3)))
    with pytest.raises(SequenceValidationError) as exc:
        verify_sequence(path(4), bad)
    assert exc.value.step == 1


def test_partial_sequences_are_accepted():
    assert verify_sequence(path(4), P4_SEQ.prefix(1)) == 1
    assert verify_sequence(path(4), P4_SEQ.prefix(0)) == 0


@given(graphs(max_n=8), st.integers(0, 1000))
def test_verify_matches_replay_profile(g, seed):
    seq = greedy_sequence(g, SequenceSearchConfig(rng_seed=seed))
    assert verify_sequence(g, seq, check=True) == max(red_degree_profile(g, seq))
    for i in range(len(seq.steps) + 1):
        t, part = trigraph_at(g, seq, i)
        assert not (t.black_edges() & t.red_edges())
        assert sorted(part.parts) == sorted(t.live)
        assert sorted(v for p in part.parts.values() for v in p) == list(range(g.n))


def test_union_tree_small():
    tree = build_union_tree(Graph(2, [(0, 1)]), ContractionSequence(2, ((0, 1),)))
    assert tree.leaves(tree.root) == [0, 1]
    tree = OrderedUnionTree(P4_SEQ)
    assert set(tree.leaves(tree.node_of_step(1))) == {0, 1, 2}
    assert set(tree.leaves(tree.node_of_step(0))) == {0, 1}
    with pytest.raises(SequenceValidationError):
        OrderedUnionTree(P4_SEQ.prefix(2))


def test_union_tree_nested_intervals_example():
    # leaf at (1-based) position p is original vertex perm[p - 1]
    perm = [4, 0, 7, 2, 8, 1, 6, 3, 5]
    p = {i + 1: v for i, v in enumerate(perm)}
    steps = [
        (p[2], p[3]),  # 9
        (p[7], p[8]),  # 10
        (p[6], 10),  # 11
        (p[4], p[5]),  # 12
        (12, 11),  # 13
        (13, p[9]),  # 14
        (p[1], 9),  # 15
        (15, 14),  # 16
    ]
    tree = OrderedUnionTree(ContractionSequence(9, tuple(steps)))
    assert [tree.position[v] + 1 for v in perm] == list(range(1, 10))
    labels = {tree.interval[z] for z in range(9, 17)}
    labels = {(a + 1, b + 1) for a, b in labels}
    assert labels == {(2, 3), (1, 3), (4, 5), (7, 8), (6, 8), (4, 8), (4, 9), (1, 9)}
    assert (tree.interval[16][0] + 1, tree.interval[16][1] + 1) == (1, 9)


@given(graphs(min_n=2, max_n=9), st.integers(0, 100))
def test_union_tree_leaves_are_intervals(g, seed):
    seq = greedy_sequence(g, SequenceSearchConfig(rng_seed=seed))
    tree = OrderedUnionTree(seq)
    parts = {v: {v} for v in range(g.n)}
    for i, rec, _ in replay(g, seq):
        parts[rec.z] = parts.pop(rec.u) | parts.pop(rec.v)
        z = tree.node_of_step(i)
        assert set(tree.leaves(z)) == parts[rec.z]
        lo, hi = tree.interval[z]
        assert sorted(tree.position[v] for v in parts[rec.z]) == list(range(lo, hi + 1))


def test_union_find_replay_agrees_with_parts():
    seq = P4_SEQ
    for i, uf, rep in union_find_replay(seq):
        pass
    assert len({uf.find(v) for v in range(4)}) == 1


def test_trigraph_at_endpoints():
    t, part = trigraph_at(cycle(4), C4_TWINS, 0)
    assert t.black_edges() == set(cycle(4).edges) and not t.red_edges()
    t, part = trigraph_at(cycle(4), C4_TWINS, 3)
    assert list(t.live) == [6] and part.as_sets() == [frozenset(range(4))]
    t, _ = trigraph_at(cycle(4), C4_TWINS, 1)
    assert sorted(t.live) == [1, 3, 4]
    assert t.black_edges() == {(1, 4), (3, 4)} and not t.red_edges()
    with pytest.raises(IndexError):
        trigraph_at(cycle(4), C4_TWINS, 4)


def test_complement_sequence_examples():
    gc, sc = complement_sequence(empty(3), ContractionSequence(3, ((0, 1), (3, 2))))
    assert gc == complete(3) and verify_sequence(gc, sc) == 0
    gc, sc = complement_sequence(cycle(4), C4_TWINS)
    assert gc.sorted_edges() == [(0, 2), (1, 3)]
    assert verify_sequence(gc, sc) == 0
    seq5 = ContractionSequence(5, ((0, 1), (2, 4), (5, 3), (7, 6)))
    gc, sc = complement_sequence(cycle(5), seq5)
    assert verify_sequence(gc, sc) == verify_sequence(cycle(5), seq5) == 2


@given(graphs(max_n=8), st.integers(0, 100))
def test_complement_keeps_red_edges(g, seed):
    seq = greedy_sequence(g, SequenceSearchConfig(rng_seed=seed))
    gc, sc = complement_sequence(g, seq)
    for (_, _, t1), (_, _, t2) in zip(replay(g, seq), replay(gc, sc)):
        assert t1.red_edges() == t2.red_edges()
        live = sorted(t1.live)
        pairs = {(a, b) for i, a in enumerate(live) for b in live[i + 1:]}
        assert t2.black_edges() == pairs - t1.black_edges() - t1.red_edges()


def _red_path():
    return Trigraph.from_edges([0, 1, 2], red=[(0, 1), (1, 2)])


def test_enumerate_red_connected_examples():
    t = _red_path()
    got = enumerate_red_connected_sets(t, 1, 2)
    assert sorted(map(sorted, got)) == [[0, 1], [1], [1, 2]]
    t2 = Trigraph.from_edges(range(6))
    assert enumerate_red_connected_sets(t2, 3, 5) == [frozenset({3})]
    assert len(enumerate_red_connected_sets(t, {0, 1, 2}, 2)) == 5
    assert enumerate_red_connected_sets(t, 1, 0) == []


@given(graphs(min_n=2, max_n=8), st.integers(0, 50), st.integers(1, 4))
def test_enumerated_sets_are_connected_and_bounded(g, seed, k):
    seq = greedy_sequence(g, SequenceSearchConfig(rng_seed=seed))
    for i, rec, t in replay(g, seq):
        d = t.max_red_degree()
        sets = enumerate_red_connected_sets(t, rec.z, k)
        assert len(set(sets)) == len(sets)
        assert len(sets) <= d ** (2 * k - 2) + 1
        for s in sets:
            assert rec.z in s and len(s) <= k and is_red_connected(t, s)
