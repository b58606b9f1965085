import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from twinwidth.coloring import (
    color_kt_free,
    color_triangle_free,
    eh_pair,
    find_triangle,
    max_clique,
    palette_size,
)
from twinwidth.errors import ContractViolation, InputError
from twinwidth.generators import complete, cycle, empty, path, random_triangle_free
from twinwidth.graph import Graph
from twinwidth.oracles import brute_omega
from twinwidth.sequence import ContractionSequence, verify_sequence
from twinwidth.toolkit import SequenceSearchConfig, chain_sequence, greedy_sequence

C5_SEQ = ContractionSequence(5, ((0, 1), (2, 4), (5, 3), (7, 6)))


def greedy(g, seed=0):
    return greedy_sequence(g, SequenceSearchConfig(rng_seed=seed))


def assert_proper(g, col):
    assert set(col) == set(range(g.n))
    for a, b in g.edges:
        assert col[a] != col[b], (a, b)


def test_single_vertex():
    assert color_triangle_free(Graph(1), ContractionSequence(1, ())) == {0: (1,)}


def test_c5_frozen():
    col = color_triangle_free(cycle(5), C5_SEQ, check=True)
    assert {v: c[0] for v, c in col.items()} == {0: 1, 1: 3, 2: 2, 3: 1, 4: 2}
    assert palette_size(col) <= verify_sequence(cycle(5), C5_SEQ) + 2


def test_path_and_bipartite():
    g = path(4)
    seq = greedy(g)
    col = color_triangle_free(g, seq, check=True)
    assert_proper(g, col)
    assert palette_size(col) <= verify_sequence(g, seq) + 2


def test_rejects_triangles():
    g = complete(3)
    with pytest.raises(ContractViolation) as exc:
        color_triangle_free(g, chain_sequence(3))
    assert "triangle" in str(exc.value)
    assert find_triangle(g) is not None
    assert find_triangle(cycle(4)) is None


def test_rejects_partial_sequence():
    with pytest.raises(InputError):
        color_triangle_free(path(3), ContractionSequence(3, ((0, 1),)))


def test_kt_free_examples():
    g = complete(4)
    col = color_kt_free(g, chain_sequence(4), t=5, check=True)
    assert_proper(g, col)
    assert palette_size(col) <= (0 + 2) ** 3
    assert all(len(c) == 3 for c in col.values())
    with pytest.raises(ContractViolation):
        color_kt_free(g, chain_sequence(4), t=4)
    with pytest.raises(InputError):
        color_kt_free(g, chain_sequence(4), t=2)


def test_kt_free_default_t_uses_clique_number():
    g = cycle(5)
    col = color_kt_free(g, C5_SEQ, check=True)
    assert_proper(g, col)
    assert all(len(c) == 1 for c in col.values())


def test_violation_witness_is_a_clique():
    rng = random.Random(3)
    for _ in range(40):
        g = Graph(12, [e for e in itertools.combinations(range(12), 2) if rng.random() < 0.6])
        w = len(max_clique(g))
        try:
            color_kt_free(g, greedy(g), t=w, trust=True)
        except ContractViolation as exc:
            clique = exc.witness
            assert len(set(clique)) == len(clique)
            assert all(g.has_edge(a, b) for a, b in itertools.combinations(clique, 2))


@given(graphs(max_n=10), st.integers(0, 1000))
def test_kt_free_bound(g, seed):
    seq = greedy(g, seed)
    d = verify_sequence(g, seq)
    omega = brute_omega(g)[0]
    col = color_kt_free(g, seq, t=max(3, omega + 1), check=True)
    assert_proper(g, col)
    assert palette_size(col) <= (d + 2) ** max(1, omega - 1)


@given(st.integers(2, 16), st.floats(0.1, 0.5), st.integers(0, 10**6))
def test_triangle_free_bound(n, p, seed):
    g = random_triangle_free(n, p, random.Random(seed))
    if g is None:
        return
    seq = greedy(g, seed)
    col = color_triangle_free(g, seq, check=True)
    assert_proper(g, col)
    assert palette_size(col) <= verify_sequence(g, seq) + 2


def check_pair(g, seq, pair):
    n = g.n
    d = verify_sequence(g, seq)
    need = math.ceil(n / (d + 4))
    assert len(pair.X) >= need and len(pair.Y) >= need
    assert not set(pair.X) & set(pair.Y)
    want = pair.kind == "complete"
    assert all(g.has_edge(x, y) == want for x in pair.X for y in pair.Y)


def test_eh_pair_cliques_and_empty():
    for g, kind in ((complete(8), "complete"), (empty(8), "anticomplete")):
        seq = chain_sequence(8)
        pair = eh_pair(g, seq)
        assert pair.kind == kind
        assert len(pair.X) >= 2 and len(pair.Y) >= 2
        check_pair(g, seq, pair)


@given(graphs(min_n=2, max_n=12), st.integers(0, 1000))
def test_eh_pair_property(g, seed):
    seq = greedy(g, seed)
    check_pair(g, seq, eh_pair(g, seq))


def test_triangle_witness():
    with pytest.raises(ContractViolation) as exc:
        color_triangle_free(complete(3), chain_sequence(3))
    assert sorted(exc.value.witness) == [0, 1, 2]
