import random

import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from twinwidth.errors import ContractViolation, InputError, SizeLimitError
from twinwidth.generators import complete, cycle, empty, grid, path, random_cograph
from twinwidth.graph import Graph
from twinwidth.oracles import OracleBudget, brute_alpha

POWER_BUDGET = OracleBudget(40)
from twinwidth.sequence import ContractionSequence, verify_sequence
from twinwidth.toolkit import (
    SequenceSearchConfig,
    SubstitutionSpec,
    chain_sequence,
    cograph_sequence,
    exact_twin_width,
    extract_independent_set,
    greedy_sequence,
    lift_independent_set,
    power_coords,
    power_graph,
    power_vertex,
    recursive_power,
    sequence_for,
    substitute,
    unit_interval_graph,
    unit_interval_sequence,
)

C4_TWINS = ContractionSequence(4, ((0, 2), (1, 3), (4, 5)))
C5_SEQ = ContractionSequence(5, ((0, 1), (2, 4), (5, 3), (7, 6)))


def test_exact_small_values():
    assert exact_twin_width(cycle(4))[0] == 0
    assert exact_twin_width(path(4))[0] == 1
    # computed by the same exhaustive search and frozen
    assert exact_twin_width(cycle(5))[0] == 2
    assert exact_twin_width(grid(3, 3))[0] == 2


def test_exact_witness_and_cap():
    for g in (cycle(5), path(6), grid(2, 4)):
        d, seq = exact_twin_width(g)
        assert verify_sequence(g, seq) == d and seq.is_full
    with pytest.raises(SizeLimitError):
        exact_twin_width(path(11))


@given(graphs(max_n=7), st.integers(0, 20))
def test_exact_never_beats_greedy(g, seed):
    d, _ = exact_twin_width(g)
    assert d <= verify_sequence(g, greedy_sequence(g, SequenceSearchConfig(rng_seed=seed)))


def test_greedy_examples():
    assert verify_sequence(complete(7), greedy_sequence(complete(7))) == 0
    rng = random.Random(4)
    for _ in range(10):
        g = random_cograph(rng.randint(1, 14), rng)
        cfg = SequenceSearchConfig(candidate_pool="all-pairs")
        assert verify_sequence(g, greedy_sequence(g, cfg)) == 0
    g = grid(4, 4)
    assert verify_sequence(g, greedy_sequence(g)) <= 4


def test_greedy_sampled_pool_is_valid_and_seeded():
    g = grid(6, 6)
    a = greedy_sequence(g, SequenceSearchConfig(candidate_pool="red-radius-2+sampled", sample_size=8, rng_seed=1))
    b = greedy_sequence(g, SequenceSearchConfig(candidate_pool="red-radius-2+sampled", sample_size=8, rng_seed=1))
    assert a == b and a.is_full
    verify_sequence(g, a)


def test_cograph_sequence():
    assert verify_sequence(cycle(4), cograph_sequence(cycle(4))) == 0
    assert cograph_sequence(path(4)) is None
    assert cograph_sequence(Graph(1)).steps == ()


def test_unit_interval_examples():
    g = unit_interval_graph(3, 3)
    assert g.n == 9 and g.has_edge(0, 2) and not g.has_edge(0, 3)
    g, seq = unit_interval_sequence(2, 1)
    assert g == complete(2) and verify_sequence(g, seq) == 0
    g, seq = unit_interval_sequence(1, 5)
    assert g == empty(5) and verify_sequence(g, seq) <= 2
    with pytest.raises(InputError):
        unit_interval_sequence(0, 3)


@pytest.mark.parametrize("k", range(1, 9))
def test_unit_interval_width_two(k):
    for n in range(1, 200 // k + 1):
        g, seq = unit_interval_sequence(k, n)
        assert g.n == k * n
        assert verify_sequence(g, seq) <= 2


def test_chain_sequence_on_cliques():
    for n in range(1, 8):
        seq = chain_sequence(n)
        assert seq.is_full and verify_sequence(complete(n), seq) == 0


def test_substitute_examples():
    g1, s1 = cycle(5), C5_SEQ
    g, s = substitute(SubstitutionSpec(g1, s1, 2, Graph(1), ContractionSequence(1, ())))
    assert g == g1 and s == s1
    k2 = Graph(2, [(0, 1)])
    g, s = substitute(SubstitutionSpec(k2, ContractionSequence(2, ((0, 1),)), 0, empty(2), ContractionSequence(2, ((0, 1),))))
    assert g.sorted_edges() == [(0, 1), (1, 2)] and verify_sequence(g, s) == 0
    g, s = substitute(SubstitutionSpec(g1, s1, 3, cycle(4), C4_TWINS))
    assert g.n == 8 and verify_sequence(g, s) == 2
    with pytest.raises(InputError):
        SubstitutionSpec(g1, s1, 5, cycle(4), C4_TWINS)


@given(graphs(max_n=6), graphs(max_n=5), st.integers(0, 100))
def test_substitution_width_is_max(g1, g2, seed):
    s1 = greedy_sequence(g1, SequenceSearchConfig(rng_seed=seed))
    s2 = greedy_sequence(g2, SequenceSearchConfig(rng_seed=seed))
    target = seed % g1.n
    g, s = substitute(SubstitutionSpec(g1, s1, target, g2, s2))
    assert verify_sequence(g, s) == max(verify_sequence(g1, s1), verify_sequence(g2, s2))


def test_power_examples():
    g, s = recursive_power(cycle(5), C5_SEQ, 0)
    assert g.n == 1 and s.steps == ()
    g, s = recursive_power(cycle(5), C5_SEQ, 1)
    assert g == cycle(5)
    g, s = recursive_power(cycle(5), C5_SEQ, 2)
    assert g.n == 25 and verify_sequence(g, s) == 2
    assert brute_alpha(g, POWER_BUDGET)[0] == 4
    with pytest.raises(SizeLimitError):
        recursive_power(cycle(5), C5_SEQ, 3, max_vertices=100)


def test_power_adjacency_rule():
    g = path(3)
    gp, _ = recursive_power(g, sequence_for(g), 2)
    for x in range(9):
        for y in range(x + 1, 9):
            a, b = power_coords(x, 3, 2), power_coords(y, 3, 2)
            i = 0 if a[0] != b[0] else 1
            assert gp.has_edge(x, y) == g.has_edge(a[i], b[i])
    assert power_vertex((2, 1), 3) == 7


@given(graphs(max_n=5))
def test_power_alpha_squares(g):
    gp, sp = recursive_power(g, sequence_for(g), 2)
    assert brute_alpha(gp, POWER_BUDGET)[0] == brute_alpha(g)[0] ** 2
    assert verify_sequence(gp, sp) == verify_sequence(g, sequence_for(g))


def test_lift_and_extract():
    g = cycle(5)
    lifted = lift_independent_set(g, [0, 2], 2)
    assert len(lifted) == 4
    gp, _ = recursive_power(g, C5_SEQ, 2)
    assert gp.is_independent(lifted)
    back = extract_independent_set(g, lifted, 2)
    assert len(back) == 2 and g.is_independent(back)
    assert lift_independent_set(g, [], 2) == []
    with pytest.raises(ContractViolation):
        lift_independent_set(g, [0, 1], 2)
    with pytest.raises(ContractViolation):
        extract_independent_set(g, [power_vertex((0, 0), 5), power_vertex((1, 0), 5)], 2)


@given(graphs(max_n=6), st.integers(1, 3))
def test_extract_after_lift(g, t):
    _, I = brute_alpha(g)
    lifted = lift_independent_set(g, I, t)
    back = extract_independent_set(g, lifted, t)
    assert g.is_independent(back) and len(back) >= len(I)


def test_power_graph_examples():
    assert power_graph(path(4), 1) == path(4)
    assert power_graph(path(4), 2).sorted_edges() == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    assert power_graph(cycle(6), 3) == complete(6)
    with pytest.raises(InputError):
        power_graph(path(3), 0)
