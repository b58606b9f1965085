import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from twinwidth.dominating import k_dominating_set, k_r_dominating_set
from twinwidth.errors import InputError
from twinwidth.generators import complete, cycle, path, star
from twinwidth.graph import Graph
from twinwidth.independent import DPStats
from twinwidth.oracles import brute_gamma
from twinwidth.sequence import ContractionSequence
from twinwidth.toolkit import SequenceSearchConfig, cograph_sequence, greedy_sequence, power_graph


def greedy(g, seed=0):
    return greedy_sequence(g, SequenceSearchConfig(rng_seed=seed))


def test_examples():
    s = star(5)
    assert k_dominating_set(s, cograph_sequence(s), 1) == [0]
    assert k_dominating_set(Graph(1), ContractionSequence(1, ()), 1) == [0]
    S = k_dominating_set(cycle(5), greedy(cycle(5)), 2)
    assert len(S) == 2 and cycle(5).is_dominating(S)
    assert k_dominating_set(cycle(5), greedy(cycle(5)), 1) is None


def test_rejects_partial_sequence_and_bad_k():
    with pytest.raises(InputError):
        k_dominating_set(path(4), ContractionSequence(4, ((0, 1),)), 2)
    with pytest.raises(InputError):
        k_dominating_set(path(4), greedy(path(4)), 0)


def test_distance_variant():
    assert k_r_dominating_set(path(5), 2, 1) == [2]
    S = k_r_dominating_set(path(7), 10, 1)
    assert len(S) == 1
    S = k_r_dominating_set(cycle(6), 1, 2)
    assert len(S) == 2 == brute_gamma(cycle(6))[0]
    with pytest.raises(InputError):
        k_r_dominating_set(path(5), 0, 1)


@given(graphs(max_n=9), st.integers(0, 1000))
def test_matches_oracle_with_profile_checks(g, seed):
    seq = greedy(g, seed)
    gamma = brute_gamma(g)[0]
    for k in range(1, g.n + 1):
        S = k_dominating_set(g, seq, k, check=True)
        if k < gamma:
            assert S is None
        else:
            assert S is not None and g.is_dominating(S) and len(S) == gamma


@given(graphs(max_n=8), st.integers(2, 3), st.integers(1, 3))
def test_distance_variant_matches_power_oracle(g, r, k):
    p = power_graph(g, r)
    S = k_r_dominating_set(g, r, k)
    gamma = brute_gamma(p)[0]
    assert (S is not None) == (gamma <= k)
    if S is not None:
        assert p.is_dominating(S) and len(S) == gamma


def test_counters():
    st_ = DPStats()
    k_dominating_set(complete(6), greedy(complete(6)), 2, stats=st_)
    assert st_.steps == 5 and st_.generated > 0
