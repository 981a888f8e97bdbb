import math
import random
from fractions import Fraction

import pytest

from cliquelab.errors import DomainError
from cliquelab.graphs import (
    Graph,
    GnpParams,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    graph_from_edges,
    is_clique_set,
    read_dimacs,
    sample_gnp,
    sample_gnp_reference,
    validate_graph,
    write_dimacs,
)
from conftest import random_graph


def test_p_one_gives_complete_graph():
    g = sample_gnp(GnpParams(5, Fraction(1), seed=123))
    assert g.edge_count() == 10
    assert g == complete_graph(5)


def test_p_zero_gives_edgeless_graph():
    g = sample_gnp(GnpParams(5, Fraction(0), seed=123))
    assert g.edge_count() == 0


def test_same_seed_same_graph_different_seed_differs():
    a = sample_gnp(GnpParams(60, Fraction(1, 2), seed=7))
    b = sample_gnp(GnpParams(60, Fraction(1, 2), seed=7))
    c = sample_gnp(GnpParams(60, Fraction(1, 2), seed=8))
    assert a == b
    assert a != c


def test_vectorized_sampler_matches_scalar_reference():
    for seed in (0, 1, 9999, 2**63 + 11):
        for n, p in ((1, Fraction(1, 2)), (17, Fraction(1, 3)), (40, Fraction(9, 10))):
            params = GnpParams(n, p, seed)
            assert sample_gnp(params) == sample_gnp_reference(params)


def test_sampled_graphs_are_valid():
    for seed in range(5):
        validate_graph(sample_gnp(GnpParams(37, Fraction(2, 7), seed)))


def test_edge_count_mean_matches_binomial():
    # mean over 10000 draws at n=100, p=3/10 within 3 standard deviations
    # of the mean of Binomial(4950, 3/10)
    n, p, draws = 100, Fraction(3, 10), 10000
    m = n * (n - 1) // 2
    total = 0
    for i in range(draws):
        total += sample_gnp(GnpParams(n, p, seed=i)).edge_count()
    mean = total / draws
    expected = float(p) * m
    sigma_of_mean = math.sqrt(m * float(p) * (1 - float(p)) / draws)
    assert abs(mean - expected) <= 3 * sigma_of_mean


def test_gnp_params_validation():
    with pytest.raises(DomainError):
        GnpParams(5, Fraction(3, 2), 0)
    with pytest.raises(DomainError):
        GnpParams(5, Fraction(-1, 2), 0)
    with pytest.raises(DomainError):
        GnpParams(5, Fraction(1, 2), 2**64)
    with pytest.raises(DomainError):
        GnpParams(-1, Fraction(1, 2), 0)


def test_graph_from_edges_examples():
    k3 = graph_from_edges(3, [(1, 2), (2, 3), (1, 3)])
    assert k3 == complete_graph(3)
    assert graph_from_edges(4, []).edge_count() == 0
    with pytest.raises(DomainError):
        graph_from_edges(2, [(1, 1)])
    with pytest.raises(DomainError):
        graph_from_edges(3, [(1, 4)])
    # duplicates collapse
    g = graph_from_edges(3, [(1, 2), (2, 1), (1, 2)])
    assert g.edge_count() == 1


def test_is_clique_set_on_cycle():
    c5 = cycle_graph(5)
    assert is_clique_set(c5, {0, 1})
    assert not is_clique_set(c5, {0, 1, 2})
    assert is_clique_set(c5, set())
    assert is_clique_set(c5, {3})
    with pytest.raises(DomainError):
        is_clique_set(c5, {5})


def test_dimacs_parse_example():
    text = "c tiny complete graph\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"
    assert read_dimacs(text) == complete_graph(3)


def test_dimacs_round_trip(rng):
    for _ in range(25):
        g = random_graph(rng, rng.randint(0, 15), rng.random())
        assert read_dimacs(write_dimacs(g)) == g


def test_dimacs_errors():
    with pytest.raises(DomainError):
        read_dimacs("p edge 3 1\ne 1 4\n")  # endpoint out of range
    with pytest.raises(DomainError):
        read_dimacs("e 1 2\n")  # edge before header
    with pytest.raises(DomainError):
        read_dimacs("p edge x 3\n")  # malformed header
    with pytest.raises(DomainError):
        read_dimacs("c nothing else\n")  # missing header
    with pytest.raises(DomainError):
        read_dimacs("p edge 3 0\np edge 3 0\n")  # duplicate header
    with pytest.raises(DomainError):
        read_dimacs("p edge 3 1\ne 2 2\n")  # self-loop


def test_validate_graph_rejects_bad_rows():
    with pytest.raises(DomainError):
        validate_graph(Graph(2, (0b10, 0b00)))  # asymmetric
    with pytest.raises(DomainError):
        validate_graph(Graph(2, (0b01, 0b10)))  # self-loops
    with pytest.raises(DomainError):
        validate_graph(Graph(1, (0b10,)))  # bit out of range


def test_constructors_give_valid_graphs(rng):
    validate_graph(complete_graph(6))
    validate_graph(cycle_graph(7))
    validate_graph(edgeless_graph(4))
    validate_graph(graph_from_edges(5, [(1, 2), (4, 5)]))
    for _ in range(10):
        validate_graph(random_graph(rng, rng.randint(0, 20)))
