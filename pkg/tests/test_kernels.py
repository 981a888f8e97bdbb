"""Backend contract tests: the pure and compiled kernels must agree on
everything except the identity of the maximum-clique witness."""

import random
from fractions import Fraction

import pytest

from cliquelab import _pykernels, kernels
from cliquelab.errors import BudgetExceededError, EnumerationCapError
from cliquelab.graphs import GnpParams, complete_graph, sample_gnp
from conftest import oracle_is_clique, random_graph

try:
    from cliquelab import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels else [])


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
def test_max_clique_on_known_graphs(backend):
    k5 = complete_graph(5)
    assert backend.max_clique(k5.n, k5.rows)[0] == 5
    assert backend.max_clique(0, ())[0] == 0
    omega, wit = backend.max_clique(1, (0,))
    assert omega == 1 and wit == 1


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
def test_witness_is_a_clique_of_size_omega(backend, rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 30), rng.random())
        omega, wit = backend.max_clique(g.n, g.rows)
        vs = [v for v in range(g.n) if wit >> v & 1]
        assert len(vs) == omega
        assert oracle_is_clique(g, vs)


def test_backend_parity_across_sizes(rng):
    if _ckernels is None:
        pytest.skip("compiled backend not built")
    for trial in range(60):
        n = rng.randint(0, 80)
        g = sample_gnp(GnpParams(n, Fraction(1, 2), seed=trial))
        assert _ckernels.max_clique(n, g.rows)[0] == _pykernels.max_clique(n, g.rows)[0]
        assert _ckernels.maximal_cliques(n, g.rows) == _pykernels.maximal_cliques(n, g.rows)
        assert _ckernels.clique_f_vector(n, g.rows) == _pykernels.clique_f_vector(n, g.rows)
        for k in (0, 1, n // 2, n, n + 1):
            assert _ckernels.has_clique(n, g.rows, k) == _pykernels.has_clique(n, g.rows, k)


def test_word_boundary_sizes():
    # n = 63, 64, 65 straddle the u64 word boundary
    for n in (63, 64, 65):
        g = complete_graph(n)
        assert kernels.max_clique(g.n, g.rows)[0] == n
        assert kernels.has_clique(g.n, g.rows, n)
        assert not kernels.has_clique(g.n, g.rows, n + 1)
        assert len(kernels.maximal_cliques(g.n, g.rows)) == 1


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
def test_node_budget_raises(backend):
    g = sample_gnp(GnpParams(40, Fraction(1, 2), seed=5))
    with pytest.raises(BudgetExceededError):
        backend.max_clique(g.n, g.rows, 3)
    with pytest.raises(BudgetExceededError):
        backend.has_clique(g.n, g.rows, 10, 3)
    # generous budget succeeds
    assert backend.max_clique(g.n, g.rows, 10**9)[0] >= 4


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
def test_enumeration_cap_raises(backend):
    g = sample_gnp(GnpParams(30, Fraction(1, 2), seed=6))
    full = backend.maximal_cliques(g.n, g.rows)
    assert len(full) > 5
    with pytest.raises(EnumerationCapError):
        backend.maximal_cliques(g.n, g.rows, 5)
    assert backend.maximal_cliques(g.n, g.rows, len(full)) == full
