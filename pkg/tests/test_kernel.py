"""Backend parity: the pure and compiled kernels must agree with each other
and with the tuple-level adjacency in core."""

import numpy as np
import pytest

import cycleprefix._pykernel as pykernel
from cycleprefix import Params, in_neighbors, out_neighbors, rank, unrank, vertices
from helpers import nx_digraph

try:
    import cycleprefix._speedups as speedups

    BACKENDS = [pykernel, speedups]
except ImportError:  # built without a compiler
    speedups = None
    BACKENDS = [pykernel]

INSTANCES = [Params(2, 2, 0), Params(3, 2, 0), Params(3, 3, 0), Params(4, 4, 1)]


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
@pytest.mark.parametrize("params", INSTANCES, ids=str)
def test_successors_match_core(backend, params):
    for i, v in enumerate(vertices(params)):
        expected = [rank(params, nb) for _, nb in out_neighbors(params, v)]
        got = backend.successors(params.n, params.d, params.r, i)
        assert got.tolist() == expected


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
@pytest.mark.parametrize("params", INSTANCES, ids=str)
def test_predecessors_match_core(backend, params):
    for i, v in enumerate(vertices(params)):
        expected = [rank(params, u) for _, u in in_neighbors(params, v)]
        got = backend.predecessors(params.n, params.d, params.r, i)
        assert got.tolist() == expected


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
@pytest.mark.parametrize("params", [Params(3, 3, 0), Params(4, 4, 1)], ids=str)
def test_distances_match_networkx(backend, params):
    import networkx as nx

    g = nx_digraph(params)
    for src in range(0, params.count, 7):
        expected = nx.single_source_shortest_path_length(g, src)
        dist = backend.distances(params.n, params.d, params.r, src)
        for vid in range(params.count):
            assert dist[vid] == expected.get(vid, -1)


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
def test_reverse_distances_transpose(backend):
    params = Params(3, 3, 0)
    n, d, r = params.n, params.d, params.r
    forward = np.stack([backend.distances(n, d, r, s) for s in range(params.count)])
    for t in range(params.count):
        backward = backend.distances(n, d, r, t, True)
        assert backward.tolist() == forward[:, t].tolist()


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
def test_eccentricity_range_consistent_with_distances(backend):
    params = Params(3, 3, 0)
    n, d, r = params.n, params.d, params.r
    ecc = backend.eccentricity_range(n, d, r, 0, params.count)
    for s in range(params.count):
        dist = backend.distances(n, d, r, s)
        assert ecc[s] == int(dist.max())
        assert (dist >= 0).all()


@pytest.mark.parametrize("backend", BACKENDS, ids=lambda b: b.BACKEND_NAME)
def test_rejects_bad_arguments(backend):
    with pytest.raises(ValueError):
        backend.distances(3, 2, 0, 6)  # source out of range
    with pytest.raises(ValueError):
        backend.distances(3, 3, 0, 0)  # n < d + 1
    with pytest.raises(ValueError):
        backend.eccentricity_range(3, 2, 0, 0, 7)  # stop beyond count


@pytest.mark.skipif(speedups is None, reason="compiled kernel not built")
@pytest.mark.parametrize("params", INSTANCES, ids=str)
def test_backends_agree(params):
    n, d, r = params.n, params.d, params.r
    for src in range(0, params.count, 5):
        a = pykernel.distances(n, d, r, src)
        b = speedups.distances(n, d, r, src)
        assert a.tolist() == b.tolist()
        a = pykernel.distances(n, d, r, src, True)
        b = speedups.distances(n, d, r, src, True)
        assert a.tolist() == b.tolist()
    assert (
        pykernel.eccentricity_range(n, d, r, 0, params.count).tolist()
        == speedups.eccentricity_range(n, d, r, 0, params.count).tolist()
    )


def test_unrank_agrees_with_kernel_round_trip():
    params = Params(5, 4, 0)
    for backend in BACKENDS:
        ids = backend.successors(params.n, params.d, params.r, 0)
        labels = [nb for _, nb in out_neighbors(params, unrank(params, 0))]
        assert [unrank(params, int(i)) for i in ids] == labels
