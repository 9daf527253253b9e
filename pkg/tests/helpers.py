"""Shared test utilities: independent oracles kept deliberately naive."""

import itertools

import networkx as nx

from cycleprefix import Params, out_neighbors, rank


def enumerate_words(params: Params):
    """Independent enumeration oracle: all valid words in lexicographic order,
    built by filtering itertools output rather than by rank arithmetic."""
    words = list(itertools.permutations(range(1, params.n + 1), params.d))
    assert words == sorted(words)
    return words


def nx_digraph(params: Params) -> nx.DiGraph:
    """The digraph as a networkx object over vertex ids (for distance oracles)."""
    g = nx.DiGraph()
    for i, v in enumerate(enumerate_words(params)):
        g.add_node(i)
        for _, nb in out_neighbors(params, v):
            g.add_edge(i, rank(params, nb))
    return g


def all_arcs(params: Params):
    """Every arc as (source word, label, target word)."""
    for v in enumerate_words(params):
        for label, nb in out_neighbors(params, v):
            yield v, label, nb
