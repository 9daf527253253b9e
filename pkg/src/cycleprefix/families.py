"""Reference models the digraph coincides with in special cases.

When delta == d every vertex omits exactly one symbol, so completing it
gives a full permutation and the digraph becomes a Cayley graph of the
symmetric group; when d == 2 it is the Kautz digraph in its prepend
convention.  Both identities are implemented from scratch, independent of
the rotation/shift machinery, so they double as cross-checks on the core.
"""

from __future__ import annotations

from .core import Params, Rotation, Vertex, check_vertex, out_neighbors, vertices

SnElement = tuple[int, ...]


def complete_to_sn(params: Params, v) -> SnElement:
    """Append the unique missing symbol (requires delta == d).

    The result is the vertex read as the first d values of a full
    permutation of {1, ..., n} in one-line notation; the map is a bijection
    between vertices and the symmetric group.
    """
    if params.delta != params.d:
        raise ValueError("completion to a full permutation needs delta == d")
    v = check_vertex(params, v)
    missing = set(range(1, params.n + 1)).difference(v)
    return v + (missing.pop(),)


def _invert(p: SnElement) -> SnElement:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x - 1] = i + 1
    return tuple(inv)


def _compose(p: SnElement, q: SnElement) -> SnElement:
    """(p after q): x -> p(q(x)), one-line notation."""
    return tuple(p[q[x - 1] - 1] for x in range(1, len(p) + 1))


def cycle_generator(n: int, k: int) -> SnElement:
    """One-line form of the cycle (1 2 ... k) inside the symmetric group on n."""
    if not 2 <= k <= n:
        raise ValueError(f"cycle length {k} outside 2..{n}")
    return tuple(range(2, k + 1)) + (1,) + tuple(range(k + 1, n + 1))


def check_cayley_correspondence(params: Params) -> bool:
    """Verify the Cayley-graph identity for delta == d, r == 0.

    Convention: encode each vertex by the INVERSE of its completed one-line
    permutation.  Under that encoding, following the rotation arc R_k
    multiplies on the left by the cycle (1 2 ... k), and the single shift
    arc multiplies by the full cycle (1 2 ... n).  The check asserts this
    arc-for-arc, label for label, over the whole digraph.
    """
    if params.delta != params.d or params.r != 0:
        raise ValueError("Cayley correspondence needs delta == d and r == 0")
    n, d = params.n, params.d
    generators = {k: cycle_generator(n, k) for k in range(2, n + 1)}
    for v in vertices(params):
        tau = _invert(complete_to_sn(params, v))
        expected: dict[int, Vertex] = {}
        for k, g in generators.items():
            target_inv = _compose(g, tau)
            expected[k] = _invert(target_inv)[:d]
        for label, nb in out_neighbors(params, v):
            k = label.k if isinstance(label, Rotation) else n
            if expected[k] != nb:
                return False
        if len(out_neighbors(params, v)) != len(generators):
            return False
    return True


def kautz_out_neighbors(params: Params, v) -> list[Vertex]:
    """Kautz adjacency for d == 2 in the prepend convention: all words y1.y2
    with y2 equal to the first symbol of v and y1 != y2.  Computed from the
    Kautz rule alone, not from rotations and shifts."""
    if params.d != 2:
        raise ValueError("the Kautz reference model covers only d == 2")
    v = check_vertex(params, v)
    return [(y1, v[0]) for y1 in range(1, params.n + 1) if y1 != v[0]]
