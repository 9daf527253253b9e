"""Metric properties and routing: BFS distances, diameter, canonical paths.

Distances run over flat arrays indexed by vertex id with arithmetically
generated neighbours (see ``kernel``), so memory stays at a few machine
words per vertex.  The routing helpers return explicit ``Path`` objects
whose arcs can be re-validated against the digraph.
"""

from __future__ import annotations

import concurrent.futures
import os
from dataclasses import dataclass

import numpy as np

from . import kernel
from .core import (
    ArcLabel,
    Params,
    ResourceLimitError,
    Rotation,
    Shift,
    Vertex,
    apply_label,
    check_vertex,
    classify_arc,
    out_neighbors,
    rank,
    unrank,
)

#: sentinel used in distance arrays
UNREACHABLE = -1

#: default vertex-count guard for all-pairs work (override with force=True)
ALL_PAIRS_GUARD = 10**6

#: environment variable capping parallel workers for all-pairs sweeps
WORKERS_ENV = "CYCLEPREFIX_WORKERS"


@dataclass(frozen=True)
class DistanceTable:
    """Exact directed shortest-path distances from one source vertex.

    ``dist[i]`` is the step count from the source to vertex id ``i``, or
    ``UNREACHABLE`` (-1).  ``dist[source] == 0`` and every arc (u, v)
    satisfies ``dist[v] <= dist[u] + 1``.
    """

    source: int
    dist: np.ndarray

    def __getitem__(self, vid: int) -> int:
        return int(self.dist[vid])

    def eccentricity(self) -> int:
        """Largest distance; raises when some vertex is unreachable."""
        if (self.dist < 0).any():
            raise ValueError(f"source {self.source} does not reach every vertex")
        return int(self.dist.max())


@dataclass(frozen=True)
class Path:
    """A directed walk: applying labels[i] to vertices[i] gives vertices[i+1]."""

    vertices: tuple[Vertex, ...]
    labels: tuple[ArcLabel, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.labels) + 1:
            raise ValueError("a path needs exactly one more vertex than labels")

    @property
    def length(self) -> int:
        return len(self.labels)

    @property
    def start(self) -> Vertex:
        return self.vertices[0]

    @property
    def end(self) -> Vertex:
        return self.vertices[-1]

    def check(self, params: Params) -> "Path":
        """Verify every step is a real arc carrying the recorded label."""
        for i, label in enumerate(self.labels):
            found = classify_arc(params, self.vertices[i], self.vertices[i + 1])
            if found != label:
                raise ValueError(
                    f"step {i}: {self.vertices[i]} -> {self.vertices[i + 1]} "
                    f"is labelled {label} but classifies as {found}"
                )
        return self


def bfs_distances(params: Params, source) -> DistanceTable:
    """Exact directed distances from ``source`` to every vertex."""
    sid = rank(params, source)
    return DistanceTable(sid, kernel.distances(params.n, params.d, params.r, sid))


def distance(params: Params, u, v) -> int:
    """Directed distance from u to v; UNREACHABLE (-1) when there is none."""
    table = bfs_distances(params, u)
    return table[rank(params, v)]


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or "1")
    return max(1, min(workers, os.cpu_count() or 1))


def _ecc_chunk(args: tuple[int, int, int, int, int]) -> np.ndarray:
    n, d, r, start, stop = args
    return kernel.eccentricity_range(n, d, r, start, stop)


def eccentricities(params: Params, workers: int | None = None) -> np.ndarray:
    """Eccentricity of every vertex (UNREACHABLE where BFS cannot cover).

    ``workers`` (default: the CYCLEPREFIX_WORKERS env var, else 1) splits
    the sources over processes; the result is identical to a sequential
    sweep because chunks are concatenated in source order.
    """
    count = params.count
    workers = _resolve_workers(workers)
    if workers <= 1 or count < 4 * workers:
        return kernel.eccentricity_range(params.n, params.d, params.r, 0, count)
    bounds = np.linspace(0, count, workers + 1, dtype=np.int64)
    jobs = [
        (params.n, params.d, params.r, int(bounds[i]), int(bounds[i + 1]))
        for i in range(workers)
    ]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_ecc_chunk, jobs))
    return np.concatenate(parts)


def diameter(
    params: Params,
    max_vertices: int = ALL_PAIRS_GUARD,
    force: bool = False,
    workers: int | None = None,
) -> int:
    """All-pairs diameter by repeated BFS; guarded by ``max_vertices``."""
    if params.count > max_vertices and not force:
        raise ResourceLimitError(
            f"{params.count} vertices exceeds the all-pairs guard "
            f"{max_vertices}; pass force to run anyway"
        )
    ecc = eccentricities(params, workers=workers)
    if (ecc < 0).any():
        raise ValueError("digraph is not strongly connected; diameter undefined")
    return int(ecc.max())


def is_strongly_connected(params: Params) -> bool:
    """True iff every vertex reaches every other (forward + backward BFS)."""
    forward = kernel.distances(params.n, params.d, params.r, 0)
    if (forward < 0).any():
        return False
    backward = kernel.distances(params.n, params.d, params.r, 0, True)
    return not (backward < 0).any()


def shortest_path(params: Params, u, v) -> Path:
    """A BFS shortest path from u to v with its arc labels.

    Deterministic: each vertex keeps the parent that discovered it first,
    and successors of a dequeued vertex are tried lowest-ranked first.
    """
    u = check_vertex(params, u)
    v = check_vertex(params, v)
    if u == v:
        return Path((u,), ())
    uid = rank(params, u)
    vid = rank(params, v)
    parent: dict[int, tuple[int, ArcLabel] | None] = {uid: None}
    queue = [uid]
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        word = unrank(params, x)
        nbrs = sorted(
            (rank(params, nb), label) for label, nb in out_neighbors(params, word)
        )
        for nbid, label in nbrs:
            if nbid not in parent:
                parent[nbid] = (x, label)
                if nbid == vid:
                    return _reconstruct(params, parent, vid)
                queue.append(nbid)
    raise ValueError(f"no path from {u} to {v}")


def _reconstruct(params: Params, parent, vid: int) -> Path:
    ids = [vid]
    labels: list[ArcLabel] = []
    while parent[ids[-1]] is not None:
        pid, label = parent[ids[-1]]
        ids.append(pid)
        labels.append(label)
    ids.reverse()
    labels.reverse()
    return Path(tuple(unrank(params, i) for i in ids), tuple(labels))


def greedy_route(params: Params, u, v) -> Path:
    """Prefix-building route from u to v of length at most d (r = 0 only).

    Working through the target's symbols right to left, each step prepends
    the next one: a rotation when the symbol is already present, a shift
    otherwise.  Steps whose symbols already sit in place as a prefix of u
    matching the target's tail are skipped, so u == v gives the empty path.
    For r > 0 the needed rotations may not be arcs; use shortest_path.
    """
    if params.r != 0:
        raise ValueError("greedy routing is defined only for r = 0")
    u = check_vertex(params, u)
    v = check_vertex(params, v)
    d = params.d
    overlap = 0
    for t in range(d, 0, -1):
        if u[:t] == v[d - t:]:
            overlap = t
            break
    cur = u
    verts = [u]
    labels: list[ArcLabel] = []
    for j in range(d - overlap, 0, -1):
        s = v[j - 1]
        label: ArcLabel = Rotation(cur.index(s) + 1) if s in cur else Shift(s)
        cur = apply_label(params, label, cur)
        verts.append(cur)
        labels.append(label)
    assert cur == v
    return Path(tuple(verts), tuple(labels))


def path_containing_symbol(params: Params, start, symbol: int) -> Path:
    """Walk from ``start`` (whose first symbol is ``symbol``) to a canonical
    vertex, keeping ``symbol`` present in every vertex along the way.

    For symbol > d the walk prepends d-1, ..., 1 and ends with a full
    rotation, landing on  symbol 1 2 ... (d-1).  For symbol <= d it
    prepends d, ..., 1 and lands on  1 2 ... d.  Each prepend is a rotation
    when its symbol is present, else a shift; with r > 0 a required
    rotation may not be an arc, in which case this raises.
    """
    start = check_vertex(params, start)
    d = params.d
    if start[0] != symbol:
        raise ValueError(f"symbol {symbol} is not the first symbol of {start}")
    if symbol > d:
        target = (symbol,) + tuple(range(1, d))
        prepends = range(d - 1, 0, -1)
        finish_with_full_rotation = True
    else:
        target = tuple(range(1, d + 1))
        prepends = range(d, 0, -1)
        finish_with_full_rotation = False
    if start == target:
        return Path((start,), ())
    cur = start
    verts = [start]
    labels: list[ArcLabel] = []
    for s in prepends:
        if cur[0] == s:
            continue
        if s in cur:
            k = cur.index(s) + 1
            if k < params.r + 2:
                raise ValueError(
                    f"construction needs rotation R_{k}, not an arc for r={params.r}"
                )
            label: ArcLabel = Rotation(k)
        else:
            label = Shift(s)
        cur = apply_label(params, label, cur)
        verts.append(cur)
        labels.append(label)
    if finish_with_full_rotation:
        label = Rotation(d)
        cur = apply_label(params, label, cur)
        verts.append(cur)
        labels.append(label)
    assert cur == target
    assert all(symbol in w for w in verts)
    return Path(tuple(verts), tuple(labels))
