"""Pure-Python BFS kernels; the fallback twin of the compiled ``_speedups``.

Works on vertex ids only.  Words are decoded, neighbours generated
arithmetically, and successors re-encoded per step, so no adjacency is ever
materialized.  ``cycleprefix.kernel`` selects between this module and the
compiled one at import time.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def _check_params(n: int, d: int, r: int) -> None:
    if r < 0 or d < r + 2 or n < d + 1:
        raise ValueError(f"invalid kernel parameters n={n}, d={d}, r={r}")


def _falling(n: int, d: int) -> int:
    out = 1
    for i in range(d):
        out *= n - i
    return out


def _suffix_counts(n: int, d: int) -> list[int]:
    suffix = [1] * d
    for i in range(d - 2, -1, -1):
        suffix[i] = suffix[i + 1] * (n - 1 - i)
    return suffix


def _rank_word(word: list[int], suffix: list[int]) -> int:
    out = 0
    for i, s in enumerate(word):
        smaller = s - 1
        for t in word[:i]:
            if t < s:
                smaller -= 1
        out += smaller * suffix[i]
    return out


def _unrank_word(idx: int, n: int, d: int, suffix: list[int]) -> list[int]:
    avail = list(range(1, n + 1))
    word = []
    rem = idx
    for i in range(d):
        q, rem = divmod(rem, suffix[i])
        word.append(avail.pop(q))
    return word


def _neighbor_ids(word, n, d, r, suffix, reverse):
    ids = []
    present = set(word)
    if not reverse:
        for k in range(r + 2, d + 1):
            ids.append(_rank_word([word[k - 1]] + word[: k - 1] + word[k:], suffix))
        head = word[: d - 1]
        for m in range(1, n + 1):
            if m not in present:
                ids.append(_rank_word([m] + head, suffix))
    else:
        for k in range(r + 2, d + 1):
            ids.append(_rank_word(word[1:k] + [word[0]] + word[k:], suffix))
        tail = word[1:]
        for m in range(1, n + 1):
            if m not in present:
                ids.append(_rank_word(tail + [m], suffix))
    return ids


def distances(n: int, d: int, r: int, source: int, reverse: bool = False) -> np.ndarray:
    """BFS step counts from ``source`` to every vertex id; -1 = unreachable.

    With ``reverse=True`` arcs are walked backwards, giving distances TO
    ``source`` instead.
    """
    _check_params(n, d, r)
    count = _falling(n, d)
    if not 0 <= source < count:
        raise ValueError(f"source id {source} outside [0, {count})")
    suffix = _suffix_counts(n, d)
    dist = [-1] * count
    dist[source] = 0
    queue = [source]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        du = dist[u] + 1
        word = _unrank_word(u, n, d, suffix)
        for nb in _neighbor_ids(word, n, d, r, suffix, reverse):
            if dist[nb] < 0:
                dist[nb] = du
                queue.append(nb)
    return np.array(dist, dtype=np.int64)


def eccentricity_range(n: int, d: int, r: int, start: int, stop: int) -> np.ndarray:
    """Eccentricity of each source id in [start, stop); -1 marks a source
    that cannot reach the whole digraph."""
    _check_params(n, d, r)
    count = _falling(n, d)
    if not 0 <= start <= stop <= count:
        raise ValueError(f"bad source range [{start}, {stop}) for count {count}")
    out = np.empty(stop - start, dtype=np.int64)
    for i, src in enumerate(range(start, stop)):
        dist = distances(n, d, r, src)
        out[i] = -1 if (dist < 0).any() else int(dist.max())
    return out


def successors(n: int, d: int, r: int, vid: int) -> np.ndarray:
    """Out-neighbour ids of ``vid`` in canonical order (rotations by
    ascending k, then shifts by ascending symbol)."""
    _check_params(n, d, r)
    count = _falling(n, d)
    if not 0 <= vid < count:
        raise ValueError(f"vertex id {vid} outside [0, {count})")
    suffix = _suffix_counts(n, d)
    word = _unrank_word(vid, n, d, suffix)
    return np.array(_neighbor_ids(word, n, d, r, suffix, False), dtype=np.int64)


def predecessors(n: int, d: int, r: int, vid: int) -> np.ndarray:
    """In-neighbour ids of ``vid``, ordered to mirror successors()."""
    _check_params(n, d, r)
    count = _falling(n, d)
    if not 0 <= vid < count:
        raise ValueError(f"vertex id {vid} outside [0, {count})")
    suffix = _suffix_counts(n, d)
    word = _unrank_word(vid, n, d, suffix)
    return np.array(_neighbor_ids(word, n, d, r, suffix, True), dtype=np.int64)
