# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled BFS kernels for cycle prefix digraphs.

Hot loops only: word rank/unrank arithmetic and breadth-first sweeps over
vertex ids.  Mirrors ``_pykernel`` exactly; ``cycleprefix.kernel`` picks
whichever is available at import time.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

import numpy as np

BACKEND_NAME = "compiled"


cdef void _fill_suffix(int n, int d, long long* suffix) noexcept nogil:
    cdef int i
    suffix[d - 1] = 1
    for i in range(d - 2, -1, -1):
        suffix[i] = suffix[i + 1] * (n - 1 - i)


cdef inline long long _rank_word(const int* w, int d, const long long* suffix) noexcept nogil:
    cdef long long out = 0
    cdef int i, j, smaller
    for i in range(d):
        smaller = 0
        for j in range(i):
            if w[j] < w[i]:
                smaller += 1
        out += <long long> (w[i] - 1 - smaller) * suffix[i]
    return out


cdef inline void _unrank_word(long long idx, int n, int d, const long long* suffix,
                              int* word, unsigned char* mark) noexcept nogil:
    # Fills word[0..d-1]; afterwards mark[s] == 1 exactly for the word's
    # symbols (the shift loops below reuse that).
    cdef long long rem = idx
    cdef int i, q, s
    memset(mark, 0, n + 1)
    for i in range(d):
        q = <int> (rem / suffix[i])
        rem -= q * suffix[i]
        s = 0
        while True:
            s += 1
            if mark[s] == 0:
                if q == 0:
                    break
                q -= 1
        word[i] = s
        mark[s] = 1


cdef long long _bfs_fill(int n, int d, int r, long long source, bint reverse,
                         long long* dist, long long* queue,
                         int* word, int* tmp, unsigned char* mark,
                         const long long* suffix) noexcept nogil:
    # dist must be pre-filled with -1; returns the number of vertices reached.
    cdef long long head = 0, tail = 0, u, nb, du
    cdef int k, j, m
    dist[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        _unrank_word(u, n, d, suffix, word, mark)
        if not reverse:
            for k in range(r + 2, d + 1):
                tmp[0] = word[k - 1]
                for j in range(1, k):
                    tmp[j] = word[j - 1]
                for j in range(k, d):
                    tmp[j] = word[j]
                nb = _rank_word(tmp, d, suffix)
                if dist[nb] < 0:
                    dist[nb] = du
                    queue[tail] = nb
                    tail += 1
            for j in range(1, d):
                tmp[j] = word[j - 1]
            for m in range(1, n + 1):
                if mark[m] == 0:
                    tmp[0] = m
                    nb = _rank_word(tmp, d, suffix)
                    if dist[nb] < 0:
                        dist[nb] = du
                        queue[tail] = nb
                        tail += 1
        else:
            for k in range(r + 2, d + 1):
                for j in range(k - 1):
                    tmp[j] = word[j + 1]
                tmp[k - 1] = word[0]
                for j in range(k, d):
                    tmp[j] = word[j]
                nb = _rank_word(tmp, d, suffix)
                if dist[nb] < 0:
                    dist[nb] = du
                    queue[tail] = nb
                    tail += 1
            for j in range(d - 1):
                tmp[j] = word[j + 1]
            for m in range(1, n + 1):
                if mark[m] == 0:
                    tmp[d - 1] = m
                    nb = _rank_word(tmp, d, suffix)
                    if dist[nb] < 0:
                        dist[nb] = du
                        queue[tail] = nb
                        tail += 1
    return head


def _checked_count(int n, int d, int r):
    if r < 0 or d < r + 2 or n < d + 1:
        raise ValueError(f"invalid kernel parameters n={n}, d={d}, r={r}")
    count = 1
    for i in range(d):
        count *= n - i
    if count > 2**62:
        raise ValueError("instance too large for 64-bit vertex ids")
    return count


cdef class _Workspace:
    # Scratch buffers shared by the BFS sweeps of one kernel call.
    cdef long long* suffix
    cdef int* word
    cdef int* tmp
    cdef unsigned char* mark

    def __cinit__(self, int n, int d):
        self.suffix = <long long*> malloc(d * sizeof(long long))
        self.word = <int*> malloc(d * sizeof(int))
        self.tmp = <int*> malloc(d * sizeof(int))
        self.mark = <unsigned char*> malloc(n + 1)
        if (self.suffix == NULL or self.word == NULL
                or self.tmp == NULL or self.mark == NULL):
            raise MemoryError()
        _fill_suffix(n, d, self.suffix)

    def __dealloc__(self):
        free(self.suffix)
        free(self.word)
        free(self.tmp)
        free(self.mark)


def distances(int n, int d, int r, long long source, bint reverse=False):
    """BFS step counts from ``source`` to every vertex id; -1 = unreachable.

    With ``reverse=True`` arcs are walked backwards, giving distances TO
    ``source`` instead.
    """
    cdef long long count = _checked_count(n, d, r)
    if source < 0 or source >= count:
        raise ValueError(f"source id {source} outside [0, {count})")
    dist_arr = np.full(count, -1, dtype=np.int64)
    queue_arr = np.empty(count, dtype=np.int64)
    cdef long long[::1] dist = dist_arr
    cdef long long[::1] queue = queue_arr
    cdef _Workspace ws = _Workspace(n, d)
    with nogil:
        _bfs_fill(n, d, r, source, reverse, &dist[0], &queue[0],
                  ws.word, ws.tmp, ws.mark, ws.suffix)
    return dist_arr


def eccentricity_range(int n, int d, int r, long long start, long long stop):
    """Eccentricity of each source id in [start, stop); -1 marks a source
    that cannot reach the whole digraph."""
    cdef long long count = _checked_count(n, d, r)
    if start < 0 or start > stop or stop > count:
        raise ValueError(f"bad source range [{start}, {stop}) for count {count}")
    out_arr = np.empty(stop - start, dtype=np.int64)
    if stop == start:
        return out_arr
    dist_arr = np.empty(count, dtype=np.int64)
    queue_arr = np.empty(count, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef long long[::1] dist = dist_arr
    cdef long long[::1] queue = queue_arr
    cdef _Workspace ws = _Workspace(n, d)
    cdef long long src, reached, i, best
    with nogil:
        for src in range(start, stop):
            memset(&dist[0], 0xFF, count * sizeof(long long))
            reached = _bfs_fill(n, d, r, src, False, &dist[0], &queue[0],
                                ws.word, ws.tmp, ws.mark, ws.suffix)
            if reached < count:
                out[src - start] = -1
            else:
                best = 0
                for i in range(count):
                    if dist[i] > best:
                        best = dist[i]
                out[src - start] = best
    return out_arr


def _neighbor_ids(int n, int d, int r, long long vid, bint reverse):
    cdef long long count = _checked_count(n, d, r)
    if vid < 0 or vid >= count:
        raise ValueError(f"vertex id {vid} outside [0, {count})")
    cdef _Workspace ws = _Workspace(n, d)
    cdef int k, j, m
    ids = []
    _unrank_word(vid, n, d, ws.suffix, ws.word, ws.mark)
    if not reverse:
        for k in range(r + 2, d + 1):
            ws.tmp[0] = ws.word[k - 1]
            for j in range(1, k):
                ws.tmp[j] = ws.word[j - 1]
            for j in range(k, d):
                ws.tmp[j] = ws.word[j]
            ids.append(_rank_word(ws.tmp, d, ws.suffix))
        for j in range(1, d):
            ws.tmp[j] = ws.word[j - 1]
        for m in range(1, n + 1):
            if ws.mark[m] == 0:
                ws.tmp[0] = m
                ids.append(_rank_word(ws.tmp, d, ws.suffix))
    else:
        for k in range(r + 2, d + 1):
            for j in range(k - 1):
                ws.tmp[j] = ws.word[j + 1]
            ws.tmp[k - 1] = ws.word[0]
            for j in range(k, d):
                ws.tmp[j] = ws.word[j]
            ids.append(_rank_word(ws.tmp, d, ws.suffix))
        for j in range(d - 1):
            ws.tmp[j] = ws.word[j + 1]
        for m in range(1, n + 1):
            if ws.mark[m] == 0:
                ws.tmp[d - 1] = m
                ids.append(_rank_word(ws.tmp, d, ws.suffix))
    return np.array(ids, dtype=np.int64)


def successors(int n, int d, int r, long long vid):
    """Out-neighbour ids of ``vid`` in canonical order (rotations by
    ascending k, then shifts by ascending symbol)."""
    return _neighbor_ids(n, d, r, vid, False)


def predecessors(int n, int d, int r, long long vid):
    """In-neighbour ids of ``vid``, ordered to mirror successors()."""
    return _neighbor_ids(n, d, r, vid, True)
