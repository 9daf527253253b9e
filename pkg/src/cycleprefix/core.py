"""Cycle prefix digraphs from their sequence definition.

A vertex of the digraph with parameters ``(delta, d, r)`` is a word of
``d`` distinct symbols from the alphabet ``{1, ..., delta+1}``, stored as a
plain tuple of ints.  Arcs leave a vertex in two ways:

* rotation ``R_k`` moves the symbol at position ``k`` (1-based) to the
  front, sliding positions ``1..k-1`` right by one; legal for
  ``r+2 <= k <= d``;
* shift ``S_m`` prepends a symbol ``m`` that does not occur in the word
  and drops the last symbol.

Every vertex then has in- and out-degree ``delta - r``, and there are
``(delta+1) * delta * ... * (delta-d+2)`` vertices in total.  Nothing here
stores adjacency: neighbours are generated arithmetically on demand, and
vertices are addressed by their lexicographic rank wherever flat arrays
are convenient.  All functions are pure and safe to call concurrently.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Iterator, Optional, Union

Vertex = tuple[int, ...]

#: vertex count above which validate_params() warns (BFS arrays get big)
MEMORY_WARN_THRESHOLD = 10**7


class ResourceLimitError(RuntimeError):
    """An operation refused to run because the instance exceeds its size guard."""


def falling_factorial(n: int, d: int) -> int:
    """n * (n-1) * ... * (n-d+1), the number of d-permutations of n symbols."""
    out = 1
    for i in range(d):
        out *= n - i
    return out


@dataclass(frozen=True)
class Params:
    """Validated parameter triple of a cycle prefix digraph.

    ``delta`` is the degree parameter (alphabet has ``delta+1`` symbols),
    ``d`` the word length, and ``r`` the rotation restriction: rotations
    ``R_k`` are arcs only for ``k >= r+2``.  Construction enforces
    ``delta >= d >= r+2``.
    """

    delta: int
    d: int
    r: int = 0

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"word length d must be positive, got {self.d}")
        if self.r < 0:
            raise ValueError(f"rotation restriction r must be >= 0, got {self.r}")
        if self.delta < self.d:
            raise ValueError(
                f"delta must be >= d, got delta={self.delta}, d={self.d}"
            )
        if self.d < self.r + 2:
            raise ValueError(f"d must be >= r+2, got d={self.d}, r={self.r}")
        if self.count > MEMORY_WARN_THRESHOLD:
            warnings.warn(
                f"instance has {self.count} vertices; flat-array operations "
                f"will need roughly {16 * self.count / 2**30:.1f} GiB",
                stacklevel=3,
            )

    @property
    def n(self) -> int:
        """Alphabet size delta + 1."""
        return self.delta + 1

    @property
    def count(self) -> int:
        """Number of vertices (falling factorial of the alphabet size)."""
        return falling_factorial(self.n, self.d)

    @property
    def degree(self) -> int:
        """Common in- and out-degree delta - r."""
        return self.delta - self.r

    @property
    def claimed_diameter(self) -> int:
        """The diameter d + r these digraphs are known to have."""
        return self.d + self.r


def validate_params(delta: int, d: int, r: int = 0) -> Params:
    """Validate a raw (delta, d, r) triple; raises ValueError when invalid."""
    return Params(delta, d, r)


@dataclass(frozen=True)
class Rotation:
    """Arc label: the symbol at position ``k`` (1-based) moves to the front."""

    k: int

    def __str__(self) -> str:
        return f"R{self.k}"


@dataclass(frozen=True)
class Shift:
    """Arc label: symbol ``m`` is prepended and the last symbol drops off."""

    m: int

    def __str__(self) -> str:
        return f"S{self.m}"


ArcLabel = Union[Rotation, Shift]


def check_vertex(params: Params, v) -> Vertex:
    """Validate a candidate word and return it as a tuple of ints."""
    v = tuple(v)
    if len(v) != params.d:
        raise ValueError(f"vertex must have length {params.d}, got {v}")
    for s in v:
        if not 1 <= s <= params.n:
            raise ValueError(f"symbol {s} outside alphabet 1..{params.n} in {v}")
    if len(set(v)) != len(v):
        raise ValueError(f"repeated symbol in vertex {v}")
    return v


def initial_vertex(params: Params) -> Vertex:
    """The word 1 2 ... d, lexicographically first (rank 0)."""
    return tuple(range(1, params.d + 1))


def vertices(params: Params) -> Iterator[Vertex]:
    """All vertices in lexicographic (= rank) order."""
    return itertools.permutations(range(1, params.n + 1), params.d)


def _suffix_counts(n: int, d: int) -> list[int]:
    # suffix[i] = number of ways to fill positions i+1..d-1 once i+1 symbols
    # are taken; the place values of the mixed-radix rank encoding.
    suffix = [1] * d
    for i in range(d - 2, -1, -1):
        suffix[i] = suffix[i + 1] * (n - 1 - i)
    return suffix


def rank(params: Params, v) -> int:
    """Lexicographic rank of ``v`` among all d-permutations of the alphabet."""
    v = check_vertex(params, v)
    suffix = _suffix_counts(params.n, params.d)
    out = 0
    for i, s in enumerate(v):
        smaller_unused = s - 1 - sum(1 for t in v[:i] if t < s)
        out += smaller_unused * suffix[i]
    return out


def unrank(params: Params, idx: int) -> Vertex:
    """Inverse of rank(): the vertex at position ``idx`` in lex order."""
    if not 0 <= idx < params.count:
        raise ValueError(f"vertex id {idx} outside [0, {params.count})")
    suffix = _suffix_counts(params.n, params.d)
    avail = list(range(1, params.n + 1))
    word = []
    rem = idx
    for i in range(params.d):
        q, rem = divmod(rem, suffix[i])
        word.append(avail.pop(q))
    return tuple(word)


def rotate_any(v: Vertex, k: int) -> Vertex:
    """Rotation R_k without the r-restriction; accepts any 2 <= k <= len(v).

    Needed internally by path constructions that reason about rotations the
    restricted digraph may not contain as arcs.
    """
    if not 2 <= k <= len(v):
        raise ValueError(f"rotation index {k} outside 2..{len(v)}")
    return (v[k - 1],) + v[: k - 1] + v[k:]


def rotate(params: Params, v, k: int) -> Vertex:
    """Rotation R_k as an arc of the digraph; requires r+2 <= k <= d."""
    v = check_vertex(params, v)
    if not params.r + 2 <= k <= params.d:
        raise ValueError(
            f"rotation index {k} illegal for r={params.r} "
            f"(need {params.r + 2} <= k <= {params.d})"
        )
    return rotate_any(v, k)


def shift(params: Params, v, m: int) -> Vertex:
    """Shift S_m: prepend symbol ``m`` (absent from v) and drop the last."""
    v = check_vertex(params, v)
    if not 1 <= m <= params.n:
        raise ValueError(f"symbol {m} outside alphabet 1..{params.n}")
    if m in v:
        raise ValueError(f"symbol {m} already present in {v}; shift illegal")
    return (m,) + v[:-1]


def apply_label(params: Params, label: ArcLabel, v) -> Vertex:
    """Apply an arc label to a vertex, enforcing its legality."""
    if isinstance(label, Rotation):
        return rotate(params, v, label.k)
    if isinstance(label, Shift):
        return shift(params, v, label.m)
    raise TypeError(f"not an arc label: {label!r}")


def out_neighbors(params: Params, v) -> list[tuple[ArcLabel, Vertex]]:
    """The delta-r arcs leaving ``v``: rotations by ascending k, then shifts
    by ascending prepended symbol.  The order is fixed so exported arc lists
    are byte-identical across runs."""
    v = check_vertex(params, v)
    out: list[tuple[ArcLabel, Vertex]] = []
    for k in range(params.r + 2, params.d + 1):
        out.append((Rotation(k), rotate_any(v, k)))
    present = set(v)
    for m in range(1, params.n + 1):
        if m not in present:
            out.append((Shift(m), (m,) + v[:-1]))
    return out


def in_neighbors(params: Params, v) -> list[tuple[ArcLabel, Vertex]]:
    """The delta-r arcs entering ``v``, as (label, predecessor) pairs with
    label(predecessor) == v.  Rotation preimages come first by ascending k,
    then shift preimages by ascending trailing symbol; every shift preimage
    carries the label S_{v[0]}."""
    v = check_vertex(params, v)
    out: list[tuple[ArcLabel, Vertex]] = []
    for k in range(params.r + 2, params.d + 1):
        u = v[1:k] + (v[0],) + v[k:]
        out.append((Rotation(k), u))
    present = set(v)
    for t in range(1, params.n + 1):
        if t not in present:
            out.append((Shift(v[0]), v[1:] + (t,)))
    return out


def classify_arc(params: Params, u, v) -> Optional[ArcLabel]:
    """The unique label with label(u) == v, or None when (u, v) is no arc.

    Uniqueness: a rotation keeps the symbol set of ``u`` while a shift
    introduces a fresh first symbol, and distinct rotation indices give
    words with distinct first symbols.
    """
    u = check_vertex(params, u)
    v = check_vertex(params, v)
    if v[0] in u:
        k = u.index(v[0]) + 1
        if k < params.r + 2 or k > params.d:
            return None
        return Rotation(k) if rotate_any(u, k) == v else None
    if v[1:] == u[:-1]:
        return Shift(v[0])
    return None


def format_vertex(v: Vertex) -> str:
    """Render a vertex as dot-separated 1-based symbols, e.g. ``1.2.3``."""
    return ".".join(str(s) for s in v)


def parse_vertex(text: str) -> Vertex:
    """Parse the ``1.2.3`` notation back into a tuple (no params check)."""
    parts = text.strip().split(".")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed vertex {text!r}; expected e.g. 1.2.3") from None
