"""Factorizations of complete graphs.

Vertices are ``0..n-1`` and every edge is a pair ``(u, v)`` with ``u < v``.
Hamiltonian factors list their edges in traversal order, so
``walk_path`` can recover the vertex sequence once a cycle is opened.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .errors import EvenOrder, NotAPath, OddOrder

Edge = Tuple[int, int]

ONE_FACTOR = "one_factor"
TWO_FACTOR = "two_factor"
HAMILTONIAN = "hamiltonian"


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Factorization:
    n: int
    kind: str
    factors: tuple[tuple[Edge, ...], ...]

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)


def one_factorization(n: int) -> Factorization:
    """Circle method: vertex ``n-1`` stays fixed while ``0..n-2`` rotate.

    Round ``r`` pairs ``r`` with ``n-1`` and ``r+j`` with ``r-j`` (mod ``n-1``).
    """
    if n < 2 or n % 2:
        raise OddOrder(f"one-factorizations need an even order >= 2, got {n}")
    mod = n - 1
    factors = []
    for r in range(mod):
        matching = [_edge(r, n - 1)]
        for j in range(1, n // 2):
            matching.append(_edge((r + j) % mod, (r - j) % mod))
        factors.append(tuple(matching))
    return Factorization(n, ONE_FACTOR, tuple(factors))


def _zigzag(i: int, half: int) -> list[int]:
    # i, i+1, i-1, i+2, i-2, ..., i+half on the cycle Z_{2*half}
    mod = 2 * half
    seq = [i % mod]
    for j in range(1, half + 1):
        seq.append((i + j) % mod)
        if j < half:
            seq.append((i - j) % mod)
    return seq


def hamiltonian_decomposition(n: int) -> Factorization:
    """Walecki's construction: hub ``n-1``, zigzag paths on the others."""
    if n < 3 or n % 2 == 0:
        raise EvenOrder(f"Hamiltonian decompositions need an odd order >= 3, got {n}")
    half = (n - 1) // 2
    hub = n - 1
    factors = []
    for i in range(half):
        walk = [hub] + _zigzag(i, half) + [hub]
        factors.append(tuple(_edge(a, b) for a, b in zip(walk, walk[1:])))
    return Factorization(n, HAMILTONIAN, tuple(factors))


def two_factorization(n: int) -> Factorization:
    ham = hamiltonian_decomposition(n)
    return Factorization(n, TWO_FACTOR, ham.factors)


def _adjacency(edges) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    return adj


def walk_path(edges, start: int | None = None) -> list[int]:
    """Vertex sequence of a simple path given as an edge list (any order).

    Starts at ``start`` if given, else at the smaller endpoint.
    """
    edges = [tuple(e) for e in edges]
    if not edges:
        raise NotAPath("empty edge list")
    if len({_edge(*e) for e in edges}) != len(edges) or any(u == v for u, v in edges):
        raise NotAPath("repeated edge or self-loop")
    adj = _adjacency(edges)
    if any(len(nb) > 2 for nb in adj.values()):
        raise NotAPath("a vertex has degree above two")
    ends = sorted(v for v, nb in adj.items() if len(nb) == 1)
    if len(ends) != 2 or len(adj) != len(edges) + 1:
        raise NotAPath("edges do not form a single simple path")
    if start is None:
        start = ends[0]
    elif start not in ends:
        raise NotAPath(f"{start} is not an endpoint")
    seq = [start]
    prev = None
    cur = start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        seq.append(cur)
    if len(seq) != len(adj):
        raise NotAPath("edges do not form a single simple path")
    return seq


def open_cycle(cycle, at: int) -> tuple[Edge, list[int]]:
    """Delete from a cycle the edge joining ``at`` to its smaller neighbor.

    Returns the deleted edge and the remaining path as a vertex sequence
    starting at ``at``.
    """
    adj = _adjacency(cycle)
    if at not in adj or len(adj[at]) != 2:
        raise ValueError(f"vertex {at} is not on the cycle")
    u = min(adj[at])
    rest = [e for e in cycle if _edge(*e) != _edge(at, u)]
    return _edge(at, u), walk_path(rest, start=at)


def split_path_into_matchings(path) -> tuple[list[Edge], list[Edge]]:
    """Alternate the edges of a path into two matchings.

    The first matching holds the first, third, ... edges counted from the
    smaller endpoint.
    """
    return path_matchings(walk_path(path))


def path_matchings(seq: List[int]) -> tuple[list[Edge], list[Edge]]:
    """Like ``split_path_into_matchings`` for a path given by its vertex
    sequence; the matching holding ``seq[0]`` comes first."""
    first, second = [], []
    for j, (a, b) in enumerate(zip(seq, seq[1:])):
        (first if j % 2 == 0 else second).append(_edge(a, b))
    return first, second
