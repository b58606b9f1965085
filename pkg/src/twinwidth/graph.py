"""Simple undirected graphs on the vertex range ``0..n-1``."""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import InputError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph.

    Vertices are the integers ``0..n-1``; edges are stored as normalized
    ``(min, max)`` pairs alongside a neighbour-set table.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        normalized = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            e = _norm(u, v)
            if e in normalized:
                raise InputError(f"parallel edge {e}")
            normalized.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: frozenset[Edge] = frozenset(normalized)
        self._adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)

    @classmethod
    def from_adjacency(cls, adjacency: Iterable[Iterable[int]]) -> "Graph":
        rows = [list(r) for r in adjacency]
        edges = {_norm(u, v) for u, row in enumerate(rows) for v in row}
        return cls(len(rows), edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def complement(self) -> "Graph":
        n = self.n
        adj = self._adj
        return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if v not in adj[u]))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``G[vertices]`` relabelled to ``0..k-1`` plus the new->old id list."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [
            (index[u], index[w])
            for u in old
            for w in self._adj[u]
            if w in index and u < w
        ]
        return Graph(len(old), edges), old

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        seen: set[int] = set()
        for v in vs:
            if self._adj[v] & seen:
                return False
            seen.add(v)
        return len(seen) == len(vs)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = sorted(set(vertices))
        return all(w in self._adj[u] for i, u in enumerate(vs) for w in vs[i + 1:])

    def is_dominating(self, vertices: Iterable[int]) -> bool:
        covered = set()
        for v in vertices:
            covered.add(v)
            covered |= self._adj[v]
        return len(covered) == self.n

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
