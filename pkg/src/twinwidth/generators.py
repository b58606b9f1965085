"""Small graph families used by tests, benchmarks and the CLI."""

from __future__ import annotations

import random
from typing import Optional

from .graph import Graph


def path(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def empty(n: int) -> Graph:
    return Graph(n)


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def grid(rows: int, cols: int) -> Graph:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph(off, edges)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p))


def grid_subgraph(rows: int, cols: int, keep: float, rng: random.Random) -> Graph:
    """Random edge subgraph of a grid."""
    g = grid(rows, cols)
    return Graph(g.n, (e for e in g.sorted_edges() if rng.random() < keep))


def unit_interval(k: int, n: int) -> Graph:
    """Intervals of length ``k`` starting at ``0..n-1``; ``j ~ j'`` iff ``|j-j'| <= k-1``."""
    return Graph(n, ((j, j2) for j in range(n) for j2 in range(j + 1, min(n, j + k))))


def random_cograph(n: int, rng: random.Random) -> Graph:
    """Cograph from a random cotree: repeatedly join or disjoint-union two random pieces."""
    if n < 1:
        return Graph(0)
    pieces: list[tuple[list[int], set]] = [([v], set()) for v in range(n)]
    while len(pieces) > 1:
        i, j = sorted(rng.sample(range(len(pieces)), 2))
        b = pieces.pop(j)
        a = pieces.pop(i)
        edges = a[1] | b[1]
        if rng.random() < 0.5:
            edges |= {(min(x, y), max(x, y)) for x in a[0] for y in b[0]}
        pieces.append((a[0] + b[0], edges))
    return Graph(n, pieces[0][1])


def random_triangle_free(n: int, p: float, rng: random.Random, tries: int = 1000) -> Optional[Graph]:
    """Rejection-sample ``G(n, p)`` until a triangle-free graph appears."""
    for _ in range(tries):
        g = gnp(n, p, rng)
        if is_triangle_free(g):
            return g
    return None


def is_triangle_free(g: Graph) -> bool:
    for u, v in g.edges:
        if g.neighbors(u) & g.neighbors(v):
            return False
    return True
