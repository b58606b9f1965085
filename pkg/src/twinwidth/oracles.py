"""Brute-force reference answers.

Nothing here touches trigraphs, sequences or the dynamic programs; the only
import from the rest of the package is :class:`Graph`.
"""

from __future__ import annotations

import itertools
import time
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import SizeLimitError
from .graph import Graph

INF = float("inf")


@dataclass(frozen=True)
class OracleBudget:
    max_n: int
    seconds: Optional[float] = None

    def check(self, g: Graph, what: str) -> Optional[float]:
        if g.n > self.max_n:
            raise SizeLimitError(f"{what} oracle is capped at {self.max_n} vertices, got {g.n}")
        return None if self.seconds is None else time.monotonic() + self.seconds


ALPHA_BUDGET = OracleBudget(20)
GAMMA_BUDGET = OracleBudget(16)
CHI_BUDGET = OracleBudget(12)
OMEGA_BUDGET = OracleBudget(20)
SUBISO_MAX_K = 5


def _tick(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise SizeLimitError("oracle ran out of time")


def _masks(g: Graph) -> list[int]:
    nb = [0] * g.n
    for u, v in g.edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u
    return nb


def brute_alpha(g: Graph, budget: OracleBudget = ALPHA_BUDGET) -> tuple[int, list[int]]:
    """Maximum independent set by include/exclude branching on bitmasks."""
    deadline = budget.check(g, "alpha")
    nb = _masks(g)

    def best(cand: int) -> int:
        _tick(deadline)
        if not cand:
            return 0
        v = (cand & -cand).bit_length() - 1
        rest = cand & ~(1 << v)
        with_v = (1 << v) | best(rest & ~nb[v])
        if not nb[v] & rest:
            return with_v
        without = best(rest)
        return with_v if bin(with_v).count("1") >= bin(without).count("1") else without

    mask = best((1 << g.n) - 1)
    witness = [v for v in range(g.n) if mask >> v & 1]
    return len(witness), witness


def brute_omega(g: Graph, budget: OracleBudget = OMEGA_BUDGET) -> tuple[int, list[int]]:
    budget.check(g, "omega")
    size, witness = brute_alpha(g.complement(), OracleBudget(budget.max_n, budget.seconds))
    return size, witness


def brute_gamma(g: Graph, budget: OracleBudget = GAMMA_BUDGET) -> tuple[int, list[int]]:
    """Smallest dominating set, trying sizes in increasing order."""
    deadline = budget.check(g, "gamma")
    n = g.n
    if n == 0:
        return 0, []
    closed = [m | (1 << v) for v, m in enumerate(_masks(g))]
    full = (1 << n) - 1
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            _tick(deadline)
            cov = 0
            for v in combo:
                cov |= closed[v]
            if cov == full:
                return size, list(combo)
    raise AssertionError("V(G) always dominates")


def brute_chi(g: Graph, budget: OracleBudget = CHI_BUDGET) -> tuple[int, list[int]]:
    """Chromatic number by trying palettes of increasing size with backtracking."""
    deadline = budget.check(g, "chi")
    n = g.n
    if n == 0:
        return 0, []
    order = sorted(range(n), key=lambda v: -g.degree(v))
    for c in range(1, n + 1):
        colors = [-1] * n

        def place(i: int, used: int) -> bool:
            _tick(deadline)
            if i == n:
                return True
            v = order[i]
            banned = {colors[w] for w in g.neighbors(v)}
            # symmetry breaking: at most one brand new colour per vertex
            for col in range(min(c, used + 1)):
                if col not in banned:
                    colors[v] = col
                    if place(i + 1, max(used, col + 1)):
                        return True
                    colors[v] = -1
            return False

        if place(0, 0):
            return c, colors
    raise AssertionError("n colours always suffice")


def _embeds(g: Graph, h: Graph, image: tuple[int, ...], induced: bool) -> bool:
    k = h.n
    for a in range(k):
        for b in range(a + 1, k):
            e = g.has_edge(image[a], image[b])
            if h.has_edge(a, b):
                if not e:
                    return False
            elif induced and e:
                return False
    return True


def brute_subiso(g: Graph, h: Graph, induced: bool, max_k: int = SUBISO_MAX_K) -> Optional[list[int]]:
    """Some injection of ``V(H)`` into ``V(G)`` preserving edges (and non-edges if induced).

    Returns the image in pattern order, or ``None``.
    """
    if h.n > max_k:
        raise SizeLimitError(f"pattern oracle is capped at {max_k} vertices, got {h.n}")
    if h.n == 0:
        return []
    for image in itertools.permutations(range(g.n), h.n):
        if _embeds(g, h, image, induced):
            return list(image)
    return None


def bfs_distances(g: Graph, source: int) -> list:
    dist: list = [INF] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        x = q.popleft()
        for y in g.neighbors(x):
            if dist[y] == INF:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def bfs_diameter(g: Graph):
    best = 0
    for s in range(g.n):
        for d in bfs_distances(g, s):
            if d == INF:
                return INF
            best = max(best, d)
    return best


def brute_twinwidth(g: Graph, n_cap: int = 10):
    """Exact twin-width; same search as the sequence toolkit uses."""
    from .toolkit import exact_twin_width

    return exact_twin_width(g, n_cap)
