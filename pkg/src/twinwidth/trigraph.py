"""Trigraphs: graphs whose edges are either black or red.

A contraction merges two live vertices into a fresh one.  Neighbours in
the symmetric difference of the two neighbourhoods become red, common
neighbours stay black only when both old edges were black.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .errors import InvalidContractionError, InvariantError, StaleIdError
from .graph import Graph

BLACK = 1
RED = 2


@dataclass(frozen=True)
class ContractionRecord:
    """What a single contraction consumed and produced.

    ``u_adj`` and ``v_adj`` are the neighbourhoods (id -> colour) of the two
    merged vertices just before the merge, so callers can still answer
    colour queries about the previous trigraph after it is gone.
    """

    u: int
    v: int
    z: int
    u_adj: dict
    v_adj: dict

    def color_before(self, a: int, b: int, current: "Trigraph") -> int:
        """Colour of ``ab`` in the trigraph that existed before this merge.

        ``a`` and ``b`` must be live in that trigraph (so neither is ``z``).
        """
        if a == self.u:
            return self.u_adj.get(b, 0)
        if a == self.v:
            return self.v_adj.get(b, 0)
        if b == self.u:
            return self.u_adj.get(a, 0)
        if b == self.v:
            return self.v_adj.get(a, 0)
        return current.adj[a].get(b, 0)


class Trigraph:
    """Mutable trigraph keyed by integer vertex ids."""

    __slots__ = ("adj", "red", "dead")

    def __init__(self):
        self.adj: dict[int, dict[int, int]] = {}
        self.red: dict[int, set[int]] = {}
        self.dead: set[int] = set()

    @classmethod
    def from_graph(cls, g: Graph) -> "Trigraph":
        t = cls()
        for v in range(g.n):
            t.adj[v] = dict.fromkeys(g.neighbors(v), BLACK)
            t.red[v] = set()
        return t

    @classmethod
    def from_edges(cls, vertices: Iterable[int], black=(), red=()) -> "Trigraph":
        t = cls()
        for v in vertices:
            t.adj[v] = {}
            t.red[v] = set()
        for edges, c in ((black, BLACK), (red, RED)):
            for a, b in edges:
                if a == b or a not in t.adj or b not in t.adj or b in t.adj[a]:
                    raise InvariantError(f"bad trigraph edge {a}-{b}")
                t.adj[a][b] = t.adj[b][a] = c
                if c == RED:
                    t.red[a].add(b)
                    t.red[b].add(a)
        return t

    def copy(self) -> "Trigraph":
        t = Trigraph()
        t.adj = {v: dict(nb) for v, nb in self.adj.items()}
        t.red = {v: set(r) for v, r in self.red.items()}
        t.dead = set(self.dead)
        return t

    # queries

    @property
    def live(self):
        return self.adj.keys()

    def is_live(self, v: int) -> bool:
        return v in self.adj

    def color(self, a: int, b: int) -> int:
        """0 for a non-edge, otherwise BLACK or RED."""
        return self.adj[a].get(b, 0)

    def red_degree(self, v: int) -> int:
        return len(self.red[v])

    def red_neighbors(self, v: int) -> set[int]:
        return self.red[v]

    def black_neighbors(self, v: int) -> list[int]:
        return [x for x, c in self.adj[v].items() if c == BLACK]

    def has_black_edge(self, v: int) -> bool:
        return len(self.adj[v]) > len(self.red[v])

    def max_red_degree(self) -> int:
        return max((len(r) for r in self.red.values()), default=0)

    def black_edges(self) -> set[tuple[int, int]]:
        return {(a, b) for a, nb in self.adj.items() for b, c in nb.items() if a < b and c == BLACK}

    def red_edges(self) -> set[tuple[int, int]]:
        return {(a, b) for a, r in self.red.items() for b in r if a < b}

    def _check_id(self, v: int) -> None:
        if v not in self.adj:
            if v in self.dead:
                raise StaleIdError(f"vertex {v} was already contracted")
            raise InvalidContractionError(f"vertex {v} is not live")

    # mutation

    def contract(self, u: int, v: int, z: int) -> ContractionRecord:
        """Merge live ``u`` and ``v`` into the fresh id ``z``."""
        if u == v:
            raise InvalidContractionError(f"cannot contract vertex {u} with itself")
        self._check_id(u)
        self._check_id(v)
        if z in self.adj or z in self.dead:
            raise InvalidContractionError(f"fresh id {z} is already in use")
        adj = self.adj
        red = self.red
        nu = adj.pop(u)
        nv = adj.pop(v)
        red.pop(u)
        red.pop(v)
        nz: dict[int, int] = {}
        rz: set[int] = set()
        for x, cu in nu.items():
            if x == v:
                continue
            cv = nv.get(x)
            if cv is None:
                c = RED
            else:
                c = BLACK if cu == BLACK and cv == BLACK else RED
            nz[x] = c
        for x in nv:
            if x != u and x not in nu:
                nz[x] = RED
        for x, c in nz.items():
            ax = adj[x]
            ax.pop(u, None)
            ax.pop(v, None)
            ax[z] = c
            rx = red[x]
            rx.discard(u)
            rx.discard(v)
            if c == RED:
                rx.add(z)
                rz.add(x)
        adj[z] = nz
        red[z] = rz
        self.dead.add(u)
        self.dead.add(v)
        return ContractionRecord(u, v, z, nu, nv)

    def check_invariants(self) -> None:
        for a, nb in self.adj.items():
            if a in nb:
                raise InvariantError(f"self-loop at {a}")
            reds = {b for b, c in nb.items() if c == RED}
            if reds != self.red[a]:
                raise InvariantError(f"red cache of {a} is out of date")
            for b, c in nb.items():
                if b not in self.adj:
                    raise InvariantError(f"edge {a}-{b} touches a dead vertex")
                if self.adj[b].get(a) != c:
                    raise InvariantError(f"edge {a}-{b} is not symmetric")
        if self.red.keys() != self.adj.keys():
            raise InvariantError("red cache and adjacency disagree on live vertices")


def red_components(t: Trigraph, vertices: Iterable[int]) -> list[list[int]]:
    """Split ``vertices`` into connected components of the red graph induced on them."""
    pool = set(vertices)
    comps = []
    red = t.red
    while pool:
        s = min(pool)
        pool.discard(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in red[x]:
                if y in pool:
                    pool.discard(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_red_connected(t: Trigraph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return len(vs) > 0 and len(red_components(t, vs)) == 1


def enumerate_red_connected_sets(
    t: Trigraph,
    x,
    k: int,
    accept: Optional[Callable[[frozenset, int], bool]] = None,
) -> list[frozenset]:
    """All red-connected sets of at most ``k`` live vertices meeting ``x``.

    Sets are grown one red neighbour at a time from each seed in ``x``; a
    seen-set removes duplicates.  ``accept(S, w)`` may veto adding ``w`` to
    ``S``.  Vetoes must be hereditary (if ``S + w`` is rejected, every
    superset is too), which is the case for "no black edge inside".
    """
    if k < 1:
        return []
    seeds = [x] if isinstance(x, int) else sorted(set(x))
    red = t.red
    seen: set[frozenset] = set()
    out: list[frozenset] = []
    for s in seeds:
        if s not in t.adj:
            t._check_id(s)
        start = frozenset((s,))
        if start in seen:
            continue
        seen.add(start)
        out.append(start)
        layer = [start]
        size = 1
        while layer and size < k:
            nxt = []
            for S in layer:
                border = set()
                for a in S:
                    border |= red[a]
                border -= S
                for w in sorted(border):
                    S2 = S | {w}
                    if S2 in seen:
                        continue
                    if accept is not None and not accept(S, w):
                        continue
                    seen.add(S2)
                    out.append(S2)
                    nxt.append(S2)
            layer = nxt
            size += 1
    return out
