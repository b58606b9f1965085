"""Interval biclique partitions and shortest paths over them.

Vertices are relabelled by their leaf position in the ordered union tree, so
every part of the sequence becomes an interval of positions.  Rewinding the
sequence, each black edge that appears for the first time (and does not come
from a black edge at the split vertex) yields one biclique between the two
parts' intervals.  BFS then walks bicliques instead of edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import InputError, InvariantError
from .graph import Graph
from .io import _lines
from .sequence import ContractionSequence, OrderedUnionTree, _check_graph, replay
from .stabbing import StabbingStructure
from .trigraph import BLACK

INF = float("inf")

Interval = tuple[int, int]


def relabel_by_union_tree(tree: OrderedUnionTree) -> list[int]:
    """``position[v]``: left-to-right leaf rank of original vertex ``v`` (u-side children first)."""
    return list(tree.position)


@dataclass(frozen=True)
class IntervalBicliquePartition:
    """Bicliques ``(A, B)`` of closed position intervals; ``position[v]`` is the position of vertex ``v``."""

    n: int
    position: tuple
    bicliques: tuple

    @property
    def vertex_at(self) -> list[int]:
        out = [0] * self.n
        for v, p in enumerate(self.position):
            out[p] = v
        return out

    def sides(self) -> list[Interval]:
        """Side ``2b`` is ``A`` of biclique ``b`` and side ``2b + 1`` its ``B``; partner of ``s`` is ``s ^ 1``."""
        out = []
        for a, b in self.bicliques:
            out.append(a)
            out.append(b)
        return out

    def edge_multiset(self) -> dict[tuple[int, int], int]:
        """How often each original-id edge is covered (full materialisation, small graphs only)."""
        at = self.vertex_at
        count: dict[tuple[int, int], int] = {}
        for (a1, a2), (b1, b2) in self.bicliques:
            for p in range(a1, a2 + 1):
                for q in range(b1, b2 + 1):
                    x, y = at[p], at[q]
                    e = (x, y) if x < y else (y, x)
                    count[e] = count.get(e, 0) + 1
        return count

    def check(self, g: Optional[Graph] = None) -> None:
        if sorted(self.position) != list(range(self.n)):
            raise InvariantError("relabeling is not a permutation")
        sides = self.sides()
        for (a1, a2), (b1, b2) in self.bicliques:
            if not (0 <= a1 <= a2 < self.n and 0 <= b1 <= b2 < self.n):
                raise InvariantError(f"biclique side out of range: {(a1, a2)}, {(b1, b2)}")
            if a1 <= b2 and b1 <= a2:
                raise InvariantError(f"biclique sides {(a1, a2)} and {(b1, b2)} overlap")
        distinct = sorted(set(sides))
        for i, (l1, h1) in enumerate(distinct):
            for l2, h2 in distinct[i + 1:]:
                if l2 > h1:
                    break
                if l2 > l1 and h2 > h1:
                    raise InvariantError(f"sides {(l1, h1)} and {(l2, h2)} cross")
        if g is not None:
            cover = self.edge_multiset()
            if set(cover) != set(g.edges):
                raise InvariantError("bicliques do not cover exactly the edges of the graph")
            bad = [e for e, c in cover.items() if c != 1]
            if bad:
                raise InvariantError(f"edge {bad[0]} is covered {cover[bad[0]]} times")


def build_ibp(g: Graph, seq: ContractionSequence, *, check: bool = False) -> IntervalBicliquePartition:
    """Partition of ``E(G)`` into at most ``(d + 1)(n - 1)`` interval bicliques."""
    _check_graph(g, seq)
    n = g.n
    if n == 0:
        return IntervalBicliquePartition(0, (), ())
    tree = OrderedUnionTree(seq)
    iv = tree.interval
    per_step: list[list] = []
    for _, rec, t in replay(g, seq):
        u, v, z = rec.u, rec.v, rec.z
        found = []
        if rec.u_adj.get(v) == BLACK:
            found.append((u, v))
        zadj = t.adj[z]
        for x, adj in ((u, rec.u_adj), (v, rec.v_adj)):
            for y, c in adj.items():
                if c == BLACK and y != u and y != v and zadj.get(y) != BLACK:
                    found.append((x, y))
        per_step.append([(iv[x], iv[y]) for x, y in found])
    bicliques = tuple(b for step in reversed(per_step) for b in step)
    out = IntervalBicliquePartition(n, tuple(tree.position), bicliques)
    if check:
        out.check(g)
    return out


def clique_ibp(n: int) -> IntervalBicliquePartition:
    """The partition ``([i], [i+1, n-1])`` of ``K_n`` under the identity labelling."""
    return IntervalBicliquePartition(n, tuple(range(n)), tuple(((i, i), (i + 1, n - 1)) for i in range(n - 1)))


@dataclass
class SSSPStats:
    side_deletions: int = 0
    vertex_deletions: int = 0
    deleted_sides: list = field(default_factory=list)


class _Structures:
    """Stabbing structures for one IBP; ``fresh()`` hands out private copies."""

    def __init__(self, ibp: IntervalBicliquePartition):
        self.ibp = ibp
        self.sides = ibp.sides()
        self._tb = StabbingStructure(self.sides)
        self._tu = StabbingStructure([(p, p) for p in range(ibp.n)])

    def fresh(self) -> tuple[StabbingStructure, StabbingStructure]:
        return self._tb.copy(), self._tu.copy()


def _as_ibp(g_or_ibp, seq: Optional[ContractionSequence]) -> IntervalBicliquePartition:
    if isinstance(g_or_ibp, IntervalBicliquePartition):
        return g_or_ibp
    if isinstance(g_or_ibp, Graph):
        if seq is None:
            from .toolkit import sequence_for

            seq = sequence_for(g_or_ibp)
        return build_ibp(g_or_ibp, seq)
    raise InputError(f"expected a Graph or an IntervalBicliquePartition, got {type(g_or_ibp).__name__}")


def _bfs(structs: _Structures, source: int, stats: Optional[SSSPStats]):
    ibp = structs.ibp
    n = ibp.n
    sides = structs.sides
    at = ibp.vertex_at if n else []
    tb, tu = structs.fresh()
    dist: list = [INF] * n
    parent: list = [None] * n
    sp = ibp.position[source]
    dist[sp] = 0
    parent[sp] = sp
    tu.delete(sp)
    q = deque([sp])
    while q:
        u = q.popleft()
        du = dist[u] + 1
        gone = tb.pop_stab(u)
        if stats is not None:
            stats.side_deletions += len(gone)
            stats.deleted_sides.extend(gone)
        for s in gone:
            lo, hi = sides[s ^ 1]
            for w in tu.pop_intersecting(lo, hi):
                dist[w] = du
                parent[w] = u
                q.append(w)
                if stats is not None:
                    stats.vertex_deletions += 1
    # back to original ids
    d_out: list = [INF] * n
    p_out: list = [None] * n
    for p in range(n):
        v = at[p]
        d_out[v] = dist[p]
        if parent[p] is not None:
            p_out[v] = at[parent[p]]
    return p_out, d_out


def sssp(
    g_or_ibp: Union[Graph, IntervalBicliquePartition],
    source: int,
    seq: Optional[ContractionSequence] = None,
    *,
    stats: Optional[SSSPStats] = None,
) -> tuple[list, list]:
    """``(parent, dist)`` indexed by original vertex id; unreachable vertices get ``None`` and ``INF``.

    The source is its own parent.
    """
    ibp = _as_ibp(g_or_ibp, seq)
    if not 0 <= source < ibp.n:
        raise InputError(f"source {source} is not a vertex of a {ibp.n}-vertex graph")
    return _bfs(_Structures(ibp), source, stats)


def apsp(g_or_ibp, seq: Optional[ContractionSequence] = None) -> list[list]:
    """Distance matrix from ``n`` BFS runs, each on its own copy of the structures."""
    ibp = _as_ibp(g_or_ibp, seq)
    structs = _Structures(ibp)
    return [_bfs(structs, s, None)[1] for s in range(ibp.n)]


def diameter(g_or_ibp, seq: Optional[ContractionSequence] = None):
    """Largest distance, ``INF`` when disconnected, 0 for fewer than two vertices."""
    best = 0
    for row in apsp(g_or_ibp, seq):
        for d in row:
            if d == INF:
                return INF
            if d > best:
                best = d
    return best


def format_ibp(ibp: IntervalBicliquePartition) -> str:
    lines = [f"b tww {ibp.n} {len(ibp.bicliques)}"]
    lines.extend(f"{a1} {a2} {b1} {b2}" for (a1, a2), (b1, b2) in ibp.bicliques)
    lines.extend(f"pi {v} {p}" for v, p in enumerate(ibp.position))
    return "\n".join(lines) + "\n"


def parse_ibp(text: str, source: str = "<ibp>") -> IntervalBicliquePartition:
    n = count = None
    bicliques = []
    position: dict[int, int] = {}
    for lineno, tok in _lines(text):
        try:
            if tok[0] == "b":
                if n is not None or len(tok) != 4 or tok[1] != "tww":
                    raise ValueError("bad header")
                n, count = int(tok[2]), int(tok[3])
            elif n is None:
                raise ValueError("missing 'b tww <n> <count>' header")
            elif tok[0] == "pi":
                if len(tok) != 3:
                    raise ValueError("expected 'pi <orig> <pos>'")
                v, p = int(tok[1]), int(tok[2])
                if not (0 <= v < n and 0 <= p < n) or v in position:
                    raise ValueError(f"bad permutation entry {v} {p}")
                position[v] = p
            else:
                if len(tok) != 4:
                    raise ValueError("expected '<a1> <a2> <b1> <b2>'")
                a1, a2, b1, b2 = map(int, tok)
                if not (0 <= a1 <= a2 < n and 0 <= b1 <= b2 < n):
                    raise ValueError(f"interval out of range for n={n}")
                bicliques.append(((a1, a2), (b1, b2)))
        except ValueError as exc:
            raise InputError(str(exc), source=source, line=lineno) from None
    if n is None:
        raise InputError("missing header", source=source)
    if len(bicliques) != count:
        raise InputError(f"header promises {count} bicliques, found {len(bicliques)}", source=source)
    if len(position) != n or sorted(position.values()) != list(range(n)):
        raise InputError("permutation block is incomplete or not a permutation", source=source)
    return IntervalBicliquePartition(n, tuple(position[v] for v in range(n)), tuple(bicliques))
