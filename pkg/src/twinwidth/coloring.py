"""Algorithms that read a contraction sequence backwards.

Rewinding a sequence splits one vertex at a time.  Colourings are built by
giving split vertices their parent's colour or the smallest colour free in
their neighbourhood; a homogeneous pair is read off the first part that
grows large.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ContractViolation, InputError, InvariantError, SizeLimitError
from .graph import Graph
from .sequence import ContractionSequence, OrderedUnionTree, induced_subsequence, replay, verify_sequence
from .trigraph import BLACK, RED

OMEGA_AUTO_LIMIT = 25


@dataclass
class _Step:
    u: int
    v: int
    z: int
    uv_edge: bool
    v_nbrs: tuple
    z_black: Optional[int]


def _forward(g: Graph, seq: ContractionSequence) -> tuple[list[_Step], dict]:
    """One forward pass collecting what the backward colouring needs.

    ``black_until[x]`` is the last trigraph index (number of contractions
    done) at which ``x`` is live and has a black edge.  Black incidence of a
    vertex can only be lost going forward, never regained.
    """
    n = g.n
    black_now = {v: g.degree(v) > 0 for v in range(n)}
    black_until: dict[int, int] = {}
    steps: list[_Step] = []
    for i, rec, t in replay(g, seq):
        u, v, z = rec.u, rec.v, rec.z
        for x in (u, v):
            if black_now.pop(x):
                black_until[x] = i
        for w in t.adj[z]:
            if black_now[w] and not t.has_black_edge(w):
                black_now[w] = False
                black_until[w] = i
        black_now[z] = t.has_black_edge(z)
        zb = next((w for w, c in t.adj[z].items() if c == BLACK), None)
        steps.append(_Step(u, v, z, v in rec.u_adj, tuple(rec.v_adj), zb))
    last = len(steps)
    for x, b in black_now.items():
        if b:
            black_until[x] = last
    return steps, black_until


def _mex(colors) -> int:
    seen = set(colors)
    c = 1
    while c in seen:
        c += 1
    return c


def _check_sequence(g: Graph, seq: ContractionSequence) -> None:
    if g.n != seq.base_n:
        raise InputError(f"sequence is for {seq.base_n} vertices, graph has {g.n}")
    if g.n and not seq.is_full:
        raise InputError("colouring needs a full sequence")


def find_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    for a, b in sorted(g.edges):
        common = g.neighbors(a) & g.neighbors(b)
        if common:
            return (a, b, min(common))
    return None


def _edge_between(g: Graph, A, B) -> Optional[tuple[int, int]]:
    Bs = set(B)
    for a in A:
        hit = g.neighbors(a) & Bs
        if hit:
            return a, min(hit)
    return None


def color_triangle_free(
    g: Graph,
    seq: ContractionSequence,
    *,
    trust: bool = False,
    check: bool = False,
) -> dict[int, tuple[int]]:
    """Proper colouring with at most ``d + 2`` colours, ``d`` the width of ``seq``.

    The last vertex gets colour 1.  Undoing a contraction ``z -> u, v``,
    ``u`` keeps the colour of ``z``; so does ``v`` unless ``uv`` is an edge,
    in which case it takes the smallest colour absent from its neighbours.
    """
    _check_sequence(g, seq)
    if not trust:
        tri = find_triangle(g)
        if tri is not None:
            raise ContractViolation(f"graph has a triangle {tri}", tri)
    if g.n == 0:
        return {}
    steps, _ = _forward(g, seq)
    tree = OrderedUnionTree(seq) if steps else None
    snapshots = _edge_snapshots(g, seq) if check else None
    root = steps[-1].z if steps else 0
    C = {root: 1}
    for j in range(len(steps) - 1, -1, -1):
        st = steps[j]
        cz = C.pop(st.z)
        C[st.u] = cz
        if not st.uv_edge:
            C[st.v] = cz
        else:
            if st.z_black is not None:
                a, b = _edge_between(g, tree.leaves(st.u), tree.leaves(st.v))
                c = tree.leaves(st.z_black)[0]
                raise ContractViolation(f"triangle {tuple(sorted((a, b, c)))} found while splitting {st.z}", sorted((a, b, c)))
            C[st.v] = _mex(C[w] for w in st.v_nbrs)
        if snapshots is not None:
            for a, b in snapshots[j]:
                if C[a] == C[b]:
                    raise InvariantError(f"colouring of trigraph {j} is improper on {a}-{b}")
    if check:
        _check_proper(g, {v: (C[v],) for v in range(g.n)})
    return {v: (C[v],) for v in range(g.n)}


def _edge_snapshots(g: Graph, seq: ContractionSequence) -> list[list]:
    """Black and red edges of every trigraph of the sequence, by index."""
    out = [sorted(g.edges)]
    for _, _, t in replay(g, seq):
        out.append(sorted(t.black_edges()) + sorted(t.red_edges()))
    return out


def _check_proper(g: Graph, coloring: dict) -> None:
    for a, b in g.edges:
        if coloring[a] == coloring[b]:
            raise InvariantError(f"edge {a}-{b} is monochromatic")


def max_clique(g: Graph, limit: int = OMEGA_AUTO_LIMIT) -> list[int]:
    """A maximum clique by Bron-Kerbosch with pivoting (small graphs only)."""
    if g.n > limit:
        raise SizeLimitError(f"clique number is only computed up to {limit} vertices; pass t")
    best: list[int] = []

    def expand(R, P, X):
        nonlocal best
        if not P and not X:
            if len(R) > len(best):
                best = sorted(R)
            return
        if len(R) + len(P) <= len(best):
            return
        pivot = max(P | X, key=lambda w: len(P & g.neighbors(w)))
        for w in sorted(P - g.neighbors(pivot)):
            expand(R + [w], P & g.neighbors(w), X & g.neighbors(w))
            P = P - {w}
            X = X | {w}

    expand([], set(range(g.n)), set())
    return best


def color_kt_free(
    g: Graph,
    seq: ContractionSequence,
    t: Optional[int] = None,
    *,
    trust: bool = False,
    check: bool = False,
) -> dict[int, tuple[int, ...]]:
    """Proper colouring with at most ``(d + 2) ** (t - 2)`` colours of a ``K_t``-free graph.

    Colours are tuples of length ``t - 2``.  When a vertex ``x`` is about to
    stop being black-incident (read backwards: first gains a black edge), its
    whole part induces a ``K_{t-1}``-free graph; that part is coloured
    recursively and its tuples get ``x``'s current colour in front.
    ``t`` defaults to ``omega(G) + 1`` for graphs up to 25 vertices.  An
    explicit ``t`` is checked the same way unless ``trust`` is set or the
    graph is larger than that.
    """
    _check_sequence(g, seq)
    if t is None:
        t = max(3, len(max_clique(g)) + 1)
    elif t < 3:
        raise InputError("t must be at least 3")
    elif not trust and g.n <= OMEGA_AUTO_LIMIT:
        clique = max_clique(g)
        if len(clique) >= t:
            raise ContractViolation(f"clique {clique[:t]} has {t} vertices", clique[:t])
    out = _color_rec(g, seq, t, [], list(range(g.n)))
    width = t - 2
    out = {v: c + (1,) * (width - len(c)) for v, c in out.items()}
    if check:
        _check_proper(g, out)
    return out


def _color_rec(g: Graph, seq: ContractionSequence, t: int, witness: list[int], names: list[int]) -> dict[int, tuple]:
    """Tuples of length at most ``t - 2``.

    ``names`` maps vertices of ``g`` to the caller's original ids and
    ``witness`` is a clique (original ids) complete to all of ``g``.
    """
    n = g.n
    if n == 0:
        return {}
    if t == 2:
        if g.m:
            a, b = min(g.edges)
            clique = sorted(witness + [names[a], names[b]])
            raise ContractViolation(f"clique {clique} is larger than allowed", clique)
        return {v: () for v in range(n)}
    steps, black_until = _forward(g, seq)
    tree = OrderedUnionTree(seq)
    final: dict[int, tuple] = {}
    root = steps[-1].z if steps else 0
    C = {root: 1}
    perm: set[int] = set()

    def make_permanent(x: int, black_partner: int):
        part = tree.leaves(x)
        sub_g, kept = g.induced_subgraph(part)
        _, sub_seq = induced_subsequence(seq, kept)
        partner = names[tree.leaves(black_partner)[0]]
        sub = _color_rec(sub_g, sub_seq, t - 1, witness + [partner], [names[y] for y in kept])
        for j, y in enumerate(kept):
            final[y] = (C[x],) + sub[j]
        perm.add(x)

    # the backward pass needs adjacency of the trigraph at each index only for
    # the vertices being made permanent, so replay again and remember them
    need: dict[int, list[int]] = {}
    for x, j in black_until.items():
        need.setdefault(j, []).append(x)
    partners: dict[int, int] = {}
    if 0 in need:
        for x in need[0]:
            partners[x] = min(g.neighbors(x))
    for i, rec, tg in replay(g, seq):
        for x in need.get(i + 1, ()):
            partners[x] = next(w for w, c in tg.adj[x].items() if c == BLACK)

    L = len(steps)
    for x in need.get(L, ()):
        make_permanent(x, partners[x])
    for j in range(L - 1, -1, -1):
        st = steps[j]
        cz = C.pop(st.z)
        if st.z in perm:
            C[st.u] = C[st.v] = cz
            perm.add(st.u)
            perm.add(st.v)
        else:
            C[st.u] = cz
            C[st.v] = _mex(C[w] for w in st.v_nbrs) if st.uv_edge else cz
        # vertices of trigraph j that are black-incident there but not later
        for x in need.get(j, ()):
            if x not in perm:
                make_permanent(x, partners[x])
    for v in range(n):
        if v not in final:
            final[v] = (C[v],)
    return final


def palette_size(coloring: dict) -> int:
    return len(set(coloring.values()))


@dataclass(frozen=True)
class EHPair:
    X: tuple
    Y: tuple
    kind: str  # "complete" or "anticomplete"


def eh_pair(g: Graph, seq: ContractionSequence, d: Optional[int] = None) -> EHPair:
    """Two disjoint sets of size at least ``n / (d + 4)``, complete or anticomplete to each other.

    ``X`` is the first part (scanning contractions forward) with at least
    ``n / (d + 4)`` vertices.  Every vertex outside ``X`` and outside the
    parts red-adjacent to it sees ``X`` homogeneously; ``Y`` is the larger
    of the two groups.
    """
    _check_sequence(g, seq)
    n = g.n
    if n == 0:
        return EHPair((), (), "anticomplete")
    if d is None:
        d = verify_sequence(g, seq)
    parts = {v: [v] for v in range(n)}
    if n <= d + 4:
        X = [0]
        others = [(w, g.has_edge(0, w)) for w in range(1, n)]
    else:
        X = None
        for _, rec, t in replay(g, seq):
            merged = parts.pop(rec.u) + parts.pop(rec.v)
            parts[rec.z] = merged
            if len(merged) * (d + 4) >= n:
                X = sorted(merged)
                z = rec.z
                others = []
                for p, members in parts.items():
                    if p == z:
                        continue
                    c = t.adj[z].get(p, 0)
                    if c == RED:
                        continue
                    others.extend((w, c == BLACK) for w in members)
                break
        assert X is not None, "the last part contains every vertex"
    comp = sorted(w for w, e in others if e)
    anti = sorted(w for w, e in others if not e)
    if len(comp) >= len(anti):
        return EHPair(tuple(X), tuple(comp), "complete")
    return EHPair(tuple(X), tuple(anti), "anticomplete")
