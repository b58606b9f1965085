"""(Induced) subgraph isomorphism by dynamic programming over divisions.

A division of a live set ``T`` gives every member a nonempty set of
pattern vertices, pairwise disjoint.  The table stores, for each
red-connected ``T`` and division ``eta``, one partial embedding ``lam``
(pattern vertex -> graph vertex, ``-1`` when unused) whose image meets
part ``x`` exactly in ``lam(eta(x))``.
"""

from __future__ import annotations

from typing import Optional

from .errors import InputError, InvariantError
from .graph import Graph
from .independent import DPStats, _Before, _prepare
from .sequence import ContractionSequence, replay
from .trigraph import BLACK, red_components

DEFAULT_K_CAP = 8


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _Pattern:
    def __init__(self, h: Graph, induced: bool):
        self.k = h.n
        self.induced = induced
        self.adj = [0] * h.n
        for a, b in h.edges:
            self.adj[a] |= 1 << b
            self.adj[b] |= 1 << a
        self.full = (1 << h.n) - 1

    def pair_ok(self, A: int, B: int, color: int) -> bool:
        """Can parts with images ``A`` and ``B`` sit at colour ``color`` in different red components?"""
        adj = self.adj
        x = A
        while x:
            low = x & -x
            nb = adj[low.bit_length() - 1] & B
            if color == BLACK:
                if self.induced and nb != B:
                    return False
            elif nb:
                return False
            x ^= low
        return True


def _solve(
    g: Graph,
    seq: ContractionSequence,
    h: Graph,
    induced: bool,
    k_cap: int,
    check: bool,
    stats: Optional[DPStats],
) -> Optional[list[int]]:
    stats = stats if stats is not None else DPStats()
    k = h.n
    if k < 1:
        raise InputError("pattern must have at least one vertex")
    if k > k_cap:
        raise InputError(f"pattern has {k} vertices, over the cap of {k_cap}")
    _prepare(g, seq, 1)
    if g.n == 0:
        return None
    pat = _Pattern(h, induced)
    if k == 1:
        return [0]
    full = pat.full

    # T -> {eta: lam}; eta is a sorted tuple of (vertex, image mask)
    table: dict[frozenset, dict] = {}
    by_vertex: dict[int, set] = {}
    for v in range(g.n):
        T = frozenset((v,))
        table[T] = {((v, 1 << j),): tuple(v if a == j else -1 for a in range(k)) for j in range(k)}
        by_vertex[v] = {T}

    for i, rec, t in replay(g, seq):
        stats.steps += 1
        before = _Before(t, rec)
        u, v, z = rec.u, rec.v, rec.z
        slots = [u, v] + sorted(t.red[z])
        fresh: dict[frozenset, dict] = {}
        chosen: list = []
        found = None

        def emit():
            # chosen: list of (T, eta, lam)
            eta_new: dict[int, int] = {}
            zimg = 0
            lam = [-1] * k
            Tn = {z}
            for T, eta, lam_j in chosen:
                for x, img in eta:
                    if x == u or x == v:
                        zimg |= img
                    else:
                        eta_new[x] = img
                        Tn.add(x)
                for a, y in enumerate(lam_j):
                    if y >= 0:
                        lam[a] = y
            if len(Tn) > k:
                return None
            eta_new[z] = zimg
            key = tuple(sorted(eta_new.items()))
            T = frozenset(Tn)
            bucket = fresh.setdefault(T, {})
            stats.generated += 1
            if key not in bucket:
                bucket[key] = tuple(lam)
                used = 0
                for _, img in key:
                    used |= img
                if used == full:
                    return tuple(lam)
            return None

        def rec_slots(idx: int, covered: frozenset, blocked: frozenset, used: int, size: int):
            nonlocal found
            if found is not None:
                return
            if idx == len(slots):
                if u in covered or v in covered:
                    found = emit()
                return
            s = slots[idx]
            if s in covered:
                rec_slots(idx + 1, covered, blocked, used, size)
                return
            if not (idx == 1 and u not in covered):
                rec_slots(idx + 1, covered, blocked | {s}, used, size)
            for T in sorted(by_vertex.get(s, ()), key=sorted):
                if found is not None:
                    return
                if T & blocked or T & covered:
                    continue
                new_cov = covered | T
                new_size = len(new_cov) - (u in new_cov) - (v in new_cov) + 1
                if new_size > k:
                    continue
                red_nb = set()
                for a in T:
                    red_nb |= before.red_neighbors(a)
                colors = {(a, b): before.color(a, b) for a in T for b in covered}
                for eta, lam in table[T].items():
                    img = 0
                    for _, m in eta:
                        img |= m
                    if img & used:
                        continue
                    if _popcount(used | img) < new_size:
                        continue
                    ok = True
                    if chosen:
                        emap = dict(eta)
                        for Tc, etac, _ in chosen:
                            for b, mb in etac:
                                for a in T:
                                    if not pat.pair_ok(emap[a], mb, colors[(a, b)]):
                                        ok = False
                                        break
                                if not ok:
                                    break
                            if not ok:
                                break
                    if not ok:
                        continue
                    chosen.append((T, eta, lam))
                    rec_slots(idx + 1, new_cov, blocked | red_nb, used | img, new_size)
                    chosen.pop()
                    if found is not None:
                        return

        rec_slots(0, frozenset(), frozenset(), 0, 0)
        if found is not None:
            stats.early_exit_step = i
            return sorted(y for y in found)
        for x in (u, v):
            for T in by_vertex.pop(x, ()):
                if table.pop(T, None) is not None:
                    for y in T:
                        if y != x and y in by_vertex:
                            by_vertex[y].discard(T)
        for T, bucket in fresh.items():
            table[T] = bucket
            for x in T:
                by_vertex.setdefault(x, set()).add(T)
        stats.stored += sum(len(b) for b in fresh.values())
        stats.max_table = max(stats.max_table, sum(len(b) for b in table.values()))
        if check:
            _check_table(g, t, table, pat)
    return None


def _check_table(g, t, table, pat) -> None:
    for T, bucket in table.items():
        if len(red_components(t, T)) != 1:
            raise InvariantError(f"stored set {sorted(T)} is not red-connected")
        for eta, lam in bucket.items():
            seen = 0
            for _, img in eta:
                if not img or img & seen:
                    raise InvariantError(f"division {eta} is not a division")
                seen |= img
            dom = [a for a in range(pat.k) if lam[a] >= 0]
            if sum(1 << a for a in dom) != seen:
                raise InvariantError("embedding domain differs from the division image")
            for i, a in enumerate(dom):
                for b in dom[i + 1:]:
                    e = g.has_edge(lam[a], lam[b])
                    he = bool(pat.adj[a] >> b & 1)
                    if (he and not e) or (pat.induced and e and not he):
                        raise InvariantError(f"stored embedding {lam} is not compliant")


def induced_subgraph_isomorphism(
    g: Graph,
    seq: ContractionSequence,
    h: Graph,
    *,
    k_cap: int = DEFAULT_K_CAP,
    check: bool = False,
    stats: Optional[DPStats] = None,
) -> Optional[list[int]]:
    """Vertex set ``S`` with ``G[S]`` isomorphic to ``H``, or ``None``."""
    return _solve(g, seq, h, True, k_cap, check, stats)


def subgraph_isomorphism(
    g: Graph,
    seq: ContractionSequence,
    h: Graph,
    *,
    k_cap: int = DEFAULT_K_CAP,
    check: bool = False,
    stats: Optional[DPStats] = None,
) -> Optional[list[int]]:
    """Vertex set ``S`` such that ``H`` is a (not necessarily induced) subgraph of ``G[S]``."""
    return _solve(g, seq, h, False, k_cap, check, stats)
