"""k-Dominating Set by dynamic programming over profiles.

A profile of the current trigraph is ``(T, D, M)``: ``T`` red-connected,
``D`` the members of ``T`` whose parts meet the partial solution, ``M``
the members whose parts it fully dominates.  Every radius-2 red ball around
a member of ``D`` must lie inside ``T``.  The table maps each realizable
profile to a smallest realizing set ``S`` (ties: lexicographically
smallest sorted tuple).
"""

from __future__ import annotations

from typing import Optional

from .errors import InputError, InvariantError
from .graph import Graph
from .independent import DPStats, _Before, _prepare
from .sequence import ContractionSequence, verify_sequence
from .toolkit import SequenceSearchConfig, greedy_sequence, power_graph
from .trigraph import BLACK, enumerate_red_connected_sets, red_components
from .sequence import replay


def _ball2(red_neighbors, x) -> set:
    out = {x}
    first = red_neighbors(x)
    out |= first
    for y in first:
        out |= red_neighbors(y)
    return out


def _better(a: tuple, b: Optional[tuple]) -> bool:
    if b is None:
        return True
    if len(a) != len(b):
        return len(a) < len(b)
    return a < b


def k_dominating_set(
    g: Graph,
    seq: ContractionSequence,
    k: int,
    *,
    d: Optional[int] = None,
    check: bool = False,
    stats: Optional[DPStats] = None,
) -> Optional[list[int]]:
    """A minimum dominating set if its size is at most ``k``, else ``None``.

    ``d`` defaults to the verified width of ``seq``; ground sets are capped
    at ``(d*d + 1) * k`` vertices.
    """
    stats = stats if stats is not None else DPStats()
    _prepare(g, seq, k)
    if g.n == 0:
        return []
    if not seq.is_full:
        raise InputError("dominating set needs a full sequence")
    if d is None:
        d = verify_sequence(g, seq)
    cap = (d * d + 1) * k

    # T -> {(D, M): S}
    table: dict[frozenset, dict] = {}
    by_vertex: dict[int, set] = {}
    for v in range(g.n):
        T = frozenset((v,))
        table[T] = {(frozenset(), frozenset()): (), (T, T): (v,)}
        by_vertex[v] = {T}
    parts_of = {v: {v} for v in range(g.n)} if check else None
    root = 0

    for i, rec, t in replay(g, seq):
        stats.steps += 1
        before = _Before(t, rec)
        x, y, z = rec.u, rec.v, rec.z
        root = z
        if parts_of is not None:
            parts_of[z] = parts_of.pop(x) | parts_of.pop(y)
        ball_now: dict[int, set] = {}
        ball_before: dict[int, set] = {}

        def b_now(a):
            b = ball_now.get(a)
            if b is None:
                b = ball_now[a] = _ball2(t.red.__getitem__, a)
            return b

        def b_before(a):
            b = ball_before.get(a)
            if b is None:
                b = ball_before[a] = _ball2(before.red_neighbors, a)
            return b

        black_before: dict[int, set] = {}

        def blacks(a):
            s = black_before.get(a)
            if s is None:
                s = black_before[a] = {b for b in before.neighbors(a) if before.color(a, b) == BLACK}
            return s

        fresh: dict[frozenset, dict] = {}
        grounds = enumerate_red_connected_sets(t, z, cap)
        stats.enumerated_sets += len(grounds)
        for T in grounds:
            T1 = (T - {z}) | {x, y}
            comps = [frozenset(c) for c in before.components(T1)]
            out = fresh.setdefault(T, {})
            if len(T1) <= cap or len(comps) > 1:
                _combine(table, comps, None, T, x, y, z, k, b_now, b_before, blacks, out, stats)
            else:
                # a single component one vertex too large to be stored: drop a
                # vertex that no radius-2 ball around the solution can reach
                for w in sorted(T1):
                    sub = [frozenset(c) for c in before.components(T1 - {w})]
                    _combine(table, sub, w, T, x, y, z, k, b_now, b_before, blacks, out, stats)
        for a in (x, y):
            for T in by_vertex.pop(a, ()):
                if table.pop(T, None) is not None:
                    for b in T:
                        if b != a and b in by_vertex:
                            by_vertex[b].discard(T)
        # an inherited profile stays a profile only if no new red edge at z
        # pulls z into the radius-2 ball of one of its D members
        near = b_now(z) - {z}
        for a in sorted(near):
            for T in list(by_vertex.get(a, ())):
                profiles = table[T]
                bad = [key for key in profiles if any(not b_now(b) <= T for b in key[0] if b in near)]
                for key in bad:
                    del profiles[key]
                stats.dropped += len(bad)
        for T, profiles in fresh.items():
            if profiles:
                table[T] = profiles
                for a in T:
                    by_vertex.setdefault(a, set()).add(T)
        stats.stored += sum(len(p) for p in fresh.values())
        stats.max_table = max(stats.max_table, sum(len(p) for p in table.values()))
        if check:
            _check_table(g, t, table, parts_of, k, cap)
    R = frozenset((root,))
    S = table.get(R, {}).get((R, R))
    return None if S is None else sorted(S)


def _combine(table, comps, dropped, T, x, y, z, k, b_now, b_before, blacks, out, stats):
    """Merge one stored profile per component and record the resulting profile of ``T``."""
    opts = []
    for c in comps:
        p = table.get(c)
        if p is None:
            return
        opts.append(sorted(p.items(), key=lambda kv: (len(kv[1]), kv[1])))

    chosen: list = []

    def rec(j: int, size: int, ndom: int):
        if j == len(opts):
            finish()
            return
        for (Dj, Mj), Sj in opts[j]:
            if size + len(Sj) > k:
                break
            if ndom + len(Dj) > k + 1:
                continue
            chosen.append((Dj, Mj, Sj))
            rec(j + 1, size + len(Sj), ndom + len(Dj))
            chosen.pop()

    def finish():
        stats.generated += 1
        D1 = set()
        M1 = set()
        S = []
        for Dj, Mj, Sj in chosen:
            D1 |= Dj
            M1 |= Mj
            S.extend(Sj)
        if dropped is not None:
            if any(dropped in b_before(a) for a in D1):
                return
        D = D1 - {x, y}
        if x in D1 or y in D1:
            D.add(z)
        if len(D) > k:
            return
        for a in D:
            if not b_now(a) <= T:
                return

        def dominated(a):
            return a in M1 or bool(blacks(a) & D1)

        M = {a for a in T if a != z and dominated(a)}
        if dominated(x) and dominated(y):
            M.add(z)
        key = (frozenset(D), frozenset(M))
        St = tuple(sorted(S))
        if _better(St, out.get(key)):
            out[key] = St

    rec(0, 0, 0)


def _check_table(g, t, table, parts_of, k, cap) -> None:
    for T, profiles in table.items():
        if len(T) > cap:
            raise InvariantError(f"ground set {sorted(T)} is over the cap {cap}")
        if len(red_components(t, T)) != 1:
            raise InvariantError(f"ground set {sorted(T)} is not red-connected")
        for (D, M), S in profiles.items():
            if len(S) > k or len(D) > k:
                raise InvariantError(f"profile over budget: {sorted(D)}, {S}")
            Sset = set(S)
            covered = set(S)
            for s in S:
                covered |= g.neighbors(s)
            union = set()
            for a in T:
                union |= parts_of[a]
            if not Sset <= union:
                raise InvariantError(f"{S} leaves the parts of {sorted(T)}")
            for a in T:
                hit = bool(parts_of[a] & Sset)
                dom = parts_of[a] <= covered
                if hit != (a in D) or dom != (a in M):
                    raise InvariantError(f"profile ({sorted(T)}, {sorted(D)}, {sorted(M)}) not realized by {S}")
            for a in D:
                if not _ball2(t.red.__getitem__, a) <= T:
                    raise InvariantError(f"ball around {a} escapes {sorted(T)}")


def k_r_dominating_set(
    g: Graph,
    r: int,
    k: int,
    seq_for_power: Optional[ContractionSequence] = None,
    *,
    seed: int = 0,
    **kwargs,
) -> Optional[list[int]]:
    """At most ``k`` vertices such that everything is within distance ``r`` of one of them."""
    if r < 1:
        raise InputError("r must be at least 1")
    p = power_graph(g, r)
    seq = seq_for_power if seq_for_power is not None else greedy_sequence(p, SequenceSearchConfig(rng_seed=seed))
    return k_dominating_set(p, seq, k, **kwargs)
