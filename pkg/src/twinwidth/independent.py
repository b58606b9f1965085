"""Independent set dynamic programming along a contraction sequence.

A partial solution is a pair ``(T, S)``: ``T`` a red-connected set of live
vertices, ``S`` an independent set of ``G`` that meets exactly the parts of
``T``.  The table keeps, for every such ``T`` seen so far, a largest ``S``
(ties go to the lexicographically smallest sorted tuple).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .errors import InputError, InvariantError, ResourceError
from .graph import Graph
from .sequence import ContractionSequence, complement_sequence, replay
from .toolkit import SequenceSearchConfig, greedy_sequence, power_graph
from .trigraph import BLACK, ContractionRecord, Trigraph, enumerate_red_connected_sets, red_components

DEFAULT_STATE_BUDGET = 2_000_000


@dataclass
class DPStats:
    """Counters reported by the dynamic programs."""

    steps: int = 0
    generated: int = 0
    stored: int = 0
    max_table: int = 0
    enumerated_sets: int = 0
    dropped: int = 0
    early_exit_step: Optional[int] = None

    def as_dict(self) -> dict:
        out = {
            "steps": self.steps,
            "generated": self.generated,
            "stored": self.stored,
            "max_table": self.max_table,
            "enumerated_sets": self.enumerated_sets,
            "dropped": self.dropped,
        }
        if self.early_exit_step is not None:
            out["early_exit_step"] = self.early_exit_step
        return out


class _Table:
    """Entries keyed by frozenset ``T`` plus a member index."""

    def __init__(self):
        self.entries: dict[frozenset, object] = {}
        self.by_vertex: dict[int, set[frozenset]] = {}

    def __len__(self):
        return len(self.entries)

    def put(self, T: frozenset, value) -> None:
        if T not in self.entries:
            for x in T:
                self.by_vertex.setdefault(x, set()).add(T)
        self.entries[T] = value

    def containing(self, x: int) -> Iterable[frozenset]:
        return self.by_vertex.get(x, ())

    def evict(self, x: int) -> None:
        for T in self.by_vertex.pop(x, ()):
            if self.entries.pop(T, None) is not None:
                for y in T:
                    if y != x:
                        bucket = self.by_vertex.get(y)
                        if bucket is not None:
                            bucket.discard(T)


def _better(a: tuple, b: Optional[tuple]) -> bool:
    """``a`` beats ``b`` when it is larger, or equally large and lexicographically smaller."""
    if b is None:
        return True
    if len(a) != len(b):
        return len(a) > len(b)
    return a < b


class _Before:
    """Colour and neighbourhood queries on the trigraph just before a contraction."""

    def __init__(self, t: Trigraph, rec: ContractionRecord):
        self.t = t
        self.rec = rec
        self._nb: dict[int, frozenset] = {}

    def neighbors(self, a: int) -> frozenset:
        nb = self._nb.get(a)
        if nb is None:
            rec = self.rec
            if a == rec.u:
                nb = frozenset(rec.u_adj)
            elif a == rec.v:
                nb = frozenset(rec.v_adj)
            else:
                cur = self.t.adj[a]
                if rec.z in cur:
                    s = set(cur)
                    s.discard(rec.z)
                    if a in rec.u_adj:
                        s.add(rec.u)
                    if a in rec.v_adj:
                        s.add(rec.v)
                    nb = frozenset(s)
                else:
                    nb = frozenset(cur)
            self._nb[a] = nb
        return nb

    def color(self, a: int, b: int) -> int:
        return self.rec.color_before(a, b, self.t)

    def red_neighbors(self, a: int) -> set:
        rec = self.rec
        if a == rec.u:
            return {x for x, c in rec.u_adj.items() if c != BLACK}
        if a == rec.v:
            return {x for x, c in rec.v_adj.items() if c != BLACK}
        out = set(self.t.red[a])
        if rec.z in out:
            out.discard(rec.z)
            if rec.u_adj.get(a, 0) > BLACK:
                out.add(rec.u)
            if rec.v_adj.get(a, 0) > BLACK:
                out.add(rec.v)
        return out

    def components(self, vertices: Iterable[int]) -> list[list[int]]:
        pool = set(vertices)
        comps = []
        while pool:
            s = min(pool)
            pool.discard(s)
            comp, stack = [s], [s]
            while stack:
                x = stack.pop()
                for y in self.red_neighbors(x):
                    if y in pool:
                        pool.discard(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(comp)
        return comps


def _compatible_combinations(table: _Table, before: _Before, slots: Sequence[int], size_ok: Callable[[frozenset, int], bool]):
    """Yield lists of pairwise non-adjacent stored sets covering some of ``slots``.

    Each slot is either left out or covered; a slot already covered by an
    earlier choice is skipped, and left-out slots may not be covered later,
    so every union is produced once.  The first two slots are the contracted
    pair and at least one of them must be covered.
    """
    chosen: list[frozenset] = []

    def rec(i: int, covered: frozenset, blocked: frozenset):
        if i == len(slots):
            if covered & {slots[0], slots[1]}:
                yield list(chosen)
            return
        s = slots[i]
        if s in covered:
            yield from rec(i + 1, covered, blocked)
            return
        if not (i == 1 and slots[0] not in covered):
            yield from rec(i + 1, covered, blocked | {s})
        for T in sorted(table.containing(s), key=sorted):
            if T & blocked or T & covered:
                continue
            new_cov = covered | T
            if not size_ok(new_cov, len(T)):
                continue
            nb = set()
            for a in T:
                nb |= before.neighbors(a)
            chosen.append(T)
            yield from rec(i + 1, new_cov, blocked | nb)
            chosen.pop()

    yield from rec(0, frozenset(), frozenset())


def _naive_combinations(t: Trigraph, table: _Table, before: _Before, k: int, stats: DPStats):
    """Enumerate red-connected ``T`` containing ``z`` directly and split every candidate."""
    rec = before.rec
    z = rec.z

    def no_black(S, w):
        adj = t.adj[w]
        return all(adj.get(a) != BLACK for a in S)

    cands = enumerate_red_connected_sets(t, z, k, accept=no_black)
    stats.enumerated_sets += len(cands)
    for T in cands:
        rest = T - {z}
        for I in ((rec.u, rec.v), (rec.u,), (rec.v,)):
            T1 = rest | set(I)
            comps = before.components(T1)
            parts = []
            for c in comps:
                key = frozenset(c)
                if key not in table.entries:
                    break
                parts.append(key)
            else:
                if _pairwise_nonadjacent(before, parts):
                    yield parts


def _pairwise_nonadjacent(before: _Before, parts: list[frozenset]) -> bool:
    seen: set = set()
    for P in parts:
        nb = set()
        for a in P:
            nb |= before.neighbors(a)
        if nb & seen:
            return False
        seen |= P
    return True


def _check_locality(before: _Before, parts: list[frozenset]) -> None:
    for i, P in enumerate(parts):
        for Q in parts[i + 1:]:
            for a in P:
                for b in Q:
                    if before.color(a, b):
                        raise InvariantError(f"merged sets {sorted(P)} and {sorted(Q)} are adjacent")


def _check_is_table(g: Graph, t: Trigraph, table: _Table, parts_of: dict) -> None:
    for T, S in table.entries.items():
        if isinstance(S, dict):
            sols = [s for _, s in S.values()]
        else:
            sols = [S]
        if len(red_components(t, T)) != 1:
            raise InvariantError(f"stored set {sorted(T)} is not red-connected")
        union = set()
        for x in T:
            union |= parts_of[x]
        for sol in sols:
            if not g.is_independent(sol):
                raise InvariantError(f"stored solution {sol} is not independent")
            if not set(sol) <= union:
                raise InvariantError(f"stored solution {sol} leaves the parts of {sorted(T)}")
            for x in T:
                if not parts_of[x] & set(sol):
                    raise InvariantError(f"stored solution {sol} misses part {x}")


def _prepare(g: Graph, seq: ContractionSequence, k: int):
    if k < 1:
        raise InputError("k must be at least 1")
    if g.n != seq.base_n:
        from .errors import SequenceValidationError

        raise SequenceValidationError(f"sequence is for {seq.base_n} vertices, graph has {g.n}")
    seq.validate()


def _run_unweighted(
    g: Graph,
    seq: ContractionSequence,
    k: int,
    early_exit: bool,
    naive: bool,
    check: bool,
    budget: Optional[int],
    stats: DPStats,
) -> tuple:
    _prepare(g, seq, k)
    if g.n == 0:
        return ()
    table = _Table()
    for v in range(g.n):
        table.put(frozenset((v,)), (v,))
    best: tuple = (0,)
    if early_exit and k == 1:
        return best
    parts_of = {v: {v} for v in range(g.n)} if check else None
    total = g.n
    for i, rec, t in replay(g, seq):
        stats.steps += 1
        before = _Before(t, rec)
        u, v, z = rec.u, rec.v, rec.z
        if parts_of is not None:
            parts_of[z] = parts_of.pop(u) | parts_of.pop(v)
        fresh: dict[frozenset, tuple] = {}
        if naive:
            combos = _naive_combinations(t, table, before, k, stats)
        else:
            slots = [u, v] + sorted(x for x in t.red[z])

            def size_ok(cov: frozenset, _n: int) -> bool:
                return len(cov) - (u in cov) - (v in cov) + 1 <= k

            combos = _compatible_combinations(table, before, slots, size_ok)
        for parts in combos:
            stats.generated += 1
            if check:
                _check_locality(before, parts)
            S = tuple(sorted(x for P in parts for x in table.entries[P]))
            T = frozenset(x for P in parts for x in P if x != u and x != v) | {z}
            if len(T) > k:
                continue
            if _better(S, fresh.get(T)):
                fresh[T] = S
        table.evict(u)
        table.evict(v)
        for T, S in fresh.items():
            table.put(T, S)
            if _better(S, best):
                best = S
        stats.stored += len(fresh)
        total += len(fresh)
        stats.max_table = max(stats.max_table, len(table))
        if budget is not None and total > budget:
            raise ResourceError(f"independent set table grew past {budget} states")
        if check:
            t.check_invariants()
            _check_is_table(g, t, table, parts_of)
        if early_exit and len(best) >= k:
            stats.early_exit_step = i
            break
    return best


def k_independent_set(
    g: Graph,
    seq: ContractionSequence,
    k: int,
    *,
    naive: bool = False,
    check: bool = False,
    stats: Optional[DPStats] = None,
) -> list[int]:
    """An independent set of size ``min(k, alpha(G))``."""
    stats = stats if stats is not None else DPStats()
    best = _run_unweighted(g, seq, k, True, naive, check, None, stats)
    return sorted(best)[:k]


def max_independent_set(
    g: Graph,
    seq: ContractionSequence,
    *,
    budget: Optional[int] = DEFAULT_STATE_BUDGET,
    naive: bool = False,
    check: bool = False,
    stats: Optional[DPStats] = None,
) -> list[int]:
    """A maximum independent set; cost grows with the number of realizable sets."""
    stats = stats if stats is not None else DPStats()
    if g.n == 0:
        return []
    return sorted(_run_unweighted(g, seq, g.n, False, naive, check, budget, stats))


# ---------------------------------------------------------------- weights


def _wkey(entry: tuple) -> tuple:
    """Order on ``(weight, S)``: heavier first, then lexicographically smaller."""
    w, S = entry
    return (-w, S)


def _knapsack(tables: list[dict], k: int) -> dict:
    acc: dict[int, tuple] = {0: (0.0, ())}
    for opts in tables:
        nxt: dict[int, tuple] = {}
        for j1, (w1, s1) in acc.items():
            for j2, (w2, s2) in opts.items():
                j = j1 + j2
                if j > k:
                    continue
                cand = (w1 + w2, tuple(sorted(s1 + s2)))
                cur = nxt.get(j)
                if cur is None or _wkey(cand) < _wkey(cur):
                    nxt[j] = cand
        acc = nxt
    return acc


def weighted_k_independent_set(
    g: Graph,
    weights: Sequence[float],
    seq: ContractionSequence,
    k: int,
    *,
    naive: bool = False,
    check: bool = False,
    stats: Optional[DPStats] = None,
) -> list[int]:
    """Among independent sets of size exactly ``min(k, alpha(G))``, one of largest weight.

    The table keeps one solution per pair ``(T, j)`` with ``|T| <= j <= k``;
    merging components is a small knapsack over their ``j`` values.
    """
    stats = stats if stats is not None else DPStats()
    _prepare(g, seq, k)
    if len(weights) != g.n:
        raise InputError(f"expected {g.n} weights, got {len(weights)}")
    if g.n == 0:
        return []
    w = [float(x) for x in weights]
    table = _Table()
    for v in range(g.n):
        table.put(frozenset((v,)), {1: (w[v], (v,))})
    parts_of = {v: {v} for v in range(g.n)} if check else None
    root = frozenset((0,))
    for i, rec, t in replay(g, seq):
        stats.steps += 1
        before = _Before(t, rec)
        u, v, z = rec.u, rec.v, rec.z
        if parts_of is not None:
            parts_of[z] = parts_of.pop(u) | parts_of.pop(v)
        fresh: dict[frozenset, dict] = {}
        if naive:
            combos = _naive_combinations(t, table, before, k, stats)
        else:
            slots = [u, v] + sorted(t.red[z])

            def size_ok(cov: frozenset, _n: int) -> bool:
                return len(cov) - (u in cov) - (v in cov) + 1 <= k

            combos = _compatible_combinations(table, before, slots, size_ok)
        for parts in combos:
            stats.generated += 1
            if check:
                _check_locality(before, parts)
            T = frozenset(x for P in parts for x in P if x != u and x != v) | {z}
            if len(T) > k:
                continue
            merged = _knapsack([table.entries[P] for P in parts], k)
            cur = fresh.setdefault(T, {})
            for j, entry in merged.items():
                if j < len(T):
                    continue
                old = cur.get(j)
                if old is None or _wkey(entry) < _wkey(old):
                    cur[j] = entry
        table.evict(u)
        table.evict(v)
        for T, opts in fresh.items():
            if opts:
                table.put(T, opts)
        stats.stored += len(fresh)
        stats.max_table = max(stats.max_table, len(table))
        root = frozenset((z,))
        if check:
            _check_is_table(g, t, table, parts_of)
    final = table.entries[root]
    j = max(final)
    return sorted(final[j][1])


# ---------------------------------------------------------------- reductions


def k_clique(g: Graph, seq: ContractionSequence, k: int, **kwargs) -> list[int]:
    """A clique of size ``min(k, omega(G))``: independent sets of the complement."""
    gc, sc = complement_sequence(g, seq)
    return k_independent_set(gc, sc, k, **kwargs)


def r_scattered_set(
    g: Graph,
    r: int,
    k: int,
    seq_for_power: Optional[ContractionSequence] = None,
    *,
    seed: int = 0,
    **kwargs,
) -> list[int]:
    """``min(k, best)`` vertices pairwise at distance at least ``r``.

    Distance at least ``r`` means independent in ``G^{<=r-1}``; ``r = 1``
    only asks for distinct vertices.
    """
    if r < 1:
        raise InputError("r must be at least 1")
    if k < 1:
        raise InputError("k must be at least 1")
    if r == 1:
        return list(range(min(k, g.n)))
    p = power_graph(g, r - 1)
    seq = seq_for_power if seq_for_power is not None else greedy_sequence(p, SequenceSearchConfig(rng_seed=seed))
    return k_independent_set(p, seq, k, **kwargs)
