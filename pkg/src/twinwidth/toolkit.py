"""Ways to obtain contraction sequences, plus the substitution and power transforms."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .errors import ContractViolation, InputError, SizeLimitError
from .graph import Graph
from .sequence import ContractionSequence, induced_subsequence
from .trigraph import RED, Trigraph

# ---------------------------------------------------------------- exact


def _part_masks(nbr: list[int], part: int) -> tuple[int, int]:
    full = -1
    anyn = 0
    x = part
    while x:
        low = x & -x
        v = low.bit_length() - 1
        full &= nbr[v]
        anyn |= nbr[v]
        x ^= low
    return full, anyn


def _red_degrees(parts: tuple[int, ...], masks: list[tuple[int, int]]) -> list[int]:
    k = len(parts)
    deg = [0] * k
    for a in range(k):
        fa, na = masks[a]
        for b in range(a + 1, k):
            q = parts[b]
            if (fa & q) != q and (na & q):
                deg[a] += 1
                deg[b] += 1
    return deg


def exact_twin_width(g: Graph, n_cap: int = 10) -> tuple[int, ContractionSequence]:
    """Minimum width over all contraction sequences, with a witness.

    Depth-first search over partitions of ``V(G)`` for increasing ``d``.
    Partitions are tuples of vertex bitmasks sorted by value; those known to
    fail for the current ``d`` are memoized.
    """
    n = g.n
    if n > n_cap:
        raise SizeLimitError(f"exact twin-width is capped at {n_cap} vertices, got {n}")
    if n <= 1:
        return 0, ContractionSequence(n, ())
    nbr = [0] * n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    start = tuple(sorted(1 << v for v in range(n)))

    for d in range(n):
        failed: set[tuple[int, ...]] = set()
        path: list[tuple[int, int]] = []

        def search(parts: tuple[int, ...]) -> bool:
            if len(parts) <= d + 1:
                # every red degree is at most len(parts) - 1 from here on
                for _ in range(len(parts) - 1):
                    path.append((parts[0], parts[1]))
                    parts = tuple(sorted(parts[2:] + (parts[0] | parts[1],)))
                return True
            if parts in failed:
                return False
            k = len(parts)
            options = []
            for a in range(k):
                for b in range(a + 1, k):
                    merged = parts[a] | parts[b]
                    rest = parts[:a] + parts[a + 1:b] + parts[b + 1:]
                    nxt = tuple(sorted(rest + (merged,)))
                    masks = [_part_masks(nbr, p) for p in nxt]
                    deg = _red_degrees(nxt, masks)
                    worst = max(deg)
                    if worst <= d:
                        options.append((worst, sum(deg), parts[a], parts[b], nxt))
            options.sort(key=lambda o: (o[0], o[1]))
            for _, _, pa, pb, nxt in options:
                path.append((pa, pb))
                if search(nxt):
                    return True
                path.pop()
            failed.add(parts)
            return False

        if search(start):
            return d, _masks_to_sequence(n, path)
    raise AssertionError("unreachable: d = n-1 always succeeds")


def _masks_to_sequence(n: int, merges: list[tuple[int, int]]) -> ContractionSequence:
    ids = {1 << v: v for v in range(n)}
    steps = []
    for i, (a, b) in enumerate(merges):
        u, v = ids.pop(a), ids.pop(b)
        steps.append((u, v))
        ids[a | b] = n + i
    return ContractionSequence(n, tuple(steps))


# ---------------------------------------------------------------- greedy


@dataclass
class SequenceSearchConfig:
    """Knobs for :func:`greedy_sequence`.

    ``candidate_pool`` is ``"all-pairs"``, ``"red-radius-2+sampled"`` or
    ``"auto"`` (all pairs up to ``all_pairs_limit`` live vertices).  Ties are
    broken by the lexicographic order of the ``(smaller id, larger id)`` pair.
    """

    candidate_pool: str = "auto"
    sample_size: int = 64
    tie_break: str = "lex"
    rng_seed: int = 0
    all_pairs_limit: int = 160

    def __post_init__(self):
        if self.sample_size < 0:
            raise InputError("sample_size must be nonnegative")
        if self.candidate_pool not in ("auto", "all-pairs", "red-radius-2+sampled"):
            raise InputError(f"unknown candidate pool {self.candidate_pool!r}")
        if self.tie_break != "lex":
            raise InputError(f"unknown tie break {self.tie_break!r}")


def _score_all_pairs(ids, B, R):
    """Best pair among all live pairs; matrices are indexed by position in ``ids``."""
    L = len(ids)
    N = B | R
    rd = R.sum(axis=1).astype(np.int32)
    best = None
    # chunk rows to keep the L x L x L tensor bounded
    step = max(1, min(L, 4_000_000 // max(1, L * L)))
    idx = np.arange(L)
    for lo in range(0, L, step):
        hi = min(L, lo + step)
        us = np.arange(lo, hi)
        # redz[a, v, x]: x becomes a red neighbour of the merge of us[a] and v
        redz = (N[us][:, None, :] ^ N[None, :, :]) | R[us][:, None, :] | R[None, :, :]
        redz[np.arange(hi - lo), :, us] = False
        redz[:, idx, idx] = False
        zdeg = redz.sum(axis=2)
        newrd = rd[None, None, :] - R[us][:, None, :] - R.T[None, :, :] + redz
        newrd[np.arange(hi - lo), :, us] = 0
        newrd[:, idx, idx] = 0
        worst = np.maximum(newrd.max(axis=2), zdeg)
        for a in range(hi - lo):
            u = lo + a
            if u + 1 >= L:
                continue
            w = worst[a, u + 1:]
            z = zdeg[a, u + 1:]
            key = w.astype(np.int64) * (L + 1) + z
            j = int(np.argmin(key))
            cand = (int(w[j]), int(z[j]), u, u + 1 + j)
            if best is None or cand[:2] < best[:2]:
                best = cand
    return best


def _pair_score(t: Trigraph, u: int, v: int, by_degree: list) -> tuple[int, int]:
    au, av = t.adj[u], t.adj[v]
    redz = set()
    for x, c in au.items():
        if x != v and (c == RED or av.get(x) != au[x]):
            redz.add(x)
    for x, c in av.items():
        if x != u and (c == RED or au.get(x) != c):
            redz.add(x)
    worst = len(redz)
    for x in redz:
        r = t.red[x]
        worst = max(worst, len(r) - (u in r) - (v in r) + 1)
    # anyone outside redz and {u, v} keeps its red degree
    for deg, x in by_degree:
        if deg <= worst:
            break
        if x not in redz and x != u and x != v:
            worst = deg
            break
    return worst, len(redz)


def greedy_sequence(g: Graph, cfg: Optional[SequenceSearchConfig] = None) -> ContractionSequence:
    """Merge, at every step, the pair minimizing (max red degree, red degree of the merge)."""
    cfg = cfg or SequenceSearchConfig()
    n = g.n
    if n == 0:
        return ContractionSequence(0, ())
    t = Trigraph.from_graph(g)
    steps: list[tuple[int, int]] = []
    rng = random.Random(cfg.rng_seed)
    for i in range(n - 1):
        live = sorted(t.adj)
        L = len(live)
        use_all = cfg.candidate_pool == "all-pairs" or (
            cfg.candidate_pool == "auto" and L <= cfg.all_pairs_limit
        )
        if use_all:
            pos = {v: j for j, v in enumerate(live)}
            B = np.zeros((L, L), dtype=bool)
            R = np.zeros((L, L), dtype=bool)
            for v in live:
                a = pos[v]
                for x, c in t.adj[v].items():
                    if c == RED:
                        R[a, pos[x]] = True
                    else:
                        B[a, pos[x]] = True
            _, _, a, b = _score_all_pairs(live, B, R)
            u, v = live[a], live[b]
        else:
            u, v = _sampled_pick(t, live, cfg, rng)
        steps.append((u, v))
        t.contract(u, v, n + i)
    return ContractionSequence(n, tuple(steps))


def _sampled_pick(t: Trigraph, live: list[int], cfg: SequenceSearchConfig, rng: random.Random):
    """Score the pairs at distance at most 2 plus ``sample_size`` random pairs."""
    cands = set()
    for u in live:
        near = set(t.adj[u])
        for x in list(near):
            near |= t.adj[x].keys()
        near.discard(u)
        for v in near:
            cands.add((u, v) if u < v else (v, u))
    for _ in range(cfg.sample_size):
        u, v = rng.sample(live, 2)
        cands.add((u, v) if u < v else (v, u))
    if not cands:
        # edgeless: any pair is a pair of twins
        return live[0], live[1]
    by_degree = sorted(((len(t.red[x]), x) for x in live), reverse=True)
    best = None
    for u, v in sorted(cands):
        key = _pair_score(t, u, v, by_degree) + (u, v)
        if best is None or key < best:
            best = key
    return best[2], best[3]


# ---------------------------------------------------------------- closed forms


def cograph_sequence(g: Graph) -> Optional[ContractionSequence]:
    """A 0-sequence obtained by merging twins, or ``None`` if we get stuck."""
    n = g.n
    if n == 0:
        return ContractionSequence(0, ())
    adj = {v: set(g.neighbors(v)) for v in range(n)}
    steps = []
    nxt = n
    while len(adj) > 1:
        pair = None
        open_sig: dict[frozenset, int] = {}
        closed_sig: dict[frozenset, int] = {}
        for v in sorted(adj):
            so = frozenset(adj[v])
            sc = so | {v}
            if so in open_sig:
                pair = (open_sig[so], v)
                break
            if sc in closed_sig:
                pair = (closed_sig[sc], v)
                break
            open_sig[so] = v
            closed_sig[sc] = v
        if pair is None:
            return None
        u, v = pair
        nu = adj.pop(u) - {v}
        adj.pop(v)
        for x in nu:
            adj[x].discard(u)
            adj[x].discard(v)
            adj[x].add(nxt)
        adj[nxt] = nu
        steps.append((u, v))
        nxt += 1
    return ContractionSequence(n, tuple(steps))


def unit_interval_graph(k: int, n: int) -> Graph:
    """``I_{k,nk}``: vertices ``0..nk-1``, ``j ~ j'`` iff ``|j - j'| <= k - 1``."""
    if k < 1 or n < 1:
        raise InputError("k and n must be positive")
    N = k * n
    return Graph(N, ((j, j2) for j in range(N) for j2 in range(j + 1, min(N, j + k))))


def _block_fold_sequence(w: int, m: int) -> ContractionSequence:
    """Fold ``m`` blocks of width ``w`` right to left, phase by phase, then merge the groups from the left."""
    N = w * m
    group = [i * w + w - 1 for i in range(m)]
    steps = []
    nxt = N
    for p in range(1, w):
        for i in range(m):
            steps.append((i * w + w - 1 - p, group[i]))
            group[i] = nxt
            nxt += 1
    acc = group[0]
    for i in range(1, m):
        steps.append((acc, group[i]))
        acc = nxt
        nxt += 1
    return ContractionSequence(N, tuple(steps))


def unit_interval_sequence(k: int, n: int) -> tuple[Graph, ContractionSequence]:
    """``I_{k,nk}`` with a sequence of width at most 2.

    The block fold only stays within width 2 when the block width equals
    the adjacency reach, which is ``k - 1`` here.  So we fold blocks of
    width ``k - 1`` on the smallest multiple of ``k - 1`` covering ``nk``
    vertices and restrict the result to the first ``nk`` of them.
    """
    g = unit_interval_graph(k, n)
    N = k * n
    w = max(1, k - 1)
    m = -(-N // w)
    kept, seq = induced_subsequence(_block_fold_sequence(w, m), range(N))
    return g, seq


def chain_sequence(n: int) -> ContractionSequence:
    """``(n-2, n-1)``, then each earlier vertex with the last merge."""
    steps = []
    if n >= 2:
        steps.append((n - 2, n - 1))
        for i in range(1, n - 1):
            steps.append((n - 2 - i, n + i - 1))
    return ContractionSequence(n, tuple(steps))


# ---------------------------------------------------------------- substitution and powers


@dataclass
class SubstitutionSpec:
    outer: Graph
    outer_seq: ContractionSequence
    target: int
    inner: Graph
    inner_seq: ContractionSequence

    def __post_init__(self):
        if self.outer.n < 1 or self.inner.n < 1:
            raise InputError("both graphs must be nonempty")
        if not 0 <= self.target < self.outer.n:
            raise InputError(f"target {self.target} is not a vertex of the outer graph")
        for g, s, name in ((self.outer, self.outer_seq, "outer"), (self.inner, self.inner_seq, "inner")):
            if s.base_n != g.n or not s.is_full:
                raise InputError(f"{name} sequence must be a full sequence for its graph")


def substitute(spec: SubstitutionSpec) -> tuple[Graph, ContractionSequence]:
    """Replace ``target`` by a module isomorphic to the inner graph.

    Inner vertex 0 takes the id ``target``; inner vertex ``j >= 1`` becomes
    ``n1 + j - 1``.  The sequence first collapses the module, then follows
    the outer sequence.
    """
    g1, g2, u = spec.outer, spec.inner, spec.target
    n1, n2 = g1.n, g2.n
    N = n1 + n2 - 1

    def m2(j):
        return u if j == 0 else n1 + j - 1

    edges = [(a, b) for a, b in g1.edges if u not in (a, b)]
    edges += [(m2(a), m2(b)) for a, b in g2.edges]
    for x in g1.neighbors(u):
        edges += [(x, m2(j)) for j in range(n2)]
    g = Graph(N, edges)

    steps = []
    alias2 = {j: m2(j) for j in range(n2)}
    for i, (a, b) in enumerate(spec.inner_seq.steps):
        steps.append((alias2[a], alias2[b]))
        alias2[n2 + i] = N + len(steps) - 1
    module = alias2[2 * n2 - 2] if n2 > 1 else u
    alias1 = {x: x for x in range(n1)}
    alias1[u] = module
    for i, (a, b) in enumerate(spec.outer_seq.steps):
        steps.append((alias1[a], alias1[b]))
        alias1[n1 + i] = N + len(steps) - 1
    return g, ContractionSequence(N, tuple(steps))


DEFAULT_POWER_CAP = 20_000


def _power_size(n: int, t: int, cap: int) -> int:
    size = 1
    for _ in range(t):
        size *= n
        if size > cap:
            raise SizeLimitError(f"G^{t} has {n}^{t} vertices, over the cap of {cap}")
    return size


def recursive_power(
    g: Graph, seq: ContractionSequence, t: int, max_vertices: int = DEFAULT_POWER_CAP
) -> tuple[Graph, ContractionSequence]:
    """``G^t`` on tuples encoded as base-``n`` numbers (first coordinate most significant)."""
    if t < 0:
        raise InputError("exponent must be nonnegative")
    if t == 0:
        return Graph(1), ContractionSequence(1, ())
    if seq.base_n != g.n or not seq.is_full:
        raise InputError("need a full sequence for the base graph")
    n = g.n
    _power_size(n, t, max_vertices)
    cur_g, cur_s = g, seq
    for _ in range(t - 1):
        cur_g, cur_s = _substitute_everywhere(g, seq, cur_g, cur_s)
    return cur_g, cur_s


def _substitute_everywhere(g, seq, inner, inner_seq):
    """Every vertex of ``g`` replaced by a copy of ``inner`` (block ``b`` = ids ``b*M..b*M+M-1``)."""
    n, M = g.n, inner.n
    N = n * M
    edges = []
    for b in range(n):
        off = b * M
        edges.extend((off + x, off + y) for x, y in inner.edges)
    for a, b in g.edges:
        ra = range(a * M, a * M + M)
        rb = range(b * M, b * M + M)
        edges.extend((x, y) for x in ra for y in rb)
    G = Graph(N, edges)
    steps = []
    final = []
    for b in range(n):
        off = b * M
        alias = {j: off + j for j in range(M)}
        for i, (x, y) in enumerate(inner_seq.steps):
            steps.append((alias[x], alias[y]))
            alias[M + i] = N + len(steps) - 1
        final.append(alias[2 * M - 2] if M > 1 else off)
    alias = {x: final[x] for x in range(n)}
    for i, (x, y) in enumerate(seq.steps):
        steps.append((alias[x], alias[y]))
        alias[n + i] = N + len(steps) - 1
    return G, ContractionSequence(N, tuple(steps))


def power_vertex(coords: Iterable[int], n: int) -> int:
    v = 0
    for c in coords:
        v = v * n + c
    return v


def power_coords(v: int, n: int, t: int) -> tuple[int, ...]:
    out = []
    for _ in range(t):
        v, c = divmod(v, n)
        out.append(c)
    return tuple(reversed(out))


def lift_independent_set(g: Graph, independent: Iterable[int], t: int) -> list[int]:
    """``I^t`` as ids of ``G^t``."""
    I = sorted(set(independent))
    if not g.is_independent(I):
        raise ContractViolation("input set is not independent")
    out = [0]
    for _ in range(t):
        out = [v * g.n + x for v in out for x in I]
    return sorted(out)


def extract_independent_set(g: Graph, independent: Iterable[int], t: int) -> list[int]:
    """An independent set of ``G`` of size at least ``|I'|^(1/t)`` from one of ``G^t``.

    The first coordinates of ``I'`` are independent in ``G``; if there are
    too few of them, some fiber is large and we recurse into it.
    """
    n = g.n
    tuples = [power_coords(v, n, t) for v in sorted(set(independent))]
    _check_power_independent(g, tuples)
    return sorted(_extract(tuples, t))


def _check_power_independent(g: Graph, tuples) -> None:
    for a in range(len(tuples)):
        for b in range(a + 1, len(tuples)):
            x, y = tuples[a], tuples[b]
            for i in range(len(x)):
                if x[i] != y[i]:
                    if g.has_edge(x[i], y[i]):
                        raise ContractViolation(f"{x} and {y} are adjacent in the power graph")
                    break


def _extract(tuples, t):
    if not tuples or t == 0:
        return set()
    heads: dict[int, list] = {}
    for x in tuples:
        heads.setdefault(x[0], []).append(x[1:])
    if t == 1:
        return set(heads)
    fiber = max(heads.values(), key=len)
    inner = _extract(fiber, t - 1)
    return set(heads) if len(heads) >= len(inner) else inner


def power_graph(g: Graph, r: int) -> Graph:
    """``G^{<=r}``: ``uv`` is an edge iff ``0 < dist(u, v) <= r``."""
    if r < 1:
        raise InputError("radius must be at least 1")
    edges = []
    for s in range(g.n):
        dist = {s: 0}
        q = deque([s])
        while q:
            x = q.popleft()
            if dist[x] == r:
                continue
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    q.append(y)
        edges.extend((s, y) for y in dist if y > s)
    return Graph(g.n, edges)


def sequence_for(g: Graph, seed: int = 0) -> ContractionSequence:
    """Default sequence: twin elimination when it works, greedy otherwise."""
    seq = cograph_sequence(g)
    if seq is not None:
        return seq
    return greedy_sequence(g, SequenceSearchConfig(rng_seed=seed))
