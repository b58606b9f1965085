"""Contraction sequences, their replay, and the union-tree view.

Step ``i`` (0-based) of a sequence on ``base_n`` vertices merges two live
ids into the fresh id ``base_n + i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import InputError, InvalidContractionError, SequenceValidationError
from .graph import Graph
from .trigraph import ContractionRecord, Trigraph


@dataclass(frozen=True)
class ContractionSequence:
    base_n: int
    steps: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple((int(u), int(v)) for u, v in self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    @property
    def is_full(self) -> bool:
        return self.base_n >= 1 and len(self.steps) == self.base_n - 1

    def fresh_id(self, i: int) -> int:
        return self.base_n + i

    def validate(self, full: bool = False) -> None:
        """Structural check: ids exist, are live, and each is consumed once."""
        n = self.base_n
        if n < 0:
            raise SequenceValidationError("negative vertex count")
        if len(self.steps) > max(n - 1, 0):
            raise SequenceValidationError(f"{len(self.steps)} steps for {n} vertices")
        if full and not self.is_full:
            raise SequenceValidationError(
                f"expected {max(n - 1, 0)} steps for a full sequence, got {len(self.steps)}"
            )
        consumed = set()
        for i, (u, v) in enumerate(self.steps):
            fresh = n + i
            for x in (u, v):
                if not 0 <= x < fresh:
                    raise SequenceValidationError(f"id {x} does not exist yet", step=i)
                if x in consumed:
                    raise SequenceValidationError(f"id {x} was already contracted", step=i)
            if u == v:
                raise SequenceValidationError(f"contracts {u} with itself", step=i)
            consumed.add(u)
            consumed.add(v)

    def prefix(self, i: int) -> "ContractionSequence":
        return ContractionSequence(self.base_n, self.steps[:i])


def _check_graph(g: Graph, seq: ContractionSequence) -> None:
    if g.n != seq.base_n:
        raise SequenceValidationError(f"sequence is for {seq.base_n} vertices, graph has {g.n}")


def replay(g: Graph, seq: ContractionSequence) -> Iterator[tuple[int, ContractionRecord, Trigraph]]:
    """Yield ``(step, record, trigraph)`` after each contraction.

    The same trigraph object is mutated in place; copy it if a snapshot is
    needed.
    """
    _check_graph(g, seq)
    seq.validate()
    t = Trigraph.from_graph(g)
    n = seq.base_n
    for i, (u, v) in enumerate(seq.steps):
        try:
            rec = t.contract(u, v, n + i)
        except InvalidContractionError as exc:
            raise SequenceValidationError(str(exc), step=i) from exc
        yield i, rec, t


def verify_sequence(g: Graph, seq: ContractionSequence, check: bool = False) -> int:
    """Largest red degree seen along the (possibly partial) sequence."""
    best = 0
    for _, rec, t in replay(g, seq):
        rz = t.red[rec.z]
        best = max(best, len(rz), max((len(t.red[x]) for x in rz), default=0))
        if check:
            t.check_invariants()
    return best


def red_degree_profile(g: Graph, seq: ContractionSequence) -> list[int]:
    """Max red degree of every trigraph ``G_n, ..., G_1`` in replay order (slow, for tests)."""
    out = [0]
    for _, _, t in replay(g, seq):
        out.append(t.max_red_degree())
    return out


@dataclass
class VertexPartition:
    """Parts of ``V(G)`` keyed by the live trigraph vertex that represents them."""

    parts: dict[int, frozenset[int]]

    def part_of(self, original: int) -> int:
        for key, p in self.parts.items():
            if original in p:
                return key
        raise KeyError(original)

    def as_sets(self) -> list[frozenset[int]]:
        return sorted(self.parts.values(), key=min)


def trigraph_at(g: Graph, seq: ContractionSequence, i: int) -> tuple[Trigraph, VertexPartition]:
    """Trigraph and partition after the first ``i`` contractions."""
    if not 0 <= i <= len(seq.steps):
        raise IndexError(f"step index {i} outside 0..{len(seq.steps)}")
    parts = {v: frozenset((v,)) for v in range(g.n)}
    _check_graph(g, seq)
    t = Trigraph.from_graph(g)
    if i:
        for step, rec, t in replay(g, seq.prefix(i)):
            parts[rec.z] = parts.pop(rec.u) | parts.pop(rec.v)
    return t, VertexPartition(parts)


def complement_sequence(g: Graph, seq: ContractionSequence) -> tuple[Graph, ContractionSequence]:
    """The complement graph paired with the very same steps."""
    _check_graph(g, seq)
    seq.validate()
    return g.complement(), seq


class UnionFind:
    """Disjoint sets with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra


def union_find_replay(seq: ContractionSequence) -> Iterator[tuple[int, UnionFind, dict[int, int]]]:
    """Replay the sequence on original vertices only.

    Yields ``(step, uf, rep)`` where ``rep`` maps each live trigraph id to a
    representative original vertex of its part.
    """
    seq.validate()
    n = seq.base_n
    uf = UnionFind(n)
    rep = {v: v for v in range(n)}
    for i, (u, v) in enumerate(seq.steps):
        ru = rep.pop(u)
        rv = rep.pop(v)
        rep[n + i] = uf.union(ru, rv)
        yield i, uf, rep


class OrderedUnionTree:
    """Binary tree of the merges of a full sequence.

    Nodes share the trigraph id space: leaves are ``0..n-1`` and step ``i``
    creates internal node ``n+i`` whose left child is the step's ``u`` and
    right child its ``v``.  ``order[i]`` is that node.  After construction
    ``position[leaf]`` gives the left-to-right leaf rank and
    ``interval[node]`` the contiguous rank range ``(lo, hi)`` of its leaves.
    """

    def __init__(self, seq: ContractionSequence):
        seq.validate()
        if not seq.is_full:
            raise SequenceValidationError(
                f"union tree needs a full sequence ({max(seq.base_n - 1, 0)} steps), got {len(seq.steps)}"
            )
        n = seq.base_n
        self.base_n = n
        total = 2 * n - 1
        self.left = [-1] * total
        self.right = [-1] * total
        self.parent = [-1] * total
        for i, (u, v) in enumerate(seq.steps):
            z = n + i
            self.left[z] = u
            self.right[z] = v
            self.parent[u] = z
            self.parent[v] = z
        self.order = list(range(n, total))
        self.root = total - 1
        self.leaf_order: list[int] = []
        self.position = [0] * n
        self.interval: list[tuple[int, int]] = [(0, 0)] * total
        self._relabel()

    def _relabel(self) -> None:
        n = self.base_n
        left, right = self.left, self.right
        leaves = self.leaf_order
        stack = [self.root]
        while stack:
            x = stack.pop()
            if x < n:
                self.position[x] = len(leaves)
                self.interval[x] = (len(leaves), len(leaves))
                leaves.append(x)
            else:
                stack.append(right[x])
                stack.append(left[x])
        # internal nodes are created after their children, so id order is a post-order
        for z in range(n, 2 * n - 1):
            self.interval[z] = (self.interval[left[z]][0], self.interval[right[z]][1])

    def leaves(self, node: int) -> list[int]:
        lo, hi = self.interval[node]
        return self.leaf_order[lo:hi + 1]

    def node_of_step(self, i: int) -> int:
        return self.order[i]


def build_union_tree(g: Graph, seq: ContractionSequence) -> OrderedUnionTree:
    _check_graph(g, seq)
    return OrderedUnionTree(seq)


def sequence_from_pairs(n: int, pairs: Iterable[Sequence[int]]) -> ContractionSequence:
    """Convenience constructor that validates eagerly."""
    seq = ContractionSequence(n, tuple(tuple(p) for p in pairs))
    try:
        seq.validate()
    except SequenceValidationError as exc:
        raise InputError(str(exc)) from exc
    return seq


def induced_subsequence(seq: ContractionSequence, keep: Iterable[int]) -> tuple[list[int], ContractionSequence]:
    """Restrict a full sequence to the original vertices in ``keep``.

    Returns the sorted kept vertex list (new id ``j`` is ``kept[j]``) and a
    sequence on the induced subgraph: a step survives only when both of its
    sides still contain kept vertices.
    """
    kept = sorted(set(keep))
    m = len(kept)
    alias: dict[int, Optional[int]] = {}
    for j, v in enumerate(kept):
        alias[v] = j
    n = seq.base_n
    steps = []
    for i, (u, v) in enumerate(seq.steps):
        a = alias.get(u)
        b = alias.get(v)
        z = n + i
        if a is not None and b is not None:
            alias[z] = m + len(steps)
            steps.append((a, b))
        else:
            alias[z] = a if a is not None else b
    return kept, ContractionSequence(m, tuple(steps))
