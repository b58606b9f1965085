"""Dynamic interval stabbing over a fixed universe of intervals.

Intervals are ranked by ``(lo, hi)``.  A segment tree over the ranks keeps,
per node, the largest ``hi`` among live intervals below it.  An interval
with rank below ``bisect_right(los, p)`` starts at or before ``p``; it
contains ``p`` iff its ``hi >= p``, so a query descends only into subtrees
whose maximum reaches ``p``.  Each reported interval costs ``O(log m)``.
"""

from __future__ import annotations

import bisect
from typing import Iterable, Sequence

DEAD = -1 << 62


class StabbingStructure:
    """Intervals ``(lo, hi)`` (closed, integer) identified by their index in the constructor list.

    All intervals start live unless ``live=False``.  ``insert`` revives an
    interval of the universe, ``delete`` removes one; both are ``O(log m)``.
    """

    def __init__(self, intervals: Sequence[tuple[int, int]], live: bool = True):
        m = len(intervals)
        self.intervals = [tuple(iv) for iv in intervals]
        for lo, hi in self.intervals:
            if lo > hi:
                raise ValueError(f"empty interval ({lo}, {hi})")
        order = sorted(range(m), key=self.intervals.__getitem__)
        self._ids = order
        self._rank = [0] * m
        for r, i in enumerate(order):
            self._rank[i] = r
        self._los = [self.intervals[i][0] for i in order]
        self._his = [self.intervals[i][1] for i in order]
        size = 1
        while size < max(m, 1):
            size *= 2
        self._size = size
        mx = [DEAD] * (2 * size)
        if live:
            mx[size:size + m] = self._his
        for nd in range(size - 1, 0, -1):
            a, b = mx[2 * nd], mx[2 * nd + 1]
            mx[nd] = a if a > b else b
        self._mx = mx
        self._count = m if live else 0

    def __len__(self) -> int:
        return self._count

    def is_live(self, i: int) -> bool:
        return self._mx[self._size + self._rank[i]] != DEAD

    def _set(self, i: int, value: int) -> None:
        mx = self._mx
        nd = self._size + self._rank[i]
        mx[nd] = value
        nd >>= 1
        while nd:
            a, b = mx[2 * nd], mx[2 * nd + 1]
            v = a if a > b else b
            if mx[nd] == v:
                break
            mx[nd] = v
            nd >>= 1

    def insert(self, i: int) -> None:
        if not self.is_live(i):
            self._set(i, self._his[self._rank[i]])
            self._count += 1

    def delete(self, i: int) -> None:
        if self.is_live(i):
            self._set(i, DEAD)
            self._count -= 1

    def _collect(self, limit: int, thr: int) -> list[int]:
        """Ranks below ``limit`` whose live ``hi`` is at least ``thr``."""
        mx, size = self._mx, self._size
        out: list[int] = []
        if limit <= 0 or mx[1] < thr:
            return out
        stack = [(1, 0, size)]
        while stack:
            nd, lo, width = stack.pop()
            if nd >= size:
                out.append(nd - size)
                continue
            half = width >> 1
            r = 2 * nd + 1
            if lo + half < limit and mx[r] >= thr:
                stack.append((r, lo + half, half))
            if mx[2 * nd] >= thr:
                stack.append((2 * nd, lo, half))
        return out

    def _kill(self, ranks: Iterable[int]) -> None:
        mx, size = self._mx, self._size
        touched = set()
        n = 0
        for r in ranks:
            mx[size + r] = DEAD
            touched.add((size + r) >> 1)
            n += 1
        self._count -= n
        while touched:
            nxt = set()
            for nd in touched:
                a, b = mx[2 * nd], mx[2 * nd + 1]
                v = a if a > b else b
                if v != mx[nd]:
                    mx[nd] = v
                    if nd > 1:
                        nxt.add(nd >> 1)
            touched = nxt

    def stab(self, p: int) -> list[int]:
        """Live intervals containing ``p``, in ``(lo, hi)`` order."""
        return [self._ids[r] for r in self._collect(bisect.bisect_right(self._los, p), p)]

    def intersecting(self, lo: int, hi: int) -> list[int]:
        """Live intervals meeting ``[lo, hi]``, in ``(lo, hi)`` order."""
        return [self._ids[r] for r in self._collect(bisect.bisect_right(self._los, hi), lo)]

    def pop_stab(self, p: int) -> list[int]:
        """``stab`` followed by deleting everything reported (one batched update)."""
        rs = self._collect(bisect.bisect_right(self._los, p), p)
        self._kill(rs)
        return [self._ids[r] for r in rs]

    def pop_intersecting(self, lo: int, hi: int) -> list[int]:
        rs = self._collect(bisect.bisect_right(self._los, hi), lo)
        self._kill(rs)
        return [self._ids[r] for r in rs]

    def copy(self) -> "StabbingStructure":
        other = object.__new__(StabbingStructure)
        other.__dict__.update(self.__dict__)
        other._mx = list(self._mx)
        return other
