"""Run reports and the benchmark harness."""

from __future__ import annotations

import hashlib
import random
import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from .errors import InputError
from .graph import Graph
from .io import format_graph, format_sequence
from .sequence import ContractionSequence, verify_sequence


def digest(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()[:16]


def graph_digest(g: Graph) -> str:
    return digest(format_graph(g))


def sequence_digest(seq: ContractionSequence) -> str:
    return digest(format_sequence(seq))


@dataclass
class RunReport:
    """Line-oriented ``key value`` record of one command or benchmark row.

    Wall time is the only nondeterministic field; ``to_text(timing=False)``
    leaves it out so reports can be compared byte for byte.
    """

    command: str
    inputs: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    result: dict = field(default_factory=dict)
    counters: dict = field(default_factory=dict)
    seconds: Optional[float] = None

    def to_text(self, timing: bool = True) -> str:
        lines = [f"command {self.command}"]
        for group, d in (("input", self.inputs), ("param", self.params), ("result", self.result)):
            lines.extend(f"{group} {k} {_fmt(v)}" for k, v in d.items())
        for k, v in self.counters.items():
            if v < 0:
                raise ValueError(f"counter {k} is negative")
            lines.append(f"counter {k} {v}")
        if timing and self.seconds is not None:
            lines.append(f"time {self.seconds:.6f}")
        return "\n".join(lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


FAMILIES = ("unit-interval", "grid-subgraph", "random-gnp", "clique")
PROBLEMS = ("kis", "kds", "sssp", "color", "verify")


def family_instance(family: str, size: int, seed: int) -> tuple[Graph, ContractionSequence]:
    """A graph of about ``size`` vertices from ``family`` together with a sequence for it."""
    from .generators import complete, gnp, grid_subgraph
    from .toolkit import SequenceSearchConfig, chain_sequence, greedy_sequence, unit_interval_sequence

    rng = random.Random(seed)
    if family == "unit-interval":
        return unit_interval_sequence(4, max(1, size // 4))
    if family == "clique":
        return complete(size), chain_sequence(size)
    if family == "grid-subgraph":
        side = max(1, int(round(size ** 0.5)))
        g = grid_subgraph(side, side, 0.8, rng)
    elif family == "random-gnp":
        g = gnp(size, min(1.0, 3.0 / max(size, 1)), rng)
    else:
        raise InputError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    return g, greedy_sequence(g, SequenceSearchConfig(rng_seed=seed))


def bench(
    family: str,
    sizes: Iterable[int],
    problem: str,
    *,
    k: int = 5,
    seed: int = 0,
    check: bool = False,
) -> Iterator[RunReport]:
    """One report per size: instance digest, answer summary, counters and timing."""
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}")
    if problem not in PROBLEMS:
        raise InputError(f"unknown problem {problem!r}; known: {', '.join(PROBLEMS)}")
    for size in sizes:
        g, seq = family_instance(family, size, seed)
        rep = RunReport(f"bench {family} {problem}")
        rep.inputs["graph"] = graph_digest(g)
        rep.params.update(n=g.n, m=g.m, seed=seed)
        if problem in ("kis", "kds"):
            rep.params["k"] = k
        with Timer() as tm:
            _bench_one(problem, g, seq, k, check, rep)
        rep.seconds = tm.seconds
        yield rep


def _bench_one(problem, g, seq, k, check, rep) -> None:
    from .coloring import color_kt_free, palette_size
    from .dominating import k_dominating_set
    from .ibp import SSSPStats, build_ibp, clique_ibp, sssp
    from .independent import DPStats, k_independent_set

    if problem == "verify":
        rep.result["D"] = verify_sequence(g, seq)
    elif problem == "kis":
        st = DPStats()
        rep.result["SIZE"] = len(k_independent_set(g, seq, k, check=check, stats=st))
        rep.counters.update(st.as_dict())
    elif problem == "kds":
        st = DPStats()
        S = k_dominating_set(g, seq, k, check=check, stats=st)
        rep.result["SIZE"] = "NONE" if S is None else len(S)
        rep.counters.update(st.as_dict())
    elif problem == "sssp":
        ibp = clique_ibp(g.n) if g.m == g.n * (g.n - 1) // 2 else build_ibp(g, seq, check=check)
        st = SSSPStats()
        _, dist = sssp(ibp, 0, stats=st) if g.n else ([], [])
        rep.result["reached"] = sum(1 for d in dist if d != float("inf"))
        rep.counters.update(bicliques=len(ibp.bicliques), side_deletions=st.side_deletions)
    elif problem == "color":
        rep.result["colors"] = palette_size(color_kt_free(g, seq, trust=True, t=_clique_bound(g)))


def _clique_bound(g: Graph) -> int:
    # a cheap valid bound: omega <= max degree + 1
    return max(3, max((g.degree(v) for v in range(g.n)), default=0) + 2)
