"""Plain-text file formats.

Graph::

    c comment
    p tww <n> <m>
    e <u> <v>

Sequence::

    s tww <n>
    <u> <v>          (one line per step, fresh ids implicit)

Weights: ``<vertex> <weight>`` per line.  Interval biclique partitions use
``b tww <n> <count>``, then ``<a1> <a2> <b1> <b2>`` lines and a
``pi <orig> <pos>`` block.
"""

from __future__ import annotations

import io as _io
from pathlib import Path
from typing import Iterable, TextIO, Union

from .errors import InputError, SequenceValidationError
from .graph import Graph
from .sequence import ContractionSequence

PathLike = Union[str, Path]


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c ") or line == "c":
            continue
        yield lineno, line.split()


def _ints(tokens, source, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"expected integers, got {' '.join(tokens)!r}", source=source, line=lineno) from None


def parse_graph(text: str, source: str = "<graph>") -> Graph:
    n = m = None
    edges = []
    for lineno, tok in _lines(text):
        if tok[0] == "p":
            if n is not None:
                raise InputError("duplicate header", source=source, line=lineno)
            if len(tok) != 4 or tok[1] != "tww":
                raise InputError("header must be 'p tww <n> <m>'", source=source, line=lineno)
            n, m = _ints(tok[2:], source, lineno)
            if n < 0 or m < 0:
                raise InputError("negative counts in header", source=source, line=lineno)
        elif tok[0] == "e":
            if n is None:
                raise InputError("edge before header", source=source, line=lineno)
            if len(tok) != 3:
                raise InputError("edge line must be 'e <u> <v>'", source=source, line=lineno)
            u, v = _ints(tok[1:], source, lineno)
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"vertex out of range 0..{n - 1}", source=source, line=lineno)
            if u == v:
                raise InputError(f"self-loop at {u}", source=source, line=lineno)
            edges.append((u, v, lineno))
        else:
            raise InputError(f"unknown line type {tok[0]!r}", source=source, line=lineno)
    if n is None:
        raise InputError("missing 'p tww' header", source=source)
    seen = set()
    for u, v, lineno in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"duplicate edge {u} {v}", source=source, line=lineno)
        seen.add(key)
    if len(seen) != m:
        raise InputError(f"header announces {m} edges, found {len(seen)}", source=source)
    return Graph(n, seen)


def format_graph(g: Graph) -> str:
    out = [f"p tww {g.n} {g.m}"]
    out.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def parse_sequence(text: str, source: str = "<sequence>") -> ContractionSequence:
    n = None
    steps = []
    for lineno, tok in _lines(text):
        if tok[0] == "s":
            if n is not None:
                raise InputError("duplicate header", source=source, line=lineno)
            if len(tok) != 3 or tok[1] != "tww":
                raise InputError("header must be 's tww <n>'", source=source, line=lineno)
            (n,) = _ints(tok[2:], source, lineno)
        else:
            if n is None:
                raise InputError("step before header", source=source, line=lineno)
            if len(tok) != 2:
                raise InputError("step line must be '<u> <v>'", source=source, line=lineno)
            steps.append(tuple(_ints(tok, source, lineno)))
    if n is None:
        raise InputError("missing 's tww' header", source=source)
    seq = ContractionSequence(n, tuple(steps))
    try:
        seq.validate()
    except SequenceValidationError as exc:
        raise InputError(str(exc), source=source) from exc
    return seq


def format_sequence(seq: ContractionSequence) -> str:
    out = [f"s tww {seq.base_n}"]
    out.extend(f"{u} {v}" for u, v in seq.steps)
    return "\n".join(out) + "\n"


def parse_weights(text: str, n: int, source: str = "<weights>") -> list[float]:
    """Vertex weights; unlisted vertices get weight 0."""
    w = [0.0] * n
    seen = set()
    for lineno, tok in _lines(text):
        if len(tok) != 2:
            raise InputError("weight line must be '<vertex> <weight>'", source=source, line=lineno)
        (v,) = _ints(tok[:1], source, lineno)
        if not 0 <= v < n:
            raise InputError(f"vertex {v} out of range", source=source, line=lineno)
        if v in seen:
            raise InputError(f"duplicate weight for {v}", source=source, line=lineno)
        try:
            x = float(tok[1])
        except ValueError:
            raise InputError(f"bad weight {tok[1]!r}", source=source, line=lineno) from None
        if x != x or x in (float("inf"), float("-inf")):
            raise InputError("weights must be finite", source=source, line=lineno)
        seen.add(v)
        w[v] = x
    return w


def format_weights(w: Iterable[float]) -> str:
    return "".join(f"{v} {x!r}\n" for v, x in enumerate(w))


def read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", source=str(path)) from None


def read_graph(path: PathLike) -> Graph:
    return parse_graph(read_text(path), source=str(path))


def read_sequence(path: PathLike) -> ContractionSequence:
    return parse_sequence(read_text(path), source=str(path))


def write_text(path_or_stream: Union[PathLike, TextIO], text: str) -> None:
    if isinstance(path_or_stream, (_io.TextIOBase,)) or hasattr(path_or_stream, "write"):
        path_or_stream.write(text)
    else:
        Path(path_or_stream).write_text(text)
