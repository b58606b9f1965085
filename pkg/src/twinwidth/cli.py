"""Command line entry point (``tww``).

Exit codes: 0 success, 1 a ``NONE`` answer (no solution, not a cograph),
2 bad input of any kind.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from . import io
from .errors import TwinWidthError
from .report import RunReport, Timer, bench, digest, graph_digest, sequence_digest

EXIT_OK, EXIT_NONE, EXIT_INPUT = 0, 1, 2


def _seed_default() -> int:
    raw = os.environ.get("TWW_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        return 0


def _inf(d) -> str:
    return "INF" if d == float("inf") else str(d)


class _Ctx:
    def __init__(self, args, out):
        self.args = args
        self.out = out
        self.report = RunReport(" ".join(x for x in (args.cmd, getattr(args, "sub", None)) if x))

    def print(self, *parts) -> None:
        print(*parts, file=self.out)

    def graph(self, attr: str = "graph"):
        path = getattr(self.args, attr)
        if path is None:
            raise _Usage(f"--{attr.replace('_', '-')} is required")
        g = io.read_graph(path)
        self.report.inputs[attr] = graph_digest(g)
        return g

    def sequence(self, g, attr: str = "seq"):
        path = getattr(self.args, attr, None)
        if path is None:
            from .toolkit import sequence_for

            seq = sequence_for(g, self.args.seed)
        else:
            seq = io.read_sequence(path)
        self.report.inputs[attr] = sequence_digest(seq)
        return seq

    def emit(self, text: str, path: Optional[str]) -> None:
        if path is None or path == "-":
            self.out.write(text)
        else:
            io.write_text(path, text)


class _Usage(Exception):
    pass


# ---------------------------------------------------------------- commands


def cmd_verify(ctx: _Ctx) -> int:
    from .sequence import verify_sequence

    g = ctx.graph()
    seq = ctx.sequence(g)
    if not ctx.args.partial and g.n and not seq.is_full:
        raise _Usage(f"sequence has {len(seq.steps)} steps, a full one needs {g.n - 1} (use --partial)")
    d = verify_sequence(g, seq, check=ctx.args.assert_invariants)
    ctx.report.result["D"] = d
    ctx.print(f"D {d}")
    return EXIT_OK


def _write_seq(ctx: _Ctx, g, seq, graph_out: Optional[str] = None) -> None:
    from .sequence import verify_sequence

    if graph_out:
        io.write_text(graph_out, io.format_graph(g))
    d = verify_sequence(g, seq)
    ctx.report.result["D"] = d
    ctx.report.inputs["result-seq"] = sequence_digest(seq)
    ctx.emit(io.format_sequence(seq), ctx.args.output)
    if ctx.args.output not in (None, "-"):
        ctx.print(f"D {d}")


def cmd_seq(ctx: _Ctx) -> int:
    from . import toolkit as tk

    a = ctx.args
    sub = a.sub
    if sub == "greedy":
        g = ctx.graph()
        cfg = tk.SequenceSearchConfig(candidate_pool=a.pool, sample_size=a.sample_size, rng_seed=a.seed)
        _write_seq(ctx, g, tk.greedy_sequence(g, cfg))
    elif sub == "exact":
        g = ctx.graph()
        d, seq = tk.exact_twin_width(g, a.cap)
        _write_seq(ctx, g, seq)
    elif sub == "cograph":
        g = ctx.graph()
        seq = tk.cograph_sequence(g)
        if seq is None:
            ctx.print("NONE")
            ctx.report.result["D"] = "NONE"
            return EXIT_NONE
        _write_seq(ctx, g, seq)
    elif sub == "unit-interval":
        g, seq = tk.unit_interval_sequence(a.k, a.n)
        _write_seq(ctx, g, seq, a.graph_out)
    elif sub == "power":
        g = ctx.graph()
        seq = ctx.sequence(g)
        pg, ps = tk.recursive_power(g, seq, a.t)
        _write_seq(ctx, pg, ps, a.graph_out)
    elif sub == "substitute":
        outer = ctx.graph("graph")
        outer_seq = ctx.sequence(outer, "seq")
        inner = ctx.graph("inner")
        inner_seq = ctx.sequence(inner, "inner_seq")
        g, seq = tk.substitute(tk.SubstitutionSpec(outer, outer_seq, a.target, inner, inner_seq))
        _write_seq(ctx, g, seq, a.graph_out)
    return EXIT_OK


def _print_set(ctx: _Ctx, S, label: str = "SIZE", value=None) -> int:
    if S is None:
        ctx.print("NONE")
        ctx.report.result[label] = "NONE"
        return EXIT_NONE
    for v in S:
        ctx.print(v)
    shown = len(S) if value is None else value
    ctx.print(f"{label} {shown}")
    ctx.report.result[label] = shown
    ctx.report.result["solution"] = list(S)
    return EXIT_OK


def cmd_solve(ctx: _Ctx) -> int:
    from .dominating import k_dominating_set, k_r_dominating_set
    from .independent import (
        DPStats,
        k_clique,
        k_independent_set,
        max_independent_set,
        r_scattered_set,
        weighted_k_independent_set,
    )
    from .subgraph import induced_subgraph_isomorphism, subgraph_isomorphism

    a = ctx.args
    check = a.assert_invariants
    st = DPStats()
    g = ctx.graph()
    sub = a.sub
    if sub in ("kis", "kds", "clique", "scattered"):
        if a.k is None:
            raise _Usage("-k is required")
        ctx.report.params["k"] = a.k
    if sub == "kis":
        seq = ctx.sequence(g)
        if a.weights:
            w = io.parse_weights(io.read_text(a.weights), g.n, a.weights)
            S = weighted_k_independent_set(g, w, seq, a.k, naive=a.naive_enum, check=check, stats=st)
            code = _print_set(ctx, S)
            total = sum(w[v] for v in S)
            ctx.print(f"WEIGHT {total:g}")
            ctx.report.result["WEIGHT"] = f"{total:g}"
        else:
            code = _print_set(ctx, k_independent_set(g, seq, a.k, naive=a.naive_enum, check=check, stats=st))
    elif sub == "mis":
        seq = ctx.sequence(g)
        code = _print_set(ctx, max_independent_set(g, seq, naive=a.naive_enum, check=check, stats=st))
    elif sub == "clique":
        seq = ctx.sequence(g)
        code = _print_set(ctx, k_clique(g, seq, a.k, check=check, stats=st))
    elif sub == "scattered":
        ctx.report.params["r"] = a.r
        code = _print_set(ctx, r_scattered_set(g, a.r, a.k, seed=a.seed, check=check, stats=st))
    elif sub == "kds":
        if a.r is not None and a.r != 1:
            ctx.report.params["r"] = a.r
            S = k_r_dominating_set(g, a.r, a.k, seed=a.seed, check=check, stats=st)
        else:
            S = k_dominating_set(g, ctx.sequence(g), a.k, check=check, stats=st)
        code = _print_set(ctx, S)
    else:
        if a.pattern is None:
            raise _Usage("--pattern is required")
        h = ctx.graph("pattern")
        seq = ctx.sequence(g)
        fn = induced_subgraph_isomorphism if sub == "indsub" else subgraph_isomorphism
        code = _print_set(ctx, fn(g, seq, h, check=check, stats=st))
    ctx.report.counters.update(st.as_dict())
    return code


def cmd_color(ctx: _Ctx) -> int:
    from .coloring import color_kt_free, color_triangle_free, palette_size

    a = ctx.args
    g = ctx.graph()
    seq = ctx.sequence(g)
    if a.tfree:
        col = color_triangle_free(g, seq, check=a.assert_invariants)
    else:
        col = color_kt_free(g, seq, a.t, check=a.assert_invariants)
    for v in range(g.n):
        ctx.print(v, ",".join(map(str, col[v])))
    p = palette_size(col)
    ctx.print(f"COLORS {p}")
    ctx.report.result["COLORS"] = p
    return EXIT_OK


def cmd_ehpair(ctx: _Ctx) -> int:
    from .coloring import eh_pair

    g = ctx.graph()
    pair = eh_pair(g, ctx.sequence(g))
    ctx.print("X", *pair.X)
    ctx.print("Y", *pair.Y)
    ctx.print("KIND", pair.kind)
    ctx.report.result.update(X=len(pair.X), Y=len(pair.Y), KIND=pair.kind)
    return EXIT_OK


def cmd_paths(ctx: _Ctx) -> int:
    from . import ibp as ib

    a = ctx.args
    if a.sub == "ibp" or a.ibp is None:
        g = ctx.graph()
        part = ib.build_ibp(g, ctx.sequence(g), check=a.assert_invariants)
    else:
        part = ib.parse_ibp(io.read_text(a.ibp), a.ibp)
        ctx.report.inputs["ibp"] = digest(ib.format_ibp(part))
        if a.assert_invariants:
            part.check()
    ctx.report.result["bicliques"] = len(part.bicliques)
    if a.sub == "ibp":
        ctx.emit(ib.format_ibp(part), a.output)
        if a.output not in (None, "-"):
            ctx.print(f"BICLIQUES {len(part.bicliques)}")
    elif a.sub == "sssp":
        st = ib.SSSPStats()
        parent, dist = ib.sssp(part, a.source, stats=st)
        for v in range(part.n):
            ctx.print(v, _inf(dist[v]))
        ctx.report.counters.update(side_deletions=st.side_deletions, vertex_deletions=st.vertex_deletions)
    elif a.sub == "apsp":
        for row in ib.apsp(part):
            ctx.print(*map(_inf, row))
    elif a.sub == "diameter":
        d = ib.diameter(part)
        ctx.print(_inf(d))
        ctx.report.result["diameter"] = _inf(d)
    return EXIT_OK


def cmd_oracle(ctx: _Ctx) -> int:
    from . import oracles as orc

    a = ctx.args
    g = ctx.graph()
    if a.sub == "bfs":
        for v, d in enumerate(orc.bfs_distances(g, a.source)):
            ctx.print(v, _inf(d))
        return EXIT_OK
    if a.sub == "tww":
        d, seq = orc.brute_twinwidth(g)
        ctx.print(f"D {d}")
        ctx.report.result["D"] = d
        return EXIT_OK
    fn = {"alpha": orc.brute_alpha, "gamma": orc.brute_gamma, "chi": orc.brute_chi, "omega": orc.brute_omega}[a.sub]
    value, witness = fn(g)
    ctx.print(a.sub.upper(), value)
    ctx.print("WITNESS", *witness)
    ctx.report.result[a.sub] = value
    return EXIT_OK


def cmd_bench(ctx: _Ctx) -> int:
    a = ctx.args
    sizes = [int(s) for s in a.sizes.split(",") if s.strip()] if a.sizes else []
    for rep in bench(a.family, sizes, a.problem, k=a.k, seed=a.seed, check=a.assert_invariants):
        ctx.out.write(rep.to_text(timing=not a.no_time))
        ctx.out.write("\n")
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=_seed_default(), help="sampling seed (default: $TWW_SEED or 0)")
    common.add_argument("--assert-invariants", action="store_true", help="run internal invariant checks")
    common.add_argument("--report", metavar="PATH", help="write a key-value run report here")
    common.add_argument("--no-time", action="store_true", help="leave wall time out of reports")

    def gs(p, seq=True):
        p.add_argument("--graph", "-g")
        if seq:
            p.add_argument("--seq", help="sequence file (default: computed)")

    parser = argparse.ArgumentParser(prog="tww", description="Algorithms on graphs given with a contraction sequence.")
    sp = parser.add_subparsers(dest="cmd", required=True)

    p = sp.add_parser("verify", parents=[common], help="print the width of a sequence")
    gs(p)
    p.add_argument("--partial", action="store_true", help="accept a prefix of a sequence")

    p = sp.add_parser("seq", parents=[common], help="compute or transform sequences")
    ss = p.add_subparsers(dest="sub", required=True)
    for name in ("greedy", "exact", "cograph", "unit-interval", "power", "substitute"):
        q = ss.add_parser(name, parents=[common])
        q.add_argument("-o", "--output", help="sequence output file (default: stdout)")
        if name != "unit-interval":
            gs(q, seq=name in ("power", "substitute"))
        if name in ("unit-interval", "power", "substitute"):
            q.add_argument("--graph-out", help="write the constructed graph here")
        if name == "greedy":
            q.add_argument("--pool", default="auto", choices=("auto", "all-pairs", "red-radius-2+sampled"))
            q.add_argument("--sample-size", type=int, default=64)
        elif name == "exact":
            q.add_argument("--cap", type=int, default=10, help="vertex cap")
        elif name == "unit-interval":
            q.add_argument("-k", type=int, required=True)
            q.add_argument("-n", type=int, required=True)
        elif name == "power":
            q.add_argument("-t", type=int, required=True)
        elif name == "substitute":
            q.add_argument("--target", type=int, required=True)
            q.add_argument("--inner", required=True)
            q.add_argument("--inner-seq")

    p = sp.add_parser("solve", parents=[common], help="parameterized problems")
    ss = p.add_subparsers(dest="sub", required=True)
    for name in ("kis", "mis", "clique", "scattered", "kds", "subiso", "indsub"):
        q = ss.add_parser(name, parents=[common])
        gs(q, seq=name != "scattered")
        q.add_argument("-k", type=int)
        if name == "kis":
            q.add_argument("--weights", help="'<vertex> <weight>' lines; missing vertices weigh 0")
        if name in ("kis", "mis"):
            q.add_argument("--naive-enum", action="store_true")
        if name in ("kds", "scattered"):
            q.add_argument("-r", type=int, default=None if name == "kds" else 2)
        if name in ("subiso", "indsub"):
            q.add_argument("--pattern")

    p = sp.add_parser("color", parents=[common], help="proper colouring from a sequence")
    gs(p)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--tfree", action="store_true", help="triangle-free colouring")
    grp.add_argument("-t", type=int, help="clique bound: the graph is K_t-free")

    p = sp.add_parser("ehpair", parents=[common], help="large complete or anticomplete pair")
    gs(p)

    p = sp.add_parser("paths", parents=[common], help="interval biclique partitions and distances")
    ss = p.add_subparsers(dest="sub", required=True)
    for name in ("ibp", "sssp", "apsp", "diameter"):
        q = ss.add_parser(name, parents=[common])
        gs(q)
        if name == "ibp":
            q.add_argument("-o", "--output")
        else:
            q.add_argument("--ibp", help="IBP file (else built from --graph/--seq)")
        if name == "sssp":
            q.add_argument("-s", "--source", type=int, default=0)

    p = sp.add_parser("oracle", parents=[common], help="brute-force reference answers")
    ss = p.add_subparsers(dest="sub", required=True)
    for name in ("alpha", "gamma", "chi", "omega", "tww", "bfs"):
        q = ss.add_parser(name, parents=[common])
        gs(q, seq=False)
        if name == "bfs":
            q.add_argument("-s", "--source", type=int, default=0)

    p = sp.add_parser("bench", parents=[common], help="timing rows for a graph family")
    p.add_argument("--family", required=True)
    p.add_argument("--sizes", default="", help="comma-separated sizes")
    p.add_argument("--problem", default="kis")
    p.add_argument("-k", type=int, default=5)
    return parser


COMMANDS = {
    "verify": cmd_verify,
    "seq": cmd_seq,
    "solve": cmd_solve,
    "color": cmd_color,
    "ehpair": cmd_ehpair,
    "paths": cmd_paths,
    "oracle": cmd_oracle,
    "bench": cmd_bench,
}


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    for name in ("naive_enum", "weights", "pattern", "output", "ibp", "r", "k"):
        if not hasattr(args, name):
            setattr(args, name, None)
    ctx = _Ctx(args, out)
    ctx.report.params["seed"] = args.seed
    try:
        with Timer() as tm:
            code = COMMANDS[args.cmd](ctx)
    except _Usage as exc:
        print(f"tww: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (TwinWidthError, OSError, ValueError) as exc:
        print(f"tww: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    ctx.report.seconds = tm.seconds
    if args.report:
        ctx.emit(ctx.report.to_text(timing=not args.no_time), args.report)
    return code


if __name__ == "__main__":
    sys.exit(main())
