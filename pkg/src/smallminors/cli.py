"""Command-line front door: generate, find, verify, oracle, bench.

Exit code 2 means the input violates a finder's hypothesis. Any other
failure exits 1, including a certificate that does not verify.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import bounds, dense, generators, oracle, surface
from .embedded import EmbeddedGraph
from .errors import FormatError, PreconditionError
from .graph import Graph, KtModel, cycle_to_k3_model, validate_model
from .io import format_certificate, format_edge_list, format_embedding, parse_certificate, parse_edge_list, parse_embedding


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _load(path: str) -> Graph | EmbeddedGraph:
    text = Path(path).read_text()
    if any(":" in line.split("#", 1)[0] for line in text.splitlines()):
        return parse_embedding(text)
    return parse_edge_list(text)


def _graph_of(obj) -> Graph:
    return obj.graph if isinstance(obj, EmbeddedGraph) else obj


def _embedding_of(obj, what: str) -> EmbeddedGraph:
    if not isinstance(obj, EmbeddedGraph):
        raise FormatError(f"{what} needs an embedding file (rotation system)")
    return obj


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# -- generate -----------------------------------------------------------

GENERATORS = {
    "cycle-square": (1, lambda a, s: generators.cycle_square(*a)),
    "snub": (0, lambda a, s: generators.snub_dodecahedron()),
    "gadget": (1, lambda a, s: generators.planar_4plus_eps_gadget(*a)),
    "bouquet": (2, lambda a, s: generators.genus_bouquet(*a)),
    "one-face": (2, lambda a, s: generators.surface_one_face_degree4(*a)),
    "square-matching": (1, lambda a, s: generators.cycle_square_plus_matching(*a)),
    "torus": (1, lambda a, s: generators.toroidal_grid(*a)),
    "high-girth": (3, lambda a, s: generators.high_girth_regular(*a, seed=s)),
    "random": (2, lambda a, s: generators.random_graph(*a, seed=s)),
}


def cmd_generate(args) -> int:
    arity, build = GENERATORS[args.kind]
    if len(args.params) != arity:
        raise FormatError(f"{args.kind} takes {arity} integer parameter(s)")
    obj = build([int(p) for p in args.params], args.seed)
    if isinstance(obj, EmbeddedGraph) and not args.edge_list:
        _emit(format_embedding(obj), args.out)
    else:
        _emit(format_edge_list(_graph_of(obj)), args.out)
    return 0


# -- find ---------------------------------------------------------------


def cmd_find(args) -> int:
    obj = _load(args.graph)
    g = _graph_of(obj)
    eps = args.eps
    meta: dict[str, object] = {"op": args.op, "n": g.n}
    if eps is not None:
        meta["eps"] = eps
    if args.op == "blind-edge":
        (v, w), (sv, sw) = surface.blind_edge(_embedding_of(obj, "blind-edge"))
        print(f"edge {v} {w} sees {sv} {sw}")
        return 0
    if args.op == "k4":
        model = dense.small_k4_model(g, eps)
    elif args.op == "kt":
        model = dense.small_kt_model(g, args.t, eps, args.variant)
        meta["t"] = args.t
        meta["variant"] = args.variant
    elif args.op == "k3-nice":
        model = dense.nice_k3_model(g, eps)
    elif args.op == "cycle":
        model = cycle_to_k3_model(dense.short_cycle(g, eps))
    elif args.op == "k4-planar":
        model = surface.planar_general_k4(_embedding_of(obj, "k4-planar"), eps)
    elif args.op == "k4-surface":
        e = _embedding_of(obj, "k4-surface")
        model = surface.surface_k4(e, eps, facewidth_ge3=True)
        meta["genus"] = e.genus
    else:  # pragma: no cover - argparse restricts choices
        raise FormatError(f"unknown op {args.op}")
    _emit(format_certificate(model, meta), args.out)
    print(f"{args.op}: K{model.t}-model with {model.size} vertices", file=sys.stderr)
    return 0


# -- verify -------------------------------------------------------------


def size_bound(op: str, n: int, eps: Fraction | None, t: int | None, variant: str, genus: int = 0) -> float | None:
    """Size bound a certificate from ``op`` must meet, or None if the op has none."""
    if op is None or eps is None:
        return None
    log_n = math.log2(n) if n > 1 else 0.0
    if op == "k4":
        return bounds.h_k4(eps) * log_n
    if op == "k3-nice":
        return bounds.h_k3_nice(eps) * log_n
    if op == "kt":
        return bounds.h_kt(t, eps, variant) * log_n
    if op == "cycle":
        return 2 * bounds.p_bound(2 + eps, 2) * log_n + 1
    if op == "k4-planar":
        return float(bounds.planar_general_bound(eps))
    if op == "k4-surface":
        return bounds.surface_k4_coefficient(eps) * math.log2(genus + 2)
    return None


def cmd_verify(args) -> int:
    model, meta = parse_certificate(Path(args.cert).read_text())
    obj = _load(args.graph)
    g = _graph_of(obj)
    try:
        problem = validate_model(g, model)
    except ValueError as exc:
        problem = str(exc)
    if problem is not None:
        print(f"FAIL: {problem}")
        return 1
    op = args.op or meta.get("op")
    eps = args.eps if args.eps is not None else (Fraction(meta["eps"]) if "eps" in meta else None)
    t = args.t or (int(meta["t"]) if "t" in meta else model.t)
    variant = args.variant or meta.get("variant", "strong")
    genus = obj.genus if isinstance(obj, EmbeddedGraph) else int(meta.get("genus", 0))
    limit = size_bound(op, g.n, eps, t, variant, genus)
    if limit is not None and model.size > limit + bounds.SLACK:
        print(f"FAIL: size {model.size} exceeds the {op} bound {limit:.3f}")
        return 1
    suffix = f", size {model.size} <= {limit:.3f}" if limit is not None else ""
    print(f"PASS: valid K{model.t}-model{suffix}")
    return 0


# -- oracle -------------------------------------------------------------


def cmd_oracle(args) -> int:
    if args.what in ("lemma-a1", "lemma-a2"):
        check = oracle.check_lemma_A1 if args.what == "lemma-a1" else oracle.check_lemma_A2
        res = check(args.alpha_max, args.d_max, args.f_max)
        if res.passed:
            print(f"PASS: {res.checked} instances checked, {res.vacuous_pruned} vacuous branches pruned")
            return 0
        print(f"FAIL: counterexample alpha={res.counterexample[0]} f={res.counterexample[1]}")
        return 1
    if not args.graph:
        raise FormatError(f"oracle {args.what} needs a graph file")
    g = _graph_of(_load(args.graph))
    if args.what == "girth":
        gi = oracle.girth_exact(g)
        print("inf" if gi == math.inf else int(gi))
        return 0
    found = oracle.min_kt_model(g, args.t, args.cap)
    if found is None:
        print(f"none <= {args.cap}")
        return 0
    size, model = found
    print(f"minimum {size}")
    if args.out:
        Path(args.out).write_text(format_certificate(model, {"op": "oracle", "n": g.n}))
    return 0


# -- bench --------------------------------------------------------------


def bench_rows(min_exp: int, max_exp: int, avg, eps, seed: int, op: str = "k4"):
    for exp in range(min_exp, max_exp + 1):
        n = 2**exp
        g = generators.random_graph(n, avg, seed=seed + exp)
        start = time.perf_counter()
        if op == "k4":
            model = dense.small_k4_model(g, eps)
        else:
            model = dense.nice_k3_model(g, eps)
        elapsed = time.perf_counter() - start
        yield n, math.log2(n), model.size, model.size / math.log2(n), elapsed


def cmd_bench(args) -> int:
    print("n\tlog2n\tsize\tratio\tseconds")
    for n, lg, size, ratio, secs in bench_rows(args.min_exp, args.max_exp, args.avg, args.eps, args.seed, args.op):
        print(f"{n}\t{lg:.0f}\t{size}\t{ratio:.4f}\t{secs:.3f}", flush=True)
    return 0


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="smallminors", description="Small complete-minor models in dense graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write an extremal graph or embedding")
    gen.add_argument("kind", choices=sorted(GENERATORS))
    gen.add_argument("params", nargs="*")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--edge-list", action="store_true", help="write the abstract graph only")
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_generate)

    find = sub.add_parser("find", help="run a finder and write a certificate")
    find.add_argument("op", choices=["k4", "kt", "k3-nice", "cycle", "k4-planar", "k4-surface", "blind-edge"])
    find.add_argument("graph")
    find.add_argument("--eps", type=_fraction, default=Fraction(1))
    find.add_argument("--t", type=int, default=4)
    find.add_argument("--variant", choices=["strong", "weak"], default="strong")
    find.add_argument("--out")
    find.set_defaults(func=cmd_find)

    ver = sub.add_parser("verify", help="re-check a certificate against a graph")
    ver.add_argument("cert")
    ver.add_argument("graph")
    ver.add_argument("--op")
    ver.add_argument("--eps", type=_fraction)
    ver.add_argument("--t", type=int)
    ver.add_argument("--variant", choices=["strong", "weak"])
    ver.set_defaults(func=cmd_verify)

    orc = sub.add_parser("oracle", help="brute-force ground truth")
    orc.add_argument("what", choices=["min-model", "girth", "lemma-a1", "lemma-a2"])
    orc.add_argument("graph", nargs="?")
    orc.add_argument("--t", type=int, default=4)
    orc.add_argument("--cap", type=int, default=12)
    orc.add_argument("--alpha-max", type=_fraction, default=Fraction(60))
    orc.add_argument("--d-max", type=int, default=10)
    orc.add_argument("--f-max", type=int, default=40)
    orc.add_argument("--out")
    orc.set_defaults(func=cmd_oracle)

    bench = sub.add_parser("bench", help="model size against log2 n on random graphs")
    bench.add_argument("--op", choices=["k4", "k3-nice"], default="k4")
    bench.add_argument("--min-exp", type=int, default=8)
    bench.add_argument("--max-exp", type=int, default=16)
    bench.add_argument("--avg", type=_fraction, default=Fraction(5))
    bench.add_argument("--eps", type=_fraction, default=Fraction(1))
    bench.add_argument("--seed", type=int, default=0)
    bench.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 2
    except (FormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # internal failures still get the documented exit code
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
