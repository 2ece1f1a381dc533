"""Command-line front end: ``sl2friezes COMMAND [options]``.

Coordinates are (x, y) with y growing downward. Output is JSON by default;
tiling values, frieze values and sequence terms are written as decimal
strings so that arbitrarily large integers survive any JSON reader.
Exit codes: 0 success, 2 domain error (JSON error object on stdout),
64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence, TextIO

from .dynkin import Graph, Kind, additive_function, classify_graph, predict_growth
from .errors import DomainError
from .exact_algebra import Mat2
from .linrec import check_ray_representation, guess_recursion, ray_representation
from .quiver import Quiver, frieze_numeric, frieze_symbolic, initial_seed, mutate, mutate_seed
from .tiling import (
    Band,
    BandTiling,
    Frontier,
    Tiling,
    count_fringe_paths,
    extend_partial,
    quad_corner_report,
    ray,
)
from .words import factor_sl2, mu

EXIT_DOMAIN = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _ints(text: str, count: int, what: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be {count} comma-separated integers") from None
    if len(vals) != count:
        raise argparse.ArgumentTypeError(f"{what} must be {count} comma-separated integers")
    return vals


def _pair(what: str) -> Callable[[str], tuple[int, ...]]:
    return lambda s: _ints(s, 2, what)


def _window(s: str) -> tuple[int, ...]:
    vals = _ints(s, 4, "window")
    if vals[2] < 0 or vals[3] < 0:
        raise argparse.ArgumentTypeError("window width and height must be nonnegative")
    return vals


def _nonneg(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {s!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return v


def _load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _num(x: Any) -> Any:
    """Exact number parsed from JSON (int, or decimal / fraction string)."""
    if isinstance(x, bool):
        raise DomainError("booleans are not numbers")
    if isinstance(x, int):
        return x
    f = Fraction(str(x))
    return int(f) if f.denominator == 1 else f


def _s(x: Any) -> str:
    return str(x)


def _grid(rows: list[list[Any]]) -> list[list[str]]:
    return [[_s(v) for v in r] for r in rows]


# -- commands -----------------------------------------------------------------

def _frontier(args: argparse.Namespace) -> Frontier:
    return Frontier.parse(args.frontier)


def cmd_tile(args: argparse.Namespace) -> dict:
    t = Tiling(_frontier(args), offset=args.offset)
    x, y, w, h = args.window
    return {"frontier": args.frontier, "origin": [x, y], "rows": _grid(t.window(x, y, w, h))}


def cmd_ray(args: argparse.Namespace) -> dict:
    t = Tiling(_frontier(args), offset=args.offset)
    terms = ray(t, args.origin, args.dir, args.count)
    return {"frontier": args.frontier, "origin": list(args.origin), "dir": list(args.dir),
            "terms": [_s(v) for v in terms]}


def cmd_ray_rep(args: argparse.Namespace) -> dict:
    f = _frontier(args)
    ox, oy = args.origin
    dx, dy = args.offset
    rr = ray_representation(f, (ox - dx, oy - dy), args.dir)
    out = rr.to_json(args.count)
    out["origin"] = [ox, oy]
    out["frontier"] = args.frontier
    out["verified_terms"] = args.count if check_ray_representation(f, rr, args.count) else 0
    return out


def cmd_frieze(args: argparse.Namespace) -> dict:
    q = Quiver.from_json(_load_json(args.quiver))
    fr = (frieze_symbolic if args.symbolic else frieze_numeric)(q, args.steps, back=args.back)
    out = {"vertices": list(q.vertices)}
    out.update(fr.to_json())
    if args.symbolic:
        out["coefficients_nonnegative"] = fr.coefficients_nonnegative()
    return out


def cmd_mutate(args: argparse.Namespace) -> dict:
    q = Quiver.from_json(_load_json(args.quiver))
    sequence = [v for v in args.at.split(",") if v]
    if not sequence:
        raise UsageError("--at needs at least one vertex")
    seed = initial_seed(q)
    for v in sequence:
        if v not in q.vertices:
            raise DomainError(f"unknown vertex {v!r}")
        q = mutate(q, v)
        if args.cluster:
            seed = mutate_seed(seed, v)
    out: dict[str, Any] = {"at": sequence}
    out.update(q.to_json())
    if args.cluster:
        out["cluster"] = {v: str(p) for v, p in seed.as_dict().items()}
    return out


def cmd_classify(args: argparse.Namespace) -> dict:
    if (args.graph is None) == (args.quiver is None):
        raise UsageError("classify needs exactly one of --graph or --quiver")
    if args.quiver is not None:
        return predict_growth(Quiver.from_json(_load_json(args.quiver))).to_json()
    g = Graph.from_json(_load_json(args.graph))
    c = classify_graph(g)
    out = c.to_json()
    if c.kind is Kind.EXTENDED:
        f = additive_function(c)
        out["additive_function"] = {v: _s(f[v]) for v in g.vertices}
    return out


def cmd_guess_rec(args: argparse.Namespace) -> dict:
    if (args.terms is None) == (args.input is None):
        raise UsageError("guess-rec needs exactly one of --terms or --input")
    if args.input is not None:
        data = _load_json(args.input)
        raw = data.get("terms") if isinstance(data, dict) else data
        if not isinstance(raw, list):
            raise DomainError("input must be a JSON array of numbers or an object with a 'terms' array")
    else:
        raw = [p for p in args.terms.split(",") if p.strip()]
    terms = [_num(x) for x in raw]
    max_order = args.max_order if args.max_order is not None else (len(terms) - 2) // 2
    rec = guess_recursion(terms, max_order)
    return {"found": rec is not None, "max_order": max_order,
            "recursion": rec.to_json() if rec else None}


def cmd_paths_oracle(args: argparse.Namespace) -> dict:
    paths = count_fringe_paths(args.word)
    m22 = mu(args.word).d
    return {"word": args.word, "paths": _s(paths), "mu22": _s(m22), "agree": paths == m22}


def cmd_factor_sl2(args: argparse.Namespace) -> dict:
    a, b, c, d = (_num(p) for p in args.matrix.split(","))
    return {"matrix": [[_s(a), _s(b)], [_s(c), _s(d)]], "word": factor_sl2(Mat2(a, b, c, d))}


def cmd_quad_report(args: argparse.Namespace) -> dict:
    rep = quad_corner_report(args.w, args.u, args.l)
    out = rep.as_dict()
    for k in ("q", "s", "q2", "s2", "tA", "tB", "tC", "tD"):
        out[k] = _s(out[k])
    out["form"] = [_s(v) for v in out["form"]]
    out["ok"] = rep.ok()
    return out


def cmd_extend_band(args: argparse.Namespace) -> dict:
    data = _load_json(args.band)
    x, y, w, h = args.window
    if "cells" in data:
        known = {(int(c[0]), int(c[1])): _num(c[2]) for c in data["cells"]}
        got = extend_partial(known, (x, y, w, h))
        rows = [[_s(got[(x + i, y + j)]) if (x + i, y + j) in got else None for i in range(w)]
                for j in range(h)]
        return {"origin": [x, y], "rows": rows}
    seqs = [[_num(v) for v in s] for s in data["sequences"]]
    band = Band(tuple(seqs), column_offset=int(data.get("column_offset", 0)), start=int(data.get("start", 0)))
    try:
        rows = BandTiling(band).window(x, y, w, h)
    except IndexError as exc:
        raise DomainError(f"window needs band data that was not supplied: {exc}") from None
    return {"origin": [x, y], "rows": _grid(rows)}


# -- rendering ----------------------------------------------------------------

def _cell(v: Any) -> str:
    return "." if v is None else str(v)


def render(result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2, ensure_ascii=False)
    if "rows" in result and isinstance(result["rows"], list):
        rows = [[_cell(v) for v in r] for r in result["rows"]]
    elif "rows" in result and isinstance(result["rows"], dict):
        rows = [[v] + [_cell(x) for x in vals] for v, vals in result["rows"].items()]
    elif "terms" in result:
        rows = [[_cell(v) for v in result["terms"]]]
    else:
        rows = [[k, json.dumps(v, ensure_ascii=False) if not isinstance(v, str) else v]
                for k, v in result.items()]
    if fmt == "tsv":
        return "\n".join("\t".join(r) for r in rows)
    width = max((len(c) for r in rows for c in r), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in r) for r in rows)


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sl2friezes", description="SL2-tilings, friezes, linear recursions and Dynkin diagrams.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv", "ascii"), default="json")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func: Callable, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    def frontier_opts(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--frontier", required=True, help='frontier "LEFT|CORE|RIGHT", e.g. "xxy||xxy"')
        sp.add_argument("--offset", type=_pair("offset"), default=(0, 0),
                        help="where the anchor point P_0 sits in output coordinates (default 0,0)")

    sp = add("tile", cmd_tile, "window of the tiling of a frontier")
    frontier_opts(sp)
    sp.add_argument("--window", type=_window, required=True, help="x,y,width,height")

    for name, func, text in (("ray", cmd_ray, "values along a ray"),
                             ("ray-rep", cmd_ray_rep, "linear representation of a ray")):
        sp = add(name, func, text)
        frontier_opts(sp)
        sp.add_argument("--origin", type=_pair("origin"), required=True)
        sp.add_argument("--dir", type=_pair("dir"), required=True)
        sp.add_argument("--count", type=_nonneg, default=12)

    sp = add("frieze", cmd_frieze, "frieze of an acyclic quiver")
    sp.add_argument("--quiver", required=True)
    sp.add_argument("--steps", type=_nonneg, default=5)
    sp.add_argument("--back", type=_nonneg, default=0, help="also run the recursion this many steps backward")
    sp.add_argument("--symbolic", action="store_true", help="Laurent polynomials in the initial variables")

    sp = add("mutate", cmd_mutate, "mutate a quiver (and optionally its cluster)")
    sp.add_argument("--quiver", required=True)
    sp.add_argument("--at", required=True, help="vertex, or comma-separated sequence of vertices")
    sp.add_argument("--cluster", action="store_true", help="also report the mutated cluster variables")

    sp = add("classify", cmd_classify, "Dynkin / extended Dynkin classification or growth prediction")
    sp.add_argument("--graph")
    sp.add_argument("--quiver")

    sp = add("guess-rec", cmd_guess_rec, "minimal linear recursion fitting a sequence")
    sp.add_argument("--terms", help="comma-separated terms")
    sp.add_argument("--input", help="JSON array of terms, or an object with a 'terms' array")
    sp.add_argument("--max-order", type=_nonneg)

    sp = add("paths-oracle", cmd_paths_oracle, "count fringe paths of a word and compare with mu(w)[2,2]")
    sp.add_argument("--word", required=True)

    sp = add("factor-sl2", cmd_factor_sl2, "word w with mu(w) equal to a nonnegative SL2 matrix")
    sp.add_argument("--matrix", required=True, help="a,b,c,d for the matrix (a b; c d)")

    sp = add("quad-report", cmd_quad_report, "quadratic-form corner identities")
    sp.add_argument("--w", required=True)
    sp.add_argument("--u", required=True)
    sp.add_argument("--l", type=_nonneg, default=0)

    sp = add("extend-band", cmd_extend_band, "tame extension of a band or partial tiling")
    sp.add_argument("--band", required=True, help="JSON file with 'sequences' (and optional 'start', "
                    "'column_offset') or with 'cells' as [x, y, value] triples")
    sp.add_argument("--window", type=_window, required=True)
    return p


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = args.func(args)
    except UsageError as exc:
        print(str(exc), file=err)
        return EXIT_USAGE
    except DomainError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=out)
        return EXIT_DOMAIN
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    print(render(result, args.format), file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
