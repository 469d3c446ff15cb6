"""Command-line front end: eval, scan, decay, graph, member, enumerate.

Exit codes: 0 success, 2 parse/usage error, 3 normalization failure,
4 cross-check or membership-method mismatch.  The graph-side backends
(``chromatic``, ``state-sum``) always evaluate at the chromatic parameter
t = delta^2, so cross-checking them against ``tl`` doubles as a test that
the supplied weights really sit at the chromatic point.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
from typing import Callable, Dict, List, Optional, Sequence

from .coeffs import VertexWeights, decay_sequence, spectral_check, vacuum
from .forests import ThompsonElement, enumerate_elements, generator, mirror, multiply
from .scalars import Scalar, parse_scalar, scalar_str

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NORMALIZATION = 3
EXIT_MISMATCH = 4

_BACKENDS = ("tl", "reference", "chromatic", "tutte", "state-sum")


class CliError(Exception):
    """Carries an exit code alongside the message."""

    def __init__(self, message: str, code: int = EXIT_PARSE):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# parsing helpers

_TOKEN = re.compile(r"x(\d+)(?:\^(-?\d+))?\Z")


def parse_element(text: str) -> ThompsonElement:
    """Words like ``x0 x1^-1 x0^2`` or ``pair:<bits>,<bits>``; empty = identity."""
    result = ThompsonElement.identity()
    for token in text.split():
        if token.startswith("pair:"):
            try:
                factor = ThompsonElement.decode(token)
            except ValueError as exc:
                raise CliError(f"bad element token {token!r}: {exc}") from exc
        else:
            m = _TOKEN.match(token)
            if m is None:
                raise CliError(f"cannot parse element token {token!r}")
            factor = generator(int(m.group(1))) ** int(m.group(2) or 1)
        result = multiply(result, factor)
    return result


def _scalar(text: str, flag: str) -> Scalar:
    try:
        return parse_scalar(text)
    except ValueError as exc:
        raise CliError(f"bad scalar for {flag}: {exc}") from exc


def _resolve_weights(args: argparse.Namespace) -> VertexWeights:
    """Build VertexWeights from the --delta/--a/--b/--t family flags."""
    try:
        if args.t is not None:
            return VertexWeights.chromatic(_scalar(args.t, "--t"))
        if args.delta is None:
            raise CliError("need --delta (or --t for the chromatic family)")
        delta = _scalar(args.delta, "--delta")
        if args.chromatic:
            return VertexWeights.chromatic(delta * delta)
        if args.equal_pair:
            return VertexWeights.equal_pair(delta)
        if args.b_zero:
            return VertexWeights.b_zero(delta)
        if args.a is None or args.b is None:
            raise CliError(
                "need --a and --b, or one of --chromatic/--equal-pair/--b-zero"
            )
        return VertexWeights(delta, _scalar(args.a, "--a"), _scalar(args.b, "--b"))
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _check_normalized(w: VertexWeights, tol: float) -> None:
    if not w.is_normalized(tol):
        residual = w.normalization() - Scalar.rational(1)
        raise CliError(
            f"weights are not normalized: residual {scalar_str(residual)}",
            EXIT_NORMALIZATION,
        )


def _float_parts(value: Scalar):
    z = value.to_complex()
    if z.imag == 0:
        return z.real
    return [z.real, z.imag]


def _default_workers() -> int:
    return int(os.environ.get("TLJ_WORKERS", "1"))


# ---------------------------------------------------------------------------
# subcommands


def _eval_backend(g: ThompsonElement, w: VertexWeights, backend: str) -> Scalar:
    if backend in ("tl", "reference"):
        return vacuum(g, w, backend=backend)
    from . import graphpoly

    if backend == "tutte":
        return graphpoly.vacuum_via_tutte(g, w)
    t = w.chromatic_t if w.chromatic_t is not None else w.delta * w.delta
    if backend == "chromatic":
        return graphpoly.vacuum_via_chromatic(g, t)
    if backend == "state-sum":
        return graphpoly.vacuum_via_state_sum(g, t)
    raise CliError(f"unknown backend {backend!r}")


def _agree(u: Scalar, v: Scalar, tol: float) -> bool:
    if u.is_exact() and v.is_exact():
        return u == v
    return u.close_to(v, tol)


def cmd_eval(args: argparse.Namespace) -> int:
    g = parse_element(args.element)
    w = _resolve_weights(args)
    _check_normalized(w, args.tol)
    try:
        value = _eval_backend(g, w, args.backend)
    except ValueError as exc:
        raise CliError(str(exc)) from exc

    if args.cross_check is not None:
        names = [s.strip() for s in args.cross_check.split(",") if s.strip()]
        if len(names) != 2:
            raise CliError("--cross-check needs two comma-separated backends")
        try:
            first = _eval_backend(g, w, names[0])
            second = _eval_backend(g, w, names[1])
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        ok = _agree(first, second, args.tol)
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "element": g.encode(),
                        "backends": names,
                        "values": [scalar_str(first), scalar_str(second)],
                        "agree": ok,
                    }
                )
            )
        else:
            print(f"phi = {scalar_str(first)}  [backend: {names[0]}]")
            print(f"phi = {scalar_str(second)}  [backend: {names[1]}]")
            print(f"cross-check: {'ok' if ok else 'mismatch'}")
        return EXIT_OK if ok else EXIT_MISMATCH

    if args.format == "json":
        print(
            json.dumps(
                {
                    "element": g.encode(),
                    "backend": args.backend,
                    "value": scalar_str(value),
                    "value_float": _float_parts(value),
                }
            )
        )
    else:
        print(f"phi = {scalar_str(value)}  [backend: {args.backend}]")
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    from .graphpoly import chromatic_at, thompson_graph
    from .subgroups import stabilizer_scan

    t = _scalar(args.t, "--t")
    print(
        f"scanning reduced elements up to {args.max_leaves} leaves at t = {scalar_str(t)}",
        file=sys.stderr,
    )
    try:
        hits = stabilizer_scan(t, args.max_leaves, workers=args.workers, tol=args.tol)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    records = []
    for g in hits:
        graph = thompson_graph(g)
        records.append(
            {
                "element": g.encode(),
                "leaves": g.leaves,
                "edges": [[u, v] for u, v in graph.edges],
                "value": scalar_str(chromatic_at(graph, t)),
            }
        )
    print(f"{len(records)} stabilizer elements found", file=sys.stderr)
    if args.format == "text":
        for r in records:
            print(f"{r['element']}  leaves={r['leaves']}  value={r['value']}")
    else:
        print(json.dumps(records, indent=2))
    return EXIT_OK


def cmd_decay(args: argparse.Namespace) -> int:
    w = _resolve_weights(args)
    _check_normalized(w, args.tol)
    if not w.real:
        raise CliError("decay needs real weights")
    base = parse_element(args.base)
    identity = ThompsonElement.identity()
    x0 = generator(0)
    if base != identity and base != x0:
        raise CliError("decay base must be x0 or the identity")

    spectrum = spectral_check(w)
    r_plus = abs(spectrum["roots"][0].to_complex())
    r_minus = abs(spectrum["roots"][1].to_complex())
    if w.a == Scalar.rational(0) or w.a.to_complex() == 0:
        print("a = 0: direct evaluation fallback", file=sys.stderr)

    rows = []
    if base == identity:
        for k in range(args.powers + 1):
            rows.append((k, 1.0, 1.0))
    else:
        via_matrix = decay_sequence(w, args.powers)
        for k in range(args.powers + 1):
            direct = vacuum(x0**k, w)
            rows.append((k, direct.to_float(), via_matrix[k].to_float()))

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["k", "direct", "via_a", "abs_r_plus", "abs_r_minus"])
    for k, direct, via in rows:
        writer.writerow([k, repr(direct), repr(via), repr(r_plus), repr(r_minus)])
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    from .graphpoly import chromatic, thompson_graph

    g = parse_element(args.element)
    graph = thompson_graph(g)
    if args.format == "dot":
        lines = [f"graph \"{g.encode()}\" {{"]
        lines += [f"  {v};" for v in range(1, graph.n + 1)]
        lines += [f"  {u} -- {v};" for u, v in graph.edges]
        lines.append("}")
        print("\n".join(lines))
    elif args.format == "json":
        print(
            json.dumps(
                {
                    "element": g.encode(),
                    "vertices": graph.n,
                    "edges": [[u, v] for u, v in graph.edges],
                    "chromatic": list(chromatic(graph)),
                }
            )
        )
    else:
        print(f"element: {g.encode()}")
        print(f"vertices: {graph.n}")
        print("edges: " + " ".join(f"({u},{v})" for u, v in graph.edges))
    return EXIT_OK


def cmd_member(args: argparse.Namespace) -> int:
    from .subgroups import jones_membership

    g = parse_element(args.element)
    target = g if args.subgroup == "jones" else mirror(g)
    verdicts = {
        method: jones_membership(target, method)
        for method in ("parity", "bipartite", "vacuum")
    }
    agree = len(set(verdicts.values())) == 1
    if args.format == "json":
        print(json.dumps({**verdicts, "member": all(verdicts.values()), "agree": agree}))
    else:
        print("/".join("true" if verdicts[m] else "false" for m in ("parity", "bipartite", "vacuum")))
    if not agree:
        print("membership methods disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    encodes = [g.encode() for g in enumerate_elements(args.max_leaves)]
    if args.format == "json":
        print(json.dumps(encodes))
    else:
        for enc in encodes:
            print(enc)
        print(f"{len(encodes)} elements", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument plumbing


def _add_weight_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--delta", help="loop parameter (scalar expression)")
    p.add_argument("--a", help="first vertex coefficient")
    p.add_argument("--b", help="second vertex coefficient")
    p.add_argument("--t", help="chromatic parameter; implies the chromatic family")
    p.add_argument(
        "--chromatic",
        action="store_true",
        help="use the chromatic weights at t = delta^2",
    )
    p.add_argument("--equal-pair", action="store_true", help="a = b normalized family")
    p.add_argument("--b-zero", action="store_true", help="b = 0 normalized family")
    p.add_argument("--tol", type=float, default=1e-9, help="numeric tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tljones",
        description="Vacuum coefficients of tree-pair representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate phi(g) at chosen weights")
    _add_weight_args(p)
    p.add_argument("--element", default="", help="element word or pair:<bits>,<bits>")
    p.add_argument("--backend", default="tl", choices=_BACKENDS)
    p.add_argument(
        "--cross-check",
        nargs="?",
        const="tl,chromatic",
        default=None,
        metavar="B1,B2",
        help="compare two backends; exit 4 on mismatch",
    )
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("scan", help="find vacuum-stabilizing elements")
    p.add_argument("--t", required=True, help="chromatic parameter")
    p.add_argument("--max-leaves", type=int, required=True)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--format", default="json", choices=("json", "text"))
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("decay", help="CSV table of phi(x0^k) against the spectrum")
    _add_weight_args(p)
    p.add_argument("--base", default="x0", help="base element: x0 or empty for identity")
    p.add_argument("--powers", type=int, default=10)
    p.set_defaults(func=cmd_decay)

    p = sub.add_parser("graph", help="export the element's graph")
    p.add_argument("--element", default="", help="element word")
    p.add_argument("--format", default="text", choices=("text", "dot", "json"))
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("member", help="subgroup membership by three methods")
    p.add_argument("--element", default="", help="element word")
    p.add_argument("--subgroup", default="jones", choices=("jones", "sigma-jones"))
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("enumerate", help="list reduced elements by leaf count")
    p.add_argument("--max-leaves", type=int, required=True)
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
