"""Command-line interface: ``ulrich <command> [options]``.

Every command builds one JSON envelope (command, input_digest, results,
cross_checks).  The table format is rendered from that envelope alone, so
re-rendering a parsed JSON document reproduces the table byte for byte.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Any, Callable

from . import free_resolution as betti_mod
from . import catalog, cycles, monomial
from .errors import ResourceLimitError
from .graph import DualGraph, GraphError, parse_cycle
from .semigroup import NumericalSemigroup, parse_generators

EXIT_OK, EXIT_FAILED_CHECK, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _check(name: str, ok: bool, detail: str = "") -> dict:
    return {"name": name, "pass": bool(ok), "detail": detail}


def _digest(payload: Any) -> str:
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def envelope(command: str, inputs: Any, results: dict, checks: list[dict]) -> dict:
    return {"command": command, "input_digest": _digest(inputs), "results": results, "cross_checks": checks}


# rendering ------------------------------------------------------------------


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None or value == [] or value == {}:
        return "-"
    if isinstance(value, dict):
        return ",".join(f"{k}=({_cell(v)})" if isinstance(v, dict) else f"{k}={_cell(v)}" for k, v in value.items())
    if isinstance(value, list):
        if all(isinstance(v, dict) for v in value):
            return "; ".join(_cell(v) for v in value)
        return ",".join(_cell(v) for v in value)
    return str(value)


def _table(rows: list[dict]) -> list[str]:
    cols: list[str] = []
    for r in rows:
        cols.extend(k for k in r if k not in cols)
    body = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(b[i]) for b in body)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.ljust(w) for v, w in zip(b, widths)).rstrip() for b in body]
    return lines


def render_table(env: dict) -> str:
    out = [f"# {env['command']}  (input {env['input_digest']})"]
    for key, value in env["results"].items():
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            out.append(f"{key}:")
            out.extend("  " + line for line in _table(value))
        elif isinstance(value, list) and not value:
            out.append(f"{key}: (none)")
        else:
            out.append(f"{key}: {_cell(value)}")
    checks = env["cross_checks"]
    if checks:
        out.append("cross-checks:")
        for c in checks:
            status = "PASS" if c["pass"] else "FAIL"
            out.append(f"  [{status}] {c['name']}" + (f": {c['detail']}" if c["detail"] else ""))
    return "\n".join(out) + "\n"


def render_json(env: dict) -> str:
    return json.dumps(env, indent=2) + "\n"


# inputs ---------------------------------------------------------------------


def _semigroup(args) -> NumericalSemigroup:
    if not args.gens:
        raise InputError("--gens is required, e.g. --gens 3,5,7")
    return parse_generators(args.gens)


def _graph(args) -> DualGraph:
    if not args.input:
        raise InputError("--input FILE is required (use - for stdin)")
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.input} is not valid JSON: {exc.msg} (line {exc.lineno})") from None
    return DualGraph.from_json(data)


# commands -------------------------------------------------------------------


def cmd_ns_info(args) -> dict:
    H = _semigroup(args)
    results = {
        "semigroup": str(H),
        "generators": list(H.generators),
        "multiplicity": H.multiplicity,
        "frobenius": H.frobenius,
        "gap_count": H.gap_count,
        "gaps": H.gaps(),
        "symmetric": H.is_symmetric(),
    }
    checks = [_check("gap count = number of listed gaps", H.gap_count == len(H.gaps()))]
    return envelope("ns info", {"gens": list(H.generators)}, results, checks)


def cmd_ns_ulrich(args) -> dict:
    H = _semigroup(args)
    method = args.method or "auto"
    if method not in ("auto", "brute", "gorenstein", "two-gen"):
        raise InputError(f"unknown method {method!r} for ns ulrich (auto, brute, gorenstein, two-gen)")
    resolved = ("gorenstein" if H.is_symmetric() else "brute") if method == "auto" else method
    records = monomial.enumerate_ulrich(H, resolved, cap=args.cap)
    checks = [
        _check(
            "every ideal passes the direct Ulrich test",
            all(monomial.is_ulrich(r.ideal) for r in records),
        ),
        _check(
            "reduction exponent = mu * colength",
            all(r.reduction_exponent == r.mu * r.colength for r in records),
        ),
    ]
    if len(H.generators) == 2 and resolved != "two-gen":
        closed = monomial.enumerate_two_gen(*H.generators)
        checks.append(_check("agrees with the two-generator closed form", closed == records))
    results = {
        "semigroup": str(H),
        "method": resolved,
        "count": len(records),
        "ideals": [r.to_json() for r in records],
    }
    return envelope("ns ulrich", {"gens": list(H.generators), "method": resolved}, results, checks)


def cmd_graph_fundamental(args) -> dict:
    G = _graph(args)
    z0 = G.fundamental_cycle()
    results = {
        "fundamental": G.cycle_dict(z0),
        "self_intersection": G.dot(z0, z0),
        "arithmetic_genus": G.arithmetic_genus(z0),
        "rational": G.is_rational,
        "multiplicity": G.multiplicity,
    }
    checks = [_check("fundamental cycle is anti-nef", G.is_antinef(z0))]
    return envelope("graph fundamental", G.to_json(), results, checks)


def cmd_graph_stats(args) -> dict:
    G = _graph(args)
    if not args.cycle:
        raise InputError("--cycle is required, e.g. --cycle E1=2,E2=1")
    z = parse_cycle(G, args.cycle)
    stats = G.ideal_stats(z)
    results = {
        "cycle": G.cycle_dict(z),
        "colength": stats.colength,
        "multiplicity": stats.multiplicity,
        "mu": stats.mu,
        "u": G.u_value(z),
        "ulrich": cycles.is_ulrich_cycle(G, z),
    }
    checks = [
        _check("graph is rational (the colength formula assumes it)", G.is_rational),
        _check("U(Z) = (mu - 1) colength - multiplicity",
               results["u"] == (stats.mu - 1) * stats.colength - stats.multiplicity),
    ]
    return envelope("graph stats", {"graph": G.to_json(), "cycle": list(z)}, results, checks)


def _cycle_checks(G: DualGraph, reports) -> list[dict]:
    checks = [
        _check("every cycle has U(Z) = 0", all(r.u == 0 for r in reports)),
        _check("multiplicity = (mu - 1) * colength",
               all(r.multiplicity == (r.mu - 1) * r.colength for r in reports)),
    ]
    if G.is_rdp:
        checks.append(_check("mu = 3 on a rational double point", all(r.mu == 3 for r in reports)))
        checks.append(_check("every cycle carries an Ulrich module", all(r.marks for r in reports)))
    return checks


def cmd_graph_cycles(args) -> dict:
    G = _graph(args)
    method = args.method or "auto"
    if method not in ("auto", "brute", "chain", "rdp"):
        raise InputError(f"unknown method {method!r} for graph cycles (auto, brute, chain, rdp)")
    reports = cycles.enumerate_cycles(G, method, bound=args.bound, cap=args.cap)
    results = {
        "method": method,
        "count": len(reports),
        "cycles": [r.to_json(G) for r in reports],
    }
    inputs = {"graph": G.to_json(), "method": method, "bound": args.bound}
    return envelope("graph cycles", inputs, results, _cycle_checks(G, reports))


def cmd_rdp(args) -> dict:
    if not args.type:
        raise InputError("--type is required (A, D or E)")
    if args.n is None:
        raise InputError("--n is required")
    t = catalog.ADEType(args.type.upper(), args.n)
    dim = args.dim if args.dim is not None else 2
    if dim not in (1, 2):
        raise InputError("--dim must be 1 or 2")
    G = catalog.build_ade(t)
    reports = cycles.enumerate_rdp(G)
    ideals = catalog.surface_ideals(t) if dim == 2 else catalog.curve_ideals(t)
    expected = catalog.expected_rdp_cycles(t)
    checks = _cycle_checks(G, reports)
    checks.append(_check(
        "cycles match the closed-form list",
        sorted((r.cycle, r.colength) for r in reports) == sorted(expected),
    ))
    if dim == 2:
        checks.append(_check(
            "catalog size = number of Ulrich cycles",
            len(ideals) == len(reports),
            f"{len(ideals)} ideals, {len(reports)} cycles",
        ))
        checks.append(_check(
            "catalog colengths = cycle colengths",
            sorted(e.colength for e in ideals) == sorted(r.colength for r in reports),
        ))
    results = {
        "type": str(t),
        "dim": dim,
        "fundamental": G.cycle_dict(G.fundamental_cycle()),
        "cycles": [r.to_json(G) for r in reports],
        "ideals": [{"ideal": e.ideal, "colength": e.colength} for e in ideals],
    }
    return envelope("rdp", {"type": str(t), "dim": dim}, results, checks)


def cmd_betti(args) -> dict:
    if args.dim is None or args.mu is None:
        raise InputError("--dim and --mu are required")
    upto = args.upto if args.upto is not None else 10
    if upto < 0:
        raise InputError("--upto must be nonnegative")
    p = betti_mod.BettiParams(args.dim, args.mu)
    closed = betti_mod.betti_sequence(p, upto)
    rec = betti_mod.betti_recursive(p, upto)
    checks = [_check("closed form = recursion", closed == rec)]
    results = {"d": p.d, "n": p.n, "betti": [{"i": i, "beta": b} for i, b in enumerate(closed)]}
    return envelope("betti", {"d": p.d, "n": p.n, "upto": upto}, results, checks)


SELFCHECK_SEMIGROUPS = [(3, 5, 7), (8, 15), (2, 7), (4, 6, 11), (3, 4), (5, 6, 7, 8), (4, 5, 6), (6, 7)]


def cmd_selfcheck(args) -> dict:
    checks = []
    for gens in SELFCHECK_SEMIGROUPS:
        H = NumericalSemigroup.new(gens)
        if not H.is_symmetric() or H.gap_count > 15:
            continue
        brute = monomial.enumerate_bruteforce(H, cap=args.cap)
        gor = monomial.enumerate_gorenstein(H)
        agree = brute == gor
        if len(H.generators) == 2:
            agree = agree and gor == monomial.enumerate_two_gen(*H.generators)
        checks.append(_check(f"semigroup methods agree on {H}", agree, f"{len(gor)} ideals"))
    for fam, ns in (("A", range(1, 11)), ("D", range(4, 11)), ("E", (6, 7, 8))):
        for n in ns:
            t = catalog.ADEType(fam, n)
            G = catalog.build_ade(t)
            got = cycles.enumerate_rdp(G)
            ok = sorted((r.cycle, r.colength) for r in got) == sorted(catalog.expected_rdp_cycles(t))
            ok = ok and len(got) == len(catalog.surface_ideals(t))
            checks.append(_check(f"{t} classification and catalog agree", ok, f"{len(got)} cycles"))
    for name, G in (
        ("three-arm star", _abc_graph()),
        ("(-2,-3,-2) chain", _cyclic_graph()),
    ):
        chain_set = [r.cycle for r in cycles.enumerate_chain(G)]
        brute_set = [r.cycle for r in cycles.enumerate_bruteforce(G, cap=args.cap)]
        checks.append(_check(f"chain = brute force on {name}", chain_set == brute_set, f"{len(chain_set)} cycles"))
    for d in range(5):
        for n in range(d, d + 6):
            p = betti_mod.BettiParams(d, n)
            checks.append(_check(f"Betti closed form = recursion (d={d}, n={n})",
                                 betti_mod.betti_sequence(p, 12) == betti_mod.betti_recursive(p, 12)))
    results = {"checks": len(checks), "passed": sum(c["pass"] for c in checks)}
    return envelope("selfcheck", {}, results, checks)


def _abc_graph() -> DualGraph:
    from .graph import star

    return star(-3, [[-2, -2]] * 3)


def _cyclic_graph() -> DualGraph:
    from .graph import chain

    return chain([-2, -3, -2])


# argument parsing -----------------------------------------------------------


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(message)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--cap", type=int, help="resource cap (overrides ULRICH_CAP)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ulrich", description="Ulrich ideals, cycles and modules.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ns = sub.add_parser("ns", help="numerical semigroup rings")
    ns_sub = ns.add_subparsers(dest="ns_command", required=True, parser_class=_Parser)
    for name, fn, helptext in (
        ("info", cmd_ns_info, "basic invariants of a semigroup"),
        ("ulrich", cmd_ns_ulrich, "monomial Ulrich ideals"),
    ):
        p = ns_sub.add_parser(name, help=helptext)
        p.add_argument("--gens", help="comma-separated generators, e.g. 3,5,7")
        p.add_argument("--method")
        _common(p)
        p.set_defaults(func=fn)

    graph = sub.add_parser("graph", help="resolution dual graphs")
    g_sub = graph.add_subparsers(dest="graph_command", required=True, parser_class=_Parser)
    for name, fn, helptext in (
        ("fundamental", cmd_graph_fundamental, "fundamental cycle and rationality"),
        ("stats", cmd_graph_stats, "invariants of the ideal of a cycle"),
        ("cycles", cmd_graph_cycles, "enumerate Ulrich cycles"),
    ):
        p = g_sub.add_parser(name, help=helptext)
        p.add_argument("--input", help="graph JSON file, or - for stdin")
        p.add_argument("--cycle", help="ID=COEFF list, e.g. E1=2,E2=1")
        p.add_argument("--method")
        p.add_argument("--bound", type=int, help="box bound for brute force (multiples of Z_0)")
        _common(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("rdp", help="ADE classification and ideal catalog")
    p.add_argument("--type", help="A, D or E")
    p.add_argument("--n", type=int)
    p.add_argument("--dim", type=int, help="1 for curves, 2 for surfaces (default)")
    _common(p)
    p.set_defaults(func=cmd_rdp)

    p = sub.add_parser("betti", help="Betti numbers of A/I for an Ulrich ideal")
    p.add_argument("--dim", type=int)
    p.add_argument("--mu", type=int)
    p.add_argument("--upto", type=int)
    _common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("selfcheck", help="run the built-in cross-validation matrix")
    _common(p)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"ulrich: error: {exc}", file=stderr)
        return EXIT_INVALID
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    func: Callable[[argparse.Namespace], dict] = args.func
    try:
        env = func(args)
    except ResourceLimitError as exc:
        print(f"ulrich: resource limit: {exc}", file=stderr)
        return EXIT_RESOURCE
    except (InputError, GraphError, ValueError) as exc:
        print(f"ulrich: error: {exc}", file=stderr)
        return EXIT_INVALID
    stdout.write(render_json(env) if args.format == "json" else render_table(env))
    if args.command == "selfcheck" and not all(c["pass"] for c in env["cross_checks"]):
        return EXIT_FAILED_CHECK
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
