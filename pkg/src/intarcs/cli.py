"""Command-line front end.

    intarcs arc --g sb --b 10 33 3
    intarcs witness --g sb --b 10 3 6 --format json
    intarcs frobenius --g tau 8

Exit codes: 0 proven/true/full, 1 refuted/false, 2 unknown,
64 usage error, 65 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from intarcs import __version__, arith
from intarcs.arcs import (
    ArcVerdict,
    FunctionId,
    PreconditionError,
    decide_arc,
    decide_prime_count_arc,
    eval_function,
    oracle_search,
    verify_arc_witness,
    witness_sb,
    witness_tau,
)
from intarcs.arcs.types import BIG_OMEGA, FUNCTION_NAMES, HAPPY, OMEGA, SUM_DIGITS, TAU
from intarcs.budget import ExplorationBudget
from intarcs.graph import (
    FRIENDS,
    NOT_FRIENDS,
    congruence_arc,
    find_polygons,
    friends,
    k_bounded_arc,
    k_bounded_chain,
    subgraph_export,
)
from intarcs.outsets import (
    FULL,
    NoFrobeniusNumber,
    classify_out,
    enumerate_out_prefix,
    frobenius_of_out,
    in_search,
    label,
)

EXIT_TRUE, EXIT_FALSE, EXIT_UNKNOWN = 0, 1, 2
EXIT_USAGE, EXIT_CAP = 64, 65

# command -> names of its positional naturals
COMMANDS: dict[str, tuple[str, ...]] = {
    "eval": ("N",),
    "arc": ("n", "u"),
    "witness": ("n", "u"),
    "out": ("n",),
    "frobenius": ("n",),
    "prefix": ("n", "u_max"),
    "in": ("n", "u_max"),
    "friends": ("n", "u"),
    "polygon": ("vertex_bound", "length"),
    "chain": ("n", "k", "steps"),
    "subgraph": ("vertex_bound",),
    "selftest": (),
}
NEEDS_FUNCTION = set(COMMANDS) - {"selftest"}
ALLOWS_ZERO = {"steps"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Invocation:
    command: str
    function: FunctionId | None
    naturals: list[int]
    budget: ExplorationBudget
    fmt: str = "text"
    options: dict[str, Any] = field(default_factory=dict)


def _natural(text: str) -> int:
    try:
        return arith.parse_natural(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed natural {text!r}") from None


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--g", choices=FUNCTION_NAMES, help="arithmetic function")
    common.add_argument("--b", type=_natural, help="base for sb / happy")
    common.add_argument("--e", type=_natural, help="exponent for happy")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--k-max", type=_natural, dest="oracle_k_max")
    common.add_argument("--dp-cap", type=_natural, dest="dp_state_cap")
    common.add_argument("--max-digits", type=_natural, dest="max_witness_digits")

    parser = _Parser(prog="intarcs", description="Arcs n -> u: some multiple N of n has g(N) = u.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name, positionals in COMMANDS.items():
        p = sub.add_parser(name, parents=[common])
        for pos in positionals:
            p.add_argument(pos, type=str)
        if name == "arc":
            p.add_argument("--verify", type=_natural, metavar="N", help="check a witness instead of deciding")
            p.add_argument("--factors", help="factorization of the witness, e.g. 2^99*3")
            p.add_argument("--r", type=str, help="target residue for a congruence arc")
            p.add_argument("--k", type=_natural, help="restrict witnesses to N <= k*n")
        if name == "polygon":
            p.add_argument("--max-results", type=_natural, default=1000)
    return parser


def _parse_factors(text: str) -> arith.Factorization:
    pairs = []
    for term in text.split("*"):
        p, _, e = term.partition("^")
        pairs.append((_natural(p), _natural(e) if e else 1))
    return arith.normalize_factorization(pairs)


def parse_invocation(argv: list[str]) -> Invocation:
    parser = _build_parser()
    if not argv:
        raise UsageError("missing command")
    if argv[0] not in COMMANDS and not argv[0].startswith("-"):
        raise UsageError(f"unknown command {argv[0]!r}")
    ns = parser.parse_args(argv)
    if ns.command is None:
        raise UsageError("missing command")
    naturals = []
    for pos in COMMANDS[ns.command]:
        raw = getattr(ns, pos)
        try:
            value = arith.parse_natural(raw)
        except ValueError:
            raise UsageError(f"malformed natural {raw!r} for {pos}") from None
        if value == 0 and pos not in ALLOWS_ZERO:
            raise UsageError(f"{pos} must be positive, got {raw!r}")
        naturals.append(value)

    function = None
    if ns.command in NEEDS_FUNCTION:
        if ns.g is None:
            raise UsageError("missing --g")
        if ns.g in (SUM_DIGITS, HAPPY) and ns.b is None:
            raise UsageError("missing --b")
        if ns.g == HAPPY and ns.e is None:
            raise UsageError("missing --e")
        if ns.g not in (SUM_DIGITS, HAPPY) and (ns.b is not None or ns.e is not None):
            raise UsageError(f"--b/--e do not apply to {ns.g}")
        try:
            function = FunctionId(ns.g, b=ns.b, e=ns.e if ns.g == HAPPY else None)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if ns.g == SUM_DIGITS and ns.e is not None:
            raise UsageError("--e applies only to happy")

    try:
        budget = ExplorationBudget.from_env().with_overrides(
            oracle_k_max=ns.oracle_k_max, dp_state_cap=ns.dp_state_cap,
            max_witness_digits=ns.max_witness_digits,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    options: dict[str, Any] = {}
    for key in ("verify", "factors", "r", "k", "max_results"):
        if getattr(ns, key, None) is not None:
            options[key] = getattr(ns, key)
    if "factors" in options:
        try:
            options["factors"] = _parse_factors(options["factors"])
        except argparse.ArgumentTypeError as exc:
            raise UsageError(str(exc)) from None
    if "r" in options:
        try:
            options["r"] = arith.parse_natural(options["r"])
        except ValueError:
            raise UsageError(f"malformed natural {options['r']!r} for --r") from None
    return Invocation(ns.command, function, naturals, budget, ns.format, options)


# ---------------------------------------------------------------------------
# payloads
# ---------------------------------------------------------------------------

def _factor_string(fac) -> str:
    return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in fac) or "1"


def verdict_payload(f: FunctionId, v: ArcVerdict) -> dict[str, Any]:
    out: dict[str, Any] = {"kind": v.kind}
    if v.is_proven:
        out["witness"] = arith.to_decimal(v.witness)
        if f.name in (SUM_DIGITS, HAPPY):
            out["witness_base_b"] = arith.digit_string(v.witness, f.b)
        if v.factorization is not None:
            out["factorization"] = _factor_string(v.factorization)
    elif v.is_refuted:
        out["certificate"] = v.certificate.as_dict()
    else:
        out["budget_spent"] = v.budget_spent
    return out


def _verdict_code(v: ArcVerdict) -> int:
    if v.is_proven:
        return EXIT_TRUE
    return EXIT_FALSE if v.is_refuted else EXIT_UNKNOWN


def _witness(f: FunctionId, n: int, u: int, budget: ExplorationBudget) -> ArcVerdict:
    if f.name == SUM_DIGITS:
        return witness_sb(f.b, n, u, budget)
    if f.name == TAU:
        return witness_tau(n, u)
    if f.name in (OMEGA, BIG_OMEGA):
        return decide_prime_count_arc(f, n, u)
    N = oracle_search(f, n, u, budget.oracle_k_max)
    if N is None:
        return ArcVerdict.unknown(f"scanned {budget.oracle_k_max} multiples")
    return ArcVerdict.proven(N)


def _run(inv: Invocation) -> tuple[dict[str, Any], int]:
    f, args, budget, opts = inv.function, inv.naturals, inv.budget, inv.options
    cmd = inv.command
    if cmd == "eval":
        return {"kind": "value", "value": arith.to_decimal(eval_function(f, args[0]))}, EXIT_TRUE
    if cmd == "arc":
        n, u = args
        if "verify" in opts:
            ok = verify_arc_witness(f, n, u, opts["verify"], opts.get("factors"))
            return {"kind": "verified" if ok else "rejected"}, EXIT_TRUE if ok else EXIT_FALSE
        if "k" in opts:
            v = k_bounded_arc(f, n, u, opts["k"])
        elif "r" in opts:
            v = congruence_arc(f, n, opts["r"], u, budget)
        else:
            v = decide_arc(f, n, u, budget)
        return verdict_payload(f, v), _verdict_code(v)
    if cmd == "witness":
        v = _witness(f, args[0], args[1], budget)
        return verdict_payload(f, v), _verdict_code(v)
    if cmd == "out":
        shape = classify_out(f, args[0], budget)
        return {"kind": shape.kind, "characterization": shape.as_dict()}, (
            EXIT_TRUE if shape.kind == FULL else EXIT_FALSE)
    if cmd == "frobenius":
        try:
            value = frobenius_of_out(f, args[0], budget)
        except NoFrobeniusNumber as exc:
            return {"kind": "none", "reason": str(exc)}, EXIT_FALSE
        if value is None:
            return {"kind": "empty_complement"}, EXIT_TRUE
        return {"kind": "value", "value": arith.to_decimal(value)}, EXIT_TRUE
    if cmd in ("prefix", "in"):
        search = enumerate_out_prefix if cmd == "prefix" else in_search
        pre = search(f, args[0], args[1], budget)
        entries = [{"u": u, "label": label(v), "verdict": verdict_payload(f, v)} for u, v in pre.entries]
        return {"kind": "prefix", "entries": entries}, EXIT_TRUE
    if cmd == "friends":
        fr = friends(f, args[0], args[1], budget)
        code = {FRIENDS: EXIT_TRUE, NOT_FRIENDS: EXIT_FALSE}.get(fr.overall, EXIT_UNKNOWN)
        return {"kind": fr.overall, "forward": verdict_payload(f, fr.forward),
                "backward": verdict_payload(f, fr.backward)}, code
    if cmd == "polygon":
        bound, length = args
        polys = find_polygons(f, bound, length, budget, opts.get("max_results", 1000))
        payload = [{"vertices": list(p.vertices),
                    "witnesses": [arith.to_decimal(e.verdict.witness) for e in p.edges]} for p in polys]
        return {"kind": "polygons", "polygons": payload}, EXIT_TRUE if polys else EXIT_FALSE
    if cmd == "chain":
        ch = k_bounded_chain(f, *args)
        return {"kind": "chain", "vertices": list(ch.vertices),
                "witnesses": [arith.to_decimal(N) for N in ch.witnesses]}, EXIT_TRUE
    if cmd == "subgraph":
        edges = subgraph_export(f, args[0], budget)
        return {"kind": "edges", "edges": [
            {"from": e.source, "to": e.target, "verdict": verdict_payload(f, e.verdict)} for e in edges
        ]}, EXIT_TRUE
    if cmd == "selftest":
        from intarcs.selftest import run_selftest

        checks = run_selftest()
        ok = all(passed for _, passed in checks)
        return {"kind": "pass" if ok else "fail",
                "checks": [{"name": name, "ok": passed} for name, passed in checks]}, (
            EXIT_TRUE if ok else EXIT_FALSE)
    raise UsageError(f"unknown command {cmd!r}")  # pragma: no cover


def execute(inv: Invocation) -> tuple[dict[str, Any], int]:
    """Run an invocation; returns the JSON-ready report and the exit code."""
    started = time.perf_counter()
    try:
        verdict, code = _run(inv)
    except arith.CapExceeded as exc:
        verdict, code = {"kind": "cap_exceeded", "reason": str(exc)}, EXIT_CAP
    except PreconditionError as exc:
        verdict, code = {"kind": "usage_error", "reason": str(exc)}, EXIT_USAGE
    report = {
        "command": inv.command,
        "function": inv.function.as_dict() if inv.function else None,
        "inputs": [arith.to_decimal(x) for x in inv.naturals],
        "verdict": verdict,
        "budget": inv.budget.as_dict(),
        "version": __version__,
        "timing": {"seconds": round(time.perf_counter() - started, 6)},
    }
    return report, code


def render_text(report: dict[str, Any]) -> str:
    v = report["verdict"]
    head = report["command"]
    if report["function"]:
        head += " " + " ".join(f"{k}={val}" for k, val in report["function"].items())
    lines = [f"{head} {' '.join(report['inputs'])}".rstrip(), f"  result: {v['kind']}"]
    for key, val in v.items():
        if key == "kind":
            continue
        if isinstance(val, list):
            lines.append(f"  {key}: {len(val)} item(s)")
            lines.extend(f"    {json.dumps(item, sort_keys=True)}" for item in val)
        elif isinstance(val, dict):
            lines.append(f"  {key}: {json.dumps(val, sort_keys=True)}")
        else:
            lines.append(f"  {key}: {val}")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        inv = parse_invocation(argv)
    except UsageError as exc:
        sys.stderr.write(f"intarcs: usage error: {exc}\n")
        return EXIT_USAGE
    report, code = execute(inv)
    if inv.fmt == "json":
        text = json.dumps(report, sort_keys=True) + "\n"
    else:
        text = render_text(report)
    sys.stdout.write(text)
    sys.stdout.flush()
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
