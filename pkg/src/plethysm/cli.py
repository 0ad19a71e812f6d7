"""Command-line front end.

    plethysm NU MU                 full Schur expansion of s_NU o s_MU
    coeff NU MU ALPHA              one coefficient
    max NU MU --order O            greatest constituent (lex, translex or dominance)
    maximal-dominance NU MU        dominance-maximal weights by tableau search
    tableaux ssyt LAMBDA --vars N
    tableaux plethystic MU NU --vars N
    verify {theorem-a,theorem-b,square,cross-check} --max-degree D
    partitions N [--distinct]
    double-bracket ALPHA

Partitions are written as ``3^3,2,1``.  Exit status is 0 on success, 1 when a
verification fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import engine
from .engine import PlethysmCache, coefficient, plethysm
from .maxterms import dominance_maximal, max_lex, max_translex
from .partitions import Partition, PartitionError, double_bracket, enumerate_partitions, format_partition, parse_partition
from .powersum import plethysm_powersum
from .tableaux import enumerate_plethystic, enumerate_ssyt, maximal_pleth_weights
from .verify import iter_products, verify_square_formula, verify_theorem_A, verify_theorem_B


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonempty(text: str) -> Partition:
    lam = _partition(text)
    if not lam:
        raise argparse.ArgumentTypeError("plethysm factors must be nonempty")
    return lam


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cache", metavar="PATH", help="append-only file memoizing expansions")

    p = _Parser(prog="plethysm", description="Exact plethysm of Schur functions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("plethysm", parents=[common], help="Schur expansion of s_NU o s_MU")
    s.add_argument("nu", type=_nonempty)
    s.add_argument("mu", type=_nonempty)

    s = sub.add_parser("coeff", parents=[common], help="coefficient of s_ALPHA in s_NU o s_MU")
    s.add_argument("nu", type=_nonempty)
    s.add_argument("mu", type=_nonempty)
    s.add_argument("alpha", type=_partition)

    s = sub.add_parser("max", parents=[common], help="greatest constituent in an order")
    s.add_argument("nu", type=_nonempty)
    s.add_argument("mu", type=_nonempty)
    s.add_argument("--order", choices=("lex", "translex", "dominance"), default="lex")

    s = sub.add_parser("maximal-dominance", parents=[common], help="dominance-maximal weights by tableau search")
    s.add_argument("nu", type=_nonempty)
    s.add_argument("mu", type=_nonempty)

    s = sub.add_parser("tableaux", parents=[common], help="list semistandard or plethystic tableaux")
    s.add_argument("kind", choices=("ssyt", "plethystic"))
    s.add_argument("shapes", type=_partition, nargs="+", metavar="SHAPE")
    s.add_argument("--vars", type=int, default=None, metavar="N", help="largest entry")

    s = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    s.add_argument("check", choices=("theorem-a", "theorem-b", "square", "cross-check"))
    s.add_argument("--max-degree", type=int, default=8, metavar="D")

    s = sub.add_parser("partitions", parents=[common], help="partitions of N in decreasing lex order")
    s.add_argument("n", type=int)
    s.add_argument("--distinct", action="store_true")

    s = sub.add_parser("double-bracket", parents=[common], help="the partition 2[ALPHA]")
    s.add_argument("alpha", type=_partition)
    return p


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _weights_json(weights: dict[Partition, int]) -> list[dict]:
    return [{"partition": list(a), "coefficient": str(c)} for a, c in weights.items()]


def _weights_text(weights: dict[Partition, int]) -> str:
    return "\n".join(f"{format_partition(a)}: {c}" for a, c in weights.items())


def _cmd_plethysm(args) -> tuple[int, str]:
    e = plethysm(args.nu, args.mu)
    return 0, _dump(e.to_json()) if args.json else e.format()


def _cmd_coeff(args) -> tuple[int, str]:
    c = coefficient(args.nu, args.mu, args.alpha)
    if args.json:
        return 0, _dump({"nu": list(args.nu), "mu": list(args.mu), "alpha": list(args.alpha), "coefficient": str(c)})
    return 0, str(c)


def _cmd_max(args) -> tuple[int, str]:
    if args.order == "dominance":
        terms = dominance_maximal(plethysm(args.nu, args.mu))
        return 0, _dump(_weights_json(terms)) if args.json else _weights_text(terms)
    lam = max_lex(args.nu, args.mu) if args.order == "lex" else max_translex(args.nu, args.mu)
    if args.json:
        return 0, _dump({"order": args.order, "partition": list(lam)})
    return 0, format_partition(lam)


def _cmd_maximal(args) -> tuple[int, str]:
    weights = maximal_pleth_weights(args.mu, args.nu)
    return 0, _dump(_weights_json(weights)) if args.json else _weights_text(weights)


def _cmd_tableaux(args) -> tuple[int, str]:
    if args.kind == "ssyt":
        if len(args.shapes) != 1:
            raise UsageError("tableaux ssyt takes one shape")
        (lam,) = args.shapes
        n = args.vars or lam.size
        tabs = enumerate_ssyt(lam, n)
        if args.json:
            return 0, _dump([t.to_json() for t in tabs])
        return 0, "\n".join(" / ".join(" ".join(map(str, r)) for r in t.rows) for t in tabs)
    if len(args.shapes) != 2:
        raise UsageError("tableaux plethystic takes MU NU")
    mu, nu = args.shapes
    if not mu or not nu:
        raise UsageError("plethystic shapes must be nonempty")
    n = args.vars or mu.size * nu.size
    tabs = enumerate_plethystic(mu, nu, n)
    if args.json:
        return 0, _dump([t.to_json() for t in tabs])
    lines = []
    for t in tabs:
        rows = [" ".join("[" + "/".join(",".join(map(str, r)) for r in inner.rows) + "]" for inner in row)
                for row in t.entries]
        lines.append(" | ".join(rows))
    return 0, "\n".join(lines)


def _cross_check(max_degree: int) -> dict:
    mismatches = []
    count = 0
    for key in iter_products(max_degree):
        count += 1
        full = plethysm(key.nu, key.mu)
        if full != plethysm_powersum(key.nu, key.mu, bound=max(max_degree, 1)):
            mismatches.append({**key.to_json(), "reason": "power-sum expansion differs"})
        if dict(dominance_maximal(full)) != maximal_pleth_weights(key.mu, key.nu):
            mismatches.append({**key.to_json(), "reason": "maximal tableau weights differ"})
    return {"max_degree": max_degree, "products": count, "passed": not mismatches, "mismatches": mismatches}


def _cmd_verify(args) -> tuple[int, str]:
    d = args.max_degree
    if args.check == "theorem-a":
        if d < 4:
            raise UsageError("--max-degree must be at least 4")
        rep = verify_theorem_A(d)
    elif args.check == "theorem-b":
        if d < 4:
            raise UsageError("--max-degree must be at least 4")
        rep = verify_theorem_B(d)
    elif args.check == "square":
        if d < 1:
            raise UsageError("--max-degree must be at least 1")
        rep = verify_square_formula(d)
    else:
        data = _cross_check(d)
        if args.json:
            return (0 if data["passed"] else 1), _dump(data)
        lines = [f"{data['products']} products up to degree {d}"]
        lines += [f"MISMATCH nu={format_partition(m['nu'])} mu={format_partition(m['mu'])}: {m['reason']}"
                  for m in data["mismatches"]]
        lines.append("PASS" if data["passed"] else "FAIL")
        return (0 if data["passed"] else 1), "\n".join(lines)
    status = 0 if rep.passed else 1
    return status, _dump(rep.to_json()) if args.json else rep.format()


def _cmd_partitions(args) -> tuple[int, str]:
    if args.n < 0:
        raise UsageError("N must be nonnegative")
    parts = enumerate_partitions(args.n, distinct_only=args.distinct)
    if args.json:
        return 0, _dump([list(p) for p in parts])
    return 0, "\n".join(format_partition(p) for p in parts)


def _cmd_double_bracket(args) -> tuple[int, str]:
    lam = double_bracket(args.alpha)
    return 0, _dump(list(lam)) if args.json else format_partition(lam)


COMMANDS = {
    "plethysm": _cmd_plethysm,
    "coeff": _cmd_coeff,
    "max": _cmd_max,
    "maximal-dominance": _cmd_maximal,
    "tableaux": _cmd_tableaux,
    "verify": _cmd_verify,
    "partitions": _cmd_partitions,
    "double-bracket": _cmd_double_bracket,
}


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Execute one command; returns ``(exit_status, output)``."""
    previous = engine.get_cache()
    try:
        args = build_parser().parse_args(list(argv))
        if args.cache:
            engine.set_cache(PlethysmCache(args.cache))
        return COMMANDS[args.command](args)
    except (UsageError, PartitionError, ValueError) as exc:
        return 2, f"error: {exc}".splitlines()[0]
    finally:
        engine.set_cache(previous)


def main(argv: Sequence[str] | None = None) -> int:
    status, out = run(sys.argv[1:] if argv is None else argv)
    if out:
        print(out, file=sys.stderr if status == 2 else sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
