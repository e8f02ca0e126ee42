"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 precondition violated, 4 a
verification found a mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import closedform, hankel, properties, series
from .errors import HKError, ParseError, PreconditionViolated
from .field import is_power_of, make_prime_field
from .polynomial import parse_poly
from .quotient import hk_profile

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 2, 3, 4

PROFILE_KEYS = ("q", "hk", "a", "iota", "m", "L", "maximal_rank", "formula", "match")


@dataclass
class Report:
    command: str
    parameters: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "rows": self.rows,
            "elapsed_seconds": round(self.elapsed_seconds, 6),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, default=_jsonable)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        return cls(data["command"], data["parameters"], data["rows"], data["elapsed_seconds"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        if not self.rows:
            return ""
        writer = csv.DictWriter(buf, fieldnames=list(self.rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
        return buf.getvalue()


def _jsonable(v):
    if isinstance(v, Fraction):
        return _rational(v)
    raise TypeError(f"cannot serialize {type(v).__name__}")


def _rational(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, Fraction):
        return _rational(v)
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"expected a comma-separated list of integers, got {text!r}")
    if not values:
        raise ParseError("empty list")
    return values


def cmd_compute(args) -> tuple[Report, int]:
    make_prime_field(args.prime)
    names = [v.strip() for v in args.vars.split(",")]
    f = parse_poly(args.poly, names, args.prime)
    qs = sorted(set(_int_list(args.q)))
    if min(qs) < 1:
        raise PreconditionViolated("q values must be >= 1")
    family = closedform.CubicFamily(args.family) if args.family else None
    report = Report("compute", {
        "prime": args.prime, "vars": names, "poly": str(f), "coordinates": ",".join(names),
        "q": qs, "family": family.value if family else None,
    })
    status = EXIT_OK
    for q in qs:
        prof = hk_profile(f, q)
        formula = match = None
        if family is not None:
            formula = closedform.hk_formula(family, args.prime, q)
            match = formula == prof.hk_value
            if not match:
                status = EXIT_MISMATCH
        report.rows.append({
            "q": q, "hk": prof.hk_value, "a": prof.a_q, "iota": prof.iota_q, "m": prof.m_q,
            "L": prof.L_q, "maximal_rank": prof.maximal_rank, "formula": formula, "match": match,
            # generalized values depend on the coordinates unless q is a power of p
            "frobenius_power": is_power_of(q, args.prime),
            "theta": prof.theta_quotient_dims,
        })
    return report, status


def cmd_verify(args) -> tuple[Report, int]:
    family = closedform.CubicFamily(args.family)
    closedform.check_characteristic(family, args.prime)
    if args.q:
        qs = _int_list(args.q)
    else:
        qmax = args.qmax if args.qmax is not None else (8 if family.generalized else args.prime**2)
        qs = closedform.default_q_list(family, args.prime, qmax)
    if not qs:
        raise PreconditionViolated("no q values in range")
    rep = closedform.verify_family(family, args.prime, qs)
    report = Report("verify", {"family": family.value, "prime": args.prime, "poly": rep.polynomial,
                               "q": [r.q for r in rep.rows]})
    report.rows = [r.as_dict() for r in rep.rows]
    return report, EXIT_OK if rep.all_match else EXIT_MISMATCH


def cmd_hankel(args) -> tuple[Report, int]:
    if args.kmax < 1:
        raise PreconditionViolated("kmax must be >= 1")
    ger = hankel.geronimus_check_range(args.kmax, args.prime)
    cor = hankel.corollary_check_range(args.kmax, args.prime)
    report = Report("hankel", {"kmax": args.kmax, "prime": args.prime})
    report.rows = [{"k": k, "geronimus": g, "corollary": c}
                   for k, (g, c) in enumerate(zip(ger, cor), start=1)]
    return report, EXIT_OK if all(ger) and all(cor) else EXIT_MISMATCH


def cmd_beta(args) -> tuple[Report, int]:
    if args.nmax < 1:
        raise PreconditionViolated("nmax must be >= 1")
    report = Report("beta", {"nmax": args.nmax})
    report.rows = [{"index": i, "beta": _rational(series.beta(i))} for i in range(1, args.nmax + 1)]
    return report, EXIT_OK


def cmd_bound(args) -> tuple[Report, int]:
    qs = _int_list(args.q)
    report = Report("bound", {"n": args.n, "d": args.d, "q": qs})
    for q in qs:
        row = {"q": q, "m": series.m_of_q(args.n, args.d, q), "L": series.lower_bound_L(args.n, args.d, q)}
        if args.d >= 2:
            row["limit_gap"] = _rational(series.beta_limit_gap(args.n, args.d, q))
        report.rows.append(row)
    return report, EXIT_OK


def cmd_props(args) -> tuple[Report, int]:
    results = properties.run_suite(args.count, args.seed, brute_force=not args.no_brute_force)
    report = Report("props", {"seed": args.seed, "count": args.count})
    for r in results:
        report.rows.append({"p": r.p, "n": r.n, "d": r.d, "q": r.q, "poly": r.poly, "hk": r.hk,
                            "ok": r.ok, "failed": sorted(k for k, v in r.checks.items() if not v)})
    return report, EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hilbertkunz", description="Generalized Hilbert-Kunz functions of hypersurfaces.")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="HK profile of a form at each q")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--vars", required=True, help="comma-separated variable names")
    p.add_argument("--poly", required=True)
    p.add_argument("--q", required=True, help="comma-separated list of q")
    p.add_argument("--family", choices=[f.value for f in closedform.CubicFamily],
                   help="compare against this family's closed form")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="engine vs closed form on a reference polynomial")
    p.add_argument("--family", required=True, choices=[f.value for f in closedform.CubicFamily])
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--qmax", type=int)
    p.add_argument("--q", help="explicit comma-separated q list instead of --qmax")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("hankel", help="Hankel determinant identities for Legendre polynomials")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--prime", type=int, default=None)
    p.set_defaults(func=cmd_hankel)

    p = sub.add_parser("beta", help="exact beta constants")
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=cmd_beta)

    p = sub.add_parser("bound", help="m(q) and the lower bound L(q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("props", help="randomized property suite")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--no-brute-force", action="store_true")
    p.set_defaults(func=cmd_props)
    return parser


def _hoist_global_options(argv: list[str]) -> list[str]:
    """Allow --format/--seed after the subcommand as well as before it."""
    out, rest = [], []
    i = 0
    while i < len(argv):
        tok = argv[i]
        key = tok.split("=", 1)[0]
        if key in ("--format", "--seed"):
            if "=" in tok:
                out.append(tok)
            elif i + 1 < len(argv):
                out.extend(argv[i : i + 2])
                i += 1
            else:
                out.append(tok)
        else:
            rest.append(tok)
        i += 1
    return out + rest


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_hoist_global_options(argv))
        start = time.perf_counter()
        report, status = args.func(args)
        report.elapsed_seconds = time.perf_counter() - start
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HKError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    out = report.to_csv() if args.format == "csv" else report.to_json() + "\n"
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
