"""Command-line interface: values, reference tables, verification sweeps.

Output is deterministic: identical invocations produce byte-identical output.
Decimal rendering is explicit everywhere, with mantissas printed as
``[-]0.<digits>e<exponent>``; reference-table blocks share one exponent per
block (that of the largest entry), which is how regression strings are pinned.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .bounds import banerjee_bounds, nu, thm1_bounds, thm2_bounds, thm3_bounds
from .coefficients import coeff_asymptotic, coeff_bound, coeff_c
from .errors import DomainError, PrecisionError, ResourceError
from .expansion import remainder_exact
from .partitions import PartitionTable, load_table, partition_pentagonal, save_table
from .precision import PrecisionContext
from .verify import SUITE_NAMES, run_suite

CACHE_ENV_VAR = "PARTITION_ASYMPTOTICS_CACHE"

TABLE1_CASES = ((200, 4), (500, 6), (200, 5), (500, 7))
TABLE2_CASES = (
    (500, 6, "1/4", Fraction(1, 4)),
    (1000, 10, "5839", 5839),
    (500, 7, "24", 24),
    (1000, 11, "866061", 866061),
)
TABLE_MIN_DIGITS = 50


@dataclass(frozen=True)
class OutputRecord:
    """One emitted row: a kind tag plus an ordered key -> string payload."""

    kind: str
    payload: dict


# ---------------------------------------------------------------------------
# decimal rendering
# ---------------------------------------------------------------------------


def normalized_exponent(x, ctx: PrecisionContext) -> int:
    """Exponent e with |x| / 10^e in [0.1, 1)."""
    mp = ctx.mp
    if x == 0:
        return 0
    e = int(mp.floor(mp.log10(abs(x)))) + 1
    while abs(x) / mp.mpf(10) ** e >= 1:
        e += 1
    while abs(x) / mp.mpf(10) ** e < mp.mpf("0.1"):
        e -= 1
    return e


def format_at_exponent(x, e10: int, ctx: PrecisionContext, sig: int = 10) -> str:
    """Render x as [-]0.<sig digits>e<e10> (round to nearest, ties to even)."""
    mp = ctx.mp
    scaled = abs(x) * mp.mpf(10) ** (sig - e10)
    rounded = int(mp.nint(scaled))
    digits = str(rounded).rjust(sig, "0")
    sign = "-" if x < 0 else ""
    return f"{sign}0.{digits}e{e10}"


def format_scientific(x, ctx: PrecisionContext, sig: int = 10) -> str:
    """Self-normalized rendering with mantissa in [0.1, 1)."""
    if x == 0:
        return "0." + "0" * sig + "e0"
    e10 = normalized_exponent(x, ctx)
    mp = ctx.mp
    if int(mp.nint(abs(x) * mp.mpf(10) ** (sig - e10))) >= 10**sig:
        e10 += 1  # rounding pushed the mantissa up to 1.0
    return format_at_exponent(x, e10, ctx, sig)


# ---------------------------------------------------------------------------
# partition table cache
# ---------------------------------------------------------------------------


def _resolve_cache_path(explicit: str | None) -> str | None:
    return explicit or os.environ.get(CACHE_ENV_VAR) or None


def _obtain_table(n_needed: int, cache_path: str | None) -> PartitionTable:
    if cache_path and os.path.exists(cache_path):
        table = load_table(cache_path)
        if table.n_max >= n_needed:
            return table
    table = partition_pentagonal(n_needed)
    if cache_path:
        save_table(table, cache_path)
    return table


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_partition(args, ctx: PrecisionContext) -> list:
    table = _obtain_table(args.n, _resolve_cache_path(args.cache))
    return [OutputRecord(kind="value", payload={"n": str(args.n), "p": str(table.p(args.n))})]


def cmd_coeff(args, ctx: PrecisionContext) -> list:
    records = []
    for m in range(args.max_m + 1):
        records.append(
            OutputRecord(
                kind="coeff_row",
                payload={
                    "m": str(m),
                    "c_m": format_scientific(coeff_c(m, ctx), ctx, sig=30),
                    "bound": format_scientific(coeff_bound(m, ctx), ctx, sig=30),
                    "asymptotic": format_scientific(coeff_asymptotic(m, ctx), ctx, sig=30),
                },
            )
        )
    return records


def cmd_remainder(args, ctx: PrecisionContext) -> list:
    table = _obtain_table(args.n, _resolve_cache_path(args.cache))
    result = remainder_exact(args.n, args.N, table, ctx, include_theta=args.theta)
    payload = {
        "n": str(args.n),
        "N": str(args.N),
        "remainder": format_scientific(result.remainder, ctx),
        "partial_sum": format_scientific(result.partial_sum, ctx),
        "prefactor": format_scientific(result.prefactor, ctx),
    }
    if result.theta is not None:
        payload["theta"] = format_scientific(result.theta, ctx)
    return [OutputRecord(kind="value", payload=payload)]


def cmd_bounds(args, ctx: PrecisionContext) -> list:
    if args.theorem == "t1":
        report = thm1_bounds(args.n, args.N, ctx)
    elif args.theorem == "t2":
        report = thm2_bounds(args.n, args.N, ctx)
    elif args.theorem == "t3":
        if args.constant is None:
            raise DomainError("t3 bounds need --constant C")
        report = thm3_bounds(args.n, args.N, args.constant, ctx)
    else:
        report = banerjee_bounds(args.n, args.N, ctx)
    payload = {
        "n": str(args.n),
        "N": str(args.N),
        "theorem": report.theorem,
    }
    if report.C is not None:
        payload["C"] = args.constant
    payload.update(
        {
            "lower": format_scientific(report.lower, ctx),
            "upper": format_scientific(report.upper, ctx),
            "valid": "true" if report.valid else "false",
        }
    )
    return [OutputRecord(kind="value", payload=payload)]


def cmd_nu(args, ctx: PrecisionContext) -> list:
    value = nu(args.N, args.C, ctx)
    return [
        OutputRecord(kind="value", payload={"N": str(args.N), "C": args.C, "nu": str(value)})
    ]


def _table_block(report, exact, ctx: PrecisionContext) -> dict:
    e10 = max(
        normalized_exponent(v, ctx) for v in (exact, report.lower, report.upper) if v != 0
    )
    return {
        "exact": format_at_exponent(exact, e10, ctx),
        "lower": format_at_exponent(report.lower, e10, ctx),
        "upper": format_at_exponent(report.upper, e10, ctx),
    }


def cmd_table1(args, ctx: PrecisionContext) -> list:
    if ctx.digits < TABLE_MIN_DIGITS:
        raise DomainError(f"table commands need --digits >= {TABLE_MIN_DIGITS}")
    table = _obtain_table(max(n for n, _ in TABLE1_CASES), _resolve_cache_path(args.cache))
    records = []
    for n, N in TABLE1_CASES:
        exact = remainder_exact(n, N, table, ctx).remainder
        report = thm1_bounds(n, N, ctx)
        payload = {"n": str(n), "N": str(N)}
        payload.update(_table_block(report, exact, ctx))
        records.append(OutputRecord(kind="table1_row", payload=payload))
    return records


def cmd_table2(args, ctx: PrecisionContext) -> list:
    if ctx.digits < TABLE_MIN_DIGITS:
        raise DomainError(f"table commands need --digits >= {TABLE_MIN_DIGITS}")
    table = _obtain_table(max(n for n, _, _, _ in TABLE2_CASES), _resolve_cache_path(args.cache))
    records = []
    for n, N, c_label, c_exact in TABLE2_CASES:
        exact = remainder_exact(n, N, table, ctx).remainder
        report = thm3_bounds(n, N, c_exact, ctx)
        payload = {"n": str(n), "N": str(N), "C": c_label}
        payload.update(_table_block(report, exact, ctx))
        records.append(OutputRecord(kind="table2_row", payload=payload))
    return records


def cmd_verify(args, ctx: PrecisionContext) -> tuple[list, int]:
    result = run_suite(args.suite, n_max=args.n_max, m_max=args.m_max, ctx=ctx)
    record = OutputRecord(
        kind="sweep_result",
        payload={
            "suite": result.suite,
            "checked": str(result.checked),
            "ok": "true" if result.ok else "false",
            "counterexample": result.counterexample or "",
        },
    )
    return [record], 0 if result.ok else 1


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------


def _emit_human(records: list, stream) -> None:
    for record in records:
        for key, value in record.payload.items():
            stream.write(f"{key} = {value}\n")
        stream.write("\n")


def _emit_csv(records: list, stream) -> None:
    if not records:
        return
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(records[0].payload.keys())
    for record in records:
        writer.writerow(record.payload.values())


def _emit_json(records: list, stream) -> None:
    for record in records:
        stream.write(json.dumps(record.payload) + "\n")


EMITTERS = {"human": _emit_human, "csv": _emit_csv, "json": _emit_json}


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-asymptotics",
        description="Exact partition numbers, expansion remainders, and certified bounds.",
    )
    parser.add_argument("--digits", type=int, default=80, help="decimal working precision (>= 30)")
    parser.add_argument("--format", choices=sorted(EMITTERS), default="human")
    parser.add_argument("--cache", default=None, help=f"partition table file (or ${CACHE_ENV_VAR})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="exact p(n)")
    p.add_argument("n", type=int)

    p = sub.add_parser("coeff", help="coefficient table: m, c_m, bound, asymptotic")
    p.add_argument("max_m", type=int)

    p = sub.add_parser("remainder", help="exact truncation remainder R_N(n)")
    p.add_argument("n", type=int)
    p.add_argument("N", type=int)
    p.add_argument("--theta", action="store_true", help="include the tail mediant")

    p = sub.add_parser("bounds", help="remainder bounds for one (n, N)")
    p.add_argument("n", type=int)
    p.add_argument("N", type=int)
    p.add_argument("--theorem", choices=("t1", "t2", "t3", "banerjee"), default="t1")
    p.add_argument("--constant", default=None, help="C for t3 (exact decimal or rational)")

    p = sub.add_parser("nu", help="validity threshold nu_N(C)")
    p.add_argument("N", type=int)
    p.add_argument("C", help="exact decimal or rational, e.g. 3.474 or 1/4")

    sub.add_parser("table1", help="reference table: remainders with T1 bounds")
    sub.add_parser("table2", help="reference table: remainders with T3 bounds")

    p = sub.add_parser("verify", help="run one verification sweep")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)

    return parser


COMMANDS = {
    "partition": cmd_partition,
    "coeff": cmd_coeff,
    "remainder": cmd_remainder,
    "bounds": cmd_bounds,
    "nu": cmd_nu,
    "table1": cmd_table1,
    "table2": cmd_table2,
}


def run(argv=None, stream=None) -> int:
    stream = stream or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        ctx = PrecisionContext(args.digits)
        if args.command == "verify":
            records, status = cmd_verify(args, ctx)
        else:
            records, status = COMMANDS[args.command](args, ctx), 0
    except (DomainError, PrecisionError, ResourceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    EMITTERS[args.format](records, stream)
    return status


def main() -> None:
    sys.exit(run())
