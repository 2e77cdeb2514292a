"""Command-line surface.

Every command is pure input to output: exit 0 for a definite positive
answer, 1 for a definite negative one (no certificate, not a member, no
solution), 2 for usage, parse, or budget errors.  Reports are plain text
with stable field order and all rationals in canonical form, so identical
inputs give byte-identical output.  Indices in reports are 1-based.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .linalg import RatMatrix, format_matrix, parse_matrix
from .rado import columns_condition, first_entries, weak_first_entries_condition
from .rings import (
    format_rat,
    in_scaled_subring,
    parse_prime_set,
    parse_rat,
    pigeonhole_subset,
)
from .search import (
    BudgetExceededError,
    Colouring,
    GroundSet,
    min_rado_number,
    monochromatic_solution,
)
from .systems import (
    SystemSpec,
    build_stacked_matrix,
    build_truncated_system,
    natural_solution_witness,
    parse_schedule,
    refute_over_subring,
    schedule_value,
)


def _read_matrix(path: str) -> RatMatrix:
    return parse_matrix(Path(path).read_text())


def _emit_matrix(M: RatMatrix, header: list[str], out: str | None) -> None:
    text = "\n".join(f"# {line}" for line in header) + "\n" + format_matrix(M) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _system_spec(args: argparse.Namespace) -> SystemSpec:
    return SystemSpec(args.alpha, args.depth, parse_schedule(args.schedule))


def _parse_rat_list(text: str) -> list:
    return [parse_rat(tok) for tok in text.split(",") if tok.strip() != ""]


def _parse_colouring(spec: str) -> Colouring:
    if spec == "log2parity":
        return Colouring.log2_parity()
    if spec.startswith("file:"):
        elements, colours = [], []
        for line in Path(spec[len("file:"):]).read_text().splitlines():
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            parts = stripped.split()
            if len(parts) != 2:
                raise ValueError(f"expected 'value colour', got {stripped!r}")
            elements.append(parse_rat(parts[0]))
            colours.append(int(parts[1]))
        return Colouring.table(elements, colours)
    raise ValueError(f"unknown colouring: {spec!r}")


def _parse_ground(spec: str) -> GroundSet:
    parts = spec.split(",")
    if len(parts) == 1:
        return GroundSet.slice(int(parts[0]))
    if len(parts) == 2:
        return GroundSet.slice(int(parts[0]), int(parts[1]))
    raise ValueError(f"ground set is num_bound or num_bound,denominator: {spec!r}")


def _cmd_cc_check(args: argparse.Namespace) -> int:
    cert = columns_condition(_read_matrix(args.matrix))
    if cert is None:
        print("no certificate")
        return 1
    print("certificate:")
    for t, block in enumerate(cert.blocks, start=1):
        print(f"block {t}: " + " ".join(str(j + 1) for j in block))
    for t, witness in enumerate(cert.witnesses, start=2):
        print(f"witness {t}: " + " ".join(format_rat(w) for w in witness))
    return 0


def _cmd_fe_check(args: argparse.Namespace) -> int:
    M = _read_matrix(args.matrix)
    report = first_entries(M)
    for i, j, value in report.entries:
        print(f"row {i + 1}: first entry {format_rat(value)} at column {j + 1}")
    for i in report.zero_rows:
        print(f"row {i + 1}: zero row")
    if report.common_value is not None:
        print(f"common first entry: {format_rat(report.common_value)}")
    ok = weak_first_entries_condition(M, strict=args.strict)
    label = "strict" if args.strict else "weak"
    print(f"{label} first entries condition: " + ("holds" if ok else "fails"))
    return 0 if ok else 1


def _cmd_build_system(args: argparse.Namespace) -> int:
    spec = _system_spec(args)
    M = build_truncated_system(spec)
    header = [
        f"truncated system: depth {spec.depth}, alpha {spec.alpha}",
        "columns: " + " ".join(spec.variable_names()),
    ]
    _emit_matrix(M, header, args.out)
    return 0


def _cmd_build_iab(args: argparse.Namespace) -> int:
    spec = _system_spec(args)
    M = build_stacked_matrix(spec)
    header = [
        f"stacked (I; A; B) matrix: depth {spec.depth}, alpha {spec.alpha}",
        "columns: " + " ".join(spec.variable_names()[: M.cols]),
    ]
    _emit_matrix(M, header, args.out)
    return 0


def _cmd_membership(args: argparse.Namespace) -> int:
    value = parse_rat(args.value)
    primes = parse_prime_set(args.primes)
    if in_scaled_subring(value, args.scale, primes):
        print("member")
        return 0
    print("not a member")
    return 1


def _cmd_pigeonhole(args: argparse.Namespace) -> int:
    primes = parse_prime_set(args.primes)
    values = _parse_rat_list(args.values)
    indices = pigeonhole_subset(args.m, primes, values)
    total = sum(values[i] for i in indices)
    print("indices: " + " ".join(str(i + 1) for i in indices))
    print(f"sum: {format_rat(total)}")
    print(f"sum / {args.m}: {format_rat(total / args.m)}")
    return 0


def _cmd_refute(args: argparse.Namespace) -> int:
    spec = _system_spec(args)
    primes = parse_prime_set(args.primes)
    y = tuple(_parse_rat_list(args.y))
    n = refute_over_subring(spec, primes, y, args.nmax)
    if n is None:
        print(f"no obstruction for n up to {args.nmax}")
        return 1
    combo = sum(
        schedule_value(spec.schedule, n, i) * y[i - 1]
        for i in range(1, spec.alpha + 1)
    )
    print(f"obstruction at n={n}: d-combination {format_rat(combo)} "
          "is outside the subring")
    return 0


def _cmd_nat_witness(args: argparse.Namespace) -> int:
    spec = _system_spec(args)
    witness = natural_solution_witness(spec)
    for name, value in zip(spec.variable_names(), witness.values):
        print(f"{name} = {format_rat(value)}")
    ok = witness.solves(build_truncated_system(spec))
    print("verified: all residuals zero" if ok else "verification failed")
    return 0 if ok else 2


def _cmd_mono_search(args: argparse.Namespace) -> int:
    M = _read_matrix(args.matrix)
    colouring = _parse_colouring(args.colouring)
    ground = _parse_ground(args.ground)
    found = monochromatic_solution(
        M, colouring, ground, distinct=args.distinct, budget=args.budget
    )
    if found is None:
        print("no monochromatic solution")
        return 1
    print("solution: " + " ".join(format_rat(x) for x in found.values))
    print(f"colour: {colouring.colour_of(found.values[0])}")
    return 0


def _cmd_rado_number(args: argparse.Namespace) -> int:
    M = _read_matrix(args.matrix)
    result = min_rado_number(M, args.colours, args.nmax)
    if result.number is None:
        print(f"no rado number up to {args.nmax}")
        print(f"surviving colouring of 1..{len(result.witness)}:")
        for value, colour in enumerate(result.witness, start=1):
            print(f"{value} {colour}")
        return 1
    print(f"rado number: {result.number}")
    if result.witness:
        print(f"witness colouring of 1..{len(result.witness)}:")
        for value, colour in enumerate(result.witness, start=1):
            print(f"{value} {colour}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radokit",
        description="columns-condition certificates, localized-subring "
        "arithmetic, and colouring searches for partition regularity",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("cc-check", _cmd_cc_check, "decide the columns condition")
    p.add_argument("--matrix", required=True, help="matrix file")

    p = add("fe-check", _cmd_fe_check, "report first entries")
    p.add_argument("--matrix", required=True, help="matrix file")
    p.add_argument("--strict", action="store_true",
                   help="demand one constant across all first entries")

    for name, handler, help_text in (
        ("build-system", _cmd_build_system, "emit a truncated system matrix"),
        ("build-iab", _cmd_build_iab, "emit the stacked (I; A; B) matrix"),
    ):
        p = add(name, handler, help_text)
        p.add_argument("--alpha", type=int, required=True)
        p.add_argument("--depth", type=int, required=True)
        p.add_argument("--schedule", required=True,
                       help="qpow:Q | allprimes | qpowpair:Q | allprimespair "
                            "| file:PATH")
        p.add_argument("--out", help="write to this file instead of stdout")

    p = add("membership", _cmd_membership, "test subring membership")
    p.add_argument("--value", required=True, help="rational to test")
    p.add_argument("--primes", required=True,
                   help="'' | all | 2,3,7 | all-except:2")
    p.add_argument("--scale", type=int, default=1,
                   help="test membership in scale * subring (default 1)")

    p = add("pigeonhole", _cmd_pigeonhole,
            "find a subset summing to a multiple of m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--primes", required=True)
    p.add_argument("--values", required=True, help="comma-separated rationals")

    p = add("refute", _cmd_refute,
            "search for a denominator obstruction to subring solvability")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--schedule", required=True)
    p.add_argument("--primes", required=True)
    p.add_argument("--y", required=True, help="comma-separated y values")
    p.add_argument("--nmax", type=int, required=True)

    p = add("nat-witness", _cmd_nat_witness,
            "positive-integer solution for a pair schedule")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--schedule", required=True)

    p = add("mono-search", _cmd_mono_search,
            "exhaustive monochromatic-solution search")
    p.add_argument("--matrix", required=True)
    p.add_argument("--colouring", required=True, help="log2parity | file:PATH")
    p.add_argument("--ground", required=True,
                   help="num_bound or num_bound,denominator")
    p.add_argument("--distinct", action="store_true",
                   help="demand pairwise distinct values")
    p.add_argument("--budget", type=int, default=10**8)

    p = add("rado-number", _cmd_rado_number,
            "least N forcing a monochromatic solution")
    p.add_argument("--matrix", required=True)
    p.add_argument("--colours", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
