"""Command-line interface: build, verify and explore bases of D(A, mu).

Arrangement files are plain text: a ``field Q`` or ``field F <p>`` header
followed by one ``<ax> <ay> <multiplicity>`` line per hyperplane.  Blank
lines and ``#`` comments are ignored.  Exit status is 0 on success, 1 when a
verification answers false, and 2 for unusable input.
"""

from __future__ import annotations

import argparse
import sys

from .analysis import (
    NoGenericFormError,
    frobenius_arrangement,
    frobenius_basis,
    proposition_experiment,
    trace_chain,
)
from .arrangement import LinearForm, Multiarrangement, all_hyperplanes
from .basis import BasisPair, build_basis, verify_basis
from .derivation import Derivation, saito_determinant
from .field import Field
from .oracle import dimension_table, exponents_by_oracle

ORACLE_TOTAL_LIMIT = 16


class ParseError(ValueError):
    """A problem in an arrangement file, tagged with its line number."""

    def __init__(self, line_no, message):
        prefix = f"line {line_no}: " if line_no else ""
        super().__init__(prefix + message)
        self.line_no = line_no


def parse_arrangement_text(text: str) -> Multiarrangement:
    """Parse the arrangement file format into a Multiarrangement."""
    field = None
    entries: dict[LinearForm, int] = {}
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if field is None:
            if tokens[0] != "field":
                raise ParseError(line_no, "expected a 'field Q' or 'field F <p>' header first")
            if tokens[1:] == ["Q"]:
                field = Field(0)
            elif len(tokens) == 3 and tokens[1] == "F":
                try:
                    field = Field(int(tokens[2]))
                except ValueError as exc:
                    raise ParseError(line_no, str(exc)) from None
            else:
                raise ParseError(line_no, "field must be 'Q' or 'F <prime>'")
            continue
        if len(tokens) != 3:
            raise ParseError(line_no, "expected '<ax> <ay> <multiplicity>'")
        try:
            ax = field.coerce(tokens[0])
            ay = field.coerce(tokens[1])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(line_no, str(exc)) from None
        try:
            mult = int(tokens[2])
        except ValueError:
            raise ParseError(line_no, f"multiplicity {tokens[2]!r} is not an integer") from None
        if mult < 1:
            raise ParseError(line_no, f"multiplicity must be positive, got {mult}")
        try:
            form = LinearForm(field, ax, ay)
        except ValueError as exc:
            raise ParseError(line_no, str(exc)) from None
        if form in entries:
            raise ParseError(line_no, f"duplicate hyperplane {form}")
        entries[form] = mult
    if field is None:
        raise ParseError(None, "missing 'field' header")
    return Multiarrangement(field, entries)


def render_arrangement(arrangement: Multiarrangement) -> str:
    """Serialize an arrangement back to the file format (canonical order)."""
    field = arrangement.field
    header = f"field F {field.characteristic}" if field.characteristic else "field Q"
    lines = [header]
    for form, mult in arrangement.items():
        lines.append(f"{form.ax.value} {form.ay.value} {mult}")
    return "\n".join(lines) + "\n"


def _load(path: str) -> Multiarrangement:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(None, f"cannot read {path}: {exc.strerror}") from None
    return parse_arrangement_text(text)


def _print_pair(pair: BasisPair) -> None:
    d1, d2 = pair.degrees()
    print(f"theta1 (degree {d1}): {pair.theta1}")
    print(f"theta2 (degree {d2}): {pair.theta2}")


def _exponent_line(degrees) -> str:
    return f"exponents: {{{degrees[0]}, {degrees[1]}}}"


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------


def cmd_basis(args) -> int:
    arrangement = _load(args.arrangement)
    pair = build_basis(arrangement)
    _print_pair(pair)
    print(_exponent_line(pair.degrees()))
    return 0


def cmd_exponents(args) -> int:
    arrangement = _load(args.arrangement)
    pair = build_basis(arrangement)
    print(_exponent_line(pair.degrees()))
    return 0


def cmd_verify(args) -> int:
    arrangement = _load(args.arrangement)
    field = arrangement.field
    theta1 = Derivation.from_text(field, args.theta1)
    theta2 = Derivation.from_text(field, args.theta2)
    pair = BasisPair(theta1, theta2)
    member1 = pair.theta1.is_member(arrangement)
    member2 = pair.theta2.is_member(arrangement)
    independent = not saito_determinant(theta1, theta2).is_zero()
    degree_sum = sum(pair.degrees())
    print(f"theta1 in D(A, mu): {'true' if member1 else 'false'}")
    print(f"theta2 in D(A, mu): {'true' if member2 else 'false'}")
    print(f"independent: {'true' if independent else 'false'}")
    print(f"degree sum: {degree_sum}, |mu|: {arrangement.total}")
    ok = verify_basis(pair, arrangement)
    print(f"basis: {'true' if ok else 'false'}")
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    arrangement = _load(args.arrangement)
    if arrangement.total > ORACLE_TOTAL_LIMIT:
        raise ParseError(
            None,
            f"oracle is limited to |mu| <= {ORACLE_TOTAL_LIMIT}, got {arrangement.total}",
        )
    table = dimension_table(arrangement)
    for d, dim in enumerate(table):
        print(f"d = {d}: dim {dim}")
    print(_exponent_line(exponents_by_oracle(arrangement)))
    return 0


def cmd_trace(args) -> int:
    arrangement = _load(args.arrangement)
    pair, traces = trace_chain(arrangement)
    for t in traces:
        print(t)
    print(_exponent_line(pair.degrees()))
    return 0


def cmd_frobenius(args) -> int:
    p, i = args.p, args.i
    shifts = None
    if args.shifts is not None:
        field = Field(p)
        hyperplanes = all_hyperplanes(field)
        parts = args.shifts.split(",")
        if len(parts) != len(hyperplanes):
            raise ParseError(
                None,
                f"--shifts needs {len(hyperplanes)} comma-separated values for F_{p}, got {len(parts)}",
            )
        try:
            values = [int(s) for s in parts]
        except ValueError:
            raise ParseError(None, "--shifts values must be integers") from None
        shifts = dict(zip(hyperplanes, values))
    arrangement = frobenius_arrangement(p, i, shifts)
    pair = frobenius_basis(p, i, shifts)
    print(f"field: F_{p}")
    print(f"multiplicities: {arrangement}")
    _print_pair(pair)
    print("verified: true")
    print(_exponent_line(pair.degrees()))
    return 0


def cmd_prop_experiment(args) -> int:
    report = proposition_experiment(lo=args.lo, hi=args.hi, jobs=args.jobs)
    print(report.summary())
    if args.out:
        report.write_csv(args.out)
        print(f"report written to {args.out}")
    return 0 if not report.disagreements else 1


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logvf",
        description="Exact bases and exponents for logarithmic vector fields of weighted line arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_basis = sub.add_parser("basis", help="construct a homogeneous basis")
    p_basis.add_argument("arrangement", help="arrangement file")
    p_basis.set_defaults(func=cmd_basis)

    p_exp = sub.add_parser("exponents", help="print the exponents")
    p_exp.add_argument("arrangement", help="arrangement file")
    p_exp.set_defaults(func=cmd_exponents)

    p_verify = sub.add_parser("verify", help="check a pair against Saito's criterion")
    p_verify.add_argument("arrangement", help="arrangement file")
    p_verify.add_argument("--theta1", required=True, help="derivation as 'deg:c0,..;deg:c0,..'")
    p_verify.add_argument("--theta2", required=True, help="derivation as 'deg:c0,..;deg:c0,..'")
    p_verify.set_defaults(func=cmd_verify)

    p_oracle = sub.add_parser("oracle", help="graded dimensions by exact linear algebra")
    p_oracle.add_argument("arrangement", help="arrangement file")
    p_oracle.set_defaults(func=cmd_oracle)

    p_trace = sub.add_parser("trace", help="trace every multiplicity-raising step")
    p_trace.add_argument("arrangement", help="arrangement file")
    p_trace.set_defaults(func=cmd_trace)

    p_frob = sub.add_parser("frobenius", help="Frobenius-power basis over F_p")
    p_frob.add_argument("p", type=int, help="prime characteristic")
    p_frob.add_argument("i", type=int, help="power index: multiplicities p^i + shift")
    p_frob.add_argument("--shifts", help="comma-separated shifts, one per hyperplane in canonical order")
    p_frob.set_defaults(func=cmd_frobenius)

    p_prop = sub.add_parser(
        "prop-experiment", help="four-line exponent-difference classification sweep"
    )
    p_prop.add_argument("--out", help="write per-tuple CSV report here")
    p_prop.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_prop.add_argument("--lo", type=int, default=20, help="smallest multiplicity (default 20)")
    p_prop.add_argument("--hi", type=int, default=30, help="largest multiplicity (default 30)")
    p_prop.set_defaults(func=cmd_prop_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, NoGenericFormError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
