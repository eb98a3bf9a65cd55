"""Command-line surface: solve, verify-identity, check-involution, det.

Input documents are JSON::

    {"n": 2, "mode": "rational",
     "A": [["1", "1"], ["1", "-1"]],
     "b": ["3", "1"]}

Rational entries cross the boundary as strings ("p/q" or an integer
literal; plain JSON integers are also accepted) so values stay exact
bit-for-bit -- JSON floats are rejected outright.  A document with
``"mode": "symbolic"`` omits A and b and denotes the generic system on
symbols a[i,j] / b[i].

Exit codes: 0 success / all checks pass, 1 a check failed or output could
not be written, 2 input or usage error, 3 singular system, 4 size guard
violation (n > max-n; override with --max-n).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .algebra import render_scalar
from .cramer import (
    RATIONAL,
    SYMBOLIC,
    LinearSystem,
    SingularSystemError,
    big_x,
    generic_system,
    rational_system,
    solve,
    verify_identity,
)
from .involution import build_certificate, certificate_to_dict, check_fact1, check_fact2
from .oracle import COFACTOR_MAX_N, bareiss_det, cofactor_det
from .perm import MAX_N_DEFAULT, SizeLimitError

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_SINGULAR = 3
EXIT_GUARD = 4


class InputError(ValueError):
    """The input document (or a usage combination) is malformed."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


@dataclass(frozen=True)
class InputDocument:
    """Parsed form of the JSON input: size, mode, exact entries."""

    n: int
    mode: str
    a_rows: tuple[tuple[Fraction, ...], ...] | None
    b: tuple[Fraction, ...] | None

    def to_dict(self) -> dict:
        """Write back as JSON data; rationals become "p/q" strings."""
        doc: dict = {"n": self.n, "mode": self.mode}
        if self.a_rows is not None:
            doc["A"] = [[str(x) for x in row] for row in self.a_rows]
        if self.b is not None:
            doc["b"] = [str(x) for x in self.b]
        return doc

    def to_system(self) -> LinearSystem:
        if self.mode == SYMBOLIC:
            return generic_system(self.n)
        return rational_system(self.a_rows, self.b)


def parse_input_document(data: object) -> InputDocument:
    """Validate raw JSON data against the input schema."""
    if not isinstance(data, dict):
        raise InputError("input document must be a JSON object")
    n = data.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    mode = data.get("mode")
    if mode not in (RATIONAL, SYMBOLIC):
        raise InputError(f'mode must be "rational" or "symbolic", got {mode!r}')
    unknown = set(data) - {"n", "mode", "A", "b"}
    if unknown:
        raise InputError(f"unknown fields: {sorted(unknown)}")

    if mode == SYMBOLIC:
        if "A" in data or "b" in data:
            raise InputError("symbolic documents must omit A and b")
        return InputDocument(n=n, mode=mode, a_rows=None, b=None)

    if "A" not in data or "b" not in data:
        raise InputError("rational documents need both A and b")
    a = data["A"]
    if not isinstance(a, list) or len(a) != n:
        raise InputError(f"A must be a list of {n} rows")
    rows = []
    for r, row in enumerate(a, start=1):
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"row {r} of A must have {n} entries")
        rows.append(tuple(_parse_rational(x) for x in row))
    b = data["b"]
    if not isinstance(b, list) or len(b) != n:
        raise InputError(f"b must be a list of {n} entries")
    return InputDocument(
        n=n, mode=mode, a_rows=tuple(rows), b=tuple(_parse_rational(x) for x in b)
    )


def _parse_rational(value: object) -> Fraction:
    if isinstance(value, bool):
        raise InputError(f"not an exact rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise InputError(f"not an exact rational string: {value!r}")
        num, slash, den = value.partition("/")
        if slash and int(den) == 0:
            raise InputError(f"zero denominator in {value!r}")
        return Fraction(value)
    raise InputError(f"rational entries must be strings or integers, got {value!r}")


def _load_document(path: str) -> InputDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc
    return parse_input_document(data)


# -- subcommands --------------------------------------------------------------


def _cmd_solve(args) -> int:
    doc = _load_document(args.input)
    system = doc.to_system()
    sol = solve(system, max_n=args.max_n)
    if system.mode == RATIONAL:
        quotients = [str(q) for q in sol.quotients]
        if args.json:
            payload = {
                "mode": RATIONAL,
                "n": system.n,
                "x": quotients,
                "numerators": [str(x) for x in sol.numerators],
                "denominator": str(sol.denominator),
            }
            print(json.dumps(payload))
        else:
            for j, q in enumerate(quotients, start=1):
                print(f"x{j} = {q}")
    else:
        pairs = [
            {"numerator": render_scalar(num), "denominator": render_scalar(den)}
            for num, den in sol.quotients
        ]
        if args.json:
            payload = {
                "mode": SYMBOLIC,
                "n": system.n,
                "x": pairs,
                "numerators": [render_scalar(x) for x in sol.numerators],
                "denominator": render_scalar(sol.denominator),
            }
            print(json.dumps(payload))
        else:
            for j, pair in enumerate(pairs, start=1):
                print(f"x{j} = ({pair['numerator']}) / ({pair['denominator']})")
    return EXIT_OK


def _cmd_verify_identity(args) -> int:
    if not 1 <= args.n <= args.max_n:
        raise SizeLimitError(f"n={args.n} outside the guard 1..{args.max_n}")
    system = generic_system(args.n)
    indices = [args.i] if args.i is not None else list(range(1, args.n + 1))
    all_ok = True
    for i in indices:
        if not 1 <= i <= args.n:
            raise InputError(f"--i {i} outside 1..{args.n}")
        report = verify_identity(system, i, max_n=args.max_n)
        print(f"i={i}: {'PASS' if report.ok else 'FAIL'}")
        if not report.ok:
            all_ok = False
            print(f"  lhs = {report.lhs}")
            print(f"  rhs = {report.rhs}")
    return EXIT_OK if all_ok else EXIT_FAIL


def _cmd_check_involution(args) -> int:
    if not 1 <= args.n <= args.max_n:
        raise SizeLimitError(f"n={args.n} outside the guard 1..{args.max_n}")
    if not 1 <= args.i <= args.n:
        raise InputError(f"--i {args.i} outside 1..{args.n}")
    system = generic_system(args.n)
    f1 = check_fact1(system, args.i, max_n=args.max_n)
    f2 = check_fact2(system, args.i, max_n=args.max_n)

    def line(label: str, ok: bool) -> bool:
        print(f"{label}: {'PASS' if ok else 'FAIL'}")
        return ok

    print(f"n={args.n} i={args.i}: good={f1.good_count} bad={f2.bad_count}")
    all_ok = line("fact1 elementwise (weight = b_i * w0)", f1.elementwise_ok)
    all_ok &= line("fact1 aggregate (good sum = b_i * X0)", f1.aggregate_ok)
    all_ok &= line("involution (bad-to-bad, self-inverse, no fixed point)", f2.involution_ok)
    all_ok &= line("parity (inversion difference odd)", f2.parity_ok)
    all_ok &= line("cancellation (pair weights sum to zero)", f2.cancellation_ok)
    all_ok &= line("fact2 aggregate (bad sum = 0)", f2.aggregate_ok)

    if args.emit_certificate:
        cert = build_certificate(system, args.i, max_n=args.max_n)
        try:
            with open(args.emit_certificate, "w", encoding="utf-8") as fh:
                json.dump(certificate_to_dict(cert), fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            print(f"cannot write certificate: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(f"certificate written to {args.emit_certificate}")
    return EXIT_OK if all_ok else EXIT_FAIL


def _cmd_det(args) -> int:
    doc = _load_document(args.input)
    system = doc.to_system()
    methods = {
        "leibniz": lambda: big_x(system, 0, max_n=args.max_n),
        "cofactor": lambda: cofactor_det(system),
        "bareiss": lambda: bareiss_det(system),
    }
    if args.method:
        if args.method == "bareiss" and system.mode != RATIONAL:
            raise InputError("bareiss applies to rational documents only")
        print(f"{args.method}: {render_scalar(methods[args.method]())}")
        return EXIT_OK
    # default: every method whose guard and mode allow it, and they must agree
    selected = ["leibniz"]
    if system.n <= COFACTOR_MAX_N:
        selected.append("cofactor")
    if system.mode == RATIONAL:
        selected.append("bareiss")
    results = {name: methods[name]() for name in selected}
    for name in selected:
        print(f"{name}: {render_scalar(results[name])}")
    values = list(results.values())
    if any(v != values[0] for v in values[1:]):
        print("determinant methods disagree", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cramerkit",
        description="Exact linear solving by signed permutation sums, "
        "with an exhaustive cancellation checker.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_max_n(p):
        p.add_argument(
            "--max-n",
            type=int,
            default=MAX_N_DEFAULT,
            metavar="N",
            help=f"enumeration size guard (default {MAX_N_DEFAULT})",
        )

    p = sub.add_parser("solve", help="solve a system from a JSON document")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    add_max_n(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser(
        "verify-identity",
        help="check sum_j a[i,j] X_j = b[i] X_0 on the generic symbolic system",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, default=None, help="single row (default: all)")
    add_max_n(p)
    p.set_defaults(func=_cmd_verify_identity)

    p = sub.add_parser(
        "check-involution",
        help="verify the good/bad partition, pairing and cancellation for one row",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--emit-certificate", metavar="FILE")
    add_max_n(p)
    p.set_defaults(func=_cmd_check_involution)

    p = sub.add_parser("det", help="determinant of the document's matrix")
    p.add_argument("--input", required=True, metavar="FILE")
    p.add_argument("--method", choices=["leibniz", "cofactor", "bareiss"])
    add_max_n(p)
    p.set_defaults(func=_cmd_det)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SingularSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
