"""Command-line front end: declare points, drive the pipeline, report.

Input files declare one point per line (`rat p/q`, `sqrt n`, or
`alg poly=[c0,c1,...] re=<dec> im=<dec> rad=<dec>`), with `#` comments.
The i-th declaration owns the variables X_i, Y_i.  Reports are
deterministic text or JSON (schema 1).  Exit codes: 0 success/HOLDS,
1 FAILS, 2 parse or resource errors.
"""

import argparse
import json
import math
import re
import sys
from fractions import Fraction

from .algebraic import AlgebraicNumber
from .errors import NotIsolating, ParseError, TrigIdealError
from .exprparse import parse_expression
from .numerics import ComplexBox
from .polyring import MonomialOrder, format_poly
from .trig import canonical_form, exclusion_box, relation_ideal, verify_relation

_RAT = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")
_DEC = re.compile(r"^[+-]?\d+(\.\d+)?$")


class InputSpec:
    """Validated input: ordered points plus pipeline options."""

    __slots__ = ("points", "order", "bits", "height_bound", "max_pairs")

    def __init__(self, points, order="block", bits=256, height_bound=65536, max_pairs=10**6):
        self.points = list(points)
        self.order = order
        self.bits = bits
        self.height_bound = height_bound
        self.max_pairs = max_pairs


def _col(raw, token):
    at = raw.find(token)
    return at + 1 if at >= 0 else 1


def _parse_rat(fields, raw, lineno):
    if len(fields) != 2 or not _RAT.match(fields[1]):
        raise ParseError("rat needs a single p/q argument", lineno, _col(raw, "rat"))
    return AlgebraicNumber.from_rational(Fraction(fields[1]))


def _parse_sqrt(fields, raw, lineno):
    if len(fields) != 2 or not fields[1].isdigit():
        raise ParseError("sqrt needs a single positive integer", lineno, _col(raw, "sqrt"))
    n = int(fields[1])
    col = _col(raw, fields[1])
    if n <= 0:
        raise ParseError("sqrt argument must be positive", lineno, col)
    r = math.isqrt(n)
    if r * r == n:
        raise ParseError("%d is a perfect square; declare it with rat" % n, lineno, col)
    box = ComplexBox.from_fractions(
        Fraction(r), Fraction(r + 1), Fraction(-1, 100), Fraction(1, 100)
    )
    return AlgebraicNumber([-n, 0, 1], box)


def _parse_alg(fields, raw, lineno):
    seen = {}
    for field in fields[1:]:
        if "=" not in field:
            raise ParseError("alg fields look like key=value", lineno, _col(raw, field))
        key, value = field.split("=", 1)
        seen[key] = (value, _col(raw, field))
    for key in ("poly", "re", "im", "rad"):
        if key not in seen:
            raise ParseError("alg is missing %s=" % key, lineno, _col(raw, "alg"))
    value, col = seen["poly"]
    if not (value.startswith("[") and value.endswith("]")):
        raise ParseError("poly wants [c0,c1,...]", lineno, col)
    try:
        coeffs = [int(c) for c in value[1:-1].split(",")]
    except ValueError:
        raise ParseError("poly coefficients must be integers", lineno, col) from None
    decs = {}
    for key in ("re", "im", "rad"):
        value, col = seen[key]
        if not _DEC.match(value):
            raise ParseError("%s wants a plain decimal" % key, lineno, col)
        decs[key] = Fraction(value)
    if decs["rad"] <= 0:
        raise ParseError("rad must be positive", lineno, seen["rad"][1])
    box = ComplexBox.from_fractions(
        decs["re"] - decs["rad"],
        decs["re"] + decs["rad"],
        decs["im"] - decs["rad"],
        decs["im"] + decs["rad"],
    )
    try:
        return AlgebraicNumber(coeffs, box)
    except NotIsolating as exc:
        raise NotIsolating("line %d: %s" % (lineno, exc)) from None
    except (ValueError, TrigIdealError) as exc:
        raise ParseError(str(exc), lineno, seen["poly"][1]) from None


def parse_input(text):
    """One declaration per line; # starts a comment."""
    points = []
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        head = fields[0]
        if head == "rat":
            points.append(_parse_rat(fields, raw, lineno))
        elif head == "sqrt":
            points.append(_parse_sqrt(fields, raw, lineno))
        elif head == "alg":
            points.append(_parse_alg(fields, raw, lineno))
        else:
            raise ParseError("unknown declaration %r" % head, lineno, _col(raw, head))
    if not points:
        raise ParseError("no points declared", last_line or 1, 1)
    return InputSpec(points)


def _pow2_bound(x):
    """Deterministic display bound: smallest power of two at or above x."""
    if x == 0:
        return "0"
    num, den = x.numerator, x.denominator
    if num <= den:
        f = (den // num).bit_length() - 1
        return "2^-%d" % f
    return "2^%d" % (num // den).bit_length()


def _order_for(ideal, kind):
    return MonomialOrder("block_elim" if kind == "block" else "lex", ideal.registry)


def _basis_lines(ideal):
    basis = ideal.basis
    lines = ["basis:"]
    lines.append("  indices: [%s]" % ", ".join(str(i + 1) for i in basis.basis_indices))
    lines.append("  denominator: %d" % basis.denominator)
    lines.append("  coords:")
    for i, row in enumerate(basis.coords, start=1):
        lines.append("    point %d: [%s]" % (i, ", ".join(str(c) for c in row)))
    return lines


def _expansion_lines(ideal):
    order = ideal.block_gb.order
    lines = ["expansions:"]
    for pair in ideal.expansions:
        lines.append("  P%d = %s" % (pair.point_index + 1, format_poly(pair.p, order)))
        lines.append("  Q%d = %s" % (pair.point_index + 1, format_poly(pair.q, order)))
    return lines


def _basis_json(ideal):
    basis = ideal.basis
    return {
        "indices": [i + 1 for i in basis.basis_indices],
        "denominator": basis.denominator,
        "coords": [list(row) for row in basis.coords],
    }


def _expansions_json(ideal):
    order = ideal.block_gb.order
    return [
        {
            "point": pair.point_index + 1,
            "p": format_poly(pair.p, order),
            "q": format_poly(pair.q, order),
        }
        for pair in ideal.expansions
    ]


def _certification_json(rec):
    return {
        "bits": rec.bits,
        "generators": len(rec.boxes),
        "max_width_bound": _pow2_bound(rec.max_width),
        "max_abs_bound": _pow2_bound(rec.max_abs),
    }


def _build_ideal(spec):
    return relation_ideal(
        spec.points,
        height_bound=spec.height_bound,
        bits=spec.bits,
        max_pairs=spec.max_pairs,
    )


def cmd_relations(spec, as_json):
    ideal = _build_ideal(spec)
    order = _order_for(ideal, spec.order)
    gens = [format_poly(g, order) for g in ideal.generators]
    rec = ideal.certificate
    if as_json:
        _emit_json(
            {
                "schema": 1,
                "command": "relations",
                "points": len(ideal.points),
                "basis": _basis_json(ideal),
                "expansions": _expansions_json(ideal),
                "generators": gens,
                "certification": _certification_json(rec),
            }
        )
        return 0
    lines = ["points: %d" % len(ideal.points)]
    lines += _basis_lines(ideal)
    lines += _expansion_lines(ideal)
    lines.append("generators:")
    for g in gens:
        lines.append("  %s" % g)
    lines.append(
        "certification: bits=%d generators=%d max_width<=%s max_abs<=%s"
        % (rec.bits, len(rec.boxes), _pow2_bound(rec.max_width), _pow2_bound(rec.max_abs))
    )
    print("\n".join(lines))
    return 0


def cmd_expand(spec, as_json):
    ideal = _build_ideal(spec)
    if as_json:
        _emit_json(
            {
                "schema": 1,
                "command": "expand",
                "points": len(ideal.points),
                "basis": _basis_json(ideal),
                "expansions": _expansions_json(ideal),
            }
        )
        return 0
    lines = ["points: %d" % len(ideal.points)]
    lines += _basis_lines(ideal)
    lines += _expansion_lines(ideal)
    print("\n".join(lines))
    return 0


def _box_json(box):
    if box is None:
        return None
    return {
        "re": [float(box.re_lo), float(box.re_hi)],
        "im": [float(box.im_lo), float(box.im_hi)],
    }


def cmd_verify(spec, expr, as_json):
    ideal = _build_ideal(spec)
    f = parse_expression(expr, ideal.registry)
    holds, nf = verify_relation(ideal, f)
    order = _order_for(ideal, spec.order)
    box = None if holds else exclusion_box(ideal, nf, bits=spec.bits)
    if as_json:
        _emit_json(
            {
                "schema": 1,
                "command": "verify",
                "holds": holds,
                "normal_form": format_poly(nf, order),
                "exclusion": _box_json(box),
            }
        )
        return 0 if holds else 1
    if holds:
        print("HOLDS")
        return 0
    print("FAILS")
    print("normal form: %s" % format_poly(nf, order))
    if box is not None:
        print(
            "exclusion: re=[%r, %r] im=[%r, %r]"
            % (float(box.re_lo), float(box.re_hi), float(box.im_lo), float(box.im_hi))
        )
    return 1


def cmd_reduce(spec, expr, as_json):
    ideal = _build_ideal(spec)
    f = parse_expression(expr, ideal.registry)
    nf = canonical_form(ideal, f)
    order = _order_for(ideal, spec.order)
    text = format_poly(nf, order)
    if as_json:
        _emit_json({"schema": 1, "command": "reduce", "normal_form": text})
    else:
        print(text)
    return 0


def _emit_json(obj):
    print(json.dumps(obj, indent=2))


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="trigideal",
        description="Exact relation ideals of cosines and sines at algebraic points.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, takes_expr in (
        ("relations", False),
        ("verify", True),
        ("reduce", True),
        ("expand", False),
    ):
        p = sub.add_parser(name)
        p.add_argument("input", help="input file of point declarations, or - for stdin")
        if takes_expr:
            p.add_argument("expr", help="polynomial over cos(i)/sin(i) or Xi/Yi")
        p.add_argument("--order", choices=["block", "lex"], default="block")
        p.add_argument("--bits", type=int, default=256)
        p.add_argument("--height-bound", type=int, default=65536)
        p.add_argument("--max-pairs", type=int, default=10**6)
        p.add_argument("--json", action="store_true")
    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        spec = parse_input(_read_input(args.input))
        spec.order = args.order
        spec.bits = args.bits
        spec.height_bound = args.height_bound
        spec.max_pairs = args.max_pairs
        if args.command == "relations":
            return cmd_relations(spec, args.json)
        if args.command == "expand":
            return cmd_expand(spec, args.json)
        if args.command == "verify":
            return cmd_verify(spec, args.expr, args.json)
        return cmd_reduce(spec, args.expr, args.json)
    except OSError as exc:
        _report_error(type(exc).__name__, str(exc), args.json)
        return 2
    except TrigIdealError as exc:
        _report_error(type(exc).__name__, str(exc), args.json)
        return 2


def _report_error(kind, message, as_json):
    if as_json:
        _emit_json({"schema": 1, "error": {"type": kind, "message": message}})
    else:
        print("error: %s: %s" % (kind, message), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
