"""Command line front end: surgeryinv <command> [options].

Matrix files are plain text: a header line "rows cols", then that many
rows of whitespace-separated integers.  Lines starting with '#' and blank
lines are ignored.  Output documents are deterministic: the same inputs
and flags produce byte-identical text, with exact rationals rendered as
"num/den" strings and numeric values as fixed-precision decimal strings.

Exit codes: 0 success, 2 parse error, 3 precondition violation, 4 term
budget exceeded.
"""

import argparse
import json
import os
import sys

from mpmath import mp

from .exactmat import smith_normal_form
from .gauss import (
    BudgetExceededError,
    DEFAULT_TERM_BUDGET,
    eval_numeric,
    partition_function,
)
from .homology import (
    lens_presentation,
    linking_form_with_generators,
    presentation,
)
from .reciprocity import cs_dual, reciprocity_sides
from .surgery import apply_move, evenize, preset

BUDGET_ENV = "SURGERYINV_BUDGET"

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


class MatrixParseError(ValueError):
    """A matrix file or preset string failed to parse."""


def parse_matrix(text):
    """Parse the matrix file format; inverse of format_matrix."""
    lines = [
        line for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise MatrixParseError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixParseError("header must be two integers: rows cols")
    try:
        rows, cols = int(header[0]), int(header[1])
    except ValueError:
        raise MatrixParseError("header must be two integers: rows cols") from None
    if rows < 0 or cols < 0:
        raise MatrixParseError("negative dimensions")
    if len(lines) - 1 != rows:
        raise MatrixParseError(f"expected {rows} rows, found {len(lines) - 1}")
    out = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != cols:
            raise MatrixParseError(f"expected {cols} entries per row")
        try:
            out.append(tuple(int(x) for x in parts))
        except ValueError:
            raise MatrixParseError(f"non-integer entry in row: {line!r}") from None
    return tuple(out)


def format_matrix(m):
    rows = len(m)
    cols = len(m[0]) if rows else 0
    lines = [f"{rows} {cols}"]
    lines.extend(" ".join(str(x) for x in row) for row in m)
    return "\n".join(lines) + "\n"


def load_matrix(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise MatrixParseError(f"cannot read {path}: {exc}") from None
    return parse_matrix(text)


def parse_preset(spec):
    """Parse 'unknot:f', 'hopf:f1,f2', 'borromean' or 'lens:p,q'."""
    name, _, raw = spec.partition(":")
    try:
        params = tuple(int(x) for x in raw.split(",")) if raw else ()
    except ValueError:
        raise MatrixParseError(f"bad preset parameters in {spec!r}") from None
    if name == "lens":
        if len(params) != 2:
            raise MatrixParseError("lens preset takes two parameters: lens:p,q")
        return ("lens", params)
    if name in ("unknot", "hopf", "borromean"):
        return ("link", (name, params))
    raise MatrixParseError(f"unknown preset {spec!r}")


def load_manifold(spec):
    """A manifold argument is either a matrix file path or a preset string."""
    if os.path.exists(spec):
        return presentation(load_matrix(spec))
    kind, data = parse_preset(spec)
    if kind == "lens":
        return lens_presentation(*data)
    return presentation(preset(*data))


def load_linking_matrix(spec):
    if os.path.exists(spec):
        return load_matrix(spec)
    kind, data = parse_preset(spec)
    if kind == "lens":
        return lens_presentation(*data).matrix
    return preset(*data)


def _decimal_places(precision):
    return max(int(precision * 0.30103) + 2, 17)


def _num_str(x, precision):
    with mp.workprec(precision):
        return mp.nstr(+x, _decimal_places(precision))


def _value_doc(value):
    return {
        "re": _num_str(value.re, value.precision),
        "im": _num_str(value.im, value.precision),
    }


def _phases_doc(s):
    return [
        [f"{p.numerator}/{p.denominator}", m] for p, m in s.items()
    ]


def _group_str(g):
    return str(g)


def _emit(doc, text_lines, args):
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _budget(args):
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_TERM_BUDGET


def cmd_snf(args):
    m = load_matrix(args.matrix)
    snf = smith_normal_form(m)
    doc = {
        "command": "snf",
        "input": [list(r) for r in m],
        "u": [list(r) for r in snf.u],
        "d": [list(r) for r in snf.d],
        "v": [list(r) for r in snf.v],
        "invariant_factors": list(snf.invariant_factors()),
    }
    lines = ["# u", format_matrix(snf.u).rstrip(), "# d",
             format_matrix(snf.d).rstrip(), "# v", format_matrix(snf.v).rstrip(),
             "# invariant factors: " + " ".join(map(str, snf.invariant_factors()))]
    _emit(doc, lines, args)
    return EXIT_OK


def cmd_homology(args):
    spec = args.preset if args.preset else args.matrix
    man = load_manifold(spec)
    h = man.homology
    doc = {
        "command": "homology",
        "input": [list(r) for r in man.matrix],
        "b1": h.b1,
        "torsion": list(h.torsion.factors),
        "h": [_group_str(h.h0), _group_str(h.h1), _group_str(h.h2), _group_str(h.h3)],
    }
    lines = [
        f"b1 = {h.b1}",
        "torsion = " + (" ".join(map(str, h.torsion.factors)) or "(trivial)"),
        f"h0 = {h.h0}", f"h1 = {h.h1}", f"h2 = {h.h2}", f"h3 = {h.h3}",
    ]
    _emit(doc, lines, args)
    return EXIT_OK


def cmd_linking_form(args):
    spec = args.preset if args.preset else args.matrix
    if args.preset and args.preset.startswith("lens"):
        man = load_manifold(spec)
        form, gens = man.form, None
        matrix = man.matrix
    else:
        matrix = load_linking_matrix(spec)
        form, gens = linking_form_with_generators(matrix)
    q_entries = [[f"{x.numerator}/{x.denominator}" for x in row]
                 for row in form.q_mod1()]
    doc = {
        "command": "linking-form",
        "input": [list(r) for r in matrix],
        "t": form.rank,
        "factors": list(form.factors),
        "q_mod1": q_entries,
        "generators": [list(g) for g in gens] if gens is not None else None,
    }
    lines = [f"t = {form.rank}",
             "factors = " + (" ".join(map(str, form.factors)) or "(trivial)")]
    if gens is not None:
        for i, g in enumerate(gens):
            lines.append(f"generator {i + 1}: " + " ".join(map(str, g)))
    for row in q_entries:
        lines.append("q: " + " ".join(row))
    _emit(doc, lines, args)
    return EXIT_OK


def cmd_partition(args):
    c = load_matrix(args.coupling)
    man = load_manifold(args.manifold)
    z = partition_function(c, man, budget=_budget(args))
    value = eval_numeric(z, args.precision)
    n = len(c)
    doc = {
        "command": "partition",
        "coupling": [list(r) for r in c],
        "manifold": [list(r) for r in man.matrix],
        "phases": _phases_doc(z),
        "value": _value_doc(value),
        "metadata": {
            "b1": man.b1,
            "invariant_factors": list(man.torsion.factors),
            "term_count": man.form.order**n if n else 1,
            "precision": args.precision,
            "normalization_caveat": man.b1 > 0,
        },
    }
    lines = [
        "phases (num/den multiplicity):",
        *[f"  {p}/{q} {m}" for (p, q), m in
          (((ph.numerator, ph.denominator), mu) for ph, mu in z.items())],
        f"value = {doc['value']['re']} + {doc['value']['im']} i",
    ]
    if man.b1 > 0:
        lines.append("# note: b1 > 0, free sector absorbed into normalization")
    _emit(doc, lines, args)
    return EXIT_OK


def cmd_reciprocity(args):
    l = load_matrix(args.l)
    k = load_matrix(args.k)
    report = reciprocity_sides(l, k, precision=args.precision,
                               budget=_budget(args))
    doc = {
        "command": "reciprocity",
        "l": [list(r) for r in l],
        "k": [list(r) for r in k],
        "lhs": _value_doc(report.lhs),
        "rhs": _value_doc(report.rhs),
        "abs_diff": _num_str(report.abs_diff, report.precision),
        "sigma_k": report.sigma_k,
        "sigma_l": report.sigma_l,
        "det_k0": report.det_k0,
        "det_l0": report.det_l0,
        "sizes": {"m": report.m, "n": report.n, "r": report.r, "s": report.s},
        "l_even": report.l_even,
        "precision": report.precision,
    }
    lines = [
        f"lhs = {doc['lhs']['re']} + {doc['lhs']['im']} i",
        f"rhs = {doc['rhs']['re']} + {doc['rhs']['im']} i",
        f"|lhs - rhs| = {doc['abs_diff']}",
        f"sigma(k) = {report.sigma_k}, sigma(l) = {report.sigma_l}",
        f"det k0 = {report.det_k0}, det l0 = {report.det_l0}",
    ]
    if not report.l_even:
        lines.append("# note: l has an odd diagonal; the identity requires "
                     "evenness only of k")
    _emit(doc, lines, args)
    return EXIT_OK


def _parse_move(move, raw_args):
    parts = [x for x in raw_args.replace(",", " ").split()] if raw_args else []
    try:
        if move == "1":
            (sign,) = parts
            return ("1", int(sign))
        if move == "1inv":
            (index,) = parts
            return ("1inv", int(index) - 1)
        if move == "2":
            i0, j0, sign = parts
            return ("2", int(i0) - 1, int(j0) - 1, int(sign))
    except ValueError:
        pass
    raise MatrixParseError(
        "bad --args: move 1 takes 'sign', 1inv takes 'index', 2 takes 'i0,j0,sign'"
    )


def _move_text(move):
    # transcript lines carry 1-based indices, matching --args
    if move[0] == "1":
        return f"1 {move[1]:+d}"
    if move[0] == "1inv":
        return f"1inv {move[1] + 1}"
    return f"2 {move[1] + 1} {move[2] + 1} {move[3]:+d}"


def cmd_kirby(args):
    m = load_matrix(args.matrix)
    move = _parse_move(args.move, args.args)
    out = apply_move(m, move)
    if args.json:
        print(json.dumps({"command": "kirby", "matrix": [list(r) for r in out]},
                         indent=2, sort_keys=True))
    else:
        sys.stdout.write(format_matrix(out))
    return EXIT_OK


def cmd_evenize(args):
    m = load_matrix(args.matrix)
    out, transcript = evenize(m)
    if args.json:
        doc = {
            "command": "evenize",
            "matrix": [list(r) for r in out],
            "transcript": [_move_text(mv) for mv in transcript],
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        sys.stdout.write(format_matrix(out))
        for mv in transcript:
            print(f"# move: {_move_text(mv)}")
    return EXIT_OK


def cmd_dual(args):
    l = load_matrix(args.l)
    k = load_matrix(args.k)
    dual = cs_dual(l, k)
    if args.json:
        doc = {
            "command": "dual",
            "dual_linking": [list(r) for r in dual.linking],
            "dual_coupling": [list(r) for r in dual.coupling],
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("# dual linking matrix")
        sys.stdout.write(format_matrix(dual.linking))
        print("# dual coupling matrix")
        sys.stdout.write(format_matrix(dual.coupling))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="surgeryinv",
        description="Invariants of 3-manifolds presented by surgery linking matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, precision=False, budget=False):
        p.add_argument("--json", action="store_true",
                       help="emit a JSON result document")
        if precision:
            p.add_argument("--precision", type=int, default=128,
                           help="working precision in bits (default 128)")
        if budget:
            p.add_argument("--budget", type=int, default=None,
                           help=f"maximum number of enumerated summands "
                                f"(default {DEFAULT_TERM_BUDGET}, or "
                                f"${BUDGET_ENV})")

    p = sub.add_parser("snf", help="Smith normal form with transforms")
    p.add_argument("matrix")
    common(p)
    p.set_defaults(fn=cmd_snf)

    p = sub.add_parser("homology", help="b1, torsion and the homology list")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--preset", help="unknot:f | hopf:f1,f2 | borromean | lens:p,q")
    common(p)
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("linking-form", help="torsion linking form")
    p.add_argument("matrix", nargs="?")
    p.add_argument("--preset")
    common(p)
    p.set_defaults(fn=cmd_linking_form)

    p = sub.add_parser("partition", help="U(1)^n partition function")
    p.add_argument("--coupling", required=True, help="coupling matrix file")
    p.add_argument("--manifold", required=True,
                   help="linking matrix file or preset")
    common(p, precision=True, budget=True)
    p.set_defaults(fn=cmd_partition)

    p = sub.add_parser("reciprocity", help="both sides of the reciprocity identity")
    p.add_argument("--l", required=True, help="linking matrix file")
    p.add_argument("--k", required=True, help="even coupling matrix file")
    common(p, precision=True, budget=True)
    p.set_defaults(fn=cmd_reciprocity)

    p = sub.add_parser("kirby", help="apply one Kirby move")
    p.add_argument("matrix")
    p.add_argument("--move", required=True, choices=["1", "1inv", "2"])
    p.add_argument("--args", default="",
                   help="move 1: sign; 1inv: index (1-based); 2: i0,j0,sign")
    common(p)
    p.set_defaults(fn=cmd_kirby)

    p = sub.add_parser("evenize", help="make all framings even via Kirby moves")
    p.add_argument("matrix")
    common(p)
    p.set_defaults(fn=cmd_evenize)

    p = sub.add_parser("dual", help="dual theory data (linking, coupling)")
    p.add_argument("--l", required=True, help="even linking matrix file")
    p.add_argument("--k", required=True, help="even coupling matrix file")
    common(p)
    p.set_defaults(fn=cmd_dual)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("homology", "linking-form"):
        if bool(args.matrix) == bool(args.preset):
            print("error: give exactly one of a matrix file or --preset",
                  file=sys.stderr)
            return EXIT_PARSE
    try:
        return args.fn(args)
    except MatrixParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
