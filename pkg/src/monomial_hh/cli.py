"""Command line front end.

Every subcommand that reads an algebra takes the .alg file as its first
positional argument.  Output is an aligned text table by default and JSON
with ``--json``; both are byte-deterministic for a fixed input (and seed).
Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

import argparse
import json
import sys

from . import __version__
from .algfile import parse_algebra_file, write_algebra_file
from .ambiguities import AmbiguityTable
from .checks import _expect_empty, _run, run_checks, run_random_suite
from .cochains import hochschild_cohomology
from .cup import cup_table, verify_graded_commutativity, verify_triangular_vanishing
from .errors import BadInput, MonomialHHError, ParseError
from .fields import parse_field_spec
from .quivers import build_algebra, is_triangular
from .randomgen import RandomAlgebraConfig
from . import bar_oracle, diagonal, resolution

SCHEMA = "monomial-hh/1"


def _emit_json(payload):
    print(json.dumps(payload, indent=2, sort_keys=True))


def _table(headers, rows):
    widths = [len(h) for h in headers]
    srows = [[str(c) for c in row] for row in rows]
    for row in srows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    fmt = "  ".join("%%-%ds" % w for w in widths)
    print(fmt % tuple(headers))
    print(fmt % tuple("-" * w for w in widths))
    for row in srows:
        print(fmt % tuple(row))


def _load(path, field_spec=None):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise BadInput("cannot read %s: %s" % (path, exc)) from None
    algebra = parse_algebra_file(text)
    if field_spec:
        try:
            field = parse_field_spec(field_spec)
        except ValueError as exc:
            raise BadInput(str(exc)) from None
        algebra = build_algebra(algebra.quiver, algebra.relations, field)
    return algebra


def _path_row(p):
    q = p.quiver
    return {
        "word": p.word(),
        "source": q.vertex_names[p.source],
        "target": q.vertex_names[p.target],
        "length": len(p),
    }


def cmd_basis(args):
    algebra = _load(args.file)
    rows = [_path_row(p) for p in algebra.basis]
    if args.json:
        _emit_json({"schema": SCHEMA, "command": "basis", "dim": algebra.dim, "basis": rows})
    else:
        print("dim %d" % algebra.dim)
        _table(
            ["word", "source", "target", "length"],
            [[r["word"], r["source"], r["target"], r["length"]] for r in rows],
        )
    return 0


def cmd_ambiguities(args):
    algebra = _load(args.file)
    table = AmbiguityTable(algebra)
    ambs = table.degree(args.degree)
    rows = [
        {"word": a.path.word(), "left": a.display_left(), "right": a.display_right()}
        for a in ambs
    ]
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "ambiguities",
                "degree": args.degree,
                "count": len(rows),
                "ambiguities": rows,
            }
        )
    else:
        print("degree %d: %d ambiguities" % (args.degree, len(rows)))
        _table(["word", "left", "right"], [[r["word"], r["left"], r["right"]] for r in rows])
    return 0


def _report_command(args, reports, command):
    ok = all(r.ok for r in reports)
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "command": command,
                "ok": ok,
                "checks": [r.as_dict() for r in reports],
            }
        )
    else:
        _table(
            ["check", "ok", "detail"],
            [[r.name, "yes" if r.ok else "NO", r.detail] for r in reports],
        )
    return 0 if ok else 1


def cmd_resolution_check(args):
    algebra = _load(args.file)
    table = AmbiguityTable(algebra)
    n = args.max_degree
    reports = [
        _run("d-squared", lambda: resolution.check_d_squared(table, n)),
        _run("augmented", lambda: resolution.check_augmented(table)),
        _run("minimal", lambda: resolution.check_minimal(table, n)),
        _run("homotopy", lambda: resolution.check_homotopy(table, n - 1)),
    ]
    return _report_command(args, reports, "resolution-check")


def cmd_diagonal_check(args):
    algebra = _load(args.file)
    table = AmbiguityTable(algebra)
    n = args.max_degree
    reports = [
        _run("chain-map", lambda: diagonal.check_chain_map(table, n)),
        _run("counit", lambda: diagonal.check_counit(table, n)),
        _run("decompositions", lambda: diagonal.check_decomposition_lemmas(table, n)),
    ]
    return _report_command(args, reports, "diagonal-check")


def cmd_hh(args):
    algebra = _load(args.file, args.field)
    table = AmbiguityTable(algebra)
    spaces = hochschild_cohomology(table, args.max_degree)
    rows = []
    for n in range(args.max_degree + 1):
        sp = spaces[n]
        reps = [rep.display() for rep in sp.rep_cochains(table)]
        rows.append(
            {
                "degree": n,
                "dim": sp.dimension,
                "cochain_pairs": len(sp.pairs),
                "representatives": reps,
            }
        )
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "hh",
                "field": algebra.field.name,
                "dims": [r["dim"] for r in rows],
                "spaces": rows,
            }
        )
    else:
        print("field %s" % algebra.field.name)
        print("dims %s" % " ".join(str(r["dim"]) for r in rows))
        _table(
            ["degree", "dim", "pairs"],
            [[r["degree"], r["dim"], r["cochain_pairs"]] for r in rows],
        )
    return 0


def _scalar_map(cls):
    return {str(k): str(v) for k, v in cls.items()}


def cmd_cup(args):
    algebra = _load(args.file)
    table = AmbiguityTable(algebra)
    top = args.max_total_degree
    spaces = hochschild_cohomology(table, top)
    blocks = []
    for i in range(top + 1):
        for j in range(top + 1 - i):
            if spaces[i].dimension == 0 or spaces[j].dimension == 0:
                continue
            mat = cup_table(table, spaces, i, j)
            blocks.append(
                {
                    "i": i,
                    "j": j,
                    "table": [[_scalar_map(cls) for cls in row] for row in mat],
                }
            )
    if args.json:
        _emit_json({"schema": SCHEMA, "command": "cup", "blocks": blocks})
    else:
        for blk in blocks:
            print("HH^%d x HH^%d -> HH^%d" % (blk["i"], blk["j"], blk["i"] + blk["j"]))
            rows = []
            for a, row in enumerate(blk["table"]):
                for b, cls in enumerate(row):
                    val = (
                        " + ".join("%s z%s" % (c, k) for k, c in sorted(cls.items()))
                        if cls
                        else "0"
                    )
                    rows.append(["x%d . y%d" % (a, b), val])
            _table(["product", "class"], rows)
    return 0


def cmd_verify(args):
    algebra = _load(args.file)
    n = args.max_degree
    if args.all:
        reports = run_checks(algebra, degree=n, triangular_theorems=is_triangular(algebra))
    else:
        table = AmbiguityTable(algebra)
        spaces = hochschild_cohomology(table, n)
        reports = []
        if args.triangular_vanishing:
            # NotTriangular propagates: asking for this on a cyclic quiver is
            # an input mistake, not a failed verification
            failures = verify_triangular_vanishing(table, spaces, n)
            reports.append(_run("triangular-vanishing", lambda: _expect_empty(failures)))
        if args.graded_commutativity:
            reports.append(
                _run(
                    "graded-commutativity",
                    lambda: _expect_empty(verify_graded_commutativity(table, spaces, n)),
                )
            )
        if args.oracle:
            def oracle():
                deg = min(n, 4)
                want = [spaces[m].dimension for m in range(deg + 1)]
                got = bar_oracle.bar_hh_dimensions(algebra, deg)
                assert got == want, "oracle dims %r != %r" % (got, want)

            reports.append(_run("oracle-dims", oracle))
        if not reports:
            print("nothing selected; pass --all or a specific check", file=sys.stderr)
            return 2
    return _report_command(args, reports, "verify")


def cmd_random(args):
    config = RandomAlgebraConfig(triangular=args.triangular)
    out = run_random_suite(config, args.trials, args.seed, degree=args.max_degree)
    if args.json:
        _emit_json(
            {
                "schema": SCHEMA,
                "command": "random",
                "ok": out["ok"],
                "seed": args.seed,
                "trials": out["trials"],
            }
        )
    else:
        rows = []
        for row in out["trials"]:
            bad = [c["name"] for c in row["checks"] if not c["ok"]]
            rows.append(
                [
                    row["trial"],
                    row["seed"],
                    row["algebra"]["dim"],
                    len(row["algebra"]["relations"]),
                    "ok" if row["ok"] else "FAIL: " + ",".join(bad),
                ]
            )
        _table(["trial", "seed", "dim", "relations", "result"], rows)
        for row in out["trials"]:
            if not row["ok"] and "shrunk" in row:
                print("shrunk counterexample for trial %d:" % row["trial"])
                print(json.dumps(row["shrunk"], indent=2, sort_keys=True))
    return 0 if out["ok"] else 1


def cmd_write(args):
    algebra = _load(args.file)
    sys.stdout.write(write_algebra_file(algebra))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="monomial-hh",
        description="Hochschild cohomology of finite-dimensional monomial path algebras.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("basis", cmd_basis, help="list the relation-free paths")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = add("ambiguities", cmd_ambiguities, help="list the degree-n ambiguities")
    p.add_argument("file")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("resolution-check", cmd_resolution_check, help="d^2, augmentation, homotopy")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--json", action="store_true")

    p = add("diagonal-check", cmd_diagonal_check, help="chain map, counit, decompositions")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--json", action="store_true")

    p = add("hh", cmd_hh, help="Hochschild cohomology dimensions and representatives")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--field", help="override the file's field: q or fp:<prime>")
    p.add_argument("--json", action="store_true")

    p = add("cup", cmd_cup, help="class-level cup product tables")
    p.add_argument("file")
    p.add_argument("--max-total-degree", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = add("verify", cmd_verify, help="run verification suites on one algebra")
    p.add_argument("file")
    p.add_argument("--all", action="store_true")
    p.add_argument("--triangular-vanishing", action="store_true")
    p.add_argument("--graded-commutativity", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--json", action="store_true")

    p = add("random", cmd_random, help="seeded random suite with shrinking")
    p.add_argument("--triangular", action="store_true")
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--json", action="store_true")

    p = add("write", cmd_write, help="parse a file and print its canonical form")
    p.add_argument("file")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except MonomialHHError as exc:
        print("error: %s: %s" % (exc.__class__.__name__, exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
