"""Batch front-end for the reduction pipeline.

Exit codes: 0 success (for solve commands: answer found / verification
passed), 1 negative answer or failed verification, 2 node budget exhausted,
64 usage error, 65 bad input data, 74 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formula as fm
from . import gadgets as gd
from . import graphs as gr
from . import render as rd
from . import solver as sv
from .reduction import reduce_formula, serialize_provenance

EX_USAGE = 64
EX_DATAERR = 65
EX_IOERR = 74


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(EX_IOERR)


def _write(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(EX_IOERR)


def _load_formula(path: str) -> fm.NaeFormula:
    try:
        return fm.parse_formula(_read(path))
    except fm.FormulaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(EX_DATAERR)


def _load_graph(path: str):
    try:
        return gr.parse_graph(_read(path))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(EX_DATAERR)


def cmd_validate_formula(args) -> int:
    f = _load_formula(args.formula)
    print(f"valid nae3sat-e4 instance: n={f.n} m={f.m}")
    return 0


def cmd_solve_nae(args) -> int:
    f = _load_formula(args.formula)
    a = fm.solve_nae_bruteforce(f)
    if a is None:
        print("UNSAT")
        return 1
    print("SAT " + "".join("AB"[b] for b in a))
    return 0


def cmd_reduce(args) -> int:
    f = _load_formula(args.formula)
    try:
        art = reduce_formula(f)
    except (fm.FormulaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATAERR
    stem = Path(args.formula).stem
    out = Path(args.out)
    _write(out / f"{stem}.graph", gr.serialize_graph(art.graph, art.embedding))
    _write(out / f"{stem}.prov", serialize_provenance(art))
    print(f"reduced: |V|={art.graph.n} |E|={art.graph.m} crossings={art.q}")
    print(f"wrote {out / (stem + '.graph')} and {out / (stem + '.prov')}")
    return 0


def cmd_solve_pmc(args) -> int:
    g, _ = _load_graph(args.graph)
    try:
        if args.oracle:
            m = sv.find_pmc_bruteforce(g)
        else:
            m = sv.find_pmc(g, budget=args.budget)
    except sv.BudgetExhausted:
        print("budget exhausted")
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_DATAERR
    if m is None:
        print("no perfect matching cut")
        return 1
    print(f"perfect matching cut with {len(m)} edges")
    if args.witness:
        _write(Path(args.witness), gr.serialize_matching(g, m))
    if args.cut:
        cut = gr.cut_from_edge_set(g, m)
        _write(Path(args.cut), gr.serialize_cut(cut))
    return 0


def cmd_verify_graph(args) -> int:
    g, emb = _load_graph(args.graph)
    checks = [("cubic", gr.is_cubic(g)), ("bipartite", gr.is_bipartite(g) is not None)]
    if emb is not None:
        checks.append(("planar", gr.is_planar_embedding(g, emb)))
    checks.append(("3-connected", gr.is_3_connected(g)))
    ok = all(v for _, v in checks)
    names = " ".join(name for name, _ in checks)
    print(f"{names}: {'PASS' if ok else 'FAIL'}")
    if not ok:
        for name, v in checks:
            print(f"  {name}: {'ok' if v else 'FAILED'}")
    return 0 if ok else 1


def cmd_verify_gadgets(args) -> int:
    ok = True
    for kind, build, expected in [
        ("variable", gd.build_variable_gadget, 1),
        ("clause", gd.build_clause_gadget, 3),
        ("crossing", gd.build_crossing_gadget, 8),
    ]:
        gadget = build()
        census = gd.enumerate_local_pmcs(gadget)
        good = len(census) == expected
        extra = ""
        if kind == "clause":
            ts = gd.clause_type_sets(gadget)
            uv = set(gadget.marks["U"]) | set(gadget.marks["V"])
            uv_edges = frozenset(
                e for e, (a, b) in enumerate(gadget.graph.edges) if a in uv and b in uv
            )
            want = {ts.l_sets[i] | ts.r_sets[i] for i in range(3)}
            got = {frozenset(c) & uv_edges for c in census}
            if want != got:
                good = False
                extra = f" type-trace diff: missing={len(want - got)} surplus={len(got - want)}"
        if kind == "crossing":
            p1, p2 = gd.crossing_type_sets(gadget)
            members = {frozenset(c) for c in census}
            if not (p1 in members and p2 in members):
                good = False
                extra = " P1/P2 membership FAILED"
        ok &= good
        print(f"gadget {kind} census {len(census)} expected {expected} "
              f"{'PASS' if good else 'FAIL'}{extra}")
    return 0 if ok else 1


def cmd_roundtrip(args) -> int:
    f = _load_formula(args.formula)
    a = fm.solve_nae_bruteforce(f)
    art = reduce_formula(f)
    try:
        m = sv.find_pmc(art.graph, budget=args.budget)
    except sv.BudgetExhausted:
        print("budget exhausted")
        return 2
    sat = a is not None
    pmc = m is not None
    if sat != pmc:
        print(f"SAT={'yes' if sat else 'no'} PMC={'yes' if pmc else 'no'} MISMATCH")
        return 1
    if not sat:
        print("SAT=no PMC=no consistent")
        return 0
    recovered = sv.assignment_from_pmc(art, m)
    ok = fm.nae_satisfies(f, recovered)
    witness = sv.pmc_from_assignment(art, a)
    ok &= gr.is_perfect_matching(art.graph, witness)
    ok &= gr.cut_from_edge_set(art.graph, witness) is not None
    print(f"SAT=yes PMC=yes assignment {'NAE-valid' if ok else 'INVALID'}")
    return 0 if ok else 1


def cmd_render(args) -> int:
    f = _load_formula(args.formula)
    art = reduce_formula(f)
    stem = Path(args.formula).stem
    out = Path(args.out)
    if args.format == "svg":
        _write(out / f"{stem}.svg", rd.render_svg(art))
        print(f"wrote {out / (stem + '.svg')}")
    else:
        _write(out / f"{stem}.dot", rd.render_dot(art))
        print(f"wrote {out / (stem + '.dot')}")
    return 0


def main(argv=None) -> int:
    parser = _Parser(prog="pmcut", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--seed", type=int, default=None,
                        help="seed reserved for harnesses generating random instances")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker cap for module-level parallelism (modules are "
                             "sequential and deterministic; accepted for interface stability)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate-formula", help="parse and validate a formula file")
    p.add_argument("formula")
    p.set_defaults(fn=cmd_validate_formula)

    p = sub.add_parser("solve-nae", help="brute-force the formula")
    p.add_argument("formula")
    p.set_defaults(fn=cmd_solve_nae)

    p = sub.add_parser("reduce", help="compile a formula to a PMC instance")
    p.add_argument("formula")
    p.add_argument("--out", default=".")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("solve-pmc", help="decide perfect matching cut existence")
    p.add_argument("graph")
    p.add_argument("--oracle", action="store_true", help="use the brute-force oracle")
    p.add_argument("--budget", type=int, default=sv.DEFAULT_BUDGET)
    p.add_argument("--witness", help="write the matching file here")
    p.add_argument("--cut", help="write the cut file here")
    p.set_defaults(fn=cmd_solve_pmc)

    p = sub.add_parser("verify-graph", help="check the Barnette properties")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_verify_graph)

    p = sub.add_parser("verify-gadgets", help="re-run the gadget censuses")
    p.set_defaults(fn=cmd_verify_gadgets)

    p = sub.add_parser("roundtrip", help="reduce, solve, and cross-check both ways")
    p.add_argument("formula")
    p.add_argument("--budget", type=int, default=sv.DEFAULT_BUDGET)
    p.set_defaults(fn=cmd_roundtrip)

    p = sub.add_parser("render", help="schematic SVG or DOT of the reduction")
    p.add_argument("formula")
    p.add_argument("--format", choices=("svg", "dot"), default="svg")
    p.add_argument("--out", default=".")
    p.set_defaults(fn=cmd_render)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
