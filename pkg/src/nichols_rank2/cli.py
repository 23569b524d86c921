"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report as rp
from .adjoint import DEFAULT_CHAIN_CAP, CapExceeded, reflect
from .classes import classify_pair
from .groups import GroupError
from .instantiate import EXAMPLES, SearchFailed, assembled_series, instantiate, pair_from_record
from .scalars import FieldError
from .symmetrizer import BraidedSpace, OracleBudgetExceeded
from .verify import (_root_text, analyze_pair, compare_oracle, table_dimension, verify_example,
                     verify_table, verify_yclass, yclass_applies)
from .weylgroupoid import ObjectCapExceeded, generate, positive_roots
from .ydmod import YDError, is_isomorphic

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
CHARS = (0, 2, 3, 5, 7)


class UsageError(Exception):
    pass


def _positive(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _char(text):
    v = int(text)
    if v not in CHARS:
        raise argparse.ArgumentTypeError(f"characteristic must be one of {CHARS}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=_char, default=None, help="characteristic (0, 2, 3, 5, 7)")
    common.add_argument("--example", choices=sorted(EXAMPLES), help="example id")
    common.add_argument("--max-degree", type=_positive, default=None,
                        help="total degree for oracle truncation")
    common.add_argument("--chain-cap", type=_positive, default=DEFAULT_CHAIN_CAP)
    common.add_argument("--object-cap", type=_positive, default=64)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--figures", default=None, help="directory for PNG figures")
    common.add_argument("--no-timing", action="store_true",
                        help="omit timing fields, for byte-identical reruns")

    ap = argparse.ArgumentParser(prog="nichols-rank2",
                                 description="Rank-two Nichols algebras over non-abelian groups.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("verify-table", parents=[common], help="check the catalogue rows")
    sp = sub.add_parser("pair", parents=[common], help="analyze a pair description file")
    sp.add_argument("file", help="JSON pair description")
    sp = sub.add_parser("reflect", parents=[common], help="apply R1 / R2 to an example")
    sp.add_argument("--index", type=int, choices=(1, 2), default=None)
    sub.add_parser("roots", parents=[common], help="Weyl groupoid and positive roots")
    sub.add_parser("hilbert", parents=[common], help="assembled Hilbert series")
    sub.add_parser("oracle", parents=[common], help="symmetrizer ranks vs series")
    sp = sub.add_parser("yclass", parents=[common], help="oracle check of a Y-class series")
    sp.add_argument("--class", dest="yclass", required=True,
                    choices=[f"Y{i}" for i in range(1, 9)])
    return ap


def _need_example(args):
    if not args.example:
        raise UsageError(f"{args.command} needs --example")
    p = 0 if args.char is None else args.char
    spec = EXAMPLES[args.example]
    if not spec.allows(p):
        for q in CHARS:
            if spec.allows(q):
                if args.char is None:
                    return args.example, q
                break
        raise UsageError(f"example {args.example} does not apply in characteristic {p}")
    return args.example, p


def _emit(args, payload, text: str, rows: list | None = None, columns: list | None = None):
    if args.no_timing:
        payload = rp.strip_timing(payload)
    if args.format == "json":
        rp.write_text(rp.to_json(payload), args.out)
    elif args.format == "csv":
        if rows is None:
            raise UsageError(f"{args.command} has no tabular output; use --format json")
        rp.write_text(rp.to_csv(rows, columns), args.out)
    else:
        rp.write_text(text, args.out)


def _figdir(args) -> Path | None:
    if not args.figures:
        return None
    d = Path(args.figures)
    d.mkdir(parents=True, exist_ok=True)
    return d


# -- commands -----------------------------------------------------------------------------

def cmd_verify_table(args) -> int:
    chars = [args.char] if args.char is not None else [0, 2, 3]
    records = []
    for p in chars:
        for rec in verify_table(p):
            rec["characteristic"] = p
            details = []
            for ex in rec["examples"]:
                r = verify_example(ex, p, max_degree=args.max_degree, chain_cap=args.chain_cap,
                                   object_cap=args.object_cap, timing=not args.no_timing)
                failed = [k for k, v in r["checks"].items() if not v]
                details.append({"example": ex, "passed": r["passed"], "failed_checks": failed,
                                "provenance": r["provenance"]})
                rec["passed"] = rec["passed"] and r["passed"]
            rec["verification"] = details
            records.append(rec)
    ok = all(r["passed"] for r in records)
    lines = [f"{'char':>4}  {'row':>3}  {'rank':>4}  {'group':<7} {'dimension':>9}  "
             f"{'char(K)':<7} {'support':<9} result"]
    for r in records:
        lines.append(f"{r['characteristic']:>4}  {r['row']:>3}  {r['rank']:>4}  {r['family']:<7} "
                     f"{r['dimension']:>9}  {r['char']:<7} {r['support']:<9} "
                     f"{'pass' if r['passed'] else 'FAIL'}")
    lines.append(f"{sum(r['passed'] for r in records)}/{len(records)} rows pass")
    cols = ["characteristic", "row", "rank", "family", "dimension", "char", "support", "passed"]
    _emit(args, {"rows": records, "passed": ok}, "\n".join(lines), records, cols)
    return EXIT_OK if ok else EXIT_MISMATCH


def _pair_text(rep: dict) -> str:
    out = [f"dims {rep['dims']}  char {rep['characteristic']}", f"outcome: {rep['outcome']}"]
    if "pair_class" in rep:
        out.append(f"class: {', '.join(rep['pair_class']) or '-'}")
    if rep.get("cartan_matrix"):
        out.append(f"Cartan matrix: {rep['cartan_matrix']}")
    if "groupoid" in rep:
        out.append(f"objects: {rep['groupoid']['objects']}  labels {rep['groupoid']['labels']}")
    if rep.get("roots"):
        out.append(f"positive roots ({len(rep['roots'])}): {', '.join(rep['roots'])}")
    if "series" in rep:
        out.append(f"series: {rep['series']['text']}")
        out.append(f"dimension: {rep['series']['dimension']}")
    return "\n".join(out)


def cmd_pair(args) -> int:
    try:
        rec = json.loads(Path(args.file).read_text())
        P = pair_from_record(rec, chain_cap=args.chain_cap)
    except (OSError, json.JSONDecodeError, KeyError, GroupError, FieldError, YDError) as exc:
        raise UsageError(f"invalid pair description: {exc}") from exc
    rep = analyze_pair(P, object_cap=args.object_cap, max_degree=args.max_degree,
                       timing=not args.no_timing)
    rep["description"] = rec
    _emit(args, rep, _pair_text(rep))
    return EXIT_OK if rep["passed"] else EXIT_MISMATCH


def cmd_reflect(args) -> int:
    ex, p = _need_example(args)
    inst = instantiate(ex, p)
    P = inst.pair(chain_cap=args.chain_cap)
    out = {"example": ex, "characteristic": p, "provenance": inst.provenance(),
           "pair": {"class": classify_pair(P.V, P.W).labels, "dims": [P.V.dim, P.W.dim],
                    "cartan_matrix": P.cartan_matrix()}}
    lines = [f"{ex} (char {p}): class {out['pair']['class']} dims {out['pair']['dims']} "
             f"Cartan {out['pair']['cartan_matrix']}"]
    for i in ([args.index] if args.index else [1, 2]):
        Q = reflect(P, i)
        QQ = reflect(Q, i)
        inv = is_isomorphic(QQ.V, P.V) and is_isomorphic(QQ.W, P.W)
        out[f"R{i}"] = {"class": classify_pair(Q.V, Q.W).labels, "dims": [Q.V.dim, Q.W.dim],
                        "cartan_matrix": Q.cartan_matrix(), "involutive": inv}
        lines.append(f"R{i}: class {out[f'R{i}']['class']} dims {out[f'R{i}']['dims']} "
                     f"Cartan {out[f'R{i}']['cartan_matrix']} R{i}^2 = id: {inv}")
    rows = [dict(step=k, **v) for k, v in out.items() if k in ("pair", "R1", "R2")]
    _emit(args, out, "\n".join(lines), rows, ["step", "class", "dims", "cartan_matrix",
                                              "involutive"])
    ok = all(out[k]["involutive"] for k in ("R1", "R2") if k in out)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_roots(args) -> int:
    ex, p = _need_example(args)
    P = instantiate(ex, p).pair(chain_cap=args.chain_cap)
    C = generate(P, object_cap=args.object_cap)
    objs = []
    for x in C.objects:
        roots = positive_roots(C, x)
        objs.append({"object": x, "label": C.labels[x], "path": C.paths[x],
                     "matrix": C.matrices[x], "r1": C.r[1][x], "r2": C.r[2][x],
                     "roots": [_root_text(r) for r in roots] if roots else None,
                     "root_vectors": [list(r) for r in roots] if roots else None})
    out = {"example": ex, "characteristic": p, "identify": C.identify,
           "objects": objs, "cartan_scheme": C.is_cartan_scheme()}
    lines = [f"{ex} (char {p}): {len(objs)} objects, identified by {C.identify}"]
    for o in objs:
        lines.append(f"  [{o['object']}] {o['label'] or '-'} A={o['matrix']} "
                     f"r1->{o['r1']} r2->{o['r2']}  roots: {', '.join(o['roots'] or [])}")
    d = _figdir(args)
    if d and objs[0]["root_vectors"]:
        for o in objs:
            rp.plot_roots([tuple(r) for r in o["root_vectors"]],
                          d / f"roots_{_safe(ex)}_p{p}_obj{o['object']}.png",
                          title=f"{ex}, object {o['object']} ({o['label'] or '-'})")
    _emit(args, out, "\n".join(lines), objs, ["object", "label", "matrix", "r1", "r2", "roots"])
    return EXIT_OK if C.is_cartan_scheme() else EXIT_MISMATCH


def _safe(name: str) -> str:
    return name.replace("'", "p")


def cmd_hilbert(args) -> int:
    ex, p = _need_example(args)
    s = assembled_series(ex, p)
    coeffs = s.expand(args.max_degree)
    want = table_dimension(ex, p)
    out = {"example": ex, "characteristic": p, "series": s.to_record(),
           "table_dimension": want,
           "coefficients": [{"d1": a, "d2": b, "coefficient": c}
                            for (a, b), c in sorted(coeffs.items())]}
    ok = want is None or s.dimension() == want
    text = (f"{ex} (char {p})\n{s}\ndimension {s.dimension()} "
            f"(table: {want if want is not None else '-'}) {'pass' if ok else 'FAIL'}")
    d = _figdir(args)
    if d:
        rp.plot_coefficients(coeffs, d / f"hilbert_{_safe(ex)}_p{p}.png", title=f"{ex}, char {p}")
    _emit(args, out, text, out["coefficients"], ["d1", "d2", "coefficient"])
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_oracle(args) -> int:
    ex, p = _need_example(args)
    D = args.max_degree or 3
    inst = instantiate(ex, p)
    s = assembled_series(ex, p)
    oc = compare_oracle(BraidedSpace.from_pair(inst.V, inst.W), s, D)
    out = {"example": ex, "characteristic": p, "provenance": inst.provenance(), **oc}
    lines = [f"{ex} (char {p}) oracle to total degree {D}"]
    for b in oc["blocks"]:
        lines.append(f"  {tuple(b['bidegree'])}: oracle {b['oracle']:>5}  series {b['series']:>5}"
                     f"  {'ok' if b['match'] else 'MISMATCH'}")
    lines.append(f"{'all blocks match' if oc['match'] else 'mismatch'} ({oc['seconds']} s)"
                 if not args.no_timing else ("all blocks match" if oc["match"] else "mismatch"))
    d = _figdir(args)
    if d:
        marks = {tuple(b["bidegree"]): b["match"] for b in oc["blocks"]}
        rp.plot_coefficients(s.expand(D), d / f"oracle_{_safe(ex)}_p{p}_D{D}.png",
                             title=f"{ex}, char {p}, oracle to degree {D}", oracle=marks)
    rows = [{"d1": b["bidegree"][0], "d2": b["bidegree"][1], "oracle": b["oracle"],
             "series": b["series"], "match": b["match"]} for b in oc["blocks"]]
    _emit(args, out, "\n".join(lines), rows, ["d1", "d2", "oracle", "series", "match"])
    return EXIT_OK if oc["match"] else EXIT_MISMATCH


def cmd_yclass(args) -> int:
    p = 0 if args.char is None else args.char
    if not yclass_applies(args.yclass, p):
        raise UsageError(f"class {args.yclass} does not occur in characteristic {p}")
    r = verify_yclass(args.yclass, p, max_degree=args.max_degree, timing=not args.no_timing)
    text = (f"{r['class']} (char {p}): series {r['series']}, dimension {r['dimension']}\n"
            f"oracle   {r['oracle']}\nexpected {r['expected']}\n"
            f"{'pass' if r['passed'] else 'FAIL'}"
            + (" (through the top degree)" if r["complete"] else " (truncated)"))
    rows = [{"degree": d, "oracle": a, "expected": b}
            for d, (a, b) in enumerate(zip(r["oracle"], r["expected"]))]
    _emit(args, r, text, rows, ["degree", "oracle", "expected"])
    return EXIT_OK if r["passed"] else EXIT_MISMATCH


COMMANDS = {"verify-table": cmd_verify_table, "pair": cmd_pair, "reflect": cmd_reflect,
            "roots": cmd_roots, "hilbert": cmd_hilbert, "oracle": cmd_oracle,
            "yclass": cmd_yclass}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (CapExceeded, ObjectCapExceeded, OracleBudgetExceeded) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
