"""Command-line front-end.

    strata describe FILE                 dims, Cartan matrix, quiver summary
    strata check FILE [--side ...]       stratification verdicts
    strata essential-order FILE          the coarsest order with the same data
    strata idempotent FILE --e L1,L2     compatibility battery
    strata corner FILE --e ...           corner algebra (exported inline)
    strata quotient FILE --e ...         idempotent quotient (exported inline)
    strata borel FILE [--subalgebra N] [--depth n] [--idempotent L]
    strata vmatrix FILE | --type T | --tables F
    strata ell     FILE | --type T | --tables F
    strata verify-paper [--filter S]     the bundled acceptance battery

Every command accepts --json for machine output.  Reports are deterministic:
the iso-search seed, Ext truncation depth and library version are recorded in
the settings block.  STRATA_NMAX overrides the Ext depth.  Exit codes:
0 pass, 1 assertion failure, 2 input error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .errors import InputError, StrataError
from .kernel.backend import backend_name
from .modules import ISO_HEIGHT, ISO_SEED, ISO_TRIALS, comp_mult, projective
from .specfile import dump, export_algebra, load_spec_file
from .strat import NO, UNDET, YES, strat_datum, poset_search

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


def _nmax():
    try:
        return int(os.environ.get("STRATA_NMAX", "5"))
    except ValueError:
        raise InputError("STRATA_NMAX must be an integer")


def _settings():
    return {
        "version": __version__,
        "n_max": _nmax(),
        "iso_seed": ISO_SEED,
        "iso_trials": ISO_TRIALS,
        "iso_coefficient_height": ISO_HEIGHT,
        "backend": backend_name(),
    }


class Report:
    def __init__(self, command):
        self.command = command
        self.body = {}
        self.summary = []
        self.verdict = "pass"

    def line(self, text):
        self.summary.append(text)

    def fail(self):
        self.verdict = "fail"

    def inconclusive(self):
        if self.verdict == "pass":
            self.verdict = "inconclusive"

    def exit_code(self):
        return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}[self.verdict]

    def emit(self, as_json):
        if as_json:
            doc = {
                "command": self.command,
                "settings": _settings(),
                "verdict": self.verdict,
                **self.body,
            }
            print(dump(doc))
        else:
            for line in self.summary:
                print(line)
            print(f"verdict: {self.verdict}")
        return self.exit_code()


def _load(path):
    try:
        return load_spec_file(path)
    except FileNotFoundError as exc:
        raise InputError(f"no such spec file: {path}") from exc


def _idempotent_from_arg(A, arg):
    picks = []
    labels = []
    for tok in str(arg).split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok.startswith("#"):
            picks.append(int(tok[1:]))
        else:
            labels.append(tok)
    vec = A.zero_vec()
    f = A.field
    if labels:
        lv = A.idempotent_sum_for_labels(labels)
        vec = tuple(f.add(a, b) for a, b in zip(vec, lv))
    if picks:
        pv = A.sum_idempotents(picks)
        vec = tuple(f.add(a, b) for a, b in zip(vec, pv))
    return vec


def cmd_describe(args):
    sd = _load(args.file)
    A, poset = sd.algebra, sd.poset
    rep = Report("describe")
    cartan = [[comp_mult(projective(A, j), i) for j in A.labels] for i in A.labels]
    rep.body["dim"] = A.dim
    rep.body["labels"] = list(A.labels)
    rep.body["basis"] = list(A.basis_names)
    rep.body["projective_dims"] = {i: projective(A, i).dim for i in A.labels}
    rep.body["cartan_rows_are_simples"] = cartan
    rep.body["order"] = poset.to_json()
    rep.line(f"dimension {A.dim}, labels {list(A.labels)}")
    rep.line(f"Cartan matrix (entry [i][j] = multiplicity of simple i in projective j):")
    for i, row in zip(A.labels, cartan):
        rep.line(f"  {i}: {row}")
    if A.presentation is not None:
        p = A.presentation
        rep.body["quiver"] = p.to_json()
        rep.line(f"quiver: {len(p.vertices)} vertices, {len(p.arrows)} arrows, "
                 f"{len(p.relations)} relations, bound {p.max_path_length}")
    if sd.meta:
        rep.body["meta"] = sd.meta
    return rep


def cmd_check(args):
    sd = _load(args.file)
    A, poset = sd.algebra, sd.poset
    rep = Report("check")
    if args.all_orders:
        results = poset_search(A)
        rows = []
        for p, v in results:
            rows.append({"order": p.to_json()["pairs"], **v})
        rep.body["orders"] = rows
        good = sum(1 for r in rows if r["left"] == YES or r["right"] == YES)
        rep.line(f"{len(rows)} posets, {good} stratifying")
        if any(UNDET in (r["left"], r["right"]) for r in rows):
            rep.inconclusive()
        return rep
    data = strat_datum(A, poset)
    left, _ = data.left_stratified()
    right, _ = data.right_stratified()
    qh = data.quasi_hereditary()
    rep.body["report"] = data.report_json()
    rep.line(f"left standardly stratified: {left}")
    rep.line(f"right standardly stratified: {right}")
    rep.line(f"quasi-hereditary: {qh}")
    side = args.side or "left"
    headline = left if side == "left" else right
    if headline == UNDET:
        rep.inconclusive()
    elif headline == NO:
        rep.fail()
    return rep


def cmd_essential_order(args):
    sd = _load(args.file)
    data = strat_datum(sd.algebra, sd.poset)
    rep = Report("essential-order")
    ess = data.essential_order()
    rep.body["essential_order"] = ess.to_json()
    rep.body["input_refines_essential"] = sd.poset.refines(ess)
    rep.line(f"essential order covers: {ess.cover_pairs()}")
    left, _ = data.left_stratified()
    if left != YES:
        rep.line("warning: input not verified left standardly stratified; order is advisory")
        rep.inconclusive()
    return rep


def cmd_idempotent(args):
    from .compat import compatibility_battery

    sd = _load(args.file)
    A, poset = sd.algebra, sd.poset
    e = _idempotent_from_arg(A, args.e)
    rep = Report("idempotent")
    report = compatibility_battery(A, poset, e)
    rep.body["battery"] = report.to_json()
    rep.line(f"support: {list(report.support)}")
    for k in sorted(report.conds):
        rep.line(f"condition {k}: {report.conds[k]}")
    rep.line(f"implication diagram consistent: {report.diagram_consistent}")
    if report.inconclusive:
        rep.inconclusive()
    if not report.diagram_consistent:
        rep.fail()
    return rep


def cmd_corner(args):
    sd = _load(args.file)
    A = sd.algebra
    e = _idempotent_from_arg(A, args.e)
    corner, emb = A.corner(e)
    sub = poset_restrict_for(sd, corner)
    rep = Report("corner")
    rep.body["dim"] = corner.dim
    rep.body["labels"] = list(corner.labels)
    rep.body["spec"] = export_algebra(corner, sub)
    rep.body["embedding"] = emb.to_json()
    rep.line(f"corner dimension {corner.dim}, labels {list(corner.labels)}")
    return rep


def cmd_quotient(args):
    sd = _load(args.file)
    A = sd.algebra
    e = _idempotent_from_arg(A, args.e)
    quot, proj = A.quotient_by_idempotent_ideal(e)
    sub = poset_restrict_for(sd, quot)
    rep = Report("quotient")
    rep.body["dim"] = quot.dim
    rep.body["labels"] = list(quot.labels)
    rep.body["spec"] = export_algebra(quot, sub)
    rep.body["projection"] = proj.to_json()
    rep.line(f"quotient dimension {quot.dim}, labels {list(quot.labels)}")
    return rep


def poset_restrict_for(sd, derived):
    return sd.poset.restrict(derived.labels)


def cmd_borel(args):
    from .borel import (
        BorelEmbedding,
        check_exact_borel,
        check_regular,
        inherited_borels,
        normality_certificate,
        restriction_identity,
    )

    sd = _load(args.file)
    A, poset = sd.algebra, sd.poset
    name = args.subalgebra or (next(iter(sd.subalgebras)) if sd.subalgebras else None)
    if name is None or name not in sd.subalgebras:
        raise InputError(f"spec file has no subalgebra named {name!r}")
    idem, gens = sd.subalgebras[name]
    emb = BorelEmbedding.from_generators(A, poset, idem, gens)
    rep = Report("borel")
    n_max = args.depth or _nmax()
    report = check_exact_borel(emb)
    rep.body["subalgebra"] = {"name": name, "dim": emb.B.dim}
    rep.body["axioms"] = report.to_json()
    rep.line(f"subalgebra {name}: dim {emb.B.dim}")
    rep.line(f"exact splitting subalgebra: {report.is_exact_borel}")
    if not report.is_exact_borel:
        rep.fail()
        return rep
    reg = check_regular(emb, n_max, report=report)
    rep.body["regularity"] = {k: v for k, v in reg.items() if k != "cells"}
    rep.body["regularity"]["cells"] = {
        f"{i},{j},{n}": v for (i, j, n), v in reg["cells"].items()
    }
    rep.line(f"regular through degree {n_max}: {reg['regular']}"
             + (" (unconditional)" if reg["unconditional"] else " (truncated)"))
    ri = restriction_identity(emb)
    rep.body["restriction_identity"] = ri
    rep.line(f"restriction identity: {ri}")
    nc = normality_certificate(emb)
    rep.body["normality"] = {k: (v.to_json() if hasattr(v, "to_json") else v) for k, v in nc.items()}
    rep.line(f"normal splitting: {nc['status']}")
    if args.idempotent:
        e_prime = _idempotent_from_arg(emb.B, args.idempotent)
        out = inherited_borels(emb, e_prime, n_max=n_max, diagnostic=args.diagnostic,
                               ambient_report=report)
        serial = {}
        for k, v in out.items():
            serial[k] = v.to_json() if hasattr(v, "to_json") else (
                {kk: (vv if not hasattr(vv, "to_json") else vv.to_json()) for kk, vv in v.items()}
                if isinstance(v, dict) else v)
        rep.body["inherited"] = serial
        rep.line(f"inherited at {args.idempotent}: corner "
                 f"{out.get('corner_borel').is_exact_borel if 'corner_borel' in out else 'n/a'}, "
                 f"quotient {out.get('quotient_borel').is_exact_borel if 'quotient_borel' in out else 'n/a'}")
    bad = [v for v in (ri.values()) if v != YES] + ([] if nc["status"] == YES else [nc["status"]])
    if any(v == UNDET for v in bad):
        rep.inconclusive()
    elif bad:
        rep.fail()
    return rep


def _vmatrix_for(args):
    from .vmult import MultTables, builtin_tables, v_matrix_from_algebra, v_matrix_from_tables

    if args.type:
        return v_matrix_from_tables(builtin_tables(args.type))
    if args.tables:
        with open(args.tables, "r", encoding="utf-8") as fh:
            tables = MultTables.from_json(json.load(fh))
        return v_matrix_from_tables(tables)
    if not args.file:
        raise InputError("vmatrix/ell need a spec file, --type, or --tables")
    sd = _load(args.file)
    return v_matrix_from_algebra(sd.algebra, sd.poset)


def cmd_vmatrix(args):
    rep = Report("vmatrix")
    V = _vmatrix_for(args)
    rep.body["vmatrix"] = V.to_json()
    rep.line(f"labels: {list(V.labels)}")
    for i, row in zip(V.labels, V.as_grid()):
        rep.line(f"  {i}: {row}")
    rep.line(f"first subdiagonal (informational): {V.first_subdiagonal()}")
    return rep


def cmd_ell(args):
    from .vmult import ell, regular_borel_existence

    rep = Report("ell")
    V = _vmatrix_for(args)
    e = ell(V)
    rep.body["ell"] = e
    rep.line(f"multiplicities: {e}")
    if args.dims:
        dims = {}
        for tok in args.dims.split(","):
            k, _, v = tok.partition("=")
            dims[k.strip()] = int(v)
        x = regular_borel_existence(V, dims)
        rep.body["existence"] = x
        rep.line(f"positive solution: {x}")
        if x is None:
            rep.fail()
    return rep


def cmd_verify(args):
    from .acceptance import run_all

    rep = Report("verify-paper")
    crits = run_all(args.filter)
    if not crits:
        raise InputError(f"filter {args.filter!r} matches no criterion")
    results = []
    for crit in crits:
        status = "PASS" if crit.passed else "FAIL"
        rep.line(f"{status} {crit.key}: {crit.title}")
        if not crit.passed:
            for n, ok, d in crit.checks:
                if not ok:
                    rep.line(f"    failed: {n} {d}")
            rep.fail()
        results.append(crit.to_json())
    rep.body["criteria"] = results
    npass = sum(1 for c in crits if c.passed)
    rep.line(f"{npass}/{len(crits)} criteria passed")
    return rep


def build_parser():
    p = argparse.ArgumentParser(prog="strata",
                                description="exact stratification data for finite-dimensional algebras")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("describe");
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_describe)

    sp = sub.add_parser("check")
    sp.add_argument("file")
    sp.add_argument("--side", choices=["left", "right"])
    sp.add_argument("--all-orders", action="store_true")
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("essential-order")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_essential_order)

    sp = sub.add_parser("idempotent")
    sp.add_argument("file")
    sp.add_argument("--e", required=True, help="comma list of labels (or #index)")
    sp.set_defaults(fn=cmd_idempotent)

    sp = sub.add_parser("corner")
    sp.add_argument("file")
    sp.add_argument("--e", required=True)
    sp.set_defaults(fn=cmd_corner)

    sp = sub.add_parser("quotient")
    sp.add_argument("file")
    sp.add_argument("--e", required=True)
    sp.set_defaults(fn=cmd_quotient)

    sp = sub.add_parser("borel")
    sp.add_argument("file")
    sp.add_argument("--subalgebra")
    sp.add_argument("--depth", type=int)
    sp.add_argument("--idempotent")
    sp.add_argument("--diagnostic", action="store_true")
    sp.set_defaults(fn=cmd_borel)

    for name in ("vmatrix", "ell"):
        sp = sub.add_parser(name)
        sp.add_argument("file", nargs="?")
        sp.add_argument("--type")
        sp.add_argument("--tables")
        if name == "ell":
            sp.add_argument("--dims", help="label=dim comma list for the existence solve")
        sp.set_defaults(fn=cmd_vmatrix if name == "vmatrix" else cmd_ell)

    sp = sub.add_parser("verify-paper")
    sp.add_argument("--filter")
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep = args.fn(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except StrataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return rep.emit(args.json)


if __name__ == "__main__":
    sys.exit(main())
