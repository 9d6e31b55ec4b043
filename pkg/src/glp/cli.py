"""Command-line front end.

Every subcommand is a thin adapter over library calls that returns a
:class:`Report` (plain text) and a JSON document (``--json``).  Exit codes:
0 when every check passes, 1 when a check fails, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

from . import __version__
from .catalog import build_construction, catalog
from .dynkin import algebra_dim, ascii_diagram
from .errors import GLPError
from .exactspace import AmbientSpace, fmt
from .gcm import max_denominator, solve_single_marker
from .gla import (
    Effectiveness,
    characteristic_element,
    characteristic_prolongation,
    decomposability_check,
    effectiveness_class,
    free_lie_dims,
    from_matrices,
    grading_violations,
    is_representation,
    nilradical_degree0,
    radical,
    regrade_module,
    structural_checks,
    verify_levi,
    witt_dims,
)
from .linalg import is_zero
from .report import Report, check
from .rootsys import RootSystem, build_root_system, cartan_matrix, classify_system, generate_roots, lowest_conjugate
from .serialize import (
    algebra_from_json,
    algebra_to_json,
    dumps,
    matrix_from_json,
    matrix_to_json,
    schema,
    vectors_from_json,
    vectors_to_json,
)
from .weightspec import parse_weight_coeffs

Result = tuple[Report, Any]


def _vec(v: Sequence[Fraction]) -> str:
    return "(" + ", ".join(fmt(x) for x in v) + ")"


def _dims_line(dims: dict[int, int]) -> str:
    if not dims:
        return "dims: none"
    lo, hi = min(dims), max(dims)
    return f"dims: q={lo}..{hi}: (" + ", ".join(str(dims[q]) for q in range(lo, hi + 1)) + f"), total {sum(dims.values())}"


def _read_json(path: str) -> tuple[Any, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GLPError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text), text
    except json.JSONDecodeError as exc:
        raise GLPError(f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from exc


# catalog ------------------------------------------------------------------------


def cmd_catalog_list(args: argparse.Namespace) -> Result:
    rep = Report("glp catalog list", "catalog")
    doc = []
    for c in catalog():
        sizes = ", ".join(f"{q}:{n}" for q, n in sorted(c.expected_slice_sizes.items()))
        base = "+".join(f"{f}{r}" for f, r in c.base)
        rep.body.append(f"{c.name:24s} {c.expected_type:4s} base {base:6s} slices {{{sizes}}}")
        doc.append({"name": c.name, "family": c.family, "type": c.expected_type, "base": base,
                    "slice_sizes": {str(q): n for q, n in sorted(c.expected_slice_sizes.items())}, "depth": c.expected_depth})
    return rep, {"schema": schema("catalog"), "entries": doc}


def build_report(name: str) -> Result:
    res = build_construction(name)
    c = res.construction
    base = "+".join(f"{f}{r}" for f, r in c.base)
    rep = Report(f"glp catalog build {c.name}", f"catalog build {c.name}")
    dims = res.graded.dims()
    gram = "[" + "; ".join(" ".join(fmt(x) for x in row) for row in c.marker_gram) + "]"
    rep.body += [
        f"construction: {c.name}",
        f"base: {base}  markers: {c.k}  marker gram: {gram}",
        f"type: {res.type_label}  extended Cartan matrix: {res.gcm_class}",
        "slice sizes: " + ", ".join(f"q={q}: {len(v)}" for q, v in res.listed.items()),
        _dims_line(dims),
    ]
    rep.body += [f"flag: {f}" for f in res.flags]
    crossed = [i for i, d in enumerate(res.degree_on_simple) if d]
    rep.diagram = ascii_diagram(res.gcm.entries, crossed)
    rep.checks = list(res.checks)
    doc = {
        "schema": schema("construction"),
        "name": c.name,
        "type": res.type_label,
        "gcm_class": str(res.gcm_class),
        "slice_sizes": {str(q): len(v) for q, v in res.listed.items()},
        "dims": {str(q): n for q, n in dims.items()},
        "gcm": [list(r) for r in res.gcm.entries],
        "flags": list(res.flags),
        "checks": [{"name": k.name, "expected": k.expected, "actual": k.actual, "passed": k.passed} for k in res.checks],
        "ok": res.ok,
    }
    return rep, doc


def cmd_catalog_build(args: argparse.Namespace) -> Result:
    if args.all == (args.name is not None):
        raise GLPError("give a construction name or --all")
    if not args.all:
        return build_report(args.name)
    rep = Report("glp catalog build --all", "catalog build --all")
    docs = []
    for c in catalog():
        sub, doc = build_report(c.name)
        rep.body += sub.render().rstrip("\n").splitlines() + [""]
        rep.checks.append(check(f"{c.name} all checks", True, sub.ok))
        docs.append(doc)
    return rep, {"schema": schema("construction-list"), "constructions": docs}


# marker -------------------------------------------------------------------------


def cmd_marker_solve(args: argparse.Namespace) -> Result:
    family = args.family.upper()
    rs = build_root_system(family, args.rank)
    coeffs = parse_weight_coeffs(args.weight, family, args.rank)
    lam = rs.weight(coeffs)
    low = lowest_conjugate(rs, lam)
    T = args.max_denom if args.max_denom is not None else max_denominator()
    sols = solve_single_marker(rs, lam, T)
    rep = Report(
        f"glp marker solve --family {family} --rank {args.rank} --weight {args.weight}",
        f"marker {family}{args.rank} {coeffs} T={T}",
    )
    rep.body += [
        f"base: {rs.type_label}  weight: {args.weight} = {list(coeffs)}",
        f"lowest weight: {_vec(low)}",
        f"candidates (sweep bound {T}):",
    ]
    finite = [s for s in sols if s.classification.kind == "Finite"]
    for s in sols:
        rep.body.append(f"  |alpha|^2 = {fmt(s.norm):6s} b(eps,eps) = {fmt(s.b_eps):8s} {s.classification}")
    for s in finite:
        roots = generate_roots(s.space, s.simple_roots)
        label = classify_system(roots, s.space).type_label
        rep.checks.append(check(f"|alpha|^2 = {fmt(s.norm)} generates a root system of the reported type", s.classification.type_label, label))
    if finite:
        rep.diagram = ascii_diagram(finite[0].gcm.entries, [rs.rank])
    doc = {
        "schema": schema("marker-solutions"),
        "base": rs.type_label,
        "weight": list(coeffs),
        "lowest_weight": [fmt(x) for x in low],
        "solutions": [
            {"norm": fmt(s.norm), "b_eps": fmt(s.b_eps), "class": s.classification.kind, "type": s.classification.type_label,
             "gcm": [list(r) for r in s.gcm.entries]}
            for s in sols
        ],
    }
    return rep, doc


# classify -----------------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> Result:
    data, text = _read_json(args.roots)
    if isinstance(data, dict):
        if data.get("schema") not in (None, schema("roots")):
            raise GLPError(f"expected schema {schema('roots')!r}")
        roots = data.get("roots")
        gram = data.get("gram")
    else:
        roots, gram = data, None
    if not isinstance(roots, list) or not roots:
        raise GLPError("roots must be a nonempty list of coordinate lists")
    dim = len(roots[0])
    # a custom form is carried entirely by the marker block
    space = AmbientSpace(0, tuple(tuple(r) for r in matrix_from_json(gram))) if gram is not None else AmbientSpace.euclidean(dim)
    rs = classify_system(roots, space)
    rep = Report(f"glp classify {args.roots}", text)
    rep.body += [
        f"type: {rs.type_label}",
        f"roots: {len(rs.roots)}  rank: {rs.rank}",
        "simple roots: " + " ".join(_vec(a) for a in rs.simple_roots),
    ]
    rep.diagram = ascii_diagram(cartan_matrix(rs))
    rep.checks.append(check("simple roots regenerate the input", True, generate_roots(rs.space, rs.simple_roots) == frozenset(rs.roots)))
    rep.checks.append(check("root count for the type", algebra_dim(rs.type_label) - rs.rank, len(rs.roots)))
    return rep, {"schema": schema("classification"), "type": rs.type_label, "rank": rs.rank, "roots": len(rs.roots),
                 "simple_roots": [[fmt(x) for x in a] for a in rs.simple_roots]}


# algebra ------------------------------------------------------------------------


def cmd_algebra_analyze(args: argparse.Namespace) -> Result:
    data, text = _read_json(args.algebra)
    g = algebra_from_json(data)
    rep = Report(f"glp algebra analyze {args.algebra}", text)
    rep.body += [f"dimension: {g.dim}", _dims_line(g.graded_dims()), f"depth: {g.depth()}  height: {g.height()}"]
    everything = not (args.effectiveness or args.radical or args.reductive_type or args.decomposable)
    doc: dict[str, Any] = {"schema": schema("analysis"), "dim": g.dim, "dims": {str(q): n for q, n in g.graded_dims().items()}}
    for name, ok in structural_checks(g).items():
        rep.checks.append(check(name, True, ok))
    eff = effectiveness_class(g)
    if everything or args.effectiveness:
        rep.body.append(f"effectiveness: {eff}")
        doc["effectiveness"] = str(eff)
    if everything or args.radical:
        r = radical(g)
        rep.body.append(f"radical: dim {len(r)}")
        doc["radical"] = vectors_to_json(r, g.dim)
    almost = eff is not Effectiveness.NONE
    if everything or args.reductive_type:
        if almost:
            n0 = nilradical_degree0(g)
            rep.body.append(f"n_0: dim {len(n0)}  reductive type: {'yes' if not n0 else 'no'}")
            doc["reductive_type"] = not n0
        else:
            rep.body.append("reductive type: n/a (not almost effective)")
            doc["reductive_type"] = None
    if everything or args.decomposable:
        if almost:
            dec = decomposability_check(g)
            rep.body.append(f"ad(g_0) decomposable on m: {'yes' if dec else 'no'}")
            doc["decomposable"] = dec
        else:
            rep.body.append("decomposable: n/a (not almost effective)")
            doc["decomposable"] = None
    if args.levi:
        sdata, stext = _read_json(args.levi)
        vecs = sdata.get("vectors") if isinstance(sdata, dict) else sdata
        s = vectors_from_json(vecs, g.dim)
        rep.inputs += stext
        rep.checks.append(check("levi", True, verify_levi(g, s)))
    doc["checks"] = {c.name: c.passed for c in rep.checks}
    return rep, doc


def _grading_matrix(spec: Any, n: int) -> list[list[Fraction]]:
    if isinstance(spec, list) and spec and not isinstance(spec[0], list):
        if len(spec) != n:
            raise GLPError("diagonal grading has the wrong length")
        diag = matrix_from_json([spec])[0]
        return [[diag[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    return matrix_from_json(spec)


def cmd_algebra_from_matrix(args: argparse.Namespace) -> Result:
    data, text = _read_json(args.spec)
    if not isinstance(data, dict) or "generators" not in data or "grading" not in data:
        raise GLPError("spec needs 'generators' and 'grading'")
    gens = [matrix_from_json(m) for m in data["generators"]]
    if not gens:
        raise GLPError("at least one generator is required")
    g = from_matrices(gens, _grading_matrix(data["grading"], len(gens[0])))
    rep = Report(f"glp algebra from-matrix {args.spec}", text)
    rep.body += [f"dimension: {g.dim}", _dims_line(g.graded_dims())]
    rep.body += [f"  {name}: degree {d}" for name, d in zip(g.basis_names, g.degrees)]
    for name, ok in structural_checks(g).items():
        rep.checks.append(check(name, True, ok))
    doc = algebra_to_json(g)
    if args.out:
        Path(args.out).write_text(dumps(doc), encoding="utf-8")
        rep.body.append(f"algebra written to {args.out}")
    return rep, doc


# freelie ------------------------------------------------------------------------


def _parse_gens(spec: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in spec.split(","):
        m = re.fullmatch(r"\s*(-?\d+)\s*:\s*(\d+)\s*", part)
        if not m:
            raise GLPError(f"generator spec {part!r} is not deg:dim")
        out[int(m.group(1))] = out.get(int(m.group(1)), 0) + int(m.group(2))
    return out


def cmd_freelie(args: argparse.Namespace) -> Result:
    gens = _parse_gens(args.gens)
    dims = free_lie_dims(gens, args.depth)
    rep = Report(f"glp freelie --gens {args.gens} --depth {args.depth}", f"{sorted(gens.items())} {args.depth}")
    rep.body += [f"f_{{{q}}}: {n}" for q, n in sorted(dims.items(), reverse=True)]
    rep.checks.append(check("Hall basis count equals Witt formula", witt_dims(gens, args.depth), dims))
    return rep, {"schema": schema("freelie"), "generators": {str(k): v for k, v in gens.items()},
                 "dims": {str(q): n for q, n in sorted(dims.items(), reverse=True)}}


# regrade ------------------------------------------------------------------------


def cmd_regrade(args: argparse.Namespace) -> Result:
    adata, atext = _read_json(args.algebra)
    mdata, mtext = _read_json(args.module)
    g = algebra_from_json(adata)
    if not isinstance(mdata, dict) or "action" not in mdata:
        raise GLPError("module document needs an 'action' list")
    action = [matrix_from_json(m) for m in mdata["action"]]
    prolonged = False
    if characteristic_element(g) is None:
        if "grading_action" not in mdata:
            raise GLPError("algebra is not characteristic; supply 'grading_action' for the adjoined element")
        g = characteristic_prolongation(g)
        action.append(matrix_from_json(mdata["grading_action"]))
        prolonged = True
    mod = regrade_module(g, action, allow_multiple_classes=args.allow_multiple_classes)
    rep = Report(f"glp regrade {args.algebra} {args.module}", atext + mtext)
    rep.body += [f"module dimension: {mod.dim}", "characteristic prolongation used" if prolonged else "algebra is characteristic",
                 "V " + _dims_line(mod.graded_dims())]
    rep.checks.append(check("action is a representation", True, is_representation(g, action)))
    rep.checks.append(check("rho(g_p) V_q in V_(p+q) violations", 0, len(grading_violations(g, mod))))
    doc = {"schema": schema("graded-module"), "dim": mod.dim, "degrees": list(mod.degrees),
           "basis": matrix_to_json(mod.basis) if mod.basis else [], "prolonged": prolonged}
    return rep, doc


# entry point --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="glp", description="Graded Lie algebras from root systems with markers.")
    p.add_argument("--version", action="version", version=f"glp {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def leaf(parser: argparse.ArgumentParser, fn: Callable[[argparse.Namespace], Result]) -> argparse.ArgumentParser:
        parser.add_argument("--json", action="store_true", help="machine-readable output")
        parser.add_argument("--report", action="store_true", help="plain-text report (default)")
        parser.set_defaults(fn=fn)
        return parser

    cat = sub.add_parser("catalog", help="construction catalog").add_subparsers(dest="action", required=True)
    leaf(cat.add_parser("list", help="list catalog entries"), cmd_catalog_list)
    b = leaf(cat.add_parser("build", help="build and verify a construction"), cmd_catalog_build)
    b.add_argument("name", nargs="?")
    b.add_argument("--all", action="store_true", help="build every entry")

    mk = sub.add_parser("marker", help="marker solver").add_subparsers(dest="action", required=True)
    s = leaf(mk.add_parser("solve", help="admissible marker lengths for one module"), cmd_marker_solve)
    s.add_argument("--family", required=True)
    s.add_argument("--rank", required=True, type=int)
    s.add_argument("--weight", required=True, help="e.g. omega3, 2omega1, sigma, 1,0,0")
    s.add_argument("--max-denom", type=int, default=None, help="sweep bound T (default GLP_MAX_MARKER_DENOM or 24)")

    c = leaf(sub.add_parser("classify", help="classify a root set from JSON"), cmd_classify)
    c.add_argument("roots")

    alg = sub.add_parser("algebra", help="graded Lie algebra tools").add_subparsers(dest="action", required=True)
    a = leaf(alg.add_parser("analyze", help="structural analysis of an algebra document"), cmd_algebra_analyze)
    a.add_argument("algebra")
    a.add_argument("--effectiveness", action="store_true")
    a.add_argument("--radical", action="store_true")
    a.add_argument("--reductive-type", action="store_true")
    a.add_argument("--decomposable", action="store_true")
    a.add_argument("--levi", metavar="SUBSPACE_JSON")
    fm = leaf(alg.add_parser("from-matrix", help="Lie closure of matrices graded by a diagonal element"), cmd_algebra_from_matrix)
    fm.add_argument("spec")
    fm.add_argument("--out", help="also write the algebra document here")

    f = leaf(sub.add_parser("freelie", help="graded dimensions of a free Lie algebra"), cmd_freelie)
    f.add_argument("--gens", required=True, help="deg:dim,... with negative degrees")
    f.add_argument("--depth", required=True, type=int)

    r = leaf(sub.add_parser("regrade", help="grade a module by the characteristic element"), cmd_regrade)
    r.add_argument("algebra")
    r.add_argument("module")
    r.add_argument("--allow-multiple-classes", action="store_true")
    return p


def _normalise_argv(argv: Sequence[str]) -> list[str]:
    """Glue ``--gens -1:2`` into ``--gens=-1:2`` so argparse does not read an option."""
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a == "--gens":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--gens={nxt}")
        else:
            out.append(a)
    return out


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_normalise_argv(list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rep, doc = args.fn(args)
    except GLPError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    out.write(dumps(doc) if args.json else rep.render())
    return 0 if rep.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
