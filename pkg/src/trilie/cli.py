"""Command line front end.

Exit codes: 0 when the checked property holds, 1 when it fails or a
construction's preconditions are not met, 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import exactnum as xn
from .fileio import (
    ParseError,
    algebra_to_dict,
    dumps,
    form_to_dict,
    load_algebra,
    load_form,
    load_map,
    matrix_to_dict,
    write_json,
)
from .kaehler import (
    aff_complex_product,
    check_complex_product,
    check_para_kaehler,
    check_pseudo_kaehler,
    complexify_pseudo_kaehler,
    levi_civita,
)
from .prelie import (
    PreLieRep,
    ThreePreLie,
    check_O_operator,
    check_invariant_form,
    check_prelie_axioms,
    dual_prelie_rep,
    semidirect_prelie,
    sub_adjacent,
)
from .report import DEFAULT_MAX_WITNESSES, witness_limit
from .reps import dual_representation, semidirect_product
from .search import (
    CandidateFamily,
    SearchLimitError,
    complex_structures,
    enumerate_complex,
    enumerate_products,
    pair_search,
    product_structures,
)
from .structures import classify_complex, classify_product, complexify
from .symplectic import check_manin_triple, check_phase_space, check_symplectic, phase_space
from .threelie import ThreeLieAlgebra, adjoint_rep, check_fundamental_identity, check_nijenhuis

OK, FAIL, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers


def _algebra(path, kind=None):
    obj = load_algebra(path)
    if kind is ThreeLieAlgebra and not isinstance(obj, ThreeLieAlgebra):
        raise UsageError(f"{path}: expected a threelie algebra file")
    if kind is ThreePreLie and not isinstance(obj, ThreePreLie):
        raise UsageError(f"{path}: expected a prelie algebra file")
    return obj


def _map(path, g):
    M = load_map(path)
    if M.shape != (g.dim, g.dim):
        raise UsageError(f"{path}: matrix is {M.shape[0]}x{M.shape[1]} but the algebra has dimension {g.dim}")
    if g.field == xn.RATIONAL and not xn.is_real_array(M):
        raise UsageError(f"{path}: imaginary entries for a rational algebra")
    return M


def _form(path, g, kind=None):
    F = load_form(path)
    if F.dim != g.dim:
        raise UsageError(f"{path}: form is {F.dim}x{F.dim} but the algebra has dimension {g.dim}")
    if kind is not None and F.kind != kind:
        raise UsageError(f"{path}: expected a {kind} form")
    return F


def _flag_line(flags: dict, order) -> str:
    on = [k for k in order if flags.get(k)]
    return " ".join(on) if on else "none"


INFORMATIONAL = ("strict", "abelian", "strong_abelian", "perfect")


def _decisive(identity: str) -> bool:
    """False for the optional sub-classification flags, whose failure is not a verdict."""
    return identity.rsplit(": ", 1)[-1] not in INFORMATIONAL


def describe_map(M, basis) -> str:
    """``diag(...)`` for diagonal maps, otherwise the images of the basis vectors."""
    M = xn.matrix(M)
    n = M.shape[0]
    if all(M[i, j] == 0 for i in range(n) for j in range(n) if i != j):
        return "diag(" + ", ".join(xn.format_scalar(M[i, i]) for i in range(n)) + ")"
    parts = []
    for j in range(n):
        terms = []
        for i in range(n):
            v = M[i, j]
            if v == 0:
                continue
            s = xn.format_scalar(v)
            if s == "1":
                terms.append(basis[i])
            elif s == "-1":
                terms.append(f"-{basis[i]}")
            else:
                terms.append(f"({s}){basis[i]}")
        image = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        parts.append(f"{basis[j]}->{image}")
    return ", ".join(parts)


class Output:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.data = {}
        self.lines = []

    def emit(self):
        if self.fmt == "json":
            sys.stdout.write(dumps(self.data))
        else:
            sys.stdout.write("\n".join(self.lines) + "\n")


# ---------------------------------------------------------------------------
# validate


def cmd_validate(args, out: Output) -> int:
    obj = _algebra(args.algebra)
    rep = check_fundamental_identity(obj) if isinstance(obj, ThreeLieAlgebra) else check_prelie_axioms(obj)
    out.data = {"kind": "threelie" if isinstance(obj, ThreeLieAlgebra) else "prelie", "dimension": obj.dim, "report": rep.to_dict(obj.basis)}
    out.lines.append(rep.render(obj.basis))
    return OK if rep else FAIL


# ---------------------------------------------------------------------------
# classify

PRODUCT_ORDER = ("product", "strict", "abelian", "strong_abelian", "perfect", "paracomplex")
COMPLEX_ORDER = ("complex", "strict", "abelian", "strong_abelian", "perfect")


def _product_summary(pc) -> tuple[str, dict]:
    if pc.excluded:
        line = f"excluded: {pc.excluded}"
    elif not pc.almost:
        line = "not an almost product structure"
    elif not pc.product:
        line = "almost product, not integrable"
    else:
        line = _flag_line(pc.flags, PRODUCT_ORDER)
    data = {
        "flags": pc.flags,
        "excluded": pc.excluded,
        "decomposition": None if pc.plus is None else {"g+": pc.plus.dim, "g-": pc.minus.dim},
        "table_violations": pc.table_violations,
        "induced_prelie": None if pc.induced_prelie is None else algebra_to_dict(pc.induced_prelie),
    }
    return line, data


def _complex_summary(cc) -> tuple[str, dict]:
    if not cc.almost:
        line = "not an almost complex structure"
    elif not cc.complex:
        line = "almost complex, not integrable"
    else:
        line = _flag_line(cc.flags, COMPLEX_ORDER)
    data = {
        "flags": cc.flags,
        "decomposition": None if cc.plus_i is None else {"g_i": cc.plus_i.dim, "g_-i": cc.minus_i.dim},
        "table_violations": cc.table_violations,
        "induced_prelie": None if cc.induced_prelie is None else algebra_to_dict(cc.induced_prelie),
    }
    return line, data


def cmd_classify(args, out: Output) -> int:
    g = _algebra(args.algebra, ThreeLieAlgebra)
    M = _map(args.map, g)
    if args.kind == "product":
        pc = classify_product(g, M)
        line, data = _product_summary(pc)
        rep, ok = pc.report, pc.product
        out.lines.append(line)
        if pc.plus is not None:
            out.lines.append(f"g+ dimension {pc.plus.dim}, g- dimension {pc.minus.dim}")
    elif args.kind == "complex":
        if g.dim % 2:
            raise UsageError(f"odd dimension {g.dim} admits no complex structure")
        cc = classify_complex(g, M)
        line, data = _complex_summary(cc)
        rep, ok = cc.report, cc.complex
        out.lines.append(line)
        if cc.plus_i is not None:
            out.lines.append(f"g_i dimension {cc.plus_i.dim}, g_-i dimension {cc.minus_i.dim}")
    else:
        rep = check_nijenhuis(g, M)
        ok = rep.ok
        line = "nijenhuis" if ok else "not nijenhuis"
        data = {"flags": {"nijenhuis": ok}}
        out.lines.append(line)
    for v in data.get("table_violations", []):
        out.lines.append(f"table violation: {v}")
    out.lines.append(rep.render(g.basis, verdict=args.kind == "nijenhuis", show=_decisive))
    out.data = {"kind": args.kind, "summary": line, **data, "report": rep.to_dict(g.basis)}
    return OK if ok else FAIL


# ---------------------------------------------------------------------------
# construct


def _write(outdir, name, payload, written):
    path = os.path.join(outdir, name)
    write_json(path, payload)
    written.append(path)


def cmd_construct(args, out: Output) -> int:
    os.makedirs(args.output, exist_ok=True)
    written = []
    kind = args.kind
    inputs = args.inputs
    need = {"phase-space": 1, "semidirect": 1, "sub-adjacent": 1, "levi-civita": 2, "complexify": 1, "aff": 1}[kind]
    if len(inputs) != need:
        raise UsageError(f"construct {kind} takes {need} input file(s), got {len(inputs)}")
    try:
        if kind == "phase-space":
            A = _algebra(inputs[0], ThreePreLie)
            g, w = phase_space(A)
            _write(args.output, "algebra.json", algebra_to_dict(g), written)
            _write(args.output, "omega.json", form_to_dict(w), written)
        elif kind == "semidirect":
            obj = _algebra(inputs[0])
            if isinstance(obj, ThreeLieAlgebra):
                r = adjoint_rep(obj)
                if args.dual:
                    r = dual_representation(r)
                result = semidirect_product(obj, r)
            else:
                pr = PreLieRep.regular(obj)
                if args.dual:
                    pr = dual_prelie_rep(pr)
                result = semidirect_prelie(pr)
            _write(args.output, "algebra.json", algebra_to_dict(result), written)
        elif kind == "sub-adjacent":
            A = _algebra(inputs[0], ThreePreLie)
            _write(args.output, "algebra.json", algebra_to_dict(sub_adjacent(A)), written)
        elif kind == "levi-civita":
            g = _algebra(inputs[0], ThreeLieAlgebra)
            S = _form(inputs[1], g, "symmetric")
            lc = levi_civita(g, S)
            _write(args.output, "nabla.json", algebra_to_dict(lc.as_prelie()), written)
        elif kind == "complexify":
            g = _algebra(inputs[0], ThreeLieAlgebra)
            if (args.omega is None) != (args.map is None):
                raise UsageError("complexify needs both --omega and --map, or neither")
            if args.omega is None:
                gc = complexify(g)
                _write(args.output, "algebra.json", algebra_to_dict(gc.algebra), written)
            else:
                gc, wc, E = complexify_pseudo_kaehler(g, _form(args.omega, g, "skew"), _map(args.map, g))
                _write(args.output, "algebra.json", algebra_to_dict(gc.algebra), written)
                _write(args.output, "omega.json", form_to_dict(wc), written)
                _write(args.output, "E.json", matrix_to_dict(E), written)
        elif kind == "aff":
            A = _algebra(inputs[0], ThreePreLie)
            g, J, E = aff_complex_product(A)
            _write(args.output, "algebra.json", algebra_to_dict(g), written)
            _write(args.output, "J.json", matrix_to_dict(J), written)
            _write(args.output, "E.json", matrix_to_dict(E), written)
    except (UsageError, ParseError):
        raise
    except ValueError as exc:
        out.data = {"kind": kind, "ok": False, "reason": str(exc), "written": written}
        out.lines.append(f"construct {kind} failed: {exc}")
        return FAIL
    out.data = {"kind": kind, "ok": True, "written": written}
    out.lines.extend(f"wrote {p}" for p in written)
    return OK


# ---------------------------------------------------------------------------
# check

CHECK_ARITY = {
    "symplectic": 2,
    "para-kahler": 3,
    "pseudo-kahler": 3,
    "complex-product": 3,
    "manin-triple": 2,
    "phase-space": 2,
    "o-operator": 2,
    "invariant-form": 2,
}


def _verdict_output(v, basis):
    data = {"flags": v.flags, "report": v.report.to_dict(basis)}
    if v.metric is not None:
        data["metric"] = matrix_to_dict(v.metric.matrix)["matrix"]
    if v.signature is not None:
        data["signature"] = {"positive": v.signature[0], "negative": v.signature[1]}
    return data


def cmd_check(args, out: Output) -> int:
    kind, inputs = args.kind, args.inputs
    if len(inputs) != CHECK_ARITY[kind]:
        raise UsageError(f"check {kind} takes {CHECK_ARITY[kind]} input files, got {len(inputs)}")
    lines = out.lines
    if kind in ("manin-triple", "invariant-form"):
        A = _algebra(inputs[0], ThreePreLie)
        basis = A.basis
        if kind == "manin-triple":
            if A.dim % 2:
                raise UsageError("a Manin triple needs even dimension")
            w = _form(inputs[1], A, "skew")
            if not w.is_nondegenerate():
                raise UsageError(f"{inputs[1]}: form is degenerate")
            rep = check_manin_triple(A, w)
            ok, data = rep.ok, {"report": rep.to_dict(basis)}
            lines.append(rep.render(basis))
        else:
            B = _form(inputs[1], A, "symmetric")
            if not B.is_nondegenerate():
                raise UsageError(f"{inputs[1]}: form is degenerate")
            ok = check_invariant_form(A, B)
            data = {}
            lines.append(f"invariant form: {'PASS' if ok else 'FAIL'}")
        out.data = {"kind": kind, "ok": ok, **data}
        return OK if ok else FAIL

    g = _algebra(inputs[0], ThreeLieAlgebra)
    basis = g.basis
    if kind == "symplectic":
        rep = check_symplectic(g, _form(inputs[1], g, "skew").matrix)
        ok, data = rep.ok, {"report": rep.to_dict(basis)}
        lines.append(rep.render(basis))
    elif kind == "phase-space":
        if g.dim % 2:
            raise UsageError("a phase space needs even dimension")
        v = check_phase_space(g, _form(inputs[1], g, "skew"))
        ok = v.is_phase_space
        data = {"is_phase_space": v.is_phase_space, "perfect": v.perfect, "report": v.report.to_dict(basis)}
        lines.append(f"phase space: {'yes' if v.is_phase_space else 'no'}, perfect: {'yes' if v.perfect else 'no'}")
        lines.append(v.report.render(basis))
    elif kind == "o-operator":
        rep = check_O_operator(g, adjoint_rep(g), _map(inputs[1], g))
        ok, data = rep.ok, {"report": rep.to_dict(basis)}
        lines.append(rep.render(basis))
    else:
        if kind == "complex-product":
            v = check_complex_product(g, _map(inputs[1], g), _map(inputs[2], g))
        else:
            w = _form(inputs[1], g, "skew")
            M = _map(inputs[2], g)
            if kind == "para-kahler":
                v = check_para_kaehler(g, w, M)
            else:
                if g.dim % 2:
                    raise UsageError("a complex structure needs even dimension")
                v = check_pseudo_kaehler(g, w, M)
        ok = v.ok
        data = _verdict_output(v, basis)
        lines.append(f"{kind}: {'PASS' if ok else 'FAIL'}")
        lines.append("flags: " + _flag_line(v.flags, tuple(v.flags)))
        if v.signature is not None:
            lines.append(f"metric signature: ({v.signature[0]}, {v.signature[1]})")
        lines.append(v.report.render(basis, verdict=False, show=_decisive))
    out.data = {"kind": kind, "ok": ok, **data}
    return OK if ok else FAIL


# ---------------------------------------------------------------------------
# search

FAMILIES = {
    "diagonal": CandidateFamily.diagonal,
    "signed-permutation": CandidateFamily.signed_permutations,
    "signed-involution": CandidateFamily.signed_involutions,
}


def cmd_search(args, out: Output) -> int:
    g = _algebra(args.algebra, ThreeLieAlgebra)
    family = FAMILIES[args.family]()
    omegas = [_form(p, g, "skew") for p in args.omega or []]
    try:
        if args.family == "signed-permutation":
            if g.dim % 2:
                raise UsageError(f"odd dimension {g.dim} admits no complex structure")
            results = enumerate_complex(g, family)
            found = complex_structures(results)
            noun = "complex structures"
        else:
            results = enumerate_products(g, family)
            found = product_structures(results)
            noun = "product structures"
    except SearchLimitError as exc:
        raise UsageError(str(exc)) from None
    shown = results if args.all else found
    rows = []
    for M, cls in shown:
        if args.family == "signed-permutation":
            line, _ = _complex_summary(cls)
        else:
            line, _ = _product_summary(cls)
        rows.append({"map": describe_map(M, g.basis), "matrix": matrix_to_dict(M)["matrix"], "flags": cls.flags, "summary": line})
    out.lines.append(f"{args.family} search: {len(results)} candidates, {len(found)} {noun}")
    out.lines.extend(f"{r['map']}: {r['summary']}" for r in rows)
    out.data = {"family": args.family, "candidates": len(results), "found": len(found), "rows": rows}
    if omegas:
        if args.family == "signed-permutation":
            pr = pair_search(g, [], found, omegas)
            pairs = [{"omega": k, "map": describe_map(found[j][0], g.basis)} for k, j in pr.pseudo_kaehler]
            label = "pseudo-Kähler"
        else:
            pr = pair_search(g, found, [], omegas)
            pairs = [{"omega": k, "map": describe_map(found[e][0], g.basis)} for k, e in pr.para_kaehler]
            label = "para-Kähler"
        out.data["pairs"] = {"kind": label, "items": pairs}
        out.lines.append(f"{label} pairs: {len(pairs)}")
        out.lines.extend(f"  omega #{p['omega'] + 1} with {p['map']}" for p in pairs)
    return OK


# ---------------------------------------------------------------------------
# entry point


def _common(parser, suppress: bool):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("text", "json"), default=default if suppress else "text")
    parser.add_argument(
        "--max-witnesses",
        type=int,
        default=default if suppress else DEFAULT_MAX_WITNESSES,
        metavar="N",
        help="witnesses kept per report",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trilie", description="Exact checks and constructions for 3-Lie algebras.")
    _common(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _common(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the axioms of an algebra file")
    p.add_argument("algebra")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", parents=[common], help="classify an endomorphism")
    p.add_argument("kind", choices=("product", "complex", "nijenhuis"))
    p.add_argument("algebra")
    p.add_argument("map")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct", parents=[common], help="build a new algebra and write it to files")
    p.add_argument("kind", choices=("phase-space", "semidirect", "sub-adjacent", "levi-civita", "complexify", "aff"))
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.add_argument("--dual", action="store_true", help="semidirect: use the dual representation")
    p.add_argument("--omega", help="complexify: symplectic form of a pseudo-Kähler pair")
    p.add_argument("--map", help="complexify: complex structure of a pseudo-Kähler pair")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", parents=[common], help="check a compatibility condition")
    p.add_argument("kind", choices=tuple(CHECK_ARITY))
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", parents=[common], help="enumerate and classify candidate maps")
    p.add_argument("family", choices=tuple(FAMILIES))
    p.add_argument("algebra")
    p.add_argument("--omega", action="append", help="symplectic form file; repeatable")
    p.add_argument("--all", action="store_true", help="list every candidate, not only the structures found")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else OK
    if args.max_witnesses < 0:
        print("error: --max-witnesses must be nonnegative", file=sys.stderr)
        return ERROR
    out = Output(args.format)
    try:
        with witness_limit(args.max_witnesses):
            code = args.func(args, out)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
