"""Command-line interface: parse input files, dispatch, emit JSON reports.

Exit codes: 0 success, 2 for a negative mathematical outcome
(NotInvertible, failed classification, failed comparison), 1 for malformed
input, unknown flags or incompatible rig/operation pairs.  Reports are
byte-identical for identical inputs and flags; timing is only attached
when --timing is passed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import matrixrig
from .category import endomorphism_report, is_skeletal, underlying_graph, validate_category
from .enriched import GradedGraphCategory, graded_mobius, graded_zeta, magnitude, segment_refinement_study
from .errors import (
    MalformedInput,
    MobiusKitError,
    NotInvertible,
    NotNerveFinite,
    UnsupportedRig,
)
from .fileio import load_category, load_functor, load_graph, load_matrix, load_metric
from .functoriality import (
    fibre_sizes,
    is_bijective_on_objects,
    is_mobius_category,
    is_ulf,
)
from .incidence import (
    coarse_mobius,
    coarse_zeta,
    euler_characteristic,
    fine_mobius,
    fine_zeta,
    nerve_euler_characteristic,
    patch_mobius,
    patch_zeta,
    sigma_to_coarse,
)
from .infinite import builtin, patchwise_mobius
from .rigs import INT, RAT, get_rig, render

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_NEGATIVE = 2

FIELD_OR_INT = ("rat", "int", "real")


def name_str(x) -> str:
    """Canonical printable form of an object / arrow name."""
    if isinstance(x, str):
        return x
    if isinstance(x, tuple):
        return "(" + ",".join(name_str(v) for v in x) + ")"
    return str(x)


def matrix_json(rig, matrix) -> list:
    return [[render(rig, v) for v in row] for row in matrix.rows]


def coarse_json(element) -> dict:
    return {
        "objects": [name_str(o) for o in element.objects],
        "matrix": matrix_json(element.rig, element.matrix),
    }


def fine_json(element) -> dict:
    return {name_str(k): render(element.rig, v) for k, v in element.values.items()}


def _resolve_rig(args, default: str, allowed=None):
    explicit = getattr(args, "rig", None)
    if explicit is None:
        explicit = os.environ.get("MOBIUSKIT_RIG") or None
    spec = explicit if explicit else default
    rig = get_rig(spec)
    if allowed is not None and rig.name not in allowed:
        raise UnsupportedRig(
            f"rig '{rig.name}' is not usable with this command (allowed: {', '.join(allowed)})"
        )
    return rig


def _report(command: str, rig_name: str, results: dict, warnings=None) -> dict:
    return {
        "command": command,
        "rig": rig_name,
        "results": results,
        "warnings": list(warnings or []),
    }


def cmd_validate(args):
    cat = load_category(args.category)
    report = validate_category(cat)
    results = {
        "valid": report.ok,
        "objects": len(cat.objects),
        "arrows": len(cat.arrows),
    }
    if not report.ok:
        results["law"] = report.law
        results["witness"] = report.witness
    rig = _resolve_rig(args, "rat")
    return _report("validate", rig.name, results), EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_zeta(args):
    rig = _resolve_rig(args, "rat")
    cat = load_category(args.category)
    if args.algebra == "fine":
        results = {"algebra": "fine", "zeta": fine_json(fine_zeta(cat, rig))}
    elif args.algebra == "patch":
        z = patch_zeta(cat, rig)
        results = {
            "algebra": "patch",
            "zeta": coarse_json(z),
            "support": sorted(f"{name_str(a)}->{name_str(b)}" for (a, b) in z.support),
        }
    else:
        results = {"algebra": "coarse", "zeta": coarse_json(coarse_zeta(cat, rig))}
    return _report("zeta", rig.name, results), EXIT_OK


def cmd_mobius(args):
    if args.family and args.category:
        raise MalformedInput("give --category or --family, not both")
    if args.family:
        rig = _resolve_rig(args, "rat", FIELD_OR_INT)
        if args.start is None or args.end is None:
            raise MalformedInput("--family needs --from and --to")
        if args.end < args.start:
            raise MalformedInput("--to must be at least --from")
        least = 1 if args.family == "divisibility" else 0
        if args.start < least:
            raise MalformedInput(f"family '{args.family}' indexes integers >= {least}")
        family = builtin(args.family)
        indices = list(range(args.start, args.end + 1))
        try:
            rows = [
                [render(rig, patchwise_mobius(family, m, n, rig)) for n in indices]
                for m in indices
            ]
        except NotInvertible as e:
            results = {"family": args.family, "status": "not_invertible", "witness": str(e)}
            return _report("mobius", rig.name, results), EXIT_NEGATIVE
        results = {
            "family": args.family,
            "algebra": "patch",
            "objects": [str(i) for i in indices],
            "mobius": rows,
        }
        return _report("mobius", rig.name, results), EXIT_OK
    if not args.category:
        raise MalformedInput("mobius needs --category or --family")
    rig = _resolve_rig(args, "rat", FIELD_OR_INT)
    cat = load_category(args.category)
    try:
        if args.algebra == "fine":
            mu = fine_mobius(cat, rig)
            results = {"algebra": "fine", "status": "ok", "mobius": fine_json(mu)}
        elif args.algebra == "patch":
            mu = patch_mobius(cat, rig)
            results = {"algebra": "patch", "status": "ok", "mobius": coarse_json(mu)}
        else:
            mu = coarse_mobius(cat, rig)
            results = {"algebra": "coarse", "status": "ok", "mobius": coarse_json(mu)}
    except NotInvertible as e:
        results = {"algebra": args.algebra, "status": "not_invertible", "witness": str(e)}
        return _report("mobius", rig.name, results), EXIT_NEGATIVE
    return _report("mobius", rig.name, results), EXIT_OK


def cmd_euler(args):
    rig = _resolve_rig(args, "rat", FIELD_OR_INT)
    cat = load_category(args.category)
    try:
        value = euler_characteristic(cat, rig)
    except NotInvertible as e:
        results = {"status": "not_invertible", "witness": str(e)}
        return _report("euler", rig.name, results), EXIT_NEGATIVE
    return _report("euler", rig.name, {"status": "ok", "euler_characteristic": render(rig, value)}), EXIT_OK


def cmd_nerve_euler(args):
    rig = _resolve_rig(args, "int")
    cat = load_category(args.category)
    try:
        value = nerve_euler_characteristic(cat)
    except NotNerveFinite as e:
        results = {"status": "not_nerve_finite", "reason": str(e)}
        return _report("nerve-euler", rig.name, results), EXIT_NEGATIVE
    return _report("nerve-euler", rig.name, {"status": "ok", "euler_characteristic": str(value)}), EXIT_OK


def cmd_magnitude(args):
    rig = _resolve_rig(args, "real", ("real",))
    space = load_metric(args.metric)
    results = {}
    try:
        if args.study:
            counts = [int(x) for x in args.study.split(",") if x]
            study = segment_refinement_study(counts)
            results["study"] = [[n, f"{value:.12g}"] for n, value in study]
        results["magnitude"] = f"{magnitude(space):.12g}"
        results["status"] = "ok"
    except NotInvertible as e:
        results = {"status": "not_invertible", "witness": str(e)}
        return _report("magnitude", rig.name, results), EXIT_NEGATIVE
    return _report("magnitude", rig.name, results), EXIT_OK


def cmd_graded(args):
    if args.degree < 1:
        raise MalformedInput("--degree must be >= 1")
    explicit = args.rig or os.environ.get("MOBIUSKIT_RIG")
    if explicit and explicit not in ("poly", f"poly:{args.degree}"):
        raise UnsupportedRig("graded computations run over the truncated series rig")
    graph = load_graph(args.graph)
    graded = GradedGraphCategory(graph, args.degree)
    zeta = graded_zeta(graded)
    mobius = graded_mobius(graded)
    results = {
        "degree": args.degree,
        "zeta": coarse_json(zeta),
        "mobius": coarse_json(mobius),
        "mobius_total": render(mobius.rig, mobius.total()),
    }
    return _report("graded", f"poly:{args.degree}", results), EXIT_OK


def cmd_classify(args):
    rig = _resolve_rig(args, "rat")
    cat = load_category(args.category)
    report = endomorphism_report(cat)
    results = {
        "skeletal": is_skeletal(cat),
        "nontrivial_isos": sorted(name_str(x) for x in report.nontrivial_isos),
        "nontrivial_idempotents": sorted(name_str(x) for x in report.nontrivial_idempotents),
        "nontrivial_endos": sorted(name_str(x) for x in report.nontrivial_endos),
        "mobius_category": is_mobius_category(cat),
    }
    for label, attempt_rig in (("q", RAT), ("z", INT)):
        try:
            fine_mobius(cat, attempt_rig)
            results[f"fine_inversion_{label}"] = "ok"
        except NotInvertible as e:
            results[f"fine_inversion_{label}"] = f"not_invertible: {e}"
        try:
            coarse_mobius(cat, attempt_rig)
            results[f"coarse_inversion_{label}"] = "ok"
        except NotInvertible as e:
            results[f"coarse_inversion_{label}"] = f"not_invertible: {e}"
    code = EXIT_OK if results["mobius_category"] else EXIT_NEGATIVE
    return _report("classify", rig.name, results), code


def cmd_functor_check(args):
    rig = _resolve_rig(args, "rat")
    source = load_category(args.src)
    target = load_category(args.tgt)
    functor = load_functor(args.map, source, target)
    validation = functor.validate()
    if not validation.ok:
        results = {
            "functor_valid": False,
            "law": validation.law,
            "witness": validation.witness,
        }
        return _report("functor-check", rig.name, results), EXIT_NEGATIVE
    ulf, witness = is_ulf(functor)
    results = {
        "functor_valid": True,
        "bijective_on_objects": is_bijective_on_objects(functor),
        "ulf": ulf,
        "fibre_sizes": {name_str(k): v for k, v in fibre_sizes(functor).items()},
    }
    if not ulf:
        h, g1, g2, count = witness
        results["ulf_counterexample"] = {
            "arrow": name_str(h),
            "factorization": [name_str(g1), name_str(g2)],
            "lifts": count,
        }
    return _report("functor-check", rig.name, results), EXIT_OK


def cmd_matrix(args):
    if args.op == "zeros":
        rig = _resolve_rig(args, "rat", ("rat", "real"))
    else:
        rig = _resolve_rig(args, "rat")
    m = load_matrix(args.infile, rig)
    if args.op == "detpm":
        plus, minus = matrixrig._det_halves(m)
        results = {"det_plus": render(rig, plus), "det_minus": render(rig, minus)}
        return _report("matrix", rig.name, results), EXIT_OK
    if args.op == "adjpm":
        plus, minus = matrixrig._adj_halves(m)
        results = {
            "adj_plus": matrix_json(rig, plus),
            "adj_minus": matrix_json(rig, minus),
        }
        return _report("matrix", rig.name, results), EXIT_OK
    if args.op == "transitive":
        ok, witness = matrixrig.is_transitive(m)
        results = {"transitive": ok}
        if not ok:
            results["counterexample_path"] = list(witness)
        return _report("matrix", rig.name, results), EXIT_OK if ok else EXIT_NEGATIVE
    if args.op == "zeros":
        try:
            inverse = matrixrig.invert(m)
        except NotInvertible as e:
            results = {"status": "not_invertible", "witness": str(e)}
            return _report("matrix", rig.name, results), EXIT_NEGATIVE
        ok, violation = matrixrig.inverse_zero_check(m, inverse)
        results = {
            "status": "ok",
            "inverse": matrix_json(rig, inverse),
            "zero_pattern_inherited": ok,
        }
        if not ok:
            results["violation"] = list(violation)
        return _report("matrix", rig.name, results), EXIT_OK if ok else EXIT_NEGATIVE
    raise MalformedInput(f"unknown matrix op '{args.op}'")


def cmd_compare(args):
    rig = _resolve_rig(args, "rat", FIELD_OR_INT)
    cat_a = load_category(args.category_a)
    cat_b = load_category(args.category_b)
    graph_a = underlying_graph(cat_a)
    graph_b = underlying_graph(cat_b)
    if set(graph_a.vertices) != set(graph_b.vertices) or set(graph_a.edges) != set(graph_b.edges):
        raise MalformedInput("compare needs two categories on the same underlying graph")
    results = {"same_graph": True}
    try:
        mu_a = fine_mobius(cat_a, rig)
        mu_b = fine_mobius(cat_b, rig)
    except NotInvertible as e:
        results["status"] = "not_invertible"
        results["witness"] = str(e)
        return _report("compare", rig.name, results), EXIT_NEGATIVE
    sums_a = sigma_to_coarse(mu_a)
    sums_b = sigma_to_coarse(mu_b)
    coarse_a = coarse_mobius(cat_a, rig)
    coarse_b = coarse_mobius(cat_b, rig)
    haigh_a = sums_a.equal(coarse_a)
    haigh_b = sums_b.equal(coarse_b)
    menni = sums_a.equal(sums_b)
    euler_equal = rig.eq(mu_a.rig.sum(mu_a.values.values()), mu_b.rig.sum(mu_b.values.values()))
    results.update(
        {
            "status": "ok",
            "haigh_first": haigh_a,
            "haigh_second": haigh_b,
            "menni_hom_sums_agree": menni,
            "euler_characteristics_agree": euler_equal,
            "hom_sums": coarse_json(sums_a),
        }
    )
    all_ok = haigh_a and haigh_b and menni and euler_equal
    return _report("compare", rig.name, results), EXIT_OK if all_ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mobiuskit",
        description="Exact Mobius inversion for finite and patch-finite categories",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rig", help="nat|int|rat|real|bool|poly[:N] (default from MOBIUSKIT_RIG, then rat)")
    common.add_argument("--threads", type=int, default=1, help="reserved; computations run sequentially")
    common.add_argument("--timing", action="store_true", help="attach wall-clock timing to the report")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the category laws of a file")
    p.add_argument("--category", required=True)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("zeta", parents=[common], help="zeta element of a category")
    p.add_argument("--category", required=True)
    p.add_argument("--algebra", choices=["fine", "coarse", "patch"], default="coarse")
    p.set_defaults(handler=cmd_zeta)

    p = sub.add_parser("mobius", parents=[common], help="Mobius function (category file or built-in family)")
    p.add_argument("--category")
    p.add_argument("--algebra", choices=["fine", "coarse", "patch"], default="coarse")
    p.add_argument("--family", choices=["dinj", "dsurj", "divisibility", "nat_leq"])
    p.add_argument("--from", dest="start", type=int)
    p.add_argument("--to", dest="end", type=int)
    p.set_defaults(handler=cmd_mobius)

    p = sub.add_parser("euler", parents=[common], help="Euler characteristic via coarse Mobius inversion")
    p.add_argument("--category", required=True)
    p.set_defaults(handler=cmd_euler)

    p = sub.add_parser("nerve-euler", parents=[common], help="Euler characteristic of the classifying space")
    p.add_argument("--category", required=True)
    p.set_defaults(handler=cmd_nerve_euler)

    p = sub.add_parser("magnitude", parents=[common], help="magnitude of a finite metric space")
    p.add_argument("--metric", required=True)
    p.add_argument("--study", help="comma-separated point counts for the segment refinement table")
    p.set_defaults(handler=cmd_magnitude)

    p = sub.add_parser("graded", parents=[common], help="graded zeta/Mobius of the free category on a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(handler=cmd_graded)

    p = sub.add_parser("classify", parents=[common], help="Mobius-category classification report")
    p.add_argument("--category", required=True)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("functor-check", parents=[common], help="ULF / bijective-on-objects / fibre report")
    p.add_argument("--src", required=True)
    p.add_argument("--tgt", required=True)
    p.add_argument("--map", required=True)
    p.set_defaults(handler=cmd_functor_check)

    p = sub.add_parser("matrix", parents=[common], help="determinant/adjugate halves, transitivity, zero patterns")
    p.add_argument("--op", choices=["detpm", "adjpm", "transitive", "zeros"], required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(handler=cmd_matrix)

    p = sub.add_parser("compare", parents=[common], help="Haigh/Menni checks for two categories on one graph")
    p.add_argument("--category-a", required=True)
    p.add_argument("--category-b", required=True)
    p.set_defaults(handler=cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_MALFORMED
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_MALFORMED
    started = time.perf_counter()
    try:
        report, code = args.handler(args)
    except (MalformedInput, UnsupportedRig) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except MobiusKitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NEGATIVE
    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - started) * 1000.0, 3)
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
