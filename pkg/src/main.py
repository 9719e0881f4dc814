"""Command-line entry point for homkit.

Every verb reads and writes canonical JSON documents (see
``serialization``). Exit codes: 0 when every check passes, 1 when checks
ran and at least one failed (the run report on stdout, a summary on
stderr), 2 for input or usage errors.

Usage
-----
Verify a Hopf algebra::

    homkit verify --kind hopf h4.json

Build and print a crossed product::

    homkit construct crossed --base kaa.json --hopf h4.json --action act.json --cocycle sigma.json --out cp.json
    homkit report table cp.json --format md

Write the worked examples::

    homkit corpus h4 --out data/
    homkit corpus crossed_h4 --t 2 --field gf:5 --out data/

Enumerate lazy cocycles and their classes::

    homkit search lazy --corpus h4 --field gf:3
    homkit cohomology lazy --corpus kc2 --field gf:5
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

import corpus as corpus_module
from constants import COHOMOLOGY_DIM_LIMIT, EXIT_CHECKS_FAILED, EXIT_OK, EXIT_USAGE, TOOL_NAME, TOOL_VERSION
from errors import ConditionsFailed, HomkitError, SpaceMismatch
from exactlin import FieldSpec
from models import DualVariant, Report, Side, StructureKind
from rendering import render_report, render_table, run_report
from serialization import dump_file, dumps, load_file, to_document
from structures import (
    assemble_bialgebra,
    base_antipode,
    build_b_ltimes_a,
    build_biproduct_antipode,
    build_crossed_product,
    build_dual_yd,
    build_smash_coproduct,
    build_smash_product,
    centrality_report,
    check_biproduct_conditions,
    check_lazy,
    check_sigma_antipode,
    check_yd_module,
    cleft_roundtrip,
    crossed_product_conditions,
    deform,
    diagonal_crossed_product,
    lazy_cocycles,
    lazy_cohomology,
    twisted_antipode_report,
    verify,
    verify_cocycle_antipode_identities,
    verify_crossed_identities,
)
from structures.biproduct import ComoduleCoalgebra
from structures.cleft import LeftComoduleAlgebra
from structures.crossed import CocycleMap, WeakAction
from structures.homcore import HomAlgebra, HomBialgebra, HomHopfAlgebra
from structures.lazy import ScalarCocycle
from structures.ydmod import BicomoduleAlgebra, YDModule
from utils import validate_environment

logger = logging.getLogger("homkit")

load_dotenv(".env.local")


# =============================================================================
# INPUT HELPERS
# =============================================================================


class UsageError(HomkitError):
    """A verb was called with inputs of the wrong kind."""


# Short names accepted by `check` next to the descriptive ones.
CHECK_ALIASES = {"lemma25": "crossed-identities", "lemma46": "antipode-identities"}


def _load(path: str, expected: type | tuple[type, ...], flag: str) -> Any:
    obj = load_file(path)
    if not isinstance(obj, expected):
        raise UsageError(f"{flag} {path}: got a {type(obj).__name__} document")
    return obj


def _need(args: argparse.Namespace, flag: str, expected: type) -> Any:
    path = getattr(args, flag.lstrip("-"))
    if not path:
        raise UsageError(f"{args.verb} {args.what} needs {flag}")
    return _load(path, expected, flag)


def _same_algebra(x: Any, y: Any) -> bool:
    return (x.field, x.dim, x.mul, x.unit, x.alpha) == (y.field, y.dim, y.mul, y.unit, y.alpha)


def _check_embedded_spaces(args: argparse.Namespace, action: WeakAction) -> None:
    """Compare --base / --hopf with the spaces embedded in the action document."""
    if args.base:
        base = _load(args.base, (HomAlgebra, HomBialgebra), "--base")
        if not _same_algebra(base, action.algebra):
            raise SpaceMismatch(f"--base {args.base} differs from the algebra of --action")
    if args.hopf:
        H = _load(args.hopf, HomHopfAlgebra, "--hopf")
        ours = action.hopf
        if not (
            _same_algebra(H, ours)
            and (H.comul, H.counit, H.antipode) == (ours.comul, ours.counit, ours.antipode)
        ):
            raise SpaceMismatch(f"--hopf {args.hopf} differs from the Hopf algebra of --action")


def _emit(verb: str, reports: Sequence[Report], inputs: Sequence[str], notes: Sequence[str] = ()) -> int:
    """Print the run report (stdout) and the summaries (stderr); return the exit code."""
    record = run_report(verb, reports, inputs, notes)
    sys.stdout.write(dumps(record))
    for r in reports:
        sys.stderr.write(render_report(r))
    return EXIT_OK if record["pass"] else EXIT_CHECKS_FAILED


def _hopf_for_search(args: argparse.Namespace) -> HomHopfAlgebra:
    if args.hopf:
        H = _load(args.hopf, HomHopfAlgebra, "--hopf")
        if args.field is not None and H.field != args.field:
            raise UsageError(f"--hopf is over {H.field.name}, --field asks for {args.field.name}")
        return H
    H = corpus_module.corpus(args.corpus, field=args.field or FieldSpec.prime(3))
    if not isinstance(H, HomHopfAlgebra):
        raise UsageError(f"corpus entry {args.corpus!r} is not a Hopf algebra")
    return H


def _form_rows(sigma: ScalarCocycle) -> list[list[str]]:
    return [[sigma.field.format(x) for x in row] for row in sigma.form.rows_list()]


# =============================================================================
# VERBS
# =============================================================================


def cmd_verify(args: argparse.Namespace) -> int:
    reports = [verify(args.kind, load_file(path)) for path in args.files]
    return _emit("verify", reports, args.files)


def cmd_construct(args: argparse.Namespace) -> int:
    what = args.what
    inputs = [p for p in (args.action, args.cocycle, args.comodule, args.sigma, args.module, args.base, args.hopf) if p]
    if args.hopf and what not in ("crossed", "smash"):
        raise UsageError(f"construct {what} takes no --hopf")
    enforce = not args.force
    reports: list[Report] = []
    notes: list[str] = []
    result: Any
    if what == "crossed":
        action, cocycle = _need(args, "--action", WeakAction), _need(args, "--cocycle", CocycleMap)
        _check_embedded_spaces(args, action)
        result = build_crossed_product(action, cocycle, enforce=enforce).algebra
    elif what == "smash":
        action = _need(args, "--action", WeakAction)
        _check_embedded_spaces(args, action)
        result = build_smash_product(action, enforce=enforce).algebra
    elif what == "smash-coproduct":
        result = build_smash_coproduct(_need(args, "--comodule", ComoduleCoalgebra), enforce=enforce)
    elif what == "biproduct":
        action = _need(args, "--action", WeakAction)
        cocycle = (
            _need(args, "--cocycle", CocycleMap) if args.cocycle else CocycleMap.trivial(action.hopf, action.algebra)
        )
        bp = assemble_bialgebra(action, cocycle, _need(args, "--comodule", ComoduleCoalgebra), enforce=enforce)
        result = bp.bialgebra
        sigma_antipode = check_sigma_antipode(cocycle, action.hopf.antipode)
        reports.append(sigma_antipode)
        if sigma_antipode.passed:
            try:
                result = build_biproduct_antipode(bp, action.hopf.antipode, base_antipode(bp.crossed.base))
            except HomkitError as exc:
                notes.append(f"no antipode assembled: {exc}")
    elif what == "deform":
        deformed = deform(_need(args, "--sigma", ScalarCocycle), args.side, enforce=enforce)
        reports.append(deformed.report)
        result = deformed.algebra
    elif what == "bltimes":
        result = build_b_ltimes_a(
            _need(args, "--action", WeakAction), _need(args, "--comodule", LeftComoduleAlgebra), enforce=enforce
        )
    elif what == "dual-yd":
        result = build_dual_yd(_need(args, "--module", YDModule), _need(args, "--sigma", ScalarCocycle), args.variant)
        reports.append(check_yd_module(result))
    else:  # diagonal
        dcp = diagonal_crossed_product(_need(args, "--base", BicomoduleAlgebra))
        reports.append(dcp.report)
        result = dcp.algebra
    dump_file(result, args.out)
    notes.append(f"wrote {to_document(result)['kind']} {Path(args.out).name}")
    return _emit(f"construct {what}", reports, inputs, notes)


def cmd_check(args: argparse.Namespace) -> int:
    what = CHECK_ALIASES.get(args.what, args.what)
    inputs = [p for p in (args.action, args.cocycle, args.comodule, args.sigma, args.module) if p]

    def need(flag: str, expected: type) -> Any:
        return _need(args, flag, expected)

    if what == "cocycle":
        reports = crossed_product_conditions(need("--action", WeakAction), need("--cocycle", CocycleMap))
    elif what == "crossed-identities":
        reports = [verify_crossed_identities(need("--action", WeakAction), need("--cocycle", CocycleMap))]
    elif what == "cleft":
        reports = [cleft_roundtrip(need("--action", WeakAction), need("--cocycle", CocycleMap))]
    elif what == "biproduct-conditions":
        reports = [
            check_biproduct_conditions(
                need("--action", WeakAction), need("--cocycle", CocycleMap), need("--comodule", ComoduleCoalgebra)
            )
        ]
    elif what == "sigma-antipode":
        cocycle = need("--cocycle", CocycleMap)
        reports = [check_sigma_antipode(cocycle, cocycle.hopf.antipode)]
    elif what == "lazy":
        reports = [check_lazy(need("--sigma", ScalarCocycle))]
    elif what == "antipode-identities":
        reports = [verify_cocycle_antipode_identities(need("--sigma", ScalarCocycle))]
    elif what == "twisted-antipodes":
        reports = [twisted_antipode_report(need("--sigma", ScalarCocycle))]
    else:  # yd
        reports = [check_yd_module(need("--module", YDModule))]
    return _emit(f"check {what}", reports, inputs)


def cmd_search(args: argparse.Namespace) -> int:
    H = _hopf_for_search(args)
    cocycles, candidates = lazy_cocycles(H, dim_limit=args.dim_limit)
    record = {
        "hopf": H.name,
        "field": H.field.name,
        "candidates": candidates,
        "count": len(cocycles),
        "cocycles": [_form_rows(s) for s in sorted(cocycles, key=ScalarCocycle.key)],
    }
    sys.stdout.write(dumps(record))
    sys.stderr.write(f"{H.name} over {H.field.name}: {len(cocycles)} lazy cocycles from {candidates} candidates\n")
    return EXIT_OK


def cmd_cohomology(args: argparse.Namespace) -> int:
    H = _hopf_for_search(args)
    result = lazy_cohomology(H, dim_limit=args.dim_limit)
    central = centrality_report(result)
    record = {
        "hopf": H.name,
        "field": H.field.name,
        "candidates": result.candidates,
        "coboundaries": len(result.coboundaries),
        "classes": [
            {"representative": _form_rows(rep), "size": size}
            for rep, size in zip(result.representatives, result.class_sizes)
        ],
        "group_table": [list(row) for row in result.group_table] if result.group_table is not None else None,
        "report": central.to_dict(),
    }
    sys.stdout.write(dumps(record))
    sys.stderr.write(render_report(central))
    return EXIT_OK if central.passed else EXIT_CHECKS_FAILED


def cmd_report(args: argparse.Namespace) -> int:
    algebra = _load(args.file, (HomAlgebra, HomBialgebra), "report table")
    sys.stdout.write(render_table(algebra, args.format))
    return EXIT_OK


def cmd_corpus(args: argparse.Namespace) -> int:
    fld = args.field or FieldSpec.rationals()
    try:
        t = fld.scalar(args.t)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--t {args.t!r} is not a scalar of {fld.name}: {exc}") from exc
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    obj = corpus_module.corpus(args.name, t=t, field=fld)
    written: list[str] = []
    notes: list[str] = []
    if args.name == "crossed_h4":
        dump_file(obj.algebra, out / "crossed_h4.json")
        printed = HomAlgebra(
            fld,
            obj.algebra.dim,
            obj.algebra.labels,
            corpus_module.crossed_h4_printed(t, fld),
            obj.algebra.unit,
            obj.algebra.alpha,
            name="crossed_h4_printed",
        )
        dump_file(printed, out / "crossed_h4_printed.json")
        written += ["crossed_h4.json", "crossed_h4_printed.json"]
        notes += [f"printed table differs at ({r}, {c})" for r, c in corpus_module.crossed_table_discrepancies(t, fld)]
    else:
        dump_file(obj, out / f"{args.name}.json")
        written.append(f"{args.name}.json")
    record = {"corpus": args.name, "field": fld.name, "t": fld.format(t), "files": written, "notes": notes}
    sys.stdout.write(dumps(record))
    return EXIT_OK


# =============================================================================
# PARSER
# =============================================================================


def _field(text: str) -> FieldSpec:
    return FieldSpec.parse(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME, description="Exact construction and verification of Hom-Hopf algebraic objects."
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("verify", help="Check the axioms of a structure.")
    p.add_argument("--kind", required=True, choices=[k.value for k in StructureKind])
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="Build a derived structure.")
    p.add_argument(
        "what",
        choices=["crossed", "smash", "smash-coproduct", "biproduct", "deform", "bltimes", "dual-yd", "diagonal"],
    )
    for flag in ("--action", "--cocycle", "--comodule", "--sigma", "--module", "--base", "--hopf"):
        p.add_argument(flag)
    p.add_argument("--side", choices=[s.value for s in Side], default=Side.TWO_SIDED.value)
    p.add_argument("--variant", choices=[v.value for v in DualVariant], default=DualVariant.S1.value)
    p.add_argument("--force", action="store_true", help="Build even when a condition fails.")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="Run a condition family on its inputs.")
    p.add_argument(
        "what",
        choices=[
            "cocycle",
            "lazy",
            "biproduct-conditions",
            "yd",
            "crossed-identities",
            "antipode-identities",
            "sigma-antipode",
            "twisted-antipodes",
            "cleft",
            *CHECK_ALIASES,
        ],
    )
    for flag in ("--action", "--cocycle", "--comodule", "--sigma", "--module"):
        p.add_argument(flag)
    p.set_defaults(func=cmd_check)

    for verb, func, help_text in (
        ("search", cmd_search, "Enumerate lazy 2-cocycles over a finite field."),
        ("cohomology", cmd_cohomology, "Partition lazy 2-cocycles into cohomology classes."),
    ):
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("target", choices=["lazy"])
        source = p.add_mutually_exclusive_group()
        source.add_argument("--hopf")
        source.add_argument("--corpus", default="h4")
        p.add_argument("--field", type=_field)
        p.add_argument("--dim-limit", type=int, default=COHOMOLOGY_DIM_LIMIT)
        p.set_defaults(func=func)

    p = sub.add_parser("report", help="Render a structure for humans.")
    p.add_argument("target", choices=["table"])
    p.add_argument("file")
    p.add_argument("--format", choices=["md", "csv"], default="md")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("corpus", help="Write a worked example.")
    p.add_argument("name", choices=sorted(corpus_module.CORPUS))
    p.add_argument("--t", default="1")
    p.add_argument("--field", type=_field)
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_corpus)
    return parser


# =============================================================================
# ENTRY POINT
# =============================================================================


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run one verb and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        settings = validate_environment()
    except RuntimeError as exc:
        sys.stderr.write(f"{TOOL_NAME}: {exc}\n")
        return EXIT_USAGE
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.log_level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logger.debug("running %s with %d threads", args.verb, settings.threads)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except ConditionsFailed as exc:
        return _emit(args.verb, exc.reports, [], [str(exc)])
    except (HomkitError, ValueError) as exc:
        logger.error("%s", exc)
        sys.stderr.write(f"{TOOL_NAME}: {exc}\n")
        return EXIT_USAGE
    except Exception:
        logger.exception("unexpected failure in %s", args.verb)
        return EXIT_USAGE


def main() -> None:
    raise SystemExit(run())


__all__ = ["build_parser", "main", "run"]


if __name__ == "__main__":
    main()
