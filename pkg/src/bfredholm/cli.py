"""Command-line front end: batch classification, inverses, spectra,
diagonal-model reports and the statement-verification suite.

Commands::

    bfredholm classify -w FILE --hom T ELEMENT     membership report
    bfredholm drazin   -w FILE ELEMENT             Drazin data
    bfredholm spectra  -w FILE [--hom T] NAME...   point spectra
    bfredholm diag "tail 1/n -> 0"                 diagonal-model report
    bfredholm verify --seed 42 --trials 100        statement suite

Every command prints human text by default and schema-stable JSON with
``--format json``.  Exit codes: 0 success, 1 verification failure
(failed suite statements or an exact re-verification defect), 2 usage or
parse errors, including name-resolution and scope refusals.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import Element, Homomorphism
from .errors import BFredholmError, InternalInconsistencyError, WorkspaceError
from .exact import AlgebraicPointSet
from .fredholm import (
    b_spectra,
    browder_spectrum,
    classify,
    spectrum,
    weyl_spectrum,
)
from .geninv import drazin
from .harness import ALL_FAMILIES, ALL_TAGS, TrialPlan, render_report, run_suite
from .spectral import SpectralSet, diag_classify
from .workspace import (
    Workspace,
    load_workspace,
    parse_diagonal,
    render_diagonal,
)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _resolve(mapping: dict, name: str, kind: str):
    if name not in mapping:
        known = ", ".join(sorted(mapping)) or "none defined"
        raise WorkspaceError(f"unknown {kind} {name!r} (available: {known})")
    return mapping[name]


def _element_doc(e: Element) -> list[str]:
    return [c.literal() for c in e.coords]


def _point_set_doc(s: AlgebraicPointSet) -> dict:
    return {
        "explicit": [
            {"point": p.literal(), "multiplicity": m}
            for p, m in s.explicit_points()
        ],
        "symbolic": [
            {"factor": str(f), "multiplicity": m}
            for f, m in s.symbolic_factors()
        ],
    }


def _spectral_set_doc(s: SpectralSet) -> dict:
    return {
        "text": str(s),
        "finite_points": [p.literal() for p in s.finite_points()],
        "tails": [str(t) for t in s.tails()],
        "families": [str(f) for f in s.families()],
        "regions": [str(r) for r in s.regions()],
        "removed": [p.literal() for p in s.removed],
        "countable": s.is_countable(),
    }


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------


def cmd_classify(
    ws: Workspace, hom_name: str, element_name: str, fmt: str = "text"
) -> str:
    hom: Homomorphism = _resolve(ws.homomorphisms, hom_name, "homomorphism")
    a: Element = _resolve(ws.elements, element_name, "element")
    if a.algebra is not hom.source:
        raise WorkspaceError(
            f"element {element_name!r} lives in "
            f"{ws.algebra_name(a.algebra)!r}, but {hom_name!r} starts at "
            f"{ws.algebra_name(hom.source)!r}"
        )
    report = classify(hom, a)
    if fmt == "json":
        doc = {
            "element": element_name,
            "homomorphism": hom_name,
            "fredholm": report.fredholm,
            "weyl": report.weyl,
            "browder": report.browder,
            "bfredholm": report.bfredholm,
            "bfredholm_degree": report.bfredholm_degree,
            "bweyl": {
                "degrees": list(report.bweyl.degrees),
                "completeness": report.bweyl.completeness,
            },
            "bbrowder": {
                "degrees": list(report.bbrowder.degrees),
                "completeness": report.bbrowder.completeness,
            },
            "gbf": report.gbf,
            "gbw": report.gbw,
            "gbb": report.gbb,
            "riesz": report.riesz,
            "t_nilpotent": report.t_nilpotent,
        }
        for key, witness in (
            ("weyl_witness", report.weyl_witness),
            ("browder_witness", report.browder_witness),
        ):
            doc[key] = (
                None
                if witness is None
                else {
                    "invertible_part": _element_doc(witness[0]),
                    "kernel_part": _element_doc(witness[1]),
                }
            )
        return json.dumps(doc, indent=2)

    def degree_set(r) -> str:
        body = ", ".join(str(k) for k in r.degrees)
        return "{" + body + "} (" + r.completeness + ")"

    deg = f" (degree {report.bfredholm_degree})" if report.bfredholm else ""
    lines = [
        f"classification of {element_name!r} under {hom_name!r}",
        f"  fredholm:         {_flag(report.fredholm)}",
        f"  weyl:             {_flag(report.weyl)}",
        f"  browder:          {_flag(report.browder)}",
        f"  bfredholm:        {_flag(report.bfredholm)}{deg}",
        f"  bweyl degrees:    {degree_set(report.bweyl)}",
        f"  bbrowder degrees: {degree_set(report.bbrowder)}",
        f"  gbf: {_flag(report.gbf)}   gbw: {_flag(report.gbw)}   "
        f"gbb: {_flag(report.gbb)}",
        f"  riesz: {_flag(report.riesz)}   "
        f"t-nilpotent: {_flag(report.t_nilpotent)}",
    ]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# drazin
# ---------------------------------------------------------------------------


def cmd_drazin(ws: Workspace, element_name: str, fmt: str = "text") -> str:
    a: Element = _resolve(ws.elements, element_name, "element")
    data = drazin(a)
    if fmt == "json":
        return json.dumps(
            {
                "element": element_name,
                "index": data.index,
                "inverse": _element_doc(data.inverse),
                "spectral_idempotent": _element_doc(data.spectral_idempotent),
                "inverse_matrix": [
                    [v.literal() for v in row]
                    for row in data.inverse.matrix.entries
                ],
            },
            indent=2,
        )
    return "\n".join(
        [
            f"drazin data for {element_name!r}",
            f"  index:               {data.index}",
            f"  inverse:             {data.inverse.matrix}",
            f"  spectral idempotent: {data.spectral_idempotent.matrix}",
        ]
    )


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------


def cmd_spectra(
    ws: Workspace,
    names: list[str],
    hom_name: str | None = None,
    fmt: str = "text",
) -> str:
    hom = (
        _resolve(ws.homomorphisms, hom_name, "homomorphism")
        if hom_name
        else None
    )
    docs = []
    blocks = []
    for name in names:
        a: Element = _resolve(ws.elements, name, "element")
        doc = {"element": name, "sigma": _point_set_doc(spectrum(a))}
        lines = [
            f"spectra of {name!r}",
            f"  sigma:    {spectrum(a)}",
        ]
        if hom is not None:
            if a.algebra is not hom.source:
                raise WorkspaceError(
                    f"element {name!r} lives in "
                    f"{ws.algebra_name(a.algebra)!r}, but {hom_name!r} "
                    f"starts at {ws.algebra_name(hom.source)!r}"
                )
            sf = spectrum(hom(a))
            sw = weyl_spectrum(hom, a)
            sb = browder_spectrum(hom, a)
            b_spectra(hom, a, samples=1)  # asserts all six are empty
            doc["sigma_f"] = _point_set_doc(sf)
            doc["sigma_w"] = _point_set_doc(sw)
            doc["sigma_b"] = _point_set_doc(sb)
            doc["b_spectra"] = "all empty (every element here is algebraic)"
            lines += [
                f"  sigma_f:  {sf}   (under {hom_name!r})",
                f"  sigma_w:  {sw}",
                f"  sigma_b:  {sb}",
                "  b-spectra: all empty (every element here is algebraic)",
            ]
        docs.append(doc)
        blocks.append("\n".join(lines))
    if fmt == "json":
        return json.dumps(docs, indent=2)
    return "\n".join(blocks)


# ---------------------------------------------------------------------------
# diag
# ---------------------------------------------------------------------------


def cmd_diag(expr: str, fmt: str = "text") -> str:
    d = parse_diagonal(expr)
    report = diag_classify(d)
    if fmt == "json":
        return json.dumps(
            {
                "element": render_diagonal(d),
                "sigma": _spectral_set_doc(report.sigma),
                "sigma_f": _spectral_set_doc(report.sigma_f),
                "sigma_bf": _spectral_set_doc(report.sigma_bf),
                "sigma_gbf": _spectral_set_doc(report.sigma_gbf),
                "fredholm_at_0": report.fredholm_at_0,
                "bfredholm_at_0": report.bfredholm_at_0,
                "riesz": report.riesz,
            },
            indent=2,
        )
    return "\n".join(
        [
            f"diagonal element: {render_diagonal(d)}",
            f"  sigma:     {report.sigma}",
            f"  sigma_f:   {report.sigma_f}",
            f"  sigma_bf:  {report.sigma_bf}",
            f"  sigma_gbf: {report.sigma_gbf}",
            f"  fredholm at 0:  {_flag(report.fredholm_at_0)}",
            f"  bfredholm at 0: {_flag(report.bfredholm_at_0)}",
            f"  riesz:          {_flag(report.riesz)}",
        ]
    )


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(plan: TrialPlan, fmt: str = "text") -> tuple[str, int]:
    report = run_suite(plan)
    code = 0 if report.all_passed else 1
    if fmt == "json":
        doc = {
            "plan": {
                "seed": plan.seed,
                "trials": plan.trials,
                "max_ambient_dim": plan.max_ambient_dim,
                "families": list(plan.families),
                "theorem_filter": list(plan.theorem_filter),
            },
            "family_notes": list(report.family_notes),
            "results": [
                {
                    "tag": r.tag,
                    "instances": r.instances,
                    "failures": [
                        {
                            "family": f.family,
                            "detail": f.detail,
                            "witness": {
                                name: list(coords) for name, coords in f.witness
                            },
                        }
                        for f in r.failures
                    ],
                    "skipped": [
                        {"reason": s.reason, "detail": s.detail}
                        for s in r.skipped
                    ],
                }
                for r in report.results
            ],
            "totals": {
                "instances": report.total_instances,
                "failures": report.total_failures,
            },
            "all_passed": report.all_passed,
        }
        return json.dumps(doc, indent=2), code
    return render_report(report).rstrip("\n"), code


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bfredholm",
        description="exact workbench for relative Fredholm theory",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("text", "json"),
            default="text",
            help="output format (default: text)",
        )

    def add_workspace(p):
        p.add_argument(
            "-w",
            "--workspace",
            required=True,
            metavar="FILE",
            help="workspace file (JSON with exact literals)",
        )

    p = sub.add_parser("classify", help="full membership report for one element")
    add_workspace(p)
    p.add_argument("--hom", required=True, help="homomorphism name")
    p.add_argument("element", help="element name")
    add_format(p)

    p = sub.add_parser("drazin", help="Drazin inverse, index and idempotent")
    add_workspace(p)
    p.add_argument("element", help="element name")
    add_format(p)

    p = sub.add_parser("spectra", help="point spectra of named elements")
    add_workspace(p)
    p.add_argument("--hom", help="homomorphism for the relative spectra")
    p.add_argument("elements", nargs="+", help="element names")
    add_format(p)

    p = sub.add_parser("diag", help="diagonal-model spectral report")
    p.add_argument("expr", help='description, e.g. "tail 1/n -> 0 ; const 2"')
    add_format(p)

    p = sub.add_parser("verify", help="run the statement-verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=24)
    p.add_argument(
        "--family",
        action="append",
        choices=ALL_FAMILIES,
        help="repeatable; default: u2 u3 block",
    )
    p.add_argument(
        "--filter",
        action="append",
        metavar="TAG",
        choices=ALL_TAGS,
        help="repeatable; restrict to these statement tags",
    )
    p.add_argument("--max-ambient-dim", type=int, default=6)
    add_format(p)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "classify":
            ws = load_workspace(args.workspace)
            print(cmd_classify(ws, args.hom, args.element, args.format))
            return 0
        if args.command == "drazin":
            ws = load_workspace(args.workspace)
            print(cmd_drazin(ws, args.element, args.format))
            return 0
        if args.command == "spectra":
            ws = load_workspace(args.workspace)
            print(cmd_spectra(ws, args.elements, args.hom, args.format))
            return 0
        if args.command == "diag":
            print(cmd_diag(args.expr, args.format))
            return 0
        plan = TrialPlan(
            seed=args.seed,
            trials=args.trials,
            max_ambient_dim=args.max_ambient_dim,
            families=tuple(args.family) if args.family else ("u2", "u3", "block"),
            theorem_filter=tuple(args.filter) if args.filter else (),
        )
        text, code = cmd_verify(plan, args.format)
        print(text)
        return code
    except InternalInconsistencyError as e:
        print(f"defect: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (WorkspaceError, ValueError, BFredholmError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
