"""Command-line front end: run a problem file, render the result.

Exit codes: 0 on success, 1 on a validation error (bad file or schema), 2 on
a computation error (invalid cone, inconsistent data).  Results go to
stdout; diagnostics go to stderr.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import problemfile
from .betti import check_perfect, morse_assemble, poincare_H, poincare_uhat
from .cohring import annihilator_dims, graded_dims, invariant_basis, quotient_presentation_betti
from .exactnum import TruncSeries
from .groupdata import euler_class_nonreductive
from .localize import (
    flag_pairing,
    grassmannian_pairing,
    integrate_abelianized,
    integrate_nonreductive,
    integrate_reductive,
    integrate_uhat,
    torus_pairing_fn,
)
from .momentdiag import LinearActionSample, fixed_point_weight_residual, moment_derivative_check
from .problemfile import ProblemFileError
from .residue import ResidueProblem, jk_residue

__all__ = ["main", "run", "render_result", "reemit"]


def _rational_text(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def _rational_latex(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return r"%s\frac{%d}{%d}" % (sign, abs(value.numerator), value.denominator)


def _series_latex(series):
    parts = []
    for e, c in enumerate(series.coeffs):
        if c == 0:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            body = "t" if e == 1 else "t^{%d}" % e
            if abs(c) != 1:
                body = "%d %s" % (abs(c), body)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


def render_result(result, fmt):
    """Render a result document in the requested format.

    ``result`` is a dict with a ``kind`` of ``rational`` or ``series`` plus
    optional extra tables; the JSON rendering is canonical (sorted keys) so
    that re-parsing and re-rendering is byte-identical.
    """
    if fmt == "json":
        doc = {"kind": result["kind"], "mode": result.get("mode")}
        if result["kind"] == "rational":
            doc["value"] = _rational_text(result["value"])
        else:
            series = result["value"]
            doc["coeffs"] = list(series.coeffs)
            doc["bound"] = series.bound
        for key in ("tables", "perfection"):
            if key in result:
                doc[key] = result[key]
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    lines = []
    if result["kind"] == "rational":
        body = (
            _rational_latex(result["value"])
            if fmt == "latex"
            else _rational_text(result["value"])
        )
        lines.append(body)
    else:
        series = result["value"]
        lines.append(_series_latex(series) if fmt == "latex" else str(series))
    if fmt == "text":
        for name, values in result.get("tables", {}).items():
            lines.append("%s: %s" % (name, " ".join(str(v) for v in values)))
        if "perfection" in result:
            info = result["perfection"]
            lines.append(
                "perfect: %s, remainder: %s, nonnegative: %s"
                % (info["perfect"], info["remainder"], info["nonnegative"])
            )
    return "\n".join(lines) + "\n"


def reemit(text):
    """Re-render a JSON output document; used to verify round-tripping."""
    doc = json.loads(text)
    if doc.get("kind") == "rational":
        result = {"kind": "rational", "mode": doc.get("mode"), "value": Fraction(doc["value"])}
    elif doc.get("kind") == "series":
        result = {
            "kind": "series",
            "mode": doc.get("mode"),
            "value": TruncSeries(doc["coeffs"], doc["bound"]),
        }
    else:
        raise ProblemFileError("$.kind", "not a result document")
    for key in ("tables", "perfection"):
        if key in doc:
            result[key] = doc[key]
    return render_result(result, "json")


def run(problem, sign_flip=False):
    """Dispatch a parsed problem to the computation modules.

    Returns a result document: ``{"kind", "mode", "value", ...}``.
    """
    mode = problem.mode
    flip = sign_flip or problem.sign_flip
    if mode == "pair_reductive":
        value = integrate_reductive(problem.pairing_problem())
        return {"kind": "rational", "mode": mode, "value": value}
    if mode == "pair_uhat":
        value = integrate_uhat(problem.pairing_problem(), sign_flip=flip)
        return {"kind": "rational", "mode": mode, "value": value}
    if mode == "pair_nonreductive":
        value = integrate_nonreductive(problem.pairing_problem())
        return {"kind": "rational", "mode": mode, "value": value}
    if mode == "pair_abelianized":
        euler = euler_class_nonreductive(problem.group)
        pairing = torus_pairing_fn(problem.fixed_points, cone=problem.cone)
        value = integrate_abelianized(
            pairing, problem.class_eta, euler, problem.group.weyl_order
        )
        return {"kind": "rational", "mode": mode, "value": value}
    if mode == "betti_uhat":
        value = poincare_uhat(problem.zmin_series, problem.dims)
        return {"kind": "series", "mode": mode, "value": value}
    if mode == "betti_H":
        value = poincare_H(problem.zmin_series, problem.dims)
        return {"kind": "series", "mode": mode, "value": value}
    if mode == "morse":
        assembled = morse_assemble(problem.strata)
        result = {"kind": "series", "mode": mode, "value": assembled}
        if problem.total_series is not None:
            report = check_perfect(problem.total_series, assembled)
            result["perfection"] = {
                "perfect": report.perfect,
                "remainder": str(report.remainder),
                "nonnegative": report.nonnegative,
            }
        return result
    if mode == "ring":
        weyl = (problem.group.weyl_generators, problem.group.weyl_order)
        series = quotient_presentation_betti(problem.ring, weyl, problem.group)
        inv = invariant_basis(problem.ring, weyl)
        euler = euler_class_nonreductive(problem.group)
        tables = {
            "graded_dims": list(graded_dims(problem.ring)),
            "invariant_dims": [
                len(inv.get(d, [])) for d in range(problem.ring.top_degree + 1)
            ],
            "annihilator_dims": list(annihilator_dims(problem.ring, euler)),
        }
        return {"kind": "series", "mode": mode, "value": series, "tables": tables}
    if mode == "residue":
        value = jk_residue(
            ResidueProblem(
                integrand=problem.integrand,
                cone=problem.cone,
                basis=problem.basis,
                epsilon=problem.epsilon,
                sign_flip=flip,
            )
        )
        return {"kind": "rational", "mode": mode, "value": value}
    if mode == "grassmannian":
        value = grassmannian_pairing(problem.k, problem.n, problem.phi)
        return {"kind": "rational", "mode": mode, "value": value}
    if mode == "flag":
        value = flag_pairing(problem.k, problem.n, problem.phi)
        return {"kind": "rational", "mode": mode, "value": value}
    raise ProblemFileError("$.mode", "unhandled mode %r" % mode)


def _moment_diagnostics(problem, stream):
    checks = problem.moment_checks
    if not checks:
        print("moment diagnostics: no matrix data in the problem file", file=stream)
        return True
    ok = True
    for i, item in enumerate(checks):
        point = [complex(re, im) for re, im in item["point"]]
        matrix = [[complex(re, im) for re, im in row] for row in item["matrix"]]
        shift = complex(Fraction(str(item.get("shift", 0))))
        sample = LinearActionSample(tuple(point), tuple(map(tuple, matrix)), shift)
        if "weight" in item:
            residual = fixed_point_weight_residual(sample, item["weight"])
            good = residual < 1e-8
            ok = ok and good
            print(
                "moment check %d: weight residual %.3e %s"
                % (i, residual, "ok" if good else "MISMATCH"),
                file=stream,
            )
        if "tangent" in item:
            tangent = [complex(re, im) for re, im in item["tangent"]]
            residual = moment_derivative_check(sample, tangent)
            good = residual < 1e-6
            ok = ok and good
            print(
                "moment check %d: derivative residual %.3e %s"
                % (i, residual, "ok" if good else "MISMATCH"),
                file=stream,
            )
    return ok


def _invariant_checks(problem, result, stream):
    """Cheap runtime spot checks relevant to the mode that just ran."""
    mode = problem.mode
    if mode.startswith("pair_") and problem.class_eta is not None:
        scaled = problemfile.ProblemFile(_scale_class(problem.doc, 3))
        doubled = run(scaled)
        if doubled["value"] != 3 * result["value"]:
            print("invariant check FAILED: pairing is not linear in the class", file=stream)
            return False
        print("invariant check: linearity in the class ok", file=stream)
    if result["kind"] == "series":
        series = result["value"]
        if any(c < 0 for c in series.coeffs):
            print("invariant check FAILED: negative series coefficient", file=stream)
            return False
        print("invariant check: nonnegative coefficients ok", file=stream)
    return True


def _scale_class(doc, factor):
    import copy

    doc = copy.deepcopy(doc)
    for term in doc.get("class", []):
        term["coeff"] = str(Fraction(str(term["coeff"])) * factor)
    for point in doc.get("fixed_points", []):
        for term in point.get("restriction", []) or []:
            term["coeff"] = str(Fraction(str(term["coeff"])) * factor)
    return doc


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="nrquot",
        description="Exact pairings, Betti series and ring data for GIT quotients "
        "from torus fixed-point and weight data.",
    )
    parser.add_argument("problem", help="JSON problem file (see the repo README)")
    parser.add_argument(
        "--format", choices=("text", "json", "latex"), default="text"
    )
    parser.add_argument(
        "--truncate", type=int, default=None, metavar="N",
        help="override the series truncation bound",
    )
    parser.add_argument(
        "--sign-flip", action="store_true",
        help="use the opposite orientation for residues at infinity",
    )
    parser.add_argument(
        "--check-invariants", action="store_true",
        help="run the property spot-checks relevant to this input",
    )
    parser.add_argument(
        "--check-moment", action="store_true",
        help="run the floating-point moment-map diagnostics, if data is present",
    )
    parser.add_argument(
        "--reemit", action="store_true",
        help="treat the input as a JSON result document and re-render it",
    )
    args = parser.parse_args(argv)

    if args.reemit:
        try:
            with open(args.problem, "r", encoding="utf-8") as handle:
                sys.stdout.write(reemit(handle.read()))
        except (OSError, ValueError, KeyError) as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 1
        return 0

    try:
        with open(args.problem, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        print("error: cannot read %s: %s" % (args.problem, exc), file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print("error: invalid JSON: %s" % exc, file=sys.stderr)
        return 1
    if args.truncate is not None:
        doc.setdefault("options", {})["truncation_bound"] = args.truncate

    try:
        problem = problemfile.parse(doc)
    except ProblemFileError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1

    try:
        result = run(problem, sign_flip=args.sign_flip)
    except (ValueError, ArithmeticError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2

    ok = True
    if args.check_moment:
        ok = _moment_diagnostics(problem, sys.stderr) and ok
    if args.check_invariants:
        try:
            ok = _invariant_checks(problem, result, sys.stderr) and ok
        except (ValueError, ArithmeticError) as exc:
            print("invariant check error: %s" % exc, file=sys.stderr)
            ok = False

    rendered = render_result(result, args.format)
    sys.stdout.write(rendered)
    outdir = os.environ.get("NRQUOT_OUTPUT_DIR")
    if outdir:
        stem = os.path.splitext(os.path.basename(args.problem))[0]
        ext = {"text": "txt", "json": "json", "latex": "tex"}[args.format]
        target = os.path.join(outdir, "%s.%s" % (stem, ext))
        try:
            with open(target, "w", encoding="utf-8") as handle:
                handle.write(rendered)
        except OSError as exc:
            print("error: cannot write %s: %s" % (target, exc), file=sys.stderr)
            return 2
    return 0 if ok else 2


if __name__ == "__main__":
    sys.exit(main())
