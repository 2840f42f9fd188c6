"""JSON problem files: schema, validation with field paths, construction.

Rationals are strings ``"p/q"`` (or JSON integers); polynomials are arrays of
``{"coeff": "p/q", "exp": [e_0, ..., e_{r-1}]}``; linear forms are arrays of
rationals; Weyl generators are either flat permutation arrays or nested
row-major rational matrices; series are integer coefficient arrays indexed
by the exponent of ``t``.  Validation failures carry the path of the
offending field.
"""

import json
from fractions import Fraction

from .betti import QuotientDims, StratumDatum
from .exactnum import TruncSeries
from .cohring import GradedRingPresentation
from .groupdata import ConeChoice, GroupData
from .localize import FixedPointComponent, PairingProblem
from .polyring import LinearForm, MultiPoly, RationalFn

__all__ = ["ProblemFileError", "ProblemFile", "load", "parse"]

MODES = (
    "pair_reductive",
    "pair_uhat",
    "pair_nonreductive",
    "pair_abelianized",
    "betti_uhat",
    "betti_H",
    "morse",
    "ring",
    "residue",
    "grassmannian",
    "flag",
)


class ProblemFileError(ValueError):
    """Schema violation; the message names the offending field path."""

    def __init__(self, path, message):
        self.path = path
        super().__init__("%s: %s" % (path, message))


def _expect(condition, path, message):
    if not condition:
        raise ProblemFileError(path, message)


def _rational(value, path):
    if isinstance(value, bool):
        raise ProblemFileError(path, "expected a rational, got a boolean")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ProblemFileError(path, "cannot parse %r as p/q" % value) from None
    raise ProblemFileError(path, "expected an integer or 'p/q' string")


def _int(value, path, minimum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ProblemFileError(path, "expected an integer")
    if minimum is not None and value < minimum:
        raise ProblemFileError(path, "must be at least %d" % minimum)
    return value


def _vector(value, length, path):
    _expect(isinstance(value, list), path, "expected an array of rationals")
    if length is not None:
        _expect(
            len(value) == length,
            path,
            "expected length %d, got %d" % (length, len(value)),
        )
    return [_rational(v, "%s[%d]" % (path, i)) for i, v in enumerate(value)]


def _poly(value, nvars, path):
    _expect(isinstance(value, list), path, "expected an array of terms")
    terms = {}
    for i, term in enumerate(value):
        tpath = "%s[%d]" % (path, i)
        _expect(isinstance(term, dict), tpath, "expected a term object")
        _expect("coeff" in term, tpath, "missing 'coeff'")
        _expect("exp" in term, tpath, "missing 'exp'")
        coeff = _rational(term["coeff"], tpath + ".coeff")
        exp = term["exp"]
        _expect(isinstance(exp, list), tpath + ".exp", "expected an array")
        _expect(
            len(exp) == nvars,
            tpath + ".exp",
            "expected length %d, got %d" % (nvars, len(exp)),
        )
        expo = tuple(_int(e, "%s.exp[%d]" % (tpath, j), minimum=0) for j, e in enumerate(exp))
        terms[expo] = terms.get(expo, Fraction(0)) + coeff
    return MultiPoly(nvars, terms)


def _series(value, bound, path):
    _expect(isinstance(value, list), path, "expected an array of integers")
    coeffs = [_int(c, "%s[%d]" % (path, i)) for i, c in enumerate(value)]
    if bound is None:
        bound = max(len(coeffs) - 1, 0)
    _expect(len(coeffs) <= bound + 1, path, "more coefficients than the bound allows")
    return TruncSeries(coeffs, bound)


def _generator(value, path):
    _expect(isinstance(value, list) and value, path, "expected a nonempty array")
    if isinstance(value[0], list):
        return tuple(
            tuple(
                _rational(x, "%s[%d][%d]" % (path, i, j))
                for j, x in enumerate(row)
            )
            for i, row in enumerate(value)
        )
    return tuple(_int(x, "%s[%d]" % (path, i)) for i, x in enumerate(value))


def _group(value, path):
    _expect(isinstance(value, dict), path, "expected a group object")
    rank = _int(value.get("rank"), path + ".rank", minimum=1)
    roots = value.get("positive_roots", [])
    _expect(isinstance(roots, list), path + ".positive_roots", "expected an array")
    roots = [
        LinearForm(_vector(r, rank, "%s.positive_roots[%d]" % (path, i)))
        for i, r in enumerate(roots)
    ]
    weights = value.get("unipotent_weights", [])
    _expect(isinstance(weights, list), path + ".unipotent_weights", "expected an array")
    weights = [
        LinearForm(_vector(w, rank, "%s.unipotent_weights[%d]" % (path, i)))
        for i, w in enumerate(weights)
    ]
    gens = value.get("weyl_generators", [])
    _expect(isinstance(gens, list), path + ".weyl_generators", "expected an array")
    gens = [
        _generator(g, "%s.weyl_generators[%d]" % (path, i)) for i, g in enumerate(gens)
    ]
    order = _int(value.get("weyl_order", 1), path + ".weyl_order", minimum=1)
    grading = value.get("grading")
    if grading is not None:
        grading = _vector(grading, rank, path + ".grading")
    ip = value.get("inner_product")
    if ip is not None:
        _expect(isinstance(ip, list), path + ".inner_product", "expected a matrix")
        ip = [
            _vector(row, rank, "%s.inner_product[%d]" % (path, i))
            for i, row in enumerate(ip)
        ]
        _expect(len(ip) == rank, path + ".inner_product", "expected %d rows" % rank)
    try:
        return GroupData(
            rank=rank,
            positive_roots=tuple(roots),
            unipotent_weights=tuple(weights),
            weyl_generators=tuple(gens),
            weyl_order=order,
            grading=tuple(grading) if grading is not None else None,
            inner_product=tuple(map(tuple, ip)) if ip is not None else None,
        )
    except ValueError as exc:
        raise ProblemFileError(path, str(exc)) from None


def _fixed_points(value, rank, path):
    _expect(isinstance(value, list) and value, path, "expected a nonempty array")
    out = []
    for i, item in enumerate(value):
        ipath = "%s[%d]" % (path, i)
        _expect(isinstance(item, dict), ipath, "expected a component object")
        _expect("normal_weights" in item, ipath, "missing 'normal_weights'")
        nw = item["normal_weights"]
        _expect(isinstance(nw, list) and nw, ipath + ".normal_weights", "expected a nonempty array")
        weights = []
        for j, pair in enumerate(nw):
            wpath = "%s.normal_weights[%d]" % (ipath, j)
            _expect(
                isinstance(pair, list) and len(pair) == 2,
                wpath,
                "expected [form, multiplicity]",
            )
            form = LinearForm(_vector(pair[0], rank, wpath + "[0]"))
            mult = _int(pair[1], wpath + "[1]", minimum=1)
            weights.append((form, mult))
        restriction = item.get("restriction")
        if restriction is not None:
            restriction = _poly(restriction, rank, ipath + ".restriction")
        lam = _rational(item.get("lambda_weight", 0), ipath + ".lambda_weight")
        is_min = item.get("is_min", False)
        _expect(isinstance(is_min, bool), ipath + ".is_min", "expected a boolean")
        try:
            out.append(
                FixedPointComponent(
                    name=str(item.get("name", "F%d" % i)),
                    normal_weights=tuple(weights),
                    restriction=restriction,
                    lambda_weight=lam,
                    is_min=is_min,
                )
            )
        except ValueError as exc:
            raise ProblemFileError(ipath, str(exc)) from None
    return tuple(out)


def _ring(value, path):
    _expect(isinstance(value, dict), path, "expected a ring object")
    if "dims" in value:
        dims = value["dims"]
        _expect(isinstance(dims, list) and dims, path + ".dims", "expected a nonempty array")
        return GradedRingPresentation.explicit(
            [_int(d, "%s.dims[%d]" % (path, i), minimum=0) for i, d in enumerate(dims)]
        )
    nvars = _int(value.get("nvars"), path + ".nvars", minimum=1)
    rels = value.get("relations", [])
    _expect(isinstance(rels, list), path + ".relations", "expected an array")
    relations = [
        _poly(r, nvars, "%s.relations[%d]" % (path, i)) for i, r in enumerate(rels)
    ]
    top = _int(value.get("top_degree"), path + ".top_degree", minimum=0)
    try:
        return GradedRingPresentation.polynomial_quotient(nvars, relations, top)
    except ValueError as exc:
        raise ProblemFileError(path, str(exc)) from None


class ProblemFile:
    """A parsed problem: mode, typed sections, and rendering options."""

    def __init__(self, doc):
        _expect(isinstance(doc, dict), "$", "problem file must be a JSON object")
        mode = doc.get("mode")
        _expect(
            mode in MODES,
            "$.mode",
            "expected one of %s, got %r" % (", ".join(MODES), mode),
        )
        self.mode = mode
        self.doc = doc
        options = doc.get("options", {})
        _expect(isinstance(options, dict), "$.options", "expected an object")
        self.truncation_bound = None
        if "truncation_bound" in options:
            self.truncation_bound = _int(
                options["truncation_bound"], "$.options.truncation_bound", minimum=0
            )
        self.normalization = None
        if "normalization" in options:
            self.normalization = _rational(
                options["normalization"], "$.options.normalization"
            )
        self.sign_flip = options.get("sign_flip", False)
        _expect(
            isinstance(self.sign_flip, bool), "$.options.sign_flip", "expected a boolean"
        )

        self.group = None
        if "group" in doc:
            self.group = _group(doc["group"], "$.group")

        self.cone = None
        if "cone" in doc:
            rank = self.group.rank if self.group else None
            self.cone = ConeChoice(tuple(_vector(doc["cone"], rank, "$.cone")))

        if mode.startswith("pair_"):
            _expect(self.group is not None, "$.group", "pairing modes need a group section")
            _expect("fixed_points" in doc, "$.fixed_points", "pairing modes need fixed points")
            self.fixed_points = _fixed_points(
                doc["fixed_points"], self.group.rank, "$.fixed_points"
            )
            self.class_eta = None
            if "class" in doc:
                self.class_eta = _poly(doc["class"], self.group.rank, "$.class")

        if mode in ("betti_uhat", "betti_H"):
            _expect("dims" in doc, "$.dims", "Betti modes need a dims section")
            dims = doc["dims"]
            _expect(isinstance(dims, dict), "$.dims", "expected an object")
            try:
                self.dims = QuotientDims(
                    _int(dims.get("dim_x"), "$.dims.dim_x", minimum=0),
                    _int(dims.get("dim_u"), "$.dims.dim_u", minimum=0),
                    _int(dims.get("dim_zmin"), "$.dims.dim_zmin", minimum=0),
                )
            except ValueError as exc:
                raise ProblemFileError("$.dims", str(exc)) from None
            bound = self.truncation_bound
            if bound is None:
                bound = 2 * self.dims.dim_x
            self.zmin_series = _series(
                doc.get("zmin_series", [1]), bound, "$.zmin_series"
            )

        if mode == "morse":
            _expect("strata" in doc, "$.strata", "morse mode needs strata")
            strata = doc["strata"]
            _expect(isinstance(strata, list), "$.strata", "expected an array")
            bound = self.truncation_bound
            self.strata = []
            for i, item in enumerate(strata):
                ipath = "$.strata[%d]" % i
                _expect(isinstance(item, dict), ipath, "expected a stratum object")
                codim = _int(item.get("codim"), ipath + ".codim", minimum=0)
                series = _series(item.get("series", [1]), bound, ipath + ".series")
                self.strata.append(StratumDatum(codim, series))
            self.total_series = None
            if "total_series" in doc:
                self.total_series = _series(
                    doc["total_series"], bound, "$.total_series"
                )

        if mode == "ring":
            _expect("ring" in doc, "$.ring", "ring mode needs a ring section")
            _expect(self.group is not None, "$.group", "ring mode needs a group section")
            self.ring = _ring(doc["ring"], "$.ring")

        if mode == "residue":
            _expect("integrand" in doc, "$.integrand", "residue mode needs an integrand")
            section = doc["integrand"]
            _expect(isinstance(section, dict), "$.integrand", "expected an object")
            rank = self.group.rank if self.group else _int(
                doc.get("rank"), "$.rank", minimum=1
            )
            num = _poly(section.get("numerator", []), rank, "$.integrand.numerator")
            den = []
            for i, pair in enumerate(section.get("denominator", [])):
                dpath = "$.integrand.denominator[%d]" % i
                _expect(
                    isinstance(pair, list) and len(pair) == 2,
                    dpath,
                    "expected [form, multiplicity]",
                )
                den.append(
                    (
                        LinearForm(_vector(pair[0], rank, dpath + "[0]")),
                        _int(pair[1], dpath + "[1]", minimum=1),
                    )
                )
            try:
                self.integrand = RationalFn(num, den)
            except ValueError as exc:
                raise ProblemFileError("$.integrand", str(exc)) from None
            self.basis = None
            if "basis" in doc:
                basis = doc["basis"]
                _expect(isinstance(basis, list), "$.basis", "expected an array of forms")
                self.basis = tuple(
                    LinearForm(_vector(b, rank, "$.basis[%d]" % i))
                    for i, b in enumerate(basis)
                )
            self.epsilon = None
            if "epsilon" in doc:
                self.epsilon = tuple(_vector(doc["epsilon"], rank, "$.epsilon"))
            if self.cone is None and "cone" in doc:
                self.cone = ConeChoice(tuple(_vector(doc["cone"], rank, "$.cone")))

        if mode in ("grassmannian", "flag"):
            self.k = _int(doc.get("k"), "$.k", minimum=1)
            self.n = _int(doc.get("n"), "$.n", minimum=self.k)
            _expect("phi" in doc, "$.phi", "missing the class to integrate")
            self.phi = _poly(doc["phi"], self.k, "$.phi")

        self.moment_checks = []
        if "moment_checks" in doc:
            checks = doc["moment_checks"]
            _expect(isinstance(checks, list), "$.moment_checks", "expected an array")
            for i, item in enumerate(checks):
                ipath = "$.moment_checks[%d]" % i
                _expect(isinstance(item, dict), ipath, "expected an object")
                self.moment_checks.append(item)

    def pairing_problem(self):
        return PairingProblem(
            group=self.group,
            fixed_points=self.fixed_points,
            class_eta=self.class_eta,
            cone=self.cone,
            normalization=self.normalization,
        )


def parse(doc):
    return ProblemFile(doc)


def load(path):
    with open(path, "r", encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ProblemFileError("$", "invalid JSON: %s" % exc) from None
    return ProblemFile(doc)
