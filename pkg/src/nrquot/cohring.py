"""Finite graded rings: invariant subrings, annihilators, quotient Betti data.

A cohomology ring is presented either as a polynomial quotient (variables
``z_0..z_{r-1}`` and a list of homogeneous relations making every graded
piece finite dimensional) or as explicit per-degree dimensions with optional
structure constants.  All operations are per-degree exact linear algebra
over the rationals: no Groebner bases, just monomial spanning sets and rank
computations, which is all the finite-dimensional rings in scope require.

The headline computation composes three steps: average over the Weyl group
to present the invariant subring, intersect with the annihilator of the
root-and-unipotent Euler class, and read off graded dimensions, doubling the
ring grading into the cohomological one.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

from . import _linalg
from .exactnum import TruncSeries, as_fraction
from .groupdata import GroupData, euler_class_nonreductive
from .localize import WeylInvarianceError
from .polyring import MultiPoly, weyl_act

__all__ = [
    "GradedRingPresentation",
    "graded_dims",
    "invariant_basis",
    "reynolds_project",
    "annihilator_dims",
    "quotient_presentation_betti",
]


def _monomials(nvars, degree):
    """All exponent tuples of the given total degree, in a fixed order."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        expo = [0] * nvars
        for i in combo:
            expo[i] += 1
        out.append(tuple(expo))
    return sorted(out)


class GradedRingPresentation:
    """A graded ring with finite graded pieces up to ``top_degree``.

    Polynomial-quotient form (``GradedRingPresentation.polynomial_quotient``):
    graded pieces are monomials modulo the degree slice of the relation
    ideal; elements are reduced to coordinates on the non-pivot monomials.

    Explicit form (``GradedRingPresentation.explicit``): declared per-degree
    dimensions, with optional structure constants
    ``mult[(d1, i, d2, j)] -> coefficient list in degree d1+d2`` enabling
    multiplication maps, and optional per-degree Weyl matrices.
    """

    def __init__(self):
        raise TypeError("use the polynomial_quotient or explicit constructors")

    @classmethod
    def polynomial_quotient(cls, nvars, relations, top_degree):
        self = object.__new__(cls)
        self.form = "polynomial"
        self.nvars = nvars
        self.top_degree = int(top_degree)
        if self.top_degree < 0:
            raise ValueError("top degree must be nonnegative")
        rels = []
        for rel in relations:
            if not isinstance(rel, MultiPoly):
                raise TypeError("relations must be MultiPoly instances")
            if rel.nvars != nvars:
                raise ValueError("relation variable count does not match ring")
            if rel.is_zero():
                continue
            if not rel.is_homogeneous():
                raise ValueError("relations must be homogeneous")
            rels.append(rel)
        self.relations = tuple(rels)
        self._degree_cache = {}
        if self._dim(self.top_degree + 1) != 0:
            raise ValueError(
                "graded piece in degree %d does not vanish; top degree too small"
                % (self.top_degree + 1)
            )
        return self

    @classmethod
    def explicit(cls, dims, mult=None, weyl_matrices=None):
        self = object.__new__(cls)
        self.form = "explicit"
        self.dims = tuple(int(d) for d in dims)
        if any(d < 0 for d in self.dims):
            raise ValueError("declared dimensions must be nonnegative")
        self.top_degree = len(self.dims) - 1
        self.mult = dict(mult) if mult else None
        self.weyl_matrices = weyl_matrices
        return self

    # -- polynomial-quotient internals --------------------------------------

    def _degree_data(self, degree):
        """(monomials, ideal rref rows, pivot set, free column indices)."""
        if degree in self._degree_cache:
            return self._degree_cache[degree]
        mons = _monomials(self.nvars, degree)
        index = {m: i for i, m in enumerate(mons)}
        rows = []
        for rel in self.relations:
            shift = degree - rel.total_degree()
            if shift < 0:
                continue
            for m in _monomials(self.nvars, shift):
                row = [Fraction(0)] * len(mons)
                for expo, coeff in rel.terms.items():
                    key = tuple(a + b for a, b in zip(expo, m))
                    row[index[key]] = coeff
                rows.append(row)
        reduced, pivots = _linalg.rref(rows)
        pivot_set = set(pivots)
        free = [i for i in range(len(mons)) if i not in pivot_set]
        data = (mons, reduced, pivots, free)
        self._degree_cache[degree] = data
        return data

    def _dim(self, degree):
        if self.form == "explicit":
            return self.dims[degree] if 0 <= degree <= self.top_degree else 0
        if degree < 0:
            return 0
        return len(self._degree_data(degree)[3])

    def dimension(self, degree):
        """Dimension of the graded piece (zero beyond the top degree)."""
        if degree > self.top_degree or degree < 0:
            return 0
        return self._dim(degree)

    def reduce(self, poly, degree=None):
        """Quotient coordinates of a homogeneous polynomial.

        Reduces modulo the degree slice of the relation ideal and returns the
        coefficient vector on the non-pivot monomials of that degree.
        """
        if self.form != "polynomial":
            raise TypeError("reduce requires the polynomial-quotient form")
        if poly.is_zero():
            degree = 0 if degree is None else degree
            return [Fraction(0)] * self.dimension(degree)
        if not poly.is_homogeneous():
            raise ValueError("can only reduce homogeneous elements")
        degree = poly.total_degree() if degree is None else degree
        if degree > self.top_degree:
            return []
        mons, reduced, pivots, free = self._degree_data(degree)
        index = {m: i for i, m in enumerate(mons)}
        v = [Fraction(0)] * len(mons)
        for expo, coeff in poly.terms.items():
            v[index[expo]] = coeff
        for row, p in zip(reduced, pivots):
            factor = v[p]
            if factor != 0:
                v = [x - factor * y for x, y in zip(v, row)]
        return [v[i] for i in free]

    def element(self, degree, vector):
        """Polynomial representative of quotient coordinates at a degree."""
        if self.form != "polynomial":
            raise TypeError("element requires the polynomial-quotient form")
        mons, _, _, free = self._degree_data(degree)
        terms = {}
        for coeff, col in zip(vector, free):
            if coeff != 0:
                terms[mons[col]] = coeff
        return MultiPoly(self.nvars, terms)

    def basis_elements(self, degree):
        """Monomial representatives of the quotient basis at a degree."""
        mons, _, _, free = self._degree_data(degree)
        return [MultiPoly(self.nvars, {mons[i]: 1}) for i in free]

    # -- explicit-form multiplication ---------------------------------------

    def _explicit_mult_matrix(self, d, e_degree, e_vector):
        if self.mult is None:
            raise ValueError("explicit presentation has no structure constants")
        target = d + e_degree
        rows_out = self.dimension(target)
        cols = self.dimension(d)
        matrix = [[Fraction(0)] * cols for _ in range(rows_out)]
        for i in range(cols):
            for j, ec in enumerate(e_vector):
                if ec == 0:
                    continue
                key = (d, i, e_degree, j)
                entry = self.mult.get(key)
                if entry is None:
                    raise ValueError("missing structure constant for %r" % (key,))
                for r, c in enumerate(entry):
                    matrix[r][i] += as_fraction(c) * as_fraction(ec)
        return matrix


def graded_dims(ringp):
    """Dimension of each graded piece, degrees 0..top."""
    return tuple(ringp.dimension(d) for d in range(ringp.top_degree + 1))


def _weyl_elements_as_generators(ringp, weyl):
    """All Weyl elements, realised as variable substitutions for the ring."""
    if isinstance(weyl, GroupData):
        group = weyl
    else:
        generators, order = weyl
        group = GroupData(
            rank=ringp.nvars, weyl_generators=tuple(generators), weyl_order=int(order)
        )
    if group.rank != ringp.nvars:
        raise ValueError("Weyl data rank does not match the ring")
    return group.weyl_elements(), group.weyl_order, group.weyl_generators


def _check_relations_preserved(ringp, generators):
    for gen in generators:
        for rel in ringp.relations:
            image = weyl_act(rel, gen)
            if any(c != 0 for c in ringp.reduce(image)):
                raise ValueError(
                    "Weyl generator %r does not preserve the relation ideal" % (gen,)
                )


def reynolds_project(ringp, weyl, poly, degree=None):
    """Average a homogeneous element over the Weyl group, reduced.

    Returns quotient coordinates of the invariant projection; averaging is
    idempotent, so projecting a projected element changes nothing.  The
    degree only needs to be passed for the zero polynomial, whose degree is
    not recoverable from its terms.
    """
    if ringp.form != "polynomial":
        raise TypeError("projection requires the polynomial-quotient form")
    elements, order, _ = _weyl_elements_as_generators(ringp, weyl)
    if degree is None:
        degree = max(poly.total_degree(), 0)
    if poly.is_zero():
        return [Fraction(0)] * ringp.dimension(degree)
    total = MultiPoly.zero(ringp.nvars)
    for m in elements:
        total = total + weyl_act(poly, [list(row) for row in m])
    return [c / order for c in ringp.reduce(total, degree)]


def invariant_basis(ringp, weyl):
    """Per-degree basis of the Weyl-invariant subring, by Reynolds averaging.

    Averages every quotient basis monomial and extracts a maximal
    independent subset of the projections per degree.  Returns a dict
    ``degree -> list of quotient-coordinate vectors``.
    """
    if ringp.form == "explicit":
        raise TypeError(
            "invariant basis of an explicit presentation needs per-degree "
            "Weyl matrices; supply the polynomial-quotient form instead"
        )
    elements, order, generators = _weyl_elements_as_generators(ringp, weyl)
    _check_relations_preserved(ringp, generators)
    out = {}
    for degree in range(ringp.top_degree + 1):
        projections = []
        for mono in ringp.basis_elements(degree):
            total = MultiPoly.zero(ringp.nvars)
            for m in elements:
                total = total + weyl_act(mono, [list(row) for row in m])
            projections.append(
                [c / order for c in ringp.reduce(total, degree)]
            )
        keep = _linalg.independent_subset(projections)
        out[degree] = [projections[i] for i in keep]
    return out


def _as_ring_element(ringp, e):
    if isinstance(e, MultiPoly):
        if ringp.form != "polynomial":
            raise ValueError(
                "polynomial element given for an explicit presentation"
            )
        if e.nvars != ringp.nvars:
            raise ValueError("element is not expressible in the ring variables")
        if not e.is_homogeneous():
            raise ValueError("element must be homogeneous")
        return e.total_degree(), e
    degree, vector = e
    return int(degree), list(vector)


def annihilator_dims(ringp, e):
    """Per-degree dimensions of the annihilator of a homogeneous element.

    In each degree the annihilator piece is the kernel of multiplication by
    the element into the higher degree (zero beyond the top, where the ring
    itself vanishes).
    """
    e_degree, e_obj = _as_ring_element(ringp, e)
    dims = []
    for d in range(ringp.top_degree + 1):
        n = ringp.dimension(d)
        if n == 0:
            dims.append(0)
            continue
        target = d + e_degree
        if ringp.dimension(target) == 0:
            dims.append(n)
            continue
        if ringp.form == "polynomial":
            columns = [
                ringp.reduce(b * e_obj, target) for b in ringp.basis_elements(d)
            ]
            rows = [
                [columns[c][r] for c in range(n)]
                for r in range(len(columns[0]))
            ]
        else:
            rows = ringp._explicit_mult_matrix(d, e_degree, e_obj)
        dims.append(n - _linalg.rank(rows))
    return tuple(dims)


def quotient_presentation_betti(ringp, weyl, group):
    """Betti series of invariants modulo the annihilator of the Euler class.

    The Euler class is the product over the roots of the Levi and the
    adjoint weights on the unipotent radical, taken from ``group``; it must
    be Weyl-invariant and expressible in the ring variables.  In ring degree
    ``k`` the quotient dimension is the rank of multiplication by the Euler
    class restricted to the invariant subspace, and it contributes in
    cohomological degree ``2k``.
    """
    e = euler_class_nonreductive(group)
    if ringp.form != "polynomial":
        raise TypeError("quotient Betti data requires the polynomial-quotient form")
    if e.nvars != ringp.nvars:
        raise ValueError("Euler class is not expressible in the ring variables")
    for index, gen in enumerate(group.weyl_generators):
        if weyl_act(e, gen) != e:
            raise WeylInvarianceError(index, gen)
    e_degree = e.total_degree() if not e.is_constant() else 0
    inv = invariant_basis(ringp, weyl)
    bound = 2 * ringp.top_degree
    coeffs = {}
    for d, vectors in inv.items():
        if not vectors:
            continue
        target = d + e_degree
        if ringp.dimension(target) == 0:
            continue
        images = [
            ringp.reduce(ringp.element(d, v) * e, target) for v in vectors
        ]
        r = _linalg.rank(images)
        if r:
            coeffs[2 * d] = r
    return TruncSeries.from_dict(coeffs, bound)
