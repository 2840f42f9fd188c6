"""One-variable and iterated residues of factored rational functions.

Everything here is exact.  A residue in the variable ``z_i`` is extracted by
formally expanding each denominator factor ``a*z_i + b(z')`` in powers of
``z_i`` (around zero) or ``1/z_i`` (around infinity), truncated at the finite
order that can contribute to the ``z_i^{-1}`` coefficient; that order is
bounded by the numerator degree, so no division of polynomials is ever
needed.  The signed operator :func:`res_plus` keeps the coefficient of
``z_i^{-1}`` of the expansion at infinity when its direction component is
nonnegative and returns zero otherwise; the sign is calibrated so that the
degree of the hyperplane class on projective space comes out +1.  The
iterated operator :func:`jk_residue` runs the variables in basis order and
normalises by the Gram determinant of the basis.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import _linalg
from .exactnum import as_fraction
from .groupdata import ConeChoice
from .polyring import LinearForm, MultiPoly, RationalFn

__all__ = [
    "ResidueProblem",
    "residue_at_zero",
    "residue_at_infinity",
    "res_plus",
    "jk_residue",
    "iterated_residue_at_zero",
]


def _var_slices(poly, var):
    """Split a polynomial by its degree in ``var``; slices do not involve ``var``."""
    slices = {}
    for expo, coeff in poly.terms.items():
        k = expo[var]
        stripped = tuple(0 if i == var else e for i, e in enumerate(expo))
        bucket = slices.setdefault(k, {})
        bucket[stripped] = bucket.get(stripped, Fraction(0)) + coeff
    return {
        k: MultiPoly(poly.nvars, terms) for k, terms in slices.items()
    }


def _series_mul(a, b, jmax, nvars):
    """Truncated product of two {order: MultiPoly} expansions."""
    out = {}
    for i, pi in a.items():
        if i > jmax:
            continue
        for j, pj in b.items():
            if i + j > jmax:
                continue
            prod = pi * pj
            if (i + j) in out:
                out[i + j] = out[i + j] + prod
            else:
                out[i + j] = prod
    return out


def _split_factors(fn, var):
    """Classify denominator factors by their behaviour in ``var``.

    Returns (pole_mult, pole_scale, mixed, params) where pure poles are the
    factors ``a*z_var``, mixed factors are ``a*z_var + b`` with ``b`` nonzero,
    and params do not involve ``z_var`` at all.
    """
    pole_mult = 0
    pole_scale = Fraction(1)
    mixed = []
    params = []
    for form, mult in fn.den:
        a = form.coeffs[var]
        rest = LinearForm(
            [Fraction(0) if i == var else c for i, c in enumerate(form.coeffs)]
        )
        if a == 0:
            params.append((form, mult))
        elif rest.is_zero():
            pole_mult += mult
            pole_scale *= a**mult
        else:
            mixed.append((a, rest, mult))
    return pole_mult, pole_scale, mixed, params


def residue_at_zero(fn, var):
    """Coefficient of ``z_var^{-1}`` in the expansion around ``z_var = 0``.

    Other variables ride along as parameters; the result is a rational
    function which no longer involves ``z_var``.
    """
    n = fn.nvars
    pole_mult, pole_scale, mixed, params = _split_factors(fn, var)
    if pole_mult == 0 or fn.num.is_zero():
        return RationalFn(MultiPoly.zero(n))
    order = pole_mult - 1
    # each mixed factor 1/(a z + b)^m contributes, over the common factor
    # b^(m + order), the polynomial sum_j (-1)^j C(m+j-1, j) a^j b^(order-j) z^j
    series = {0: MultiPoly.one(n)}
    for a, rest, mult in mixed:
        rest_poly = rest.to_poly()
        expansion = {}
        for j in range(order + 1):
            coeff = Fraction((-1) ** j) * comb(mult + j - 1, j) * a**j
            expansion[j] = (rest_poly ** (order - j)) * coeff
        series = _series_mul(series, expansion, order, n)
    num_slices = _var_slices(fn.num, var)
    total = MultiPoly.zero(n)
    for k, slice_poly in num_slices.items():
        j = order - k
        if j in series:
            total = total + slice_poly * series[j]
    if total.is_zero():
        return RationalFn(MultiPoly.zero(n))
    total = total * (1 / pole_scale)
    den = list(params) + [(rest, mult + order) for _, rest, mult in mixed]
    return RationalFn(total, den)


def residue_at_infinity(fn, var):
    """Coefficient of ``z_var^{-1}`` in the expansion around ``z_var = infinity``.

    Note this is the bare Laurent coefficient, which equals the sum of the
    residues at all finite poles in ``z_var``; the classical residue at
    infinity is its negative.
    """
    n = fn.nvars
    pole_mult, pole_scale, mixed, params = _split_factors(fn, var)
    base_mult = pole_mult + sum(m for _, _, m in mixed)
    num_slices = _var_slices(fn.num, var)
    if not num_slices:
        return RationalFn(MultiPoly.zero(n))
    jmax = max(num_slices) - base_mult + 1
    if jmax < 0:
        return RationalFn(MultiPoly.zero(n))
    # 1/(a z + b)^m expands at infinity as
    # sum_j (-1)^j C(m+j-1, j) b^j a^(-m-j) z^(-m-j); pure poles only keep j=0
    series = {0: MultiPoly.constant(n, 1 / pole_scale)}
    for a, rest, mult in mixed:
        rest_poly = rest.to_poly()
        expansion = {}
        for j in range(jmax + 1):
            coeff = Fraction((-1) ** j) * comb(mult + j - 1, j) / a ** (mult + j)
            expansion[j] = (rest_poly**j) * coeff
        series = _series_mul(series, expansion, jmax, n)
    total = MultiPoly.zero(n)
    for k, slice_poly in num_slices.items():
        j = k - base_mult + 1
        if j >= 0 and j in series:
            total = total + slice_poly * series[j]
    if total.is_zero():
        return RationalFn(MultiPoly.zero(n))
    return RationalFn(total, params)


def res_plus(fn, var, epsilon_component=0, sign_flip=False):
    """Signed residue at infinity with the nonnegative-direction branch.

    When ``epsilon_component`` is negative the operator is identically zero;
    otherwise it returns the ``z_var^{-1}`` coefficient of the expansion at
    infinity, with an optional global sign flip for callers who prefer the
    classical orientation of the residue at infinity.
    """
    if as_fraction(epsilon_component) < 0:
        return RationalFn(MultiPoly.zero(fn.nvars))
    out = residue_at_infinity(fn, var)
    return -out if sign_flip else out


def iterated_residue_at_zero(fn):
    """Iterate :func:`residue_at_zero` over all variables; returns a scalar."""
    for var in range(fn.nvars):
        fn = residue_at_zero(fn, var)
    if not fn.is_constant():
        raise ArithmeticError("iterated residue left a non-scalar remainder")
    return fn.constant_value()


@dataclass(frozen=True)
class ResidueProblem:
    """An iterated-residue instance.

    ``basis`` is an ordered tuple of linear forms giving the coordinates in
    which the residues are iterated (defaults to the standard coordinates);
    the first basis form is the distinguished chamber direction.  ``cone``
    is a :class:`~nrquot.groupdata.ConeChoice`; when present it must avoid
    every denominator wall, and when a basis is supplied alongside it the
    basis must be normalised against it (first form 1, the rest 0).
    ``epsilon`` holds the direction components used for the branch decisions,
    one per variable; the default (all zero) takes every residue at infinity.
    """

    integrand: RationalFn
    cone: ConeChoice = None
    basis: tuple = None
    epsilon: tuple = None
    inner_product: tuple = None
    sign_flip: bool = False

    def __post_init__(self):
        n = self.integrand.nvars
        if self.basis is not None:
            basis = tuple(
                b if isinstance(b, LinearForm) else LinearForm(b) for b in self.basis
            )
            if len(basis) != n:
                raise ValueError("basis must contain one form per variable")
            object.__setattr__(self, "basis", basis)
        if self.epsilon is not None:
            eps = tuple(as_fraction(x) for x in self.epsilon)
            if len(eps) != n:
                raise ValueError("epsilon needs one component per variable")
            object.__setattr__(self, "epsilon", eps)
        if self.cone is not None and not isinstance(self.cone, ConeChoice):
            object.__setattr__(self, "cone", ConeChoice(tuple(self.cone)))

    def basis_matrix(self):
        n = self.integrand.nvars
        if self.basis is None:
            return _linalg.identity(n)
        return [list(b.coeffs) for b in self.basis]

    def validate(self):
        n = self.integrand.nvars
        matrix = self.basis_matrix()
        if _linalg.det(matrix) == 0:
            raise ValueError("residue basis is not invertible")
        if self.cone is not None:
            self.cone.validate(form for form, _ in self.integrand.den)
            if self.basis is not None:
                values = [b(self.cone.xi) for b in self.basis]
                if values[0] != 1 or any(v != 0 for v in values[1:]):
                    raise ValueError(
                        "basis is not normalised against the cone vector: "
                        "expected values (1, 0, ..., 0), got %s" % (values,)
                    )


def jk_residue(problem):
    """Iterated residue in basis order, over the Gram determinant of the basis.

    The integrand is rewritten in the basis coordinates, the signed residue
    :func:`res_plus` is applied variable by variable in basis order, and the
    resulting scalar is divided by the determinant of the matrix of inner
    products of the basis forms.  The scalar is exact; a nonzero answer
    requires the integrand's homogeneity degree to be minus the number of
    variables, otherwise the degree bookkeeping forces zero.
    """
    problem.validate()
    fn = problem.integrand
    n = fn.nvars
    if problem.basis is not None:
        matrix = problem.basis_matrix()
        inverse = _linalg.inverse(matrix)
        images = [
            MultiPoly(
                n,
                {
                    tuple(1 if k == i else 0 for k in range(n)): inverse[j][i]
                    for i in range(n)
                    if inverse[j][i] != 0
                },
            )
            for j in range(n)
        ]
        num = fn.num.substitute_linear(images)
        den = [(form.transform(inverse), mult) for form, mult in fn.den]
        fn = RationalFn(num, den)
    epsilon = problem.epsilon or (Fraction(0),) * n
    for var in range(n):
        fn = res_plus(fn, var, epsilon[var], problem.sign_flip)
    if not fn.is_constant():
        raise ArithmeticError("iterated residue left a non-scalar remainder")
    value = fn.constant_value()
    basis = problem.basis
    if basis is None:
        basis = tuple(
            LinearForm([1 if j == i else 0 for j in range(n)]) for i in range(n)
        )
    ip = problem.inner_product
    ip = _linalg.to_matrix(ip) if ip is not None else _linalg.identity(n)
    gram = [
        [
            sum(
                (
                    basis[i].coeffs[a] * ip[a][b] * basis[j].coeffs[b]
                    for a in range(n)
                    for b in range(n)
                ),
                Fraction(0),
            )
            for j in range(n)
        ]
        for i in range(n)
    ]
    gram_det = _linalg.det(gram)
    if gram_det == 0:
        raise ValueError("basis Gram determinant vanishes")
    return value / gram_det
