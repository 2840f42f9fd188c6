"""Intersection pairings on quotients from torus fixed-point data.

Each evaluator takes the same kind of input: a list of torus-fixed
components, each carrying the restriction of the integrand class and the
weights of its normal bundle, plus the group combinatorics that determine
the extra Euler factor in the numerator.  The reductive evaluator multiplies
the fixed-point sum by the product over the full root system; the evaluator
for a graded unipotent extension works in rank one and keeps only the
components where the grading circle takes its minimal moment value; the
general evaluator inserts the product over roots and unipotent weights; and
the abelianised evaluator reduces everything to a torus-quotient pairing
divided by the Weyl order.  The per-component pairing terms combine by plain
addition of exact scalars, so the summation order never matters; components
selected by the chamber are the caller's data-preparation responsibility.

The projective-space and flag wrappers evaluate the classical iterated
residue at zero and double as the calibration suite for the sign
conventions.

>>> z = [MultiPoly.variable(2, i) for i in range(2)]
>>> grassmannian_pairing(2, 4, (z[0] + z[1]) ** 4)
Fraction(2, 1)
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exactnum import as_fraction
from .groupdata import euler_class_nonreductive
from .polyring import LinearForm, MultiPoly, RationalFn, weyl_act
from .residue import ResidueProblem, iterated_residue_at_zero, jk_residue, res_plus

__all__ = [
    "FixedPointComponent",
    "PairingProblem",
    "WeylInvarianceError",
    "integrate_reductive",
    "integrate_uhat",
    "integrate_nonreductive",
    "integrate_abelianized",
    "torus_pairing_fn",
    "flag_pairing",
    "grassmannian_pairing",
]


class WeylInvarianceError(ValueError):
    """The class fails Weyl invariance; carries a witness generator."""

    def __init__(self, generator_index, generator):
        self.generator_index = generator_index
        self.generator = generator
        super().__init__(
            "class is not Weyl-invariant; witness generator #%d: %r"
            % (generator_index, generator)
        )


@dataclass(frozen=True)
class FixedPointComponent:
    """One torus-fixed component with its localisation data.

    ``restriction`` is the restricted integrand class (a MultiPoly or a
    RationalFn, the latter for positive-dimensional components whose fibre
    integral has already been carried out); ``None`` means the component sits
    where the global class restricts to itself, as for the origin of a linear
    space, and the problem's class is used directly.  ``normal_weights`` is a
    sequence of (linear form, multiplicity) pairs whose product is the
    equivariant Euler class of the normal bundle.  ``lambda_weight`` is the
    moment value of the grading circle on the component and ``is_min`` flags
    membership in the minimal level.
    """

    name: str
    normal_weights: tuple
    restriction: object = None
    lambda_weight: Fraction = Fraction(0)
    is_min: bool = False

    def __post_init__(self):
        weights = []
        for form, mult in self.normal_weights:
            if not isinstance(form, LinearForm):
                form = LinearForm(form)
            if form.is_zero():
                raise ValueError(
                    "component %r has a zero normal weight" % (self.name,)
                )
            weights.append((form, int(mult)))
        object.__setattr__(self, "normal_weights", tuple(weights))
        object.__setattr__(self, "lambda_weight", as_fraction(self.lambda_weight))

    def term(self, default_class, extra_factor):
        """The component's contribution (class * factor) / Euler(normal)."""
        restriction = self.restriction
        if restriction is None:
            restriction = default_class
        if restriction is None:
            raise ValueError(
                "component %r has no restriction and no problem class given"
                % (self.name,)
            )
        if isinstance(restriction, MultiPoly):
            restriction = RationalFn(restriction)
        out = restriction * extra_factor
        return RationalFn(out.num, out.den + self.normal_weights)


@dataclass(frozen=True)
class PairingProblem:
    """A pairing instance: group data, fixed components, class, chamber.

    ``normalization`` is the overall rational constant; when omitted it
    defaults to 1/(Weyl order), which matches the 1/k! of the Grassmannian
    and is overridable for actions whose generic stabiliser is nontrivial.
    """

    group: object
    fixed_points: tuple
    class_eta: MultiPoly = None
    cone: object = None
    normalization: Fraction = None

    def __post_init__(self):
        object.__setattr__(self, "fixed_points", tuple(self.fixed_points))
        if self.normalization is not None:
            object.__setattr__(
                self, "normalization", as_fraction(self.normalization)
            )

    def constant(self):
        if self.normalization is not None:
            return self.normalization
        return Fraction(1, self.group.weyl_order)

    def minimal_components(self):
        return tuple(c for c in self.fixed_points if c.is_min)


def _check_weyl_invariant(poly, group):
    for index, gen in enumerate(group.weyl_generators):
        if weyl_act(poly, gen) != poly:
            raise WeylInvarianceError(index, gen)


def _sum_jk(problem, factor):
    total = Fraction(0)
    for comp in problem.fixed_points:
        term = comp.term(problem.class_eta, factor)
        total += jk_residue(ResidueProblem(integrand=term, cone=problem.cone))
    return total


def integrate_reductive(problem):
    """Pairing on a reductive quotient from maximal-torus fixed points.

    Evaluates the iterated residue of the fixed-point sum multiplied by the
    product over the full root system of the Levi, times the problem
    constant.  The product over all roots equals the squared product of the
    positive roots up to (-1)^(number of positive roots); using the full
    product is what makes the hyperplane-class calibration come out +1, and
    it keeps this evaluator consistent with the general one below on data
    with no unipotent directions.
    """
    if problem.group.unipotent_weights:
        raise ValueError("reductive pairing requires no unipotent weights")
    if not problem.fixed_points:
        raise ValueError("fixed-point list is empty")
    factor = euler_class_nonreductive(problem.group)
    return problem.constant() * _sum_jk(problem, factor)


def integrate_uhat(problem, sign_flip=False):
    """Pairing on the quotient by a graded unipotent extension U x| C*.

    Rank-one torus: the pairing is the signed residue at infinity of the sum
    over the minimal fixed components of (class * Euler of the Lie(U)
    bundle) / Euler(normal), times the problem constant.
    """
    if problem.group.rank != 1:
        raise ValueError("graded-extension pairing requires a rank 1 torus")
    minimal = problem.minimal_components()
    if not minimal:
        raise ValueError("no component is flagged as minimal")
    floor = min(c.lambda_weight for c in problem.fixed_points)
    mislabeled = [
        c.name for c in problem.fixed_points if c.is_min != (c.lambda_weight == floor)
    ]
    if mislabeled:
        raise ValueError(
            "minimality flags disagree with the moment values on: %s"
            % ", ".join(mislabeled)
        )
    factor = MultiPoly.one(1)
    for w in problem.group.unipotent_weights:
        factor = factor * w.to_poly()
    total = Fraction(0)
    for comp in minimal:
        term = comp.term(problem.class_eta, factor)
        value = res_plus(term, 0, 0, sign_flip)
        total += value.constant_value()
    return problem.constant() * total


def integrate_nonreductive(problem):
    """Pairing on the quotient by H = U x| R with graded unipotent radical.

    The numerator factor is the Euler class of the bundle built from every
    root of R and every adjoint weight on Lie(U); the class must be
    Weyl-invariant (a failing generator is reported).  The fixed components
    supplied by the caller are the ones selected by the chamber.
    """
    if not problem.fixed_points:
        raise ValueError("fixed-point list is empty")
    if problem.class_eta is not None:
        _check_weyl_invariant(problem.class_eta, problem.group)
    factor = euler_class_nonreductive(problem.group)
    return problem.constant() * _sum_jk(problem, factor)


def torus_pairing_fn(fixed_points, cone=None, normalization=1):
    """Pairing evaluator on the maximal-torus quotient itself.

    Returns a function of a class (MultiPoly) that runs the iterated residue
    over all supplied fixed components with a trivial Euler factor in the
    numerator.  This is the abelian side of the abelianisation formula.
    """
    fixed_points = tuple(fixed_points)
    scale = as_fraction(normalization)

    def pairing(cls):
        nvars = cls.nvars
        one = MultiPoly.one(nvars)
        total = Fraction(0)
        for comp in fixed_points:
            term = comp.term(cls, one)
            total += jk_residue(ResidueProblem(integrand=term, cone=cone))
        return scale * total

    return pairing


def integrate_abelianized(torus_pairing_value_fn, a_tilde, e, weyl_order):
    """Pairing through the torus quotient: pair the lift cup the root-and-
    unipotent Euler class, then divide by the Weyl order.

    It is the caller's responsibility that ``a_tilde`` is a genuine lift of
    the class downstairs; that condition is not checkable from pairing data.
    """
    if weyl_order < 1:
        raise ValueError("Weyl order must be positive")
    return torus_pairing_value_fn(a_tilde * e) / weyl_order


def _pure_power_denominator(k, n):
    forms = []
    for i in range(k):
        coeffs = [Fraction(0)] * k
        coeffs[i] = Fraction(1)
        forms.append((LinearForm(coeffs), n))
    return tuple(forms)


def flag_pairing(k, n, phi):
    """Iterated residue at zero for the tautological bundle on the flag
    manifold of k-planes flags in n-space: residue of
    phi * prod_{i<j}(z_i - z_j) / prod_i z_i^n.

    >>> flag_pairing(1, 3, MultiPoly.variable(1, 0) ** 2)
    Fraction(1, 1)
    """
    if k < 1 or n < k:
        raise ValueError("need 1 <= k <= n")
    if phi.nvars != k:
        raise ValueError("class must live in %d variables" % k)
    num = phi
    for i in range(k):
        for j in range(i + 1, k):
            num = num * (MultiPoly.variable(k, i) - MultiPoly.variable(k, j))
    return iterated_residue_at_zero(RationalFn(num, _pure_power_denominator(k, n)))


def grassmannian_pairing(k, n, phi):
    """Intersection number of a symmetric class on the Grassmannian of
    k-planes in n-space: 1/k! times the iterated residue at zero of
    phi * prod_{i != j}(z_i - z_j) / prod_i z_i^n.
    """
    if k < 1 or n < k:
        raise ValueError("need 1 <= k <= n")
    if phi.nvars != k:
        raise ValueError("class must live in %d variables" % k)
    for i in range(k - 1):
        swap = list(range(k))
        swap[i], swap[i + 1] = swap[i + 1], swap[i]
        if weyl_act(phi, swap) != phi:
            raise ValueError(
                "class is not symmetric in the torus variables (swap %d,%d)"
                % (i, i + 1)
            )
    num = phi
    for i in range(k):
        for j in range(k):
            if i != j:
                num = num * (MultiPoly.variable(k, i) - MultiPoly.variable(k, j))
    value = iterated_residue_at_zero(
        RationalFn(num, _pure_power_denominator(k, n))
    )
    return value / factorial(k)
