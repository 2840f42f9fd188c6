"""Weight and root data for a group H = U x| R with graded unipotent radical.

The computational inputs are purely combinatorial: the rank of a maximal
torus, the positive roots of the Levi factor R, the torus weights of the
adjoint action on Lie(U), generators and order of the Weyl group, the
derivative of the grading one-parameter subgroup, and an invariant inner
product.  The checks here (positivity of the grading, the admissible
character interval, cone validity) are the combinatorial shadows of the
geometric hypotheses under which the pairing and Betti formulas hold.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg
from .exactnum import as_fraction
from .polyring import LinearForm, MultiPoly

__all__ = [
    "GroupData",
    "ConeChoice",
    "InvalidConeError",
    "GradingReport",
    "WellAdaptedReport",
    "check_grading",
    "check_well_adapted",
    "lambda_projection",
    "euler_class_nonreductive",
]


class InvalidConeError(ValueError):
    """A chamber vector annihilates one of the denominator forms."""


def _as_form(value):
    return value if isinstance(value, LinearForm) else LinearForm(value)


def _is_permutation(gen):
    return gen and not isinstance(gen[0], (list, tuple))


def _generator_matrix(gen, rank):
    """Normalise a Weyl generator (permutation or matrix) to a rank x rank matrix."""
    if _is_permutation(gen):
        perm = [int(x) for x in gen]
        if sorted(perm) != list(range(rank)):
            raise ValueError("generator is not a permutation of 0..%d" % (rank - 1))
        m = [[Fraction(0)] * rank for _ in range(rank)]
        for i, j in enumerate(perm):
            m[i][j] = Fraction(1)
        return m
    m = _linalg.to_matrix(gen)
    if len(m) != rank or any(len(row) != rank for row in m):
        raise ValueError("generator matrix size does not match rank")
    if _linalg.det(m) == 0:
        raise ValueError("Weyl generator is not invertible")
    return m


@dataclass(frozen=True)
class GroupData:
    """Torus rank, roots, Lie(U) weights, Weyl data and the grading direction.

    ``grading`` is the derivative of the one-parameter subgroup that grades
    the unipotent radical (all its pairings with the Lie(U) weights must be
    positive for the data to be admissible; see :func:`check_grading`).
    ``weyl_generators`` may be permutations of the variable indices or
    invertible rational matrices; ``weyl_order`` is the order of the group
    they generate.  ``inner_product`` defaults to the identity.
    """

    rank: int
    positive_roots: tuple = ()
    unipotent_weights: tuple = ()
    weyl_generators: tuple = ()
    weyl_order: int = 1
    grading: tuple = None
    inner_product: tuple = None

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("torus rank must be positive")
        roots = tuple(_as_form(f) for f in self.positive_roots)
        weights = tuple(_as_form(f) for f in self.unipotent_weights)
        for f in roots + weights:
            if f.nvars != self.rank:
                raise ValueError("root/weight length does not match rank")
            if f.is_zero():
                raise ValueError("roots and unipotent weights must be nonzero")
        object.__setattr__(self, "positive_roots", roots)
        object.__setattr__(self, "unipotent_weights", weights)
        if self.weyl_order < 1:
            raise ValueError("Weyl order must be at least 1")
        gens = tuple(tuple(g) if _is_permutation(g) else tuple(map(tuple, g))
                     for g in self.weyl_generators)
        object.__setattr__(self, "weyl_generators", gens)
        grading = self.grading
        if grading is None:
            grading = [0] * self.rank
        object.__setattr__(
            self, "grading", tuple(as_fraction(x) for x in grading)
        )
        if len(self.grading) != self.rank:
            raise ValueError("grading vector length does not match rank")
        ip = self.inner_product
        if ip is None:
            ip = _linalg.identity(self.rank)
        else:
            ip = _linalg.to_matrix(ip)
        if len(ip) != self.rank or any(len(row) != self.rank for row in ip):
            raise ValueError("inner product size does not match rank")
        for i in range(self.rank):
            for j in range(i):
                if ip[i][j] != ip[j][i]:
                    raise ValueError("inner product must be symmetric")
        for k in range(1, self.rank + 1):
            minor = [row[:k] for row in ip[:k]]
            if _linalg.det(minor) <= 0:
                raise ValueError("inner product must be positive definite")
        object.__setattr__(self, "inner_product", tuple(map(tuple, ip)))

    # -- Weyl group --------------------------------------------------------

    def generator_matrices(self):
        return [_generator_matrix(g, self.rank) for g in self.weyl_generators]

    def weyl_elements(self):
        """All Weyl elements as matrices, generated by closure.

        The closure is checked against ``weyl_order``; disagreement means the
        supplied generators and order are inconsistent.
        """
        gens = self.generator_matrices()
        elements = {self._key(_linalg.identity(self.rank)): _linalg.identity(self.rank)}
        frontier = list(elements.values())
        while frontier:
            fresh = []
            for m in frontier:
                for g in gens:
                    prod = _linalg.mat_mul(g, m)
                    key = self._key(prod)
                    if key not in elements:
                        elements[key] = prod
                        fresh.append(prod)
            frontier = fresh
            if len(elements) > 4 * self.weyl_order + 16:
                raise ValueError(
                    "Weyl closure exceeds the declared order; data inconsistent"
                )
        if len(elements) != self.weyl_order:
            raise ValueError(
                "Weyl generators produce a group of order %d, declared %d"
                % (len(elements), self.weyl_order)
            )
        return list(elements.values())

    @staticmethod
    def _key(matrix):
        return tuple(tuple(row) for row in matrix)

    def pairing(self, u, v):
        """The fixed inner product of two coefficient vectors."""
        g = self.inner_product
        u = [as_fraction(x) for x in u]
        v = [as_fraction(x) for x in v]
        return sum(
            (u[i] * g[i][j] * v[j] for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )


@dataclass(frozen=True)
class ConeChoice:
    """A chamber vector for the iterated residue.

    Valid for a given problem when no denominator form vanishes on it.
    """

    xi: tuple

    def __post_init__(self):
        object.__setattr__(self, "xi", tuple(as_fraction(x) for x in self.xi))

    def validate(self, forms):
        """Raise :class:`InvalidConeError` if any form vanishes on ``xi``."""
        for form in forms:
            form = _as_form(form)
            if form(self.xi) == 0:
                raise InvalidConeError(
                    "cone vector (%s) lies on the wall of %s"
                    % (", ".join(str(x) for x in self.xi), form.render())
                )


@dataclass(frozen=True)
class GradingReport:
    ok: bool
    pairings: tuple  # (weight, <weight, grading>) for every unipotent weight
    failures: tuple  # subset with nonpositive pairing

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class WellAdaptedReport:
    in_interval: bool
    interval: tuple  # (omega_0, omega_1), open
    margin: Fraction  # chi/c - omega_0; "sufficiently small" is the caller's call

    def __bool__(self):
        return self.in_interval


def check_grading(group):
    """True iff every Lie(U) weight pairs strictly positively with the grading.

    The report lists every weight with its pairing so a failing dataset shows
    exactly which weight breaks the grading condition.  An empty weight list
    (reductive case) passes vacuously.
    """
    pairings = []
    failures = []
    for w in group.unipotent_weights:
        value = group.pairing(w.coeffs, group.grading)
        pairings.append((w, value))
        if value <= 0:
            failures.append((w, value))
    return GradingReport(not failures, tuple(pairings), tuple(failures))


def check_well_adapted(fixed_weights, chi_over_c):
    """Admissible-interval check for the character shift.

    ``fixed_weights`` are the grading-circle weights on the fixed locus;
    after sorting and deduplication there must be at least two.  The shift
    ``chi_over_c`` is admissible when it lies in the open interval between
    the two smallest distinct weights.  How small the offset above the
    minimum must be cannot be decided from this data, so the report carries
    the margin and leaves that judgement to the caller.
    """
    weights = sorted({as_fraction(w) for w in fixed_weights})
    if len(weights) < 2:
        raise ValueError("need at least two distinct fixed-point weights")
    chi = as_fraction(chi_over_c)
    low, high = weights[0], weights[1]
    return WellAdaptedReport(low < chi < high, (low, high), chi - low)


def lambda_projection(weight, group):
    """Inner-product pairing of a weight with the grading direction."""
    w = _as_form(weight)
    if w.nvars != group.rank:
        raise ValueError("weight length does not match rank")
    return group.pairing(w.coeffs, group.grading)


def euler_class_nonreductive(group):
    """Product of every root (positive and negative) and every Lie(U) weight.

    This is the Euler class of the bundle associated to the Levi roots
    together with the adjoint torus weights on Lie(U); with no unipotent
    weights it degenerates to the product over the full root system, the
    correction factor of the reductive abelianisation.  Note the product
    over all roots equals the squared product of the positive roots only up
    to the sign (-1)^(number of positive roots).
    """
    out = MultiPoly.one(group.rank)
    for root in group.positive_roots:
        out = out * root.to_poly()
        out = out * (-root).to_poly()
    for weight in group.unipotent_weights:
        out = out * weight.to_poly()
    return out
