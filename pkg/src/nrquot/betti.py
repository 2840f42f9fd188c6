"""Poincare series of quotients, Morse assembly and perfection checking.

Dimensions entering this module are complex dimensions; the doubling into
exponents of ``t`` happens here and nowhere else.  The two quotient series
share one kernel: the truncated expansion of ``(1 - t^{2d}) / (1 - t^2)``,
i.e. ``1 + t^2 + ... + t^{2(d-1)}``, with ``d`` the codimension of the swept
minimal stratum.  Morse assembly sums ``t^{2 codim} * P(stratum)`` and the
perfection check divides the defect by ``(1 + t)``, reporting whether the
quotient series vanishes and whether it is coefficientwise nonnegative.
"""

from dataclasses import dataclass

from .exactnum import TruncSeries, series_geom_div

__all__ = [
    "StratumDatum",
    "QuotientDims",
    "PerfectionReport",
    "poincare_uhat",
    "poincare_H",
    "morse_assemble",
    "check_perfect",
    "equivariant_circle_series",
    "weighted_projective_poincare",
]


@dataclass(frozen=True)
class StratumDatum:
    """A stratum: complex codimension and its (equivariant) Poincare series."""

    codim: int
    series: TruncSeries

    def __post_init__(self):
        if self.codim < 0:
            raise ValueError("codimension must be nonnegative")


@dataclass(frozen=True)
class QuotientDims:
    """Complex dimensions of the ambient space, the unipotent group and the
    minimal fixed locus; the quotient fibre codimension is their difference."""

    dim_x: int
    dim_u: int
    dim_zmin: int

    def __post_init__(self):
        if min(self.dim_x, self.dim_u, self.dim_zmin) < 0:
            raise ValueError("dimensions must be nonnegative")
        if self.dim_x < self.dim_u + self.dim_zmin:
            raise ValueError(
                "ambient dimension must be at least dim U + dim of the minimal locus"
            )

    @property
    def codim(self):
        return self.dim_x - self.dim_u - self.dim_zmin


def _kernel(d, bound):
    """1 + t^2 + ... + t^{2(d-1)} as a truncated series."""
    return TruncSeries.from_dict({2 * i: 1 for i in range(d)}, bound)


def _require_nonnegative(series, what):
    """Betti data is a dimension count; a negative coefficient is bad input."""
    if any(c < 0 for c in series.coeffs):
        raise ValueError("%s produced a negative coefficient; input inconsistent" % what)
    return series


def poincare_uhat(p_zmin, dims):
    """Series of the quotient by the graded extension U x| C*.

    Multiplies the series of the minimal fixed locus by the kernel
    ``1 + t^2 + ... + t^{2(d-1)}``, ``d = dim X - dim U - dim Z_min >= 1``.

    >>> print(poincare_uhat(TruncSeries.one(12), QuotientDims(6, 3, 0)))
    1 + t^2 + t^4
    """
    d = dims.codim
    if d < 1:
        raise ValueError("quotient codimension must be at least 1")
    return _require_nonnegative(p_zmin * _kernel(d, p_zmin.bound), "quotient series")


def poincare_H(p_zmin_quotient, dims):
    """Series of the quotient by H: same kernel, with the series of the
    residual-group quotient of the minimal locus in front.

    When the residual group has no stable locus on the minimal stratum
    itself (a minimal fixed point, say) the caller supplies the effective
    dimensions of the fibration instead; the kernel is unchanged.
    """
    d = dims.codim
    if d < 1:
        raise ValueError("quotient codimension must be at least 1")
    return _require_nonnegative(
        p_zmin_quotient * _kernel(d, p_zmin_quotient.bound), "quotient series"
    )


def morse_assemble(strata):
    """Sum of ``t^(2 codim) * series`` over the strata (empty sum is zero)."""
    strata = list(strata)
    if not strata:
        return TruncSeries.zero(0)
    bound = min(s.series.bound for s in strata)
    total = TruncSeries.zero(bound)
    for s in strata:
        shift = TruncSeries.monomial(2 * s.codim, bound)
        total = total + shift * s.series
    return _require_nonnegative(total, "Morse assembly")


@dataclass(frozen=True)
class PerfectionReport:
    perfect: bool
    remainder: TruncSeries  # R with strata_sum - total = (1 + t) R
    nonnegative: bool

    def __bool__(self):
        return self.perfect


def check_perfect(total, strata_sum):
    """Divide the Morse defect by ``(1 + t)`` and report on the quotient.

    The defect ``strata_sum - total`` must be divisible by ``1 + t`` as a
    polynomial over the stored range; a nonzero remainder signals
    inconsistent input data.  The stratification is perfect when the
    quotient vanishes identically; the quotient having a negative
    coefficient violates the Morse inequality direction and is reported.
    """
    diff = strata_sum - total
    bound = diff.bound
    quotient = [0] * (bound + 1)
    carry = 0
    for i in range(bound):
        quotient[i] = diff.coeffs[i] - carry
        carry = quotient[i]
    residue = diff.coeffs[bound] - carry if bound >= 1 else diff.coeffs[0]
    if bound >= 1 and residue != 0:
        raise ValueError(
            "Morse defect is not divisible by (1 + t); residue %d" % residue
        )
    if bound == 0 and diff.coeffs[0] != 0:
        raise ValueError("Morse defect is a nonzero constant")
    remainder = TruncSeries(quotient[:bound] if bound >= 1 else [0], max(bound - 1, 0))
    return PerfectionReport(
        perfect=remainder.is_zero(),
        remainder=remainder,
        nonnegative=all(c >= 0 for c in remainder.coeffs),
    )


def equivariant_circle_series(p):
    """Series of the circle-equivariant theory of a trivial circle action:
    multiply by the classifying-space series, i.e. divide by ``1 - t^2``."""
    return _require_nonnegative(series_geom_div(p, 2), "equivariant series")


def weighted_projective_poincare(weights, bound=None):
    """Rational cohomology series of a weighted projective space.

    Only the number of weights matters rationally: ``m`` weights give
    ``1 + t^2 + ... + t^{2(m-1)}``.
    """
    weights = list(weights)
    if not weights:
        raise ValueError("weight list must be nonempty")
    if any(int(w) <= 0 for w in weights):
        raise ValueError("weights must be positive integers")
    m = len(weights)
    if bound is None:
        bound = 2 * (m - 1)
    return _kernel(m, bound)
