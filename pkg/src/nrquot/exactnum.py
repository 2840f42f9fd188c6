"""Exact scalar arithmetic and truncated integer power series.

Every scalar that enters a symbolic computation in this package is an
arbitrary-precision rational (``fractions.Fraction``), and every Betti
generating function is a :class:`TruncSeries`: an integer-coefficient
polynomial in ``t`` known up to a truncation bound.  Floats are rejected
at construction time so that no rounding can leak into a symbolic path;
numerical diagnostics live in :mod:`nrquot.momentdiag` and nowhere else.
"""

from fractions import Fraction

__all__ = [
    "Rational",
    "rat",
    "as_fraction",
    "TruncSeries",
    "series_mul",
    "series_geom_div",
]

# The exact rational scalar type.  fractions.Fraction already guarantees
# lowest terms, positive denominator and canonical 0/1, so we use it
# directly; ``rat``/``as_fraction`` are the only sanctioned constructors.
Rational = Fraction


def rat(numerator, denominator=None):
    """Build an exact rational from ints or a ``"p/q"`` string.

    >>> rat(3, 6)
    Fraction(1, 2)
    >>> rat("-7/2")
    Fraction(-7, 2)
    """
    if denominator is not None:
        if not isinstance(numerator, int) or not isinstance(denominator, int):
            raise TypeError("rat(p, q) expects integers")
        return Fraction(numerator, denominator)
    return as_fraction(numerator)


def as_fraction(value):
    """Coerce ``value`` to Fraction, refusing floats and other inexact types."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(
        "expected int, Fraction or 'p/q' string, got %r" % type(value).__name__
    )


def _as_int_coeff(value):
    """Coerce a series coefficient to int; non-integers are a hard error."""
    if isinstance(value, bool):
        raise TypeError("booleans are not series coefficients")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        raise ValueError("non-integer series coefficient %s" % value)
    raise TypeError("series coefficients must be integers, got %r" % (value,))


class TruncSeries:
    """Integer power series in ``t`` truncated above a fixed bound.

    Coefficients are stored for exponents ``0..bound`` inclusive; anything
    beyond the bound is unknown and never read.  Arithmetic truncates the
    result at the minimum of the operand bounds.

    >>> a = TruncSeries([1, 0, 1], 4)   # 1 + t^2, known up to t^4
    >>> print(a * a)
    1 + 2*t^2 + t^4
    >>> print(TruncSeries.one(6).geom_div(2))
    1 + t^2 + t^4 + t^6
    """

    __slots__ = ("coeffs", "bound")

    def __init__(self, coeffs, bound):
        if bound < 0:
            raise ValueError("truncation bound must be nonnegative")
        coeffs = [_as_int_coeff(c) for c in coeffs]
        if len(coeffs) > bound + 1:
            raise ValueError("more coefficients than the bound allows")
        coeffs.extend([0] * (bound + 1 - len(coeffs)))
        self.coeffs = tuple(coeffs)
        self.bound = bound

    @classmethod
    def zero(cls, bound):
        return cls([], bound)

    @classmethod
    def one(cls, bound):
        return cls([1], bound)

    @classmethod
    def monomial(cls, exponent, bound, coeff=1):
        """The single term ``coeff * t**exponent`` (zero if beyond bound)."""
        if exponent > bound:
            return cls.zero(bound)
        c = [0] * (exponent + 1)
        c[exponent] = coeff
        return cls(c, bound)

    @classmethod
    def from_dict(cls, terms, bound):
        c = [0] * (bound + 1)
        for e, v in terms.items():
            if 0 <= e <= bound:
                c[e] = v
            elif v != 0 and e < 0:
                raise ValueError("negative exponent in series")
        return cls(c, bound)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.bound == other.bound and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.bound))

    def coefficient(self, exponent):
        if not 0 <= exponent <= self.bound:
            raise IndexError("exponent %d beyond truncation bound" % exponent)
        return self.coeffs[exponent]

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def degree(self):
        """Largest exponent with nonzero coefficient, or -1 for zero."""
        for e in range(self.bound, -1, -1):
            if self.coeffs[e] != 0:
                return e
        return -1

    def truncate(self, bound):
        return TruncSeries(list(self.coeffs[: bound + 1]), bound)

    def __add__(self, other):
        b = min(self.bound, other.bound)
        return TruncSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(b + 1)], b
        )

    def __sub__(self, other):
        b = min(self.bound, other.bound)
        return TruncSeries(
            [self.coeffs[i] - other.coeffs[i] for i in range(b + 1)], b
        )

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.bound)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return TruncSeries([other * c for c in self.coeffs], self.bound)
        if not isinstance(other, TruncSeries):
            return NotImplemented
        b = min(self.bound, other.bound)
        out = [0] * (b + 1)
        for i, ci in enumerate(self.coeffs[: b + 1]):
            if ci == 0:
                continue
            for j in range(b + 1 - i):
                cj = other.coeffs[j]
                if cj:
                    out[i + j] += ci * cj
        return TruncSeries(out, b)

    __rmul__ = __mul__

    def geom_div(self, k):
        """Multiply by the geometric series ``1 + t^k + t^{2k} + ...``.

        This is exact division by ``1 - t^k`` in the truncated ring.
        """
        if not isinstance(k, int) or k < 2 or k % 2 != 0:
            raise ValueError("geometric divisor stride must be an even integer >= 2")
        out = list(self.coeffs)
        for i in range(k, self.bound + 1):
            out[i] += out[i - k]
        return TruncSeries(out, self.bound)

    def __str__(self):
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                parts.append(("- " if c < 0 else "") + str(abs(c)))
                continue
            mag = "t" if e == 1 else "t^%d" % e
            if abs(c) != 1:
                mag = "%d*%s" % (abs(c), mag)
            if not parts:
                parts.append(("- " if c < 0 else "") + mag)
            else:
                parts.append(("- " if c < 0 else "+ ") + mag)
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return "TruncSeries(%r, bound=%d)" % (list(self.coeffs), self.bound)


def series_mul(a, b):
    """Cauchy product of two truncated series (min of the two bounds)."""
    return a * b


def series_geom_div(a, k):
    """Divide ``a`` by ``1 - t^k`` exactly in the truncated ring, ``k`` even, >= 2."""
    return a.geom_div(k)
