"""Sparse exact multivariate polynomials, linear forms and factored ratios.

Polynomials live in a fixed number of variables ``z_0 .. z_{r-1}`` (names are
positional; pretty names belong to the I/O layer).  A monomial is a plain
tuple of nonnegative integer exponents, a :class:`MultiPoly` maps monomials to
nonzero Fractions, a :class:`LinearForm` is a degree-one functional given by
its coefficient vector, and a :class:`RationalFn` keeps its denominator as a
multiset of linear-form factors, never expanded.  All the residue machinery
consumes exactly these shapes: equivariant Euler classes and Weyl factors are
products of linear forms, so the factored representation is the natural one.

>>> p = MultiPoly.variable(2, 0) + MultiPoly.variable(2, 1)   # z0 + z1
>>> q = MultiPoly.variable(2, 0) - MultiPoly.variable(2, 1)   # z0 - z1
>>> (p * q).terms == {(2, 0): Fraction(1), (0, 2): Fraction(-1)}
True
"""

from fractions import Fraction

from .exactnum import as_fraction
from . import _linalg

__all__ = [
    "MultiPoly",
    "LinearForm",
    "RationalFn",
    "poly_arith",
    "coefficient_of",
    "weyl_act",
]


class MultiPoly:
    """Sparse polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples of length ``nvars`` to nonzero Fractions;
    zero coefficients are pruned at construction.  Instances are immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        if nvars < 0:
            raise ValueError("variable count must be nonnegative")
        clean = {}
        for expo, coeff in (terms or {}).items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != nvars:
                raise ValueError(
                    "exponent vector %r has length %d, expected %d"
                    % (expo, len(expo), nvars)
                )
            if any(e < 0 for e in expo):
                raise ValueError("negative exponent in polynomial monomial")
            coeff = as_fraction(coeff)
            if coeff != 0:
                clean[expo] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *args):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars, value):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars, index, power=1):
        expo = [0] * nvars
        expo[index] = power
        return cls(nvars, {tuple(expo): 1})

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0,) * self.nvars}

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def coefficient(self, monomial):
        monomial = tuple(int(e) for e in monomial)
        if len(monomial) != self.nvars:
            raise ValueError("monomial length does not match variable count")
        return self.terms.get(monomial, Fraction(0))

    def total_degree(self):
        """Max total degree of the support, or -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, degree):
        return MultiPoly(
            self.nvars, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    def degree_in(self, var):
        return max((e[var] for e in self.terms), default=-1)

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other):
        if self.nvars != other.nvars:
            raise ValueError(
                "variable count mismatch: %d vs %d" % (self.nvars, other.nvars)
            )

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.nvars, out)

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            self._check_compatible(other)
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, Fraction(0)) + c1 * c2
            return MultiPoly(self.nvars, out)
        coeff = as_fraction(other)
        return MultiPoly(self.nvars, {e: c * coeff for e, c in self.terms.items()})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly.one(self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- substitution ------------------------------------------------------

    def substitute_linear(self, images):
        """Substitute each variable by a linear polynomial.

        ``images[i]`` is the MultiPoly (in the target ring) replacing ``z_i``.
        """
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else self.nvars
        out = MultiPoly.zero(target)
        power_cache = [{} for _ in range(self.nvars)]

        def power(i, k):
            cache = power_cache[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        for expo, coeff in self.terms.items():
            term = MultiPoly.constant(target, coeff)
            for i, e in enumerate(expo):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def evaluate(self, point):
        """Evaluate at a rational point (tuple of scalars)."""
        if len(point) != self.nvars:
            raise ValueError("point length does not match variable count")
        point = [as_fraction(x) for x in point]
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            value = coeff
            for x, e in zip(point, expo):
                value *= x**e
            total += value
        return total

    # -- display -----------------------------------------------------------

    def render(self, names=None):
        if not self.terms:
            return "0"
        names = names or ["z%d" % i for i in range(self.nvars)]
        parts = []
        for expo in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            coeff = self.terms[expo]
            factors = []
            for name, e in zip(names, expo):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            mag = "*".join(factors)
            c = abs(coeff)
            if not mag:
                body = str(c)
            elif c == 1:
                body = mag
            else:
                body = "%s*%s" % (c, mag)
            if not parts:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "MultiPoly(%d, %r)" % (self.nvars, self.terms)

    def __str__(self):
        return self.render()


class LinearForm:
    """A linear functional sum(c_i * z_i) given by its coefficient vector."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(
            self, "coeffs", tuple(as_fraction(c) for c in coeffs)
        )

    def __setattr__(self, *args):
        raise AttributeError("LinearForm is immutable")

    @property
    def nvars(self):
        return len(self.coeffs)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __call__(self, vector):
        if len(vector) != len(self.coeffs):
            raise ValueError("vector length does not match form")
        return sum(
            (c * as_fraction(v) for c, v in zip(self.coeffs, vector)), Fraction(0)
        )

    def to_poly(self):
        n = len(self.coeffs)
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c != 0:
                expo = [0] * n
                expo[i] = 1
                terms[tuple(expo)] = c
        return MultiPoly(n, terms)

    def __mul__(self, scalar):
        return LinearForm([c * as_fraction(scalar) for c in self.coeffs])

    __rmul__ = __mul__

    def __neg__(self):
        return LinearForm([-c for c in self.coeffs])

    def __add__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("form length mismatch")
        return LinearForm([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __eq__(self, other):
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def transform(self, matrix_inverse):
        """Coefficient vector of this form in new coordinates w = B z.

        ``matrix_inverse`` is B^{-1}; the form alpha(v) written as a function
        of w has row vector alpha . B^{-1}.
        """
        n = len(self.coeffs)
        new = [
            sum(
                (self.coeffs[j] * matrix_inverse[j][i] for j in range(n)),
                Fraction(0),
            )
            for i in range(n)
        ]
        return LinearForm(new)

    def render(self, names=None):
        return self.to_poly().render(names)

    def __repr__(self):
        return "LinearForm(%r)" % (list(self.coeffs),)


class RationalFn:
    """Ratio of a polynomial by a product of linear-form factors.

    The denominator is stored factored as ``((form, multiplicity), ...)``;
    equal forms are merged.  No cancellation against the numerator is
    attempted: residue extraction never needs it.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=()):
        merged = {}
        for form, mult in den:
            if not isinstance(form, LinearForm):
                form = LinearForm(form)
            if form.is_zero():
                raise ValueError("zero linear form in denominator")
            if form.nvars != num.nvars:
                raise ValueError("denominator form length does not match ring")
            if mult <= 0:
                raise ValueError("denominator multiplicities must be positive")
            merged[form] = merged.get(form, 0) + int(mult)
        object.__setattr__(self, "num", num)
        object.__setattr__(
            self,
            "den",
            tuple(sorted(merged.items(), key=lambda fm: fm[0].coeffs)),
        )

    def __setattr__(self, *args):
        raise AttributeError("RationalFn is immutable")

    @classmethod
    def from_poly(cls, poly):
        return cls(poly, ())

    @property
    def nvars(self):
        return self.num.nvars

    def is_zero(self):
        return self.num.is_zero()

    def total_degree(self):
        """Degree of the (homogeneous) numerator minus denominator degree."""
        return self.num.total_degree() - sum(m for _, m in self.den)

    def is_constant(self):
        return self.num.is_constant() and not self.den

    def constant_value(self):
        if self.den and not self.num.is_zero():
            raise ValueError("rational function has a nontrivial denominator")
        return self.num.constant_value()

    def __mul__(self, other):
        if isinstance(other, RationalFn):
            return RationalFn(self.num * other.num, self.den + other.den)
        if isinstance(other, MultiPoly):
            return RationalFn(self.num * other, self.den)
        return RationalFn(self.num * as_fraction(other), self.den)

    __rmul__ = __mul__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __add__(self, other):
        if not isinstance(other, RationalFn):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        mine = dict(self.den)
        theirs = dict(other.den)
        common = {f: max(mine.get(f, 0), theirs.get(f, 0)) for f in {*mine, *theirs}}
        left = self.num
        for f, m in common.items():
            deficit = m - mine.get(f, 0)
            if deficit:
                left = left * (f.to_poly() ** deficit)
        right = other.num
        for f, m in common.items():
            deficit = m - theirs.get(f, 0)
            if deficit:
                right = right * (f.to_poly() ** deficit)
        return RationalFn(left + right, tuple(common.items()))

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        """Exact equality after clearing the combined denominator."""
        if not isinstance(other, RationalFn):
            return NotImplemented
        diff = self - other
        return diff.num.is_zero()

    def __hash__(self):
        raise TypeError("RationalFn is unhashable")

    def clear_denominators(self):
        """Numerator times all denominator factors, as a polynomial."""
        out = self.num
        for form, mult in self.den:
            out = out * (form.to_poly() ** mult)
        return out

    def render(self, names=None):
        num = self.num.render(names)
        if not self.den:
            return num
        factors = []
        for form, mult in self.den:
            base = "(%s)" % form.render(names)
            factors.append(base if mult == 1 else "%s^%d" % (base, mult))
        return "(%s) / (%s)" % (num, "*".join(factors))

    def __repr__(self):
        return "RationalFn(%r, %r)" % (self.num, list(self.den))

    def __str__(self):
        return self.render()


def divide_by_linear_form(poly, form):
    """Exact division of ``poly`` by a linear form; raises if not divisible.

    Works by synthetic division along any variable the form involves.
    """
    pivot = next((i for i, c in enumerate(form.coeffs) if c != 0), None)
    if pivot is None:
        raise ValueError("cannot divide by the zero form")
    lead = form.coeffs[pivot]
    rest = MultiPoly(
        poly.nvars,
        {
            tuple(1 if j == i else 0 for j in range(poly.nvars)): c
            for i, c in enumerate(form.coeffs)
            if c != 0 and i != pivot
        },
    )
    quotient = MultiPoly.zero(poly.nvars)
    remainder = poly
    while True:
        d = remainder.degree_in(pivot)
        if d <= 0:
            break
        top = MultiPoly(
            poly.nvars,
            {
                e: c / lead
                for e, c in remainder.terms.items()
                if e[pivot] == d
            },
        )
        shifted = MultiPoly(
            poly.nvars,
            {
                tuple(v - (1 if i == pivot else 0) for i, v in enumerate(e)): c
                for e, c in top.terms.items()
            },
        )
        quotient = quotient + shifted
        remainder = remainder - shifted * form.to_poly()
    if not remainder.is_zero():
        raise ValueError("polynomial is not divisible by the given form")
    return quotient


def poly_arith(a, b, op):
    """Dispatching arithmetic entry point: op in {'add', 'sub', 'mul'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError("unknown operation %r" % (op,))


def coefficient_of(poly, monomial):
    """Coefficient of the given exponent tuple (zero when absent)."""
    return poly.coefficient(monomial)


def _permutation_images(perm, nvars):
    if sorted(perm) != list(range(nvars)):
        raise ValueError("not a permutation of 0..%d" % (nvars - 1))
    return [MultiPoly.variable(nvars, perm[i]) for i in range(nvars)]


def weyl_act(poly, element):
    """Apply a Weyl group element to a polynomial.

    ``element`` is either a permutation of the variable indices (tuple/list
    of ints, ``z_i -> z_{element[i]}``) or an invertible square matrix of
    rationals acting by ``z_i -> sum_j element[i][j] z_j``.
    """
    n = poly.nvars
    if element and isinstance(element[0], (list, tuple)):
        matrix = _linalg.to_matrix(element)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("matrix size does not match variable count")
        if _linalg.det(matrix) == 0:
            raise ValueError("Weyl element matrix is not invertible")
        images = [
            MultiPoly(
                n,
                {
                    tuple(1 if j == k else 0 for k in range(n)): matrix[i][j]
                    for j in range(n)
                    if matrix[i][j] != 0
                },
            )
            for i in range(n)
        ]
        return poly.substitute_linear(images)
    perm = [int(x) for x in element]
    return poly.substitute_linear(_permutation_images(perm, n))
