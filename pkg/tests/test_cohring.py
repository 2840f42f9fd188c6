import random
from fractions import Fraction

import pytest

from nrquot.betti import QuotientDims, poincare_H
from nrquot.cohring import (
    GradedRingPresentation,
    annihilator_dims,
    graded_dims,
    invariant_basis,
    quotient_presentation_betti,
    reynolds_project,
)
from nrquot.exactnum import TruncSeries
from nrquot.groupdata import GroupData
from nrquot.localize import WeylInvarianceError
from nrquot.polyring import MultiPoly
from oracles import grassmannian_betti


def zvars(n):
    return [MultiPoly.variable(n, i) for i in range(n)]


def truncated_ring(*exponents):
    n = len(exponents)
    z = zvars(n)
    rels = [z[i] ** e for i, e in enumerate(exponents)]
    top = sum(e - 1 for e in exponents)
    return GradedRingPresentation.polynomial_quotient(n, rels, top)


S2 = (((1, 0),), 2)


def s2_group(rank=2):
    return GroupData(
        rank=rank,
        positive_roots=[[1, -1]],
        weyl_generators=[(1, 0)],
        weyl_order=2,
    )


# -- graded dimensions ------------------------------------------------------------


def test_graded_dims_univariate():
    assert graded_dims(truncated_ring(3)) == (1, 1, 1)


def test_graded_dims_product():
    assert graded_dims(truncated_ring(3, 3)) == (1, 2, 3, 2, 1)


def test_graded_dims_explicit_echo():
    ring = GradedRingPresentation.explicit([1, 0, 2, 1])
    assert graded_dims(ring) == (1, 0, 2, 1)


def test_top_degree_vanishing_enforced():
    z = MultiPoly.variable(1, 0)
    with pytest.raises(ValueError):
        GradedRingPresentation.polynomial_quotient(1, [z ** 3], 1)


def test_nonhomogeneous_relation_rejected():
    z = MultiPoly.variable(1, 0)
    with pytest.raises(ValueError):
        GradedRingPresentation.polynomial_quotient(1, [z + z ** 2], 2)


def test_general_relation_reduction():
    # Q[z0, z1]/(z0^2 - z1^2, z1^3): dims 1, 2, 2, 1
    z0, z1 = zvars(2)
    ring = GradedRingPresentation.polynomial_quotient(
        2, [z0 ** 2 - z1 ** 2, z1 ** 3], 3
    )
    assert graded_dims(ring) == (1, 2, 2, 1)
    assert ring.reduce(z0 ** 2) == ring.reduce(z1 ** 2)


# -- invariants --------------------------------------------------------------------


def test_invariant_dims_s2():
    inv = invariant_basis(truncated_ring(3, 3), S2)
    assert [len(inv[d]) for d in range(5)] == [1, 1, 2, 1, 1]


def test_invariant_trivial_group_is_full_ring():
    ring = truncated_ring(3, 3)
    inv = invariant_basis(ring, ((), 1))
    assert [len(inv[d]) for d in range(5)] == list(graded_dims(ring))


def test_reynolds_projector_idempotent():
    ring = truncated_ring(3, 3)
    rng = random.Random(5)
    z0, z1 = zvars(2)
    for _ in range(20):
        poly = (
            Fraction(rng.randint(-4, 4)) * z0 ** 2
            + Fraction(rng.randint(-4, 4)) * z0 * z1
            + Fraction(rng.randint(-4, 4)) * z1 ** 2
        )
        if poly.is_zero():
            continue
        once = reynolds_project(ring, S2, poly, degree=2)
        again = reynolds_project(ring, S2, ring.element(2, once), degree=2)
        assert once == again


def test_invariant_basis_requires_compatible_weyl():
    z0, z1 = zvars(2)
    ring = GradedRingPresentation.polynomial_quotient(2, [z0 ** 3, z1 ** 2], 3)
    with pytest.raises(ValueError):
        invariant_basis(ring, S2)  # swap does not preserve the ideal


# -- annihilators ------------------------------------------------------------------


def test_annihilator_univariate():
    z = MultiPoly.variable(1, 0)
    ring = truncated_ring(3)
    assert annihilator_dims(ring, z ** 2) == (0, 1, 1)


def test_annihilator_of_one_is_zero():
    ring = truncated_ring(3, 3)
    assert annihilator_dims(ring, MultiPoly.one(2)) == (0, 0, 0, 0, 0)


def test_annihilator_is_an_ideal():
    rng = random.Random(9)
    ring = truncated_ring(3, 3)
    z0, z1 = zvars(2)
    e = -((z0 - z1) ** 2)
    # gather annihilator elements degree by degree and multiply by random
    # ring elements; the product must stay in the annihilator
    for d in range(5):
        basis = ring.basis_elements(d)
        from nrquot._linalg import kernel_basis

        images = [ring.reduce(b * e, d + 2) for b in basis]
        if not basis or not images[0]:
            continue
        rows = [[images[c][r] for c in range(len(basis))] for r in range(len(images[0]))]
        for kv in kernel_basis(rows, len(basis)):
            member = MultiPoly.zero(2)
            for coeff, b in zip(kv, basis):
                member = member + coeff * b
            for _ in range(3):
                x = z0 ** rng.randint(0, 1) * z1 ** rng.randint(0, 1)
                prod = member * x
                target = prod.total_degree() + 2
                reduced = ring.reduce(prod * e, target)
                assert all(c == 0 for c in reduced)


def test_annihilator_inhomogeneous_rejected():
    ring = truncated_ring(3)
    z = MultiPoly.variable(1, 0)
    with pytest.raises(ValueError):
        annihilator_dims(ring, z + z ** 2)


def test_annihilator_invariant_subring_quotient_dims():
    # invariants of Q[z0,z1]/(z0^3,z1^3) modulo ann(-(z0-z1)^2): dims 1,1,1
    ring = truncated_ring(3, 3)
    series = quotient_presentation_betti(ring, S2, s2_group())
    assert series == TruncSeries.from_dict({0: 1, 2: 1, 4: 1}, 8)


# -- quotient presentations ----------------------------------------------------------


def test_quotient_betti_grassmannian_2_3():
    series = quotient_presentation_betti(truncated_ring(3, 3), S2, s2_group())
    expected = grassmannian_betti(2, 3)
    assert list(series.coeffs)[::2][: len(expected)] == expected


def test_quotient_betti_reductive_trivial_weyl():
    ring = truncated_ring(4)
    g = GroupData(rank=1, weyl_order=1)
    series = quotient_presentation_betti(ring, ((), 1), g)
    assert series == TruncSeries.from_dict({0: 1, 2: 1, 4: 1, 6: 1}, 6)


def test_quotient_betti_matches_gaussian_binomials():
    cases = {(1, 3): truncated_ring(3), (2, 3): truncated_ring(3, 3), (2, 4): truncated_ring(4, 4)}
    for (k, n), ring in cases.items():
        if k == 1:
            weyl = ((), 1)
            group = GroupData(rank=1, weyl_order=1)
        else:
            weyl = S2
            group = s2_group()
        series = quotient_presentation_betti(ring, weyl, group)
        expected = grassmannian_betti(k, n)
        got = [series.coefficient(2 * i) for i in range(len(expected))]
        assert got == expected
        assert all(
            series.coefficient(j) == 0
            for j in range(series.bound + 1)
            if j % 2 == 1 or j // 2 >= len(expected)
        )


def test_quotient_betti_requires_invariant_euler():
    z0, z1 = zvars(2)
    ring = truncated_ring(3, 3)
    bad_group = GroupData(
        rank=2,
        positive_roots=[[1, 0]],  # swap sends z0 to z1, not preserved
        weyl_generators=[(1, 0)],
        weyl_order=2,
    )
    with pytest.raises(WeylInvarianceError):
        quotient_presentation_betti(ring, S2, bad_group)


def test_quotient_betti_dimension_bookkeeping():
    # per degree: quotient dim = invariant dim - invariant annihilator dim
    ring = truncated_ring(3, 3)
    group = s2_group()
    series = quotient_presentation_betti(ring, S2, group)
    inv = invariant_basis(ring, S2)
    z0, z1 = zvars(2)
    e = -((z0 - z1) ** 2)
    for d in range(5):
        vectors = inv[d]
        images = [ring.reduce(ring.element(d, v) * e, d + 2) for v in vectors]
        from nrquot._linalg import rank

        expected = rank(images) if vectors else 0
        assert series.coefficient(2 * d) == expected


def test_quotient_betti_cross_checks_poincare_H():
    # weighted P^1 as a circle quotient of P^2: ring Q[z]/(z^2), trivial Weyl
    ring = truncated_ring(2)
    g = GroupData(rank=1, weyl_order=1)
    series = quotient_presentation_betti(ring, ((), 1), g)
    chain = poincare_H(TruncSeries.one(2), QuotientDims(2, 0, 0))
    assert series == chain


def test_explicit_form_annihilator_with_structure_constants():
    # Q[z]/(z^3) written out explicitly: basis 1, z, z^2
    mult = {}
    for d in range(3):
        for e in range(3):
            target = d + e
            entry = [0, 0, 0][: 1 if target > 2 else 1]
            # single basis vector per degree; product is basis vector of the sum
            mult[(d, 0, e, 0)] = [1] if target <= 2 else []
    ring = GradedRingPresentation.explicit([1, 1, 1], mult=mult)
    assert annihilator_dims(ring, (2, [1])) == (0, 1, 1)
