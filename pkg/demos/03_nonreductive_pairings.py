"""Intersection pairings on quotients by groups with graded unipotent radical.

Three routes to the same kind of number:

  * the reductive fixed-point formula with the root-product factor,
  * the abelianised route through the maximal-torus quotient,
  * the graded-group formula with the root-and-unipotent Euler factor.

The last one is exercised on the Borel of SL(2) acting on P^1 x P^1, whose
quotient is a single point, and on a circle extension acting on P^3.
"""

from nrquot import (
    ConeChoice,
    FixedPointComponent,
    GroupData,
    LinearForm,
    MultiPoly,
    PairingProblem,
    euler_class_nonreductive,
    integrate_abelianized,
    integrate_nonreductive,
    integrate_reductive,
    integrate_uhat,
    torus_pairing_fn,
)

# ---- Gr(2, 4) through the U(2) model: one torus fixed point at the origin ----
z0, z1 = (MultiPoly.variable(2, i) for i in range(2))
gl2 = GroupData(rank=2, positive_roots=[LinearForm([1, -1])],
                weyl_generators=[(1, 0)], weyl_order=2)
origin = FixedPointComponent(
    "origin", [(LinearForm([1, 0]), 4), (LinearForm([0, 1]), 4)], is_min=True
)

for label, cls in [("sigma_1^4", (z0 + z1) ** 4), ("sigma_1^2 sigma_(1,1)", (z0 + z1) ** 2 * z0 * z1)]:
    problem = PairingProblem(group=gl2, fixed_points=[origin], class_eta=cls,
                             cone=ConeChoice((1, 1)))
    direct = integrate_reductive(problem)
    torus = torus_pairing_fn([origin])
    martin = integrate_abelianized(torus, cls, euler_class_nonreductive(gl2), 2)
    print("%-22s reductive %s   abelianised %s" % (label, direct, martin))

# ---- P^1 under its grading circle: the quotient is a point ----
circle = GroupData(rank=1, grading=(1,))
p1 = PairingProblem(
    group=circle,
    fixed_points=[
        FixedPointComponent("min", [(LinearForm([1]), 1)], lambda_weight=0, is_min=True),
        FixedPointComponent("max", [(LinearForm([-1]), 1)], lambda_weight=1),
    ],
    class_eta=MultiPoly.one(1),
)
print()
print("P^1 // C* point count:", integrate_uhat(p1))

# ---- the Borel of SL(2) on P^1 x P^1 ----
# Four torus fixed points with tangent weights (+-2z, +-2z); the adjoint
# weight on Lie(U) is 2z.  The chamber keeps the component where the moment
# value is minimal; -1 in SL(2) acts trivially, so the constant is 2.
borel = GroupData(rank=1, unipotent_weights=[LinearForm([2])], grading=(1,))
up, down = LinearForm([2]), LinearForm([-2])
corners = [
    FixedPointComponent("--", [(up, 1), (up, 1)], lambda_weight=-2, is_min=True),
    FixedPointComponent("-+", [(up, 1), (down, 1)], lambda_weight=0),
    FixedPointComponent("+-", [(down, 1), (up, 1)], lambda_weight=0),
    FixedPointComponent("++", [(down, 1), (down, 1)], lambda_weight=2),
]
selected = PairingProblem(
    group=borel,
    fixed_points=[c for c in corners if c.is_min],
    class_eta=MultiPoly.one(1),
    normalization=2,
)
everything = PairingProblem(
    group=borel, fixed_points=corners, class_eta=MultiPoly.one(1), normalization=2
)
print("(P^1 x P^1) // B with the chamber selection:", integrate_nonreductive(selected))
print("same sum over all four components (cancels):", integrate_nonreductive(everything))

# ---- a circle extension on P^3: binary cubics under the Borel circle ----
# weights 3, 1, -1, -3; minimal fixed point has tangent weights 6z, 4z, 2z,
# restricted hyperplane class 3z; the kernel of the action has order 2
ext = GroupData(rank=1, unipotent_weights=[LinearForm([2])], grading=(1,))
zvar = MultiPoly.variable(1, 0)
minimal = FixedPointComponent(
    "w=-3",
    [(LinearForm([6]), 1), (LinearForm([4]), 1), (LinearForm([2]), 1)],
    restriction=3 * zvar,
    lambda_weight=-3,
    is_min=True,
)
p3 = PairingProblem(group=ext, fixed_points=[minimal], normalization=2)
print()
print("P^3 quotient, graded-extension route:  ", integrate_uhat(p3))
print("P^3 quotient, general-group route:     ", integrate_nonreductive(p3))
