"""Classical intersection numbers on Grassmannians and flag manifolds.

The pairing of a symmetric polynomial in the Chern roots of the tautological
bundle against the fundamental class is an iterated residue at zero.  This
script evaluates the standard examples: powers of the hyperplane class on
projective space, Schubert-class products on Gr(2, 4), and a Chern number on
the complete flag of 2-planes in C^2.
"""

from nrquot import MultiPoly, flag_pairing, grassmannian_pairing

z = MultiPoly.variable(1, 0)
z0, z1 = (MultiPoly.variable(2, i) for i in range(2))

print("Degrees of hyperplane powers on projective space:")
for n in range(1, 7):
    print("  P^%d:  integral of H^%d = %s" % (n - 1, n - 1, flag_pairing(1, n, z ** (n - 1))))

print()
print("Schubert calculus on Gr(2, 4) (Chern roots z1, z2):")
sigma1 = z0 + z1
sigma2 = z0 ** 2 + z0 * z1 + z1 ** 2   # Schur s_(2)
sigma11 = z0 * z1                      # Schur s_(1,1)
for label, cls in [
    ("sigma_1^4", sigma1 ** 4),
    ("sigma_1^2 sigma_(1,1)", sigma1 ** 2 * sigma11),
    ("sigma_2^2", sigma2 ** 2),
    ("sigma_(1,1)^2", sigma11 ** 2),
    ("sigma_2 sigma_(1,1)", sigma2 * sigma11),
]:
    print("  %-22s -> %s" % (label, grassmannian_pairing(2, 4, cls)))

print()
print("Flag manifold of 2-planes in C^2 (a P^1 with a tautological line):")
print("  integral of z1 = %s   (degree of O(-1))" % flag_pairing(2, 2, z0))
