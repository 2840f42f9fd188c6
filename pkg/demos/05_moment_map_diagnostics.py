"""Numerical sanity checks on the weight data feeding the exact pipeline.

For a linear action on projective space the moment value at a point has a
closed form; at a diagonalised fixed point it is just the circle weight, and
its derivative along sphere tangents has a bilinear expression.  Both are
checked here in floating point.  Nothing computed in this script ever flows
back into the exact machinery; it only validates the data a problem file
declares.
"""

import numpy as np

from nrquot import (
    FixedPointComponent,
    LinearActionSample,
    LinearForm,
    fixed_point_weight_residual,
    moment_derivative_check,
    moment_value,
)

TWO_PI_I = 2j * np.pi

# a circle acting on P^3 with weights 3, 1, -1, -3 (binary cubics)
weights = [3, 1, -1, -3]
rho = tuple(map(tuple, TWO_PI_I * np.diag(weights)))

print("moment values at the coordinate fixed points:")
for j, w in enumerate(weights):
    x = [0.0] * 4
    x[j] = 1.0
    sample = LinearActionSample(tuple(x), rho)
    print("  e_%d: value %s, declared weight %d" % (j, moment_value(sample).real, w))

# the fixed-point datum the exact pipeline uses for the same point
component = FixedPointComponent(
    "w=-3",
    [(LinearForm([6]), 1), (LinearForm([4]), 1), (LinearForm([2]), 1)],
    lambda_weight=-3,
    is_min=True,
)
x = (0.0, 0.0, 0.0, 1.0)
residual = fixed_point_weight_residual(LinearActionSample(x, rho), component.lambda_weight)
print("relative gap to the declared minimal weight:", residual)

# derivative identity along random sphere tangents, central differences
rng = np.random.default_rng(1)
q, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
conjugated = tuple(map(tuple, q @ np.array(rho) @ q.conj().T))
point = rng.normal(size=4) + 1j * rng.normal(size=4)
point = point / np.linalg.norm(point)
tangent = rng.normal(size=4) + 1j * rng.normal(size=4)
tangent = tangent - np.vdot(point, tangent) * point
sample = LinearActionSample(tuple(point), conjugated)

print()
print("finite-difference residuals of the derivative identity:")
for step in (1e-2, 1e-3, 1e-4, 1e-5):
    print("  step %.0e -> residual %.3e" % (step, moment_derivative_check(sample, tuple(tangent), step=step)))
print("(quadratic in the step, as central differences should be)")
