"""Walking along the geodesic between two T-PD tensors.

The weighted mean gamma(t) traces the geodesic from a to b. Distances
along it grow linearly, the midpoint is the geometric mean, and the
numerically integrated length of the curve equals the closed-form distance.
A straight line between the endpoints is longer.
"""
import numpy as np

from tpdmean import (distance, geodesic_curve, geometric_mean, iemi_check,
                     lower_bound_check, path_length)
from tpdmean.sampling import random_t_hermitian, random_tpd

rng = np.random.default_rng(7)
a, b = random_tpd(3, 4, rng, real=True), random_tpd(3, 4, rng, real=True)
d = distance(a, b)
gamma = geodesic_curve(a, b)
print(f"distance(a, b) = {d:.10f}")

for t in (0.0, 0.25, 0.5, 0.75, 1.0):
    print(f"  t = {t:4.2f}: distance(a, gamma(t)) / distance(a, b) = "
          f"{distance(a, gamma(t)) / d:.10f}")

mid = geometric_mean(a, b).mean
print("gamma(1/2) equals a # b:", np.abs(gamma(0.5).data - mid.data).max() < 1e-12)

print(f"\nlength of the geodesic (64-point quadrature): {path_length(gamma, 0, 1):.10f}")
line = lambda t: a * (1 - t) + b * t  # noqa: E731
print(f"length of the straight line:                   {path_length(line, 0, 1):.10f}")

dist, bound = lower_bound_check(a, b)
print(f"\ndistance {dist:.6f} >= sqrt(p) ||log a - log b|| = {bound:.6f}")

h = random_t_hermitian(3, 4, rng, norm=1.0)
k = random_t_hermitian(3, 4, rng, norm=1.0)
lhs, rhs = iemi_check(h, k)
print(f"exponential metric increasing: {lhs:.6f} >= {rhs:.6f}")
