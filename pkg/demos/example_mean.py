"""Geometric mean of two 3x3x2 T-positive definite tensors.

Reproduces a small published example: the mean is computed on the Fourier
blocks and again with the dense block circulant oracle, and both are
compared with the printed four-decimal values.
"""
import numpy as np

from tpdmean import Tensor3, check_tpd, geometric_mean, riccati_residual

A = Tensor3([[[6, 1, 2], [1, 8, 3], [2, 3, 10]],
             [[4, 1, 2], [1, 6, 4], [2, 4, 2]]])
B = Tensor3([[[8, -3, -3], [-3, 6, 1], [-3, 1, 8]],
             [[-6, 2, 5], [2, -2, -3], [5, -3, -2]]])
printed = np.array([
    [[4.5916, -0.6057, 0.1536], [-0.6057, 5.1580, 0.4850], [0.1536, 0.4850, 7.4309]],
    [[-0.4400, 0.3644, 2.2243], [0.3644, 1.4536, 0.0987], [2.2243, 0.0987, -0.0154]],
])

for name, t in (("A", A), ("B", B)):
    cert = check_tpd(t)
    print(f"{name}: {cert.verdict.value}, T-eigenvalues in "
          f"[{cert.lambda_min:.4f}, {cert.lambda_max:.4f}]")

fast = geometric_mean(A, B)
dense = geometric_mean(A, B, "dense")
np.set_printoptions(precision=4, suppress=True)
for k in (1, 2):
    print(f"\nX^({k}) =")
    print(fast.mean.slice(k).real)

print("\nmax deviation from printed values:", np.abs(fast.mean.data.real - printed).max())
print("blocks vs dense oracle:", np.abs(fast.mean.data - dense.mean.data).max())
print("Riccati residual ||X A^-1 X - B||:", riccati_residual(fast.mean, A, B))
