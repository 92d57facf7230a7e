"""The T-product, its block circulant picture, and the Fourier blocks.

A 2x2x3 tensor is multiplied with the T-product three ways: through the
library, through the block circulant matrix, and as a cyclic convolution of
frontal slices. Then the Fourier blocks are shown to carry the whole
spectrum of bcirc(a).
"""
import numpy as np

from tpdmean import Tensor3, bcirc, fold, t_eigenvalues, to_spectrum, unfold

rng = np.random.default_rng(0)
a = Tensor3(rng.integers(-3, 4, size=(3, 2, 2)).astype(float))
b = Tensor3(rng.integers(-3, 4, size=(3, 2, 2)).astype(float))

print("bcirc(a):")
print(bcirc(a).mat.real)

c = a @ b
c_dense = fold(bcirc(a).mat @ unfold(b), b.p)
c_conv = np.zeros((3, 2, 2))
for k in range(3):
    for j in range(3):
        c_conv[k] += a.data[(k - j) % 3].real @ b.data[j].real

print("\nfirst slice of a * b:\n", np.round(c.slice(1).real, 10))
print("max |library - dense|       =", np.abs(c.data - c_dense.data).max())
print("max |library - convolution| =", np.abs(c.data - c_conv).max())

# Fourier blocks of a real tensor come in conjugate pairs: A_3 = conj(A_2)
blocks = to_spectrum(a).blocks
print("\nA_2 =\n", np.round(blocks[1], 4))
print("A_3 =\n", np.round(blocks[2], 4))

ours = t_eigenvalues(a)
dense = np.sort_complex(np.linalg.eigvals(bcirc(a).mat))
print("\nT-eigenvalues:", np.round(ours, 6))
print("dense eigenvalues of bcirc(a):", np.round(dense, 6))
