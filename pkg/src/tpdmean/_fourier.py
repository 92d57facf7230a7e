"""DFT kernels along the slice axis.

The forward transform is ``X_i = sum_k w**(i*k) x_k`` with ``w = exp(2j*pi/p)``
(zero-based indices) and the inverse is ``x_k = (1/p) sum_i w**(-i*k) X_i``.
That is the unnormalized conjugate of numpy's ``fft`` sign convention, so the
FFT route goes through ``ifft`` scaled by ``p``.

For ``p <= DIRECT_SUM_MAX_P`` the transforms are evaluated as the literal sums
with a precomputed twiddle matrix; larger ``p`` uses ``numpy.fft``.
"""
from functools import lru_cache

import numpy as np

DIRECT_SUM_MAX_P = 8


@lru_cache(maxsize=64)
def twiddle(p, sign=1):
    """Return the ``p x p`` matrix ``w**(sign*i*k)``, exponents reduced mod p."""
    k = np.arange(p)
    e = (sign * np.outer(k, k)) % p
    w = np.exp(2j * np.pi * e / p)
    # snap the quarter turns so that e.g. p=2, 4 use exact +-1, +-1j
    w.real[np.abs(w.real) < 1e-15] = 0.0
    w.imag[np.abs(w.imag) < 1e-15] = 0.0
    w.flags.writeable = False
    return w


def dft_direct(x):
    p = x.shape[0]
    return np.tensordot(twiddle(p, 1), x, axes=(1, 0))


def idft_direct(x):
    p = x.shape[0]
    return np.tensordot(twiddle(p, -1), x, axes=(1, 0)) / p


def dft(x):
    """Forward slice transform of an array of shape ``(p, ...)``."""
    p = x.shape[0]
    if p <= DIRECT_SUM_MAX_P:
        return dft_direct(x)
    return np.fft.ifft(x, axis=0) * p


def idft(x):
    """Inverse of :func:`dft`."""
    p = x.shape[0]
    if p <= DIRECT_SUM_MAX_P:
        return idft_direct(x)
    return np.fft.fft(x, axis=0) / p
