"""Random test tensors: general, T-Hermitian, and T-positive definite."""
import numpy as np

from . import _fourier
from .tensor_core import Tensor3, t_product


def _rng(rng):
    return rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)


def random_tensor(m, n, p, rng=None, real=False):
    """Tensor with i.i.d. standard normal entries (complex unless ``real``)."""
    rng = _rng(rng)
    data = rng.standard_normal((p, m, n))
    if not real:
        data = data + 1j * rng.standard_normal((p, m, n))
    return Tensor3(data)


def random_t_hermitian(n, p, rng=None, real=False, norm=None):
    """T-Hermitian ``(x + x^H) / 2``, optionally rescaled to Frobenius norm ``norm``."""
    x = random_tensor(n, n, p, rng, real)
    h = (x + x.H) * 0.5
    if norm is not None:
        h = h * (norm / np.linalg.norm(h.data))
    return h


def random_tpd(n, p, rng=None, real=False, shift=0.5):
    """T-PD tensor ``x * x^H / (n p) + shift * I``; its T-eigenvalues are >= ``shift``."""
    x = random_tensor(n, n, p, rng, real)
    gram = t_product(x, x.H) * (1.0 / (n * p))
    return gram + Tensor3.identity(n, p) * shift


def random_tpd_blocks(n, p, rng=None):
    """T-PD tensor built in the Fourier domain from blocks ``M_i M_i^H + I``.

    Every block is Hermitian positive definite by construction, so no
    rejection is needed. The result is complex in general.
    """
    rng = _rng(rng)
    m = rng.standard_normal((p, n, n)) + 1j * rng.standard_normal((p, n, n))
    blocks = m @ m.conj().transpose(0, 2, 1) + np.eye(n)
    blocks = 0.5 * (blocks + blocks.conj().transpose(0, 2, 1))
    return Tensor3(_fourier.idft(blocks))


def random_invertible(n, p, rng=None, real=False, spread=0.2):
    """Well-conditioned invertible tensor ``I + spread * x / sqrt(n p)``."""
    x = random_tensor(n, n, p, rng, real)
    return Tensor3.identity(n, p) + x * (spread / np.sqrt(n * p))
