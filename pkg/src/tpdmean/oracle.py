"""Dense reference implementations on explicit block-circulant matrices.

Everything here works on full ``np x np`` matrices with ``scipy.linalg.eigh``
and shares no intermediate results with the Fourier-block code in
:mod:`tpdmean.spectral`; agreement between the two is a real check. It is
slow on purpose (``O((np)^3)``) and capped at ``n * p <= 512`` unless the
caller passes ``allow_large=True``.
"""
import numpy as np
import scipy.linalg

from .errors import NotPD, NotTHermitian, OracleTooLarge, ParameterOutOfRange
from .tensor_core import DenseCirc

SIZE_CAP = 512
PD_TOL = 1e-10
HERMITIAN_TOL = 1e-10


def _unwrap(x, allow_large):
    if isinstance(x, DenseCirc):
        mat = np.asarray(x.mat, dtype=np.complex128)
    else:
        mat = np.asarray(x, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    if mat.shape[0] > SIZE_CAP and not allow_large:
        raise OracleTooLarge(
            f"dense oracle size {mat.shape[0]} exceeds cap {SIZE_CAP}; "
            "pass allow_large=True to override")
    return mat


def _wrap(like, mat):
    if isinstance(like, DenseCirc):
        return DenseCirc(like.m, like.n, like.p, mat)
    return mat


def _herm_eigh(mat, need_pd, name="matrix"):
    scale = max(1.0, np.linalg.norm(mat))
    if np.linalg.norm(mat - mat.conj().T) > HERMITIAN_TOL * scale:
        raise NotTHermitian(f"{name} is not Hermitian")
    w, v = scipy.linalg.eigh(0.5 * (mat + mat.conj().T))
    if need_pd and not w[0] > PD_TOL * max(1.0, w[-1]):
        raise NotPD(f"{name} is not positive definite (lambda_min={w[0]:.3e})")
    return w, v


def _funm(w, v, fw):
    return (v * fw) @ v.conj().T


def _apply(f, w, r=None):
    if f == "sqrt":
        return np.sqrt(w)
    if f == "inv":
        return 1.0 / w
    if f == "exp":
        return np.exp(w)
    if f == "log":
        return np.log(w)
    if f == "power":
        if r is None:
            raise ParameterOutOfRange("power needs an exponent r")
        return np.power(w, float(r))
    raise ValueError(f"unknown function {f!r}")


def dense_funcs(mat, f, r=None, allow_large=False):
    """``f(mat)`` through a Hermitian eigendecomposition.

    ``f`` is one of ``"sqrt"``, ``"inv"``, ``"exp"``, ``"log"``, ``"power"``
    (with exponent ``r``). ``exp`` and non-negative integer powers accept any
    Hermitian matrix; the rest require positive definiteness.
    """
    m = _unwrap(mat, allow_large)
    need_pd = f in ("sqrt", "inv", "log") or (
        f == "power" and not (r is not None and float(r).is_integer() and r >= 0))
    w, v = _herm_eigh(m, need_pd)
    return _wrap(mat, _funm(w, v, _apply(f, w, r)))


def dense_weighted_mean(a, b, t, allow_large=False):
    """``A^1/2 (A^-1/2 B A^-1/2)^t A^1/2`` on dense matrices."""
    am = _unwrap(a, allow_large)
    bm = _unwrap(b, allow_large)
    if am.shape != bm.shape:
        raise ValueError(f"shape mismatch {am.shape} vs {bm.shape}")
    wa, va = _herm_eigh(am, True, "A")
    _herm_eigh(bm, True, "B")
    half = _funm(wa, va, np.sqrt(wa))
    inv_half = _funm(wa, va, 1.0 / np.sqrt(wa))
    inner = inv_half @ bm @ inv_half
    wc, vc = _herm_eigh(0.5 * (inner + inner.conj().T), False, "inner")
    out = half @ _funm(wc, vc, np.power(wc, float(t))) @ half
    return _wrap(a, 0.5 * (out + out.conj().T))


def dense_gmean(a, b, allow_large=False):
    """Matrix geometric mean ``A # B``."""
    return dense_weighted_mean(a, b, 0.5, allow_large=allow_large)


def dense_distance(a, b, allow_large=False):
    """``||log(A^-1/2 B A^-1/2)||_F``."""
    am = _unwrap(a, allow_large)
    bm = _unwrap(b, allow_large)
    wa, va = _herm_eigh(am, True, "A")
    _herm_eigh(bm, True, "B")
    inv_half = _funm(wa, va, 1.0 / np.sqrt(wa))
    inner = inv_half @ bm @ inv_half
    mu = scipy.linalg.eigvalsh(0.5 * (inner + inner.conj().T))
    return float(np.sqrt(np.sum(np.log(mu) ** 2)))


def dense_metric(base, x, y, allow_large=False):
    """Trace metric ``tr(P^-1 X P^-1 Y)``."""
    pm = _unwrap(base, allow_large)
    xm = _unwrap(x, allow_large)
    ym = _unwrap(y, allow_large)
    pinv = dense_funcs(pm, "inv", allow_large=allow_large)
    return complex(np.trace(pinv @ xm @ pinv @ ym))


def dense_eigvals(mat, allow_large=False):
    """Eigenvalues of a general square matrix, sorted by (real, imag)."""
    vals = scipy.linalg.eigvals(_unwrap(mat, allow_large))
    return vals[np.lexsort((vals.imag, vals.real))]


def is_block_circulant(c, tol=1e-10):
    """``True`` if every block equals its cyclic successor within ``tol`` relative."""
    m, n, p = c.m, c.n, c.p
    blocks = np.asarray(c.mat).reshape(p, m, p, n).transpose(0, 2, 1, 3)
    shifted = np.roll(np.roll(blocks, -1, axis=0), -1, axis=1)
    return np.linalg.norm(blocks - shifted) <= tol * np.linalg.norm(c.mat)
