"""Geometric means of T-positive definite tensors and the T-Loewner order."""
import enum
from dataclasses import dataclass

import numpy as np

from . import _fourier
from .errors import ConsistencyError, DimensionMismatch, SingularTensor
from .spectral import (DEFAULT_TOL, TpdCertificate, Verdict, _from_blocks,
                       _hermitize, assemble, check_tpd, hermitian_blocks,
                       pd_eigh, t_inv)
from .tensor_core import Tensor3, bcirc, bcirc_inverse, recover_real, t_product

RICCATI_TOL = 1e-8
# tolerance for reading back the dense oracle's (circulant up to rounding) mean
DENSE_READBACK_TOL = 1e-10


class MeanPath(enum.Enum):
    DENSE_ORACLE = "dense"
    FOURIER_BLOCKS = "blocks"


class Order(enum.Enum):
    STRICTLY_LESS = "StrictlyLess"
    LESS_OR_EQUAL = "LessOrEqual"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True)
class MeanResult:
    """A geometric mean together with its verification data.

    ``riccati_residual`` is ``||X * A^-1 * X - B|| / max(1, ||B||)``.
    """

    mean: Tensor3
    path_used: MeanPath
    riccati_residual: float
    certificate: TpdCertificate


def _check_pair(a, b):
    if a.data.shape != b.data.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape} differ")


def geodesic_factors(a, b, tol=DEFAULT_TOL):
    """Block factors for evaluating ``a^1/2 * (a^-1/2 * b * a^-1/2)^t * a^1/2``.

    Returns ``(half, wc, vc)``: the blocks of ``a^1/2`` and the eigenpairs of
    the blocks of ``a^-1/2 * b * a^-1/2``. Raises :class:`NotTPD` naming the
    offending argument.
    """
    _check_pair(a, b)
    wa, va = pd_eigh(a, tol, "a")
    pd_eigh(b, tol, "b")
    sa = np.sqrt(wa)
    half = assemble(sa, va)
    inv_half = assemble(1.0 / sa, va)
    inner = _hermitize(inv_half @ _hermitize(_fourier.dft(b.data)) @ inv_half)
    wc, vc = np.linalg.eigh(inner)
    return half, wc, vc


def evaluate_geodesic(factors, t, real):
    half, wc, vc = factors
    blocks = half @ assemble(np.power(wc, float(t)), vc) @ half
    return _from_blocks(_hermitize(blocks), real)


def _blocks_mean(a, b, t, tol):
    return evaluate_geodesic(geodesic_factors(a, b, tol), t, a.is_real and b.is_real)


def _dense_mean(a, b, t, tol, allow_large):
    from . import oracle  # the oracle is only needed on this path

    _check_pair(a, b)
    pd_eigh(a, tol, "a")
    pd_eigh(b, tol, "b")
    c = oracle.dense_weighted_mean(bcirc(a), bcirc(b), t, allow_large=allow_large)
    x = bcirc_inverse(c, tol=DENSE_READBACK_TOL)
    return Tensor3(recover_real(x.data, a.is_real and b.is_real))


def riccati_residual(x, a, b, tol=DEFAULT_TOL):
    """Relative residual of the Riccati equation ``x * a^-1 * x = b``.

    Evaluated block-wise: ``||T||^2 = (1/p) sum_i ||T_i||^2``.
    """
    _check_pair(x, a)
    _check_pair(x, b)
    wa, va = pd_eigh(a, tol, "a")
    a_inv = assemble(1.0 / wa, va)
    xb = _fourier.dft(x.data)
    bb = _fourier.dft(b.data)
    r = xb @ a_inv @ xb - bb
    num = np.sqrt(np.sum(np.abs(r) ** 2) / a.p)
    return float(num / max(1.0, np.linalg.norm(b.data)))


def geometric_mean(a, b, path=MeanPath.FOURIER_BLOCKS, tol=DEFAULT_TOL,
                   allow_large=False):
    """Geometric mean ``a # b = a^1/2 * (a^-1/2 * b * a^-1/2)^1/2 * a^1/2``.

    Parameters
    ----------
    a, b : Tensor3
        T-PD tensors of equal size.
    path : MeanPath or {"blocks", "dense"}
        ``FOURIER_BLOCKS`` solves ``p`` matrix means ``A_i # B_i`` and
        reassembles; ``DENSE_ORACLE`` applies the matrix formula to
        ``bcirc(a)`` and ``bcirc(b)`` and reads the result back.
    tol : float
        Definiteness tolerance.
    allow_large : bool
        Lift the dense oracle's ``n*p <= 512`` cap (benchmarking only).

    Returns
    -------
    MeanResult

    Raises
    ------
    NotTPD
        Naming ``"a"`` or ``"b"``.
    ConsistencyError
        If the mean fails its own certificate or Riccati residual check.
    """
    path = MeanPath(path)
    if path is MeanPath.FOURIER_BLOCKS:
        x = _blocks_mean(a, b, 0.5, tol)
    else:
        x = _dense_mean(a, b, 0.5, tol, allow_large)
    cert = check_tpd(x, tol)
    if not cert.is_positive_definite:
        raise ConsistencyError(f"mean is not T-PD ({cert.verdict.value})")
    res = riccati_residual(x, a, b, tol)
    if res > RICCATI_TOL:
        raise ConsistencyError(f"Riccati residual {res:.3e} > {RICCATI_TOL:g}")
    return MeanResult(x, path, res, cert)


def weighted_geometric_mean(a, b, t, path=MeanPath.FOURIER_BLOCKS,
                            tol=DEFAULT_TOL, allow_large=False):
    """Point ``a^1/2 * (a^-1/2 * b * a^-1/2)^t * a^1/2`` of the geodesic.

    Any real ``t`` is accepted; ``t`` in [0, 1] stays between the endpoints.
    """
    t = float(t)
    if MeanPath(path) is MeanPath.FOURIER_BLOCKS:
        return _blocks_mean(a, b, t, tol)
    return _dense_mean(a, b, t, tol, allow_large)


def congruence(c, a):
    """``Gamma_c(a) = c^H * a * c`` for an invertible ``c``."""
    if not c.is_frontal_square:
        raise DimensionMismatch("congruence needs a frontal square c")
    sv = np.linalg.svd(_fourier.dft(c.data), compute_uv=False)
    if sv.min() <= 1e-14 * sv.max() or sv.max() == 0:
        raise SingularTensor("congruence by a singular tensor")
    return t_product(t_product(c.H, a), c)


def lowner_compare(a, b, tol=DEFAULT_TOL):
    """Classify ``b - a`` in the T-Loewner order.

    Returns ``STRICTLY_LESS`` when ``b - a`` is T-PD, ``LESS_OR_EQUAL`` when it
    is only T-PSD (so ``a`` vs ``a`` gives ``LESS_OR_EQUAL``), otherwise
    ``INCOMPARABLE``.
    """
    _check_pair(a, b)
    hermitian_blocks(a, tol)
    hermitian_blocks(b, tol)
    verdict = check_tpd(b - a, tol).verdict
    if verdict is Verdict.POSITIVE_DEFINITE:
        return Order.STRICTLY_LESS
    if verdict is Verdict.POSITIVE_SEMIDEFINITE:
        return Order.LESS_OR_EQUAL
    return Order.INCOMPARABLE


def arithmetic_mean(a, b):
    return (a + b) * 0.5


def harmonic_mean(a, b, tol=DEFAULT_TOL):
    """``2 (a^-1 + b^-1)^-1``."""
    return t_inv(t_inv(a, tol) + t_inv(b, tol), tol) * 2.0
