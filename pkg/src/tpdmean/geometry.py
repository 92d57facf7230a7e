"""Riemannian geometry of the cone of T-positive definite tensors.

The trace metric ``g_P(X, Y) = tr(P^-1 * X * P^-1 * Y)`` makes ``bcirc`` an
isometric embedding into the Hermitian positive definite ``np x np``
matrices, so distances, geodesics and lengths all split over the Fourier
blocks. Norms of tensors relate to block norms by
``sqrt(p) * ||T|| = sqrt(sum_i ||T_i||_F^2)``.
"""
import math
from dataclasses import dataclass, field

import numpy as np

from . import _fourier
from .errors import ConsistencyError, ParameterOutOfRange
from .means import evaluate_geodesic, geodesic_factors
from .spectral import (DEFAULT_TOL, _from_blocks, _hermitize, assemble,
                       hermitian_blocks, pd_eigh, t_exp, t_log)
from .tensor_core import Tensor3, frobenius_norm, t_product

FD_REL_STEP = 1e-5
GAUSS_ORDER = 4


@dataclass(frozen=True)
class MetricValue:
    base: Tensor3 = field(repr=False)
    x: Tensor3 = field(repr=False)
    y: Tensor3 = field(repr=False)
    value: float


@dataclass(frozen=True)
class GeodesicSample:
    t: float
    point: Tensor3
    a_ref: str = "a"
    b_ref: str = "b"


def _block_norm_sq(blocks):
    return float(np.sum(np.abs(blocks) ** 2))


def metric(base, x, y, tol=DEFAULT_TOL):
    """Trace metric at ``base`` between tangent vectors ``x`` and ``y``.

    Uses ``tr(T) = sum_i tr(T_i)`` over the Fourier blocks.
    """
    w, v = pd_eigh(base, tol, "base")
    xb = hermitian_blocks(x, tol)
    yb = hermitian_blocks(y, tol)
    p_inv = assemble(1.0 / w, v)
    value = complex(np.trace(p_inv @ xb @ p_inv @ yb, axis1=1, axis2=2).sum())
    scale = max(1.0, abs(value))
    if abs(value.imag) > 1e-10 * scale:
        raise ConsistencyError(f"metric has imaginary part {value.imag:.3e}")
    return MetricValue(base, x, y, value.real)


def distance(a, b, tol=DEFAULT_TOL):
    """Riemannian distance ``sqrt(p) * ||log(a^-1/2 * b * a^-1/2)||``.

    Computed as ``sqrt(sum_i sum_j log(mu_ij)^2)`` with ``mu_ij`` the
    eigenvalues of ``A_i^-1/2 B_i A_i^-1/2``.
    """
    _, mu, _ = geodesic_factors(a, b, tol)
    return float(np.sqrt(np.sum(np.log(mu) ** 2)))


def geodesic_curve(a, b, tol=DEFAULT_TOL):
    """Return ``gamma(t) = a^1/2 * (a^-1/2 * b * a^-1/2)^t * a^1/2`` as a callable.

    The block factorizations are computed once; each evaluation costs one
    batch of small matrix products. Any real ``t`` is accepted.
    """
    factors = geodesic_factors(a, b, tol)
    real = a.is_real and b.is_real

    def gamma(t):
        return evaluate_geodesic(factors, t, real)

    return gamma


def geodesic(a, b, ts, a_ref="a", b_ref="b", tol=DEFAULT_TOL):
    """Sample the geodesic from ``a`` to ``b`` at parameters ``ts`` in [0, 1]."""
    ts = [float(t) for t in ts]
    bad = [t for t in ts if not 0.0 <= t <= 1.0]
    if bad:
        raise ParameterOutOfRange(f"geodesic parameters outside [0, 1]: {bad}")
    gamma = geodesic_curve(a, b, tol)
    return [GeodesicSample(t, gamma(t), a_ref, b_ref) for t in ts]


def _speed(point, velocity, tol, label):
    w, v = pd_eigh(point, tol, label)
    inv_half = assemble(1.0 / np.sqrt(w), v)
    rel = inv_half @ _fourier.dft(velocity.data) @ inv_half
    return math.sqrt(_block_norm_sq(rel))


def path_length(path, t0, t1, quad_points=64, tol=DEFAULT_TOL):
    """Length ``sqrt(p) * int ||g^-1/2 * g' * g^-1/2|| dt`` of a path of T-PD tensors.

    Parameters
    ----------
    path : callable
        ``t -> Tensor3``; must be defined slightly beyond ``[t0, t1]``
        (by the finite-difference step).
    t0, t1 : float
    quad_points : int
        Total number of Gauss-Legendre nodes, at least 2. Nodes are grouped
        in 4-point panels (fewer when ``quad_points < 4``); a count that is
        not a multiple of 4 is rounded up to whole panels.

    Notes
    -----
    The derivative is a central difference with step ``1e-5 * |t1 - t0|``.
    """
    if quad_points < 2:
        raise ParameterOutOfRange(f"quad_points must be >= 2, got {quad_points}")
    if t1 == t0:
        return 0.0
    order = min(GAUSS_ORDER, quad_points)
    panels = -(-quad_points // order)
    nodes, weights = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(t0, t1, panels + 1)
    h = FD_REL_STEP * abs(t1 - t0)
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        for x, wt in zip(nodes, weights):
            t = mid + half * x
            velocity = (path(t + h) - path(t - h)) / (2.0 * h)
            total += half * wt * _speed(path(t), velocity, tol, f"path({t:.6g})")
    return abs(total)


def iemi_check(h, k, fd_step=None, tol=DEFAULT_TOL):
    """Evaluate both sides of the exponential metric increasing inequality.

    Returns ``(lhs, rhs)`` with
    ``lhs = ||(e^h)^-1/2 * De^h(k) * (e^h)^-1/2||`` and ``rhs = ||k||``;
    the inequality is ``lhs >= rhs``. The derivative ``De^h(k)`` is the
    central difference ``(exp(h + eps k) - exp(h - eps k)) / (2 eps)`` with
    ``eps = fd_step``, default ``1e-5 * max(1, ||k||)``.
    """
    hermitian_blocks(h, tol)
    hermitian_blocks(k, tol)
    eps = FD_REL_STEP * max(1.0, frobenius_norm(k)) if fd_step is None else float(fd_step)
    if eps <= 0:
        raise ParameterOutOfRange(f"fd_step must be positive, got {eps}")
    deriv = (t_exp(h + k * eps, tol) - t_exp(h - k * eps, tol)) / (2.0 * eps)
    e_neg_half = t_exp(h * -0.5, tol)
    lhs = frobenius_norm(t_product(t_product(e_neg_half, deriv), e_neg_half))
    return lhs, frobenius_norm(k)


def lower_bound_check(a, b, tol=DEFAULT_TOL):
    """Return ``(distance(a, b), sqrt(p) * ||log a - log b||)``.

    The first never falls below the second, with equality when ``a`` and
    ``b`` commute.
    """
    bound = math.sqrt(a.p) * frobenius_norm(t_log(a, tol) - t_log(b, tol))
    return distance(a, b, tol), bound


def exp_map(base, x, tol=DEFAULT_TOL):
    """Riemannian exponential ``P^1/2 * exp(P^-1/2 * X * P^-1/2) * P^1/2``."""
    w, v = pd_eigh(base, tol, "base")
    xb = hermitian_blocks(x, tol)
    half = assemble(np.sqrt(w), v)
    inv_half = assemble(1.0 / np.sqrt(w), v)
    wi, vi = np.linalg.eigh(_hermitize(inv_half @ xb @ inv_half))
    out = half @ assemble(np.exp(wi), vi) @ half
    return _from_blocks(_hermitize(out), base.is_real and x.is_real)


def log_map(base, q, tol=DEFAULT_TOL):
    """Riemannian logarithm ``P^1/2 * log(P^-1/2 * Q * P^-1/2) * P^1/2``.

    Inverse of :func:`exp_map`; ``log_map(a, b)`` is the initial velocity of
    the geodesic from ``a`` to ``b``.
    """
    w, v = pd_eigh(base, tol, "base")
    pd_eigh(q, tol, "q")
    half = assemble(np.sqrt(w), v)
    inv_half = assemble(1.0 / np.sqrt(w), v)
    inner = _hermitize(inv_half @ _hermitize(_fourier.dft(q.data)) @ inv_half)
    wi, vi = np.linalg.eigh(inner)
    out = half @ assemble(np.log(wi), vi) @ half
    return _from_blocks(_hermitize(out), base.is_real and q.is_real)
