"""Third-order tensors under the T-product.

Layout
------
A :class:`Tensor3` of size ``m x n x p`` is stored as one complex128 array of
shape ``(p, m, n)`` in C order: slice-major, then rows, then columns. Slice
``k`` (1-based, as in ``A^(k)``) is ``data[k - 1]``. Every other module relies
on this layout and it is not repeated elsewhere.

Tensors are immutable: the backing array is marked read-only.
"""
from dataclasses import dataclass

import numpy as np

from . import _fourier
from .errors import (ConsistencyError, DimensionMismatch, NotCirculant,
                     NotFrontalSquare)

BCIRC_INVERSE_TOL = 1e-12
HERMITIAN_TOL = 1e-10
REAL_RECOVERY_TOL = 1e-10


class Tensor3:
    """Dense complex ``m x n x p`` tensor, stored as ``p`` frontal slices.

    Parameters
    ----------
    data : array_like, shape (p, m, n)
        Frontal slices. Real input is promoted to complex128; the array is
        copied.

    Notes
    -----
    ``a @ b`` is the T-product, ``a.H`` the T-conjugate transpose. Addition,
    subtraction and multiplication by scalars act entrywise.
    """

    __slots__ = ("_data",)
    __array_ufunc__ = None  # keep ``ndarray @ Tensor3`` from broadcasting

    def __init__(self, data):
        arr = np.array(data, dtype=np.complex128)
        if arr.ndim != 3:
            raise DimensionMismatch(
                f"expected an array of shape (p, m, n), got ndim={arr.ndim}")
        if 0 in arr.shape:
            raise DimensionMismatch(f"empty axis in shape (p, m, n)={arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("tensor entries must be finite")
        arr.flags.writeable = False
        self._data = arr

    @classmethod
    def from_slices(cls, slices):
        """Build from a sequence of ``p`` equally shaped ``m x n`` matrices."""
        mats = [np.atleast_2d(np.asarray(s)) for s in slices]
        if not mats:
            raise DimensionMismatch("need at least one frontal slice")
        shape = mats[0].shape
        for k, s in enumerate(mats):
            if s.shape != shape:
                raise DimensionMismatch(
                    f"slice {k + 1} has shape {s.shape}, expected {shape}")
        return cls(np.stack(mats))

    @classmethod
    def identity(cls, n, p):
        """Identity tensor ``[I_n || O || ... || O]``."""
        data = np.zeros((p, n, n), dtype=np.complex128)
        data[0] = np.eye(n)
        return cls(data)

    @classmethod
    def zeros(cls, m, n, p):
        return cls(np.zeros((p, m, n), dtype=np.complex128))

    @property
    def data(self):
        """Read-only complex array of shape ``(p, m, n)``."""
        return self._data

    @property
    def m(self):
        return self._data.shape[1]

    @property
    def n(self):
        return self._data.shape[2]

    @property
    def p(self):
        return self._data.shape[0]

    @property
    def shape(self):
        """Tensor dimensions ``(m, n, p)`` (not the storage shape)."""
        return (self.m, self.n, self.p)

    @property
    def is_frontal_square(self):
        return self.m == self.n

    @property
    def is_real(self):
        return not np.any(self._data.imag)

    def slice(self, k):
        """Frontal slice ``A^(k)``, 1-based."""
        if not 1 <= k <= self.p:
            raise IndexError(f"slice index {k} outside 1..{self.p}")
        return self._data[k - 1]

    @property
    def H(self):
        return t_conj_transpose(self)

    def __matmul__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return t_product(self, other)

    def _check_same(self, other):
        if self._data.shape != other._data.shape:
            raise DimensionMismatch(
                f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        self._check_same(other)
        return Tensor3(self._data + other._data)

    def __sub__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        self._check_same(other)
        return Tensor3(self._data - other._data)

    def __neg__(self):
        return Tensor3(-self._data)

    def __mul__(self, scalar):
        if not np.isscalar(scalar):
            return NotImplemented
        return Tensor3(self._data * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not np.isscalar(scalar):
            return NotImplemented
        return Tensor3(self._data / scalar)

    def __repr__(self):
        m, n, p = self.shape
        kind = "real" if self.is_real else "complex"
        return f"Tensor3(m={m}, n={n}, p={p}, {kind})"


@dataclass(frozen=True)
class DenseCirc:
    """Explicit ``mp x np`` block-circulant matrix of an ``m x n x p`` tensor."""

    m: int
    n: int
    p: int
    mat: np.ndarray

    def __post_init__(self):
        if self.mat.shape != (self.m * self.p, self.n * self.p):
            raise DimensionMismatch(
                f"matrix shape {self.mat.shape} does not match "
                f"(m*p, n*p)=({self.m * self.p}, {self.n * self.p})")

    def block(self, i, j):
        """Block ``(i, j)`` with 0-based block indices."""
        m, n = self.m, self.n
        return self.mat[i * m:(i + 1) * m, j * n:(j + 1) * n]


def _circulant_index(p):
    k = np.arange(p)
    return (k[:, None] - k[None, :]) % p


def bcirc(a):
    """Block circulant matricization.

    Block ``(i, j)`` (0-based) is the slice ``A^((i - j) mod p + 1)``, so the
    first block column is ``unfold(a)`` and each further column is its cyclic
    downward shift.
    """
    p, m, n = a.data.shape
    blocks = a.data[_circulant_index(p)]  # (p, p, m, n), block (i, j)
    mat = blocks.transpose(0, 2, 1, 3).reshape(p * m, p * n)
    return DenseCirc(m, n, p, mat)


def bcirc_inverse(c, tol=BCIRC_INVERSE_TOL):
    """Recover the tensor from its block circulant matrix.

    The first block column is read verbatim. Raises :class:`NotCirculant`
    when ``||c - bcirc(first column)||_F > tol * ||c||_F``.
    """
    m, n, p = c.m, c.n, c.p
    blocks = np.asarray(c.mat).reshape(p, m, p, n).transpose(0, 2, 1, 3)
    first = blocks[:, 0]
    deviation = np.linalg.norm(blocks - first[_circulant_index(p)])
    if deviation > tol * np.linalg.norm(c.mat):
        raise NotCirculant(
            f"block circulant deviation {deviation:.3e} exceeds "
            f"{tol:g} * ||c||")
    return Tensor3(first)


def unfold(a):
    """Stack the frontal slices vertically into an ``mp x n`` matrix."""
    p, m, n = a.data.shape
    return a.data.reshape(p * m, n)


def fold(mat, p):
    """Inverse of :func:`unfold` for a given slice count ``p``."""
    mat = np.asarray(mat)
    rows, n = mat.shape
    if rows % p:
        raise DimensionMismatch(
            f"cannot fold {rows} rows into p={p} slices (rows not divisible by p)")
    return Tensor3(mat.reshape(p, rows // p, n))


def recover_real(data, expect_real):
    """Drop the imaginary part of a result that is provably real.

    Raises :class:`ConsistencyError` if ``max|imag|`` exceeds
    ``1e-10 * (1 + ||result||)``.
    """
    if not expect_real:
        return data
    bound = REAL_RECOVERY_TOL * (1.0 + np.linalg.norm(data))
    worst = np.max(np.abs(data.imag)) if data.size else 0.0
    if worst > bound:
        raise ConsistencyError(
            f"result of real inputs has imaginary part {worst:.3e} > {bound:.3e}")
    return data.real.astype(np.complex128)


def t_product(a, b):
    """T-product ``a * b`` of an ``m x n x p`` and an ``n x s x p`` tensor.

    Equal to ``fold(bcirc(a) @ unfold(b))``; evaluated slice-wise in the
    Fourier domain, where it becomes ``p`` independent matrix products.
    """
    if a.p != b.p:
        raise DimensionMismatch(f"slice counts differ: p={a.p} vs p={b.p}")
    if a.n != b.m:
        raise DimensionMismatch(
            f"inner dimensions differ: a has n={a.n}, b has m={b.m}")
    prod = _fourier.idft(_fourier.dft(a.data) @ _fourier.dft(b.data))
    return Tensor3(recover_real(prod, a.is_real and b.is_real))


def t_conj_transpose(a):
    """``a^H``: conjugate-transpose each slice, reverse slices 2..p."""
    order = (-np.arange(a.p)) % a.p
    return Tensor3(a.data[order].conj().transpose(0, 2, 1))


def frobenius_inner(a, b):
    """``sum conj(a_ijk) * b_ijk``."""
    if a.data.shape != b.data.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape} differ")
    return complex(np.vdot(a.data, b.data))


def frobenius_norm(a):
    return float(np.linalg.norm(a.data))


def hermitian_residual(a):
    """``||a - a^H|| / max(1, ||a||)`` for a frontal square tensor."""
    if not a.is_frontal_square:
        raise NotFrontalSquare(f"tensor is {a.m}x{a.n}x{a.p}, need m == n")
    diff = frobenius_norm(a - t_conj_transpose(a))
    return diff / max(1.0, frobenius_norm(a))


def is_t_hermitian(a, tol=HERMITIAN_TOL):
    return hermitian_residual(a) <= tol
