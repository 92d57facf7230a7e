"""Geometric mean and Riemannian geometry of T-positive definite tensors.

Third-order tensors are multiplied with the T-product; a frontal square
tensor is T-positive definite when its block circulant matricization is
Hermitian positive definite. Everything is computed on the ``p`` Fourier
blocks of the tensor, with a dense block-circulant oracle in
:mod:`tpdmean.oracle` for cross-validation.
"""
from .errors import (ConsistencyError, DimensionMismatch, NotCirculant,
                     NotFrontalSquare, NotPD, NotTHermitian, NotTPD,
                     OracleTooLarge, ParameterOutOfRange, SingularTensor,
                     TensorError, TensorFormatError)
from .geometry import (GeodesicSample, MetricValue, distance, exp_map,
                       geodesic, geodesic_curve, iemi_check, log_map,
                       lower_bound_check, metric, path_length)
from .means import (MeanPath, MeanResult, Order, arithmetic_mean, congruence,
                    geometric_mean, harmonic_mean, lowner_compare,
                    riccati_residual, weighted_geometric_mean)
from .spectral import (BlockSpectrum, TpdCertificate, Verdict, check_tpd,
                       from_spectrum, spectral_map, t_eig_decomposition,
                       t_eigenvalues, t_eigh, t_exp, t_inv, t_log, t_power,
                       t_sqrt, t_trace, to_spectrum)
from .tensor_core import (DenseCirc, Tensor3, bcirc, bcirc_inverse, fold,
                          frobenius_inner, frobenius_norm, is_t_hermitian,
                          t_conj_transpose, t_product, unfold)

__version__ = "0.1.0"
