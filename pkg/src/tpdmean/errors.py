"""Exception hierarchy shared by every module of the package."""


class TensorError(Exception):
    """Base class for all errors raised by tpdmean."""


class DimensionMismatch(TensorError, ValueError):
    """Operand shapes are incompatible."""


class NotFrontalSquare(DimensionMismatch):
    """The operation needs m == n."""


class NotCirculant(TensorError, ValueError):
    """A matrix handed to ``bcirc_inverse`` is not block circulant."""


class NotTHermitian(TensorError, ValueError):
    """The tensor differs from its T-conjugate transpose beyond tolerance."""


class NotTPD(TensorError, ValueError):
    """A tensor required to be T-positive definite is not.

    Parameters
    ----------
    argument : str
        Name of the offending argument (``"a"``, ``"b"``, a file name...).
    certificate : TpdCertificate, optional
        The failed certificate, when one was computed.
    """

    def __init__(self, argument, certificate=None, detail=None):
        self.argument = argument
        self.certificate = certificate
        msg = f"{argument} is not T-positive definite"
        if certificate is not None:
            msg += (f" (verdict={certificate.verdict.value}, "
                    f"lambda_min={certificate.lambda_min:.6g})")
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotPD(TensorError, ValueError):
    """A dense matrix is not Hermitian positive definite."""


class SingularTensor(TensorError, ValueError):
    """A tensor that must be invertible has a singular Fourier block."""


class ParameterOutOfRange(TensorError, ValueError):
    """A scalar parameter lies outside its admissible range."""


class OracleTooLarge(TensorError, ValueError):
    """The dense oracle was asked for a problem above its size cap."""


class ConsistencyError(TensorError, RuntimeError):
    """An internal post-condition failed (e.g. a real result came out complex)."""


class TensorFormatError(TensorError, ValueError):
    """A tensor file could not be parsed."""
