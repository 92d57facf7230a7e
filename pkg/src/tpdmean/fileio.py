"""JSON tensor files.

Format::

    {"m": int, "n": int, "p": int,
     "real": [p][m][n] numbers,
     "imag": [p][m][n] numbers}     # optional, absent means zero

Slices are ordered ``k = 1..p``; rows then columns within a slice.
"""
import json

import numpy as np

from .errors import TensorFormatError
from .tensor_core import Tensor3


def _dim(obj, key):
    if key not in obj:
        raise TensorFormatError(f"missing dimension '{key}'")
    val = obj[key]
    if isinstance(val, bool) or not isinstance(val, int) or val < 1:
        raise TensorFormatError(f"dimension '{key}' must be a positive integer, got {val!r}")
    return val


def _parse_part(obj, name, m, n, p):
    arr = obj[name]
    if not isinstance(arr, list) or len(arr) != p:
        got = len(arr) if isinstance(arr, list) else type(arr).__name__
        raise TensorFormatError(f"'{name}': axis p expects {p} slices, got {got}")
    for k, sl in enumerate(arr):
        if not isinstance(sl, list) or len(sl) != m:
            got = len(sl) if isinstance(sl, list) else type(sl).__name__
            raise TensorFormatError(
                f"'{name}'[{k}]: axis m expects {m} rows, got {got}")
        for i, row in enumerate(sl):
            if not isinstance(row, list) or len(row) != n:
                got = len(row) if isinstance(row, list) else type(row).__name__
                raise TensorFormatError(
                    f"'{name}'[{k}][{i}]: axis n expects {n} columns, got {got}")
    try:
        out = np.array(arr, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise TensorFormatError(f"'{name}': non-numeric entry ({exc})") from None
    if not np.all(np.isfinite(out)):
        raise TensorFormatError(f"'{name}': entries must be finite")
    return out


def tensor_from_obj(obj):
    """Build a :class:`Tensor3` from a decoded JSON object."""
    if not isinstance(obj, dict):
        raise TensorFormatError("top level must be a JSON object")
    m, n, p = _dim(obj, "m"), _dim(obj, "n"), _dim(obj, "p")
    if "real" not in obj:
        raise TensorFormatError("missing 'real' entries")
    data = _parse_part(obj, "real", m, n, p).astype(np.complex128)
    if obj.get("imag") is not None:
        data += 1j * _parse_part(obj, "imag", m, n, p)
    return Tensor3(data)


def tensor_to_obj(a):
    obj = {"m": a.m, "n": a.n, "p": a.p, "real": a.data.real.tolist()}
    if not a.is_real:
        obj["imag"] = a.data.imag.tolist()
    return obj


def loads(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TensorFormatError(f"invalid JSON: {exc}") from None
    return tensor_from_obj(obj)


def dumps(a):
    return json.dumps(tensor_to_obj(a))


def read_tensor(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise TensorFormatError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def write_tensor(path, a):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(a))
        fh.write("\n")
