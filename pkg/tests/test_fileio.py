import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tpdmean import Tensor3, TensorFormatError
from tpdmean import fileio
from tpdmean.sampling import random_tensor


def test_roundtrip_real(tmp_path, example_a):
    path = tmp_path / "a.json"
    fileio.write_tensor(path, example_a)
    obj = json.loads(path.read_text())
    assert (obj["m"], obj["n"], obj["p"]) == (3, 3, 2)
    assert "imag" not in obj
    back = fileio.read_tensor(path)
    np.testing.assert_array_equal(back.data, example_a.data)


def test_roundtrip_complex(rng):
    a = random_tensor(2, 3, 4, rng)
    back = fileio.loads(fileio.dumps(a))
    np.testing.assert_array_equal(back.data, a.data)


@settings(max_examples=30, deadline=None)
@given(m=st.integers(1, 3), n=st.integers(1, 3), p=st.integers(1, 4),
       seed=st.integers(0, 2 ** 32 - 1), real=st.booleans())
def test_roundtrip_property(m, n, p, seed, real):
    a = random_tensor(m, n, p, np.random.default_rng(seed), real=real)
    np.testing.assert_array_equal(fileio.loads(fileio.dumps(a)).data, a.data)


@pytest.mark.parametrize("text, fragment", [
    ("not json", "invalid JSON"),
    ("[1, 2]", "top level"),
    ('{"n": 1, "p": 1, "real": [[[1]]]}', "missing dimension 'm'"),
    ('{"m": 0, "n": 1, "p": 1, "real": []}', "positive integer"),
    ('{"m": 1, "n": 1, "p": 1}', "missing 'real'"),
    ('{"m": 1, "n": 1, "p": 2, "real": [[[1]]]}', "axis p expects 2 slices, got 1"),
    ('{"m": 2, "n": 1, "p": 1, "real": [[[1]]]}', "'real'[0]: axis m expects 2 rows, got 1"),
    ('{"m": 1, "n": 2, "p": 1, "real": [[[1]]]}', "'real'[0][0]: axis n expects 2 columns, got 1"),
    ('{"m": 1, "n": 1, "p": 1, "real": [[["x"]]]}', "non-numeric"),
    ('{"m": 1, "n": 1, "p": 1, "real": [[[1]]], "imag": [[[1, 2]]]}', "'imag'[0][0]: axis n"),
    ('{"m": true, "n": 1, "p": 1, "real": [[[1]]]}', "positive integer"),
])
def test_parse_errors_name_the_problem(text, fragment):
    with pytest.raises(TensorFormatError) as info:
        fileio.loads(text)
    assert fragment in str(info.value)


def test_missing_file(tmp_path):
    with pytest.raises(TensorFormatError):
        fileio.read_tensor(tmp_path / "nope.json")


def test_imag_null_means_real():
    a = fileio.loads('{"m": 1, "n": 1, "p": 1, "real": [[[2]]], "imag": null}')
    assert a.is_real and a.data[0, 0, 0] == 2


def test_tensor_from_obj_layout():
    obj = {"m": 1, "n": 2, "p": 2, "real": [[[1, 2]], [[3, 4]]]}
    a = fileio.tensor_from_obj(obj)
    assert a.shape == (1, 2, 2)
    np.testing.assert_array_equal(a.slice(2), [[3, 4]])
    assert fileio.tensor_to_obj(Tensor3(a.data)) == obj | {"real": [[[1.0, 2.0]], [[3.0, 4.0]]]}
