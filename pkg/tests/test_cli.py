import csv
import io
import math
import subprocess
import sys

import numpy as np
import pytest

from tpdmean import Tensor3, bcirc
from tpdmean import fileio, oracle
from tpdmean.cli import fmt, main, run_bench
from tpdmean.sampling import random_tpd
from tests.conftest import rel_err


@pytest.fixture
def files(tmp_path, example_a, example_b):
    def write(name, tensor):
        path = tmp_path / name
        fileio.write_tensor(path, tensor)
        return str(path)

    write.dir = tmp_path
    write("a.json", example_a)
    write("b.json", example_b)
    return write


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_check_example(files, capsys):
    code, out, _ = run(["check", str(files.dir / "a.json")], capsys)
    assert code == 0
    assert "verdict: PositiveDefinite" in out
    assert "lambda_min:" in out and "hermitian_residual:" in out


def test_check_negative_identity(files, capsys):
    path = files("neg.json", Tensor3.identity(2, 3) * -1.0)
    code, out, _ = run(["check", path], capsys)
    assert code == 1
    assert "Indefinite" in out


def test_check_malformed(files, capsys):
    path = files.dir / "bad.json"
    path.write_text('{"m": 2, "n": 2, "p": 2, "real": [[[1, 0], [0, 1]]]}')
    code, _, err = run(["check", str(path)], capsys)
    assert code == 2
    assert "axis p" in err
    code, _, err = run(["check", str(files.dir / "missing.json")], capsys)
    assert code == 2


def test_gmean_example(files, capsys, example_mean):
    out_path = files.dir / "x.json"
    code, out, _ = run(["gmean", str(files.dir / "a.json"), str(files.dir / "b.json"),
                        "--out", str(out_path)], capsys)
    assert code == 0
    assert out.startswith("riccati_residual: ")
    assert float(out.split()[1]) <= 1e-8
    x = fileio.read_tensor(out_path)
    np.testing.assert_allclose(x.data.real, example_mean, atol=1e-3)
    # round trip through check
    code, out, _ = run(["check", str(out_path)], capsys)
    assert code == 0 and "PositiveDefinite" in out


def test_gmean_to_stdout_and_paths_agree(files, capsys):
    a, b = str(files.dir / "a.json"), str(files.dir / "b.json")
    code, out, err = run(["gmean", a, b], capsys)
    assert code == 0 and "riccati_residual" in err
    blocks = fileio.loads(out)
    code, out, _ = run(["gmean", a, b, "--path", "dense"], capsys)
    assert code == 0
    assert rel_err(blocks, fileio.loads(out)) < 1e-10


def test_gmean_identical_files(files, capsys, example_a):
    a = str(files.dir / "a.json")
    code, out, _ = run(["gmean", a, a], capsys)
    assert code == 0
    assert rel_err(fileio.loads(out), example_a) < 1e-10


def test_gmean_weighted(files, capsys, example_a, example_b):
    a, b = str(files.dir / "a.json"), str(files.dir / "b.json")
    code, out, err = run(["gmean", a, b, "--t", "0"], capsys)
    assert code == 0 and "riccati" not in err
    assert rel_err(fileio.loads(out), example_a) < 1e-10
    code, _, err = run(["gmean", a, b, "--t", "1.5"], capsys)
    assert code == 2 and "[0, 1]" in err


def test_gmean_errors(files, capsys, rng):
    a = str(files.dir / "a.json")
    neg = files("neg.json", Tensor3.identity(3, 2) * -1.0)
    code, _, err = run(["gmean", a, neg], capsys)
    assert code == 1 and "neg.json" in err
    other = files("other.json", random_tpd(2, 2, rng))
    code, _, _ = run(["gmean", a, other], capsys)
    assert code == 2
    code, _, _ = run(["gmean", a, a, "--out", str(files.dir / "no" / "dir.json")], capsys)
    assert code == 2


def test_dist(files, capsys, rng):
    eye = Tensor3.identity(2, 3)
    i_path, e_path = files("i.json", eye), files("e.json", eye * math.e)
    code, out, _ = run(["dist", i_path, e_path], capsys)
    assert code == 0
    assert float(out) == pytest.approx(math.sqrt(6), rel=1e-11)
    assert out.strip().startswith("2.44948974278")
    code, out, _ = run(["dist", i_path, i_path], capsys)
    assert abs(float(out)) <= 1e-10
    a, b = random_tpd(2, 3, rng), random_tpd(2, 3, rng)
    code, out, _ = run(["dist", files("ra.json", a), files("rb.json", b)], capsys)
    assert float(out) == pytest.approx(oracle.dense_distance(bcirc(a), bcirc(b)), rel=1e-10)
    neg = files("neg.json", eye * -1.0)
    code, _, err = run(["dist", i_path, neg], capsys)
    assert code == 1


def test_eig(files, capsys):
    code, out, _ = run(["eig", files("i.json", Tensor3.identity(2, 2))], capsys)
    assert code == 0 and out.strip() == "1 1 1 1"
    code, out, _ = run(["eig", files("t.json", Tensor3([[[3.0]], [[1.0]]]))], capsys)
    assert out.strip() == "2 4"


def test_eig_matches_dense(files, capsys, example_a):
    code, out, _ = run(["eig", str(files.dir / "a.json")], capsys)
    ours = np.array([float(v) for v in out.split()])
    dense = np.linalg.eigvalsh(bcirc(example_a).mat)
    np.testing.assert_allclose(ours, dense, rtol=1e-10)


def test_eig_complex_format(files, capsys):
    rot = Tensor3([[[0.0, -1.0], [1.0, 0.0]]])
    code, out, _ = run(["eig", files("r.json", rot)], capsys)
    assert out.split() == ["0-1j", "0+1j"]


def test_fmt():
    assert fmt(-0.0) == "0"
    assert fmt(1.0) == "1"
    assert fmt(1 / 3) == "0.333333333333"


def test_bench_small(capsys):
    code, out, _ = run(["bench", "--n-list", "2", "--p-list", "2", "--reps", "1"], capsys)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["path"] for r in rows] == ["dense", "blocks"]
    for r in rows:
        assert float(r["wall_time_s"]) > 0
        assert float(r["rel_agreement"]) <= 1e-8
        assert r["repetitions"] == "1"


def test_bench_empty_grid(capsys):
    code, out, _ = run(["bench", "--n-list", "", "--p-list", "2"], capsys)
    assert code == 0
    assert out == "n,p,path,wall_time_s,rel_agreement,repetitions\n"


def test_bench_cap_rule():
    records = run_bench([32], [64], reps=1)
    assert [r.path for r in records] == ["blocks"]
    assert records[0].row()[4] == ""


def test_bench_csv_file_and_errors(tmp_path, capsys):
    out_path = tmp_path / "b.csv"
    code, out, _ = run(["bench", "--n-list", "1", "--p-list", "1,3", "--reps", "1",
                        "--csv", str(out_path)], capsys)
    assert code == 0 and out == ""
    assert len(out_path.read_text().splitlines()) == 5
    code, _, _ = run(["bench", "--csv", str(tmp_path / "no" / "x.csv")], capsys)
    assert code == 2
    code, _, _ = run(["bench", "--reps", "0"], capsys)
    assert code == 2


def test_bench_is_deterministic():
    a = run_bench([2], [3], reps=1, seed=7)
    b = run_bench([2], [3], reps=1, seed=7)
    assert a[0].rel_agreement == b[0].rel_agreement


def test_thread_env(files, capsys, monkeypatch):
    monkeypatch.setenv("TPD_THREADS", "1")
    code, _, _ = run(["check", str(files.dir / "a.json")], capsys)
    assert code == 0
    monkeypatch.setenv("TPD_THREADS", "zero")
    code, _, err = run(["check", str(files.dir / "a.json")], capsys)
    assert code == 2 and "TPD_THREADS" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "tpdmean", "check", str(files.dir / "a.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "PositiveDefinite" in proc.stdout
