"""Command line front end.

Subcommands: ``check``, ``gmean``, ``dist``, ``eig`` and ``bench``. Exit codes
are 0 on success, 1 for domain errors (not T-PD, not T-Hermitian) and 2 for
I/O, parse or usage errors. ``TPD_THREADS`` caps BLAS threads when set.
"""
import argparse
import csv
import os
import sys
import time
from contextlib import nullcontext
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import fileio, oracle
from .errors import (DimensionMismatch, NotTHermitian, NotTPD, OracleTooLarge,
                     TensorFormatError)
from .geometry import distance
from .means import MeanPath, geometric_mean, weighted_geometric_mean
from .sampling import random_tpd_blocks
from .spectral import check_tpd, t_eigenvalues

EXIT_OK, EXIT_DOMAIN, EXIT_IO = 0, 1, 2
BENCH_FIELDS = ("n", "p", "path", "wall_time_s", "rel_agreement", "repetitions")


@dataclass
class BenchRecord:
    n: int
    p: int
    path: str
    wall_time_s: float
    rel_agreement: Optional[float]
    repetitions: int

    def row(self):
        rel = "" if self.rel_agreement is None else fmt(self.rel_agreement)
        return [self.n, self.p, self.path, fmt(self.wall_time_s), rel, self.repetitions]


class _UsageError(Exception):
    pass


def fmt(x):
    """12 significant digits, '.' separator, no negative zero."""
    return format(float(x) + 0.0, ".12g")


def _fmt_eig(values):
    scale = max(1.0, float(np.max(np.abs(values)))) if values.size else 1.0
    # snap rounding noise so that printing and ordering are stable
    re = np.where(np.abs(values.real) <= 1e-12 * scale, 0.0, values.real)
    im = np.where(np.abs(values.imag) <= 1e-12 * scale, 0.0, values.imag)
    values = (re + 1j * im)[np.lexsort((im, re))]
    if np.all(np.abs(values.imag) <= 1e-10 * scale):
        return " ".join(fmt(v.real) for v in values)
    return " ".join(f"{fmt(v.real)}{'+' if v.imag >= 0 else '-'}{fmt(abs(v.imag))}j"
                    for v in values)


def _int_list(text):
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def _require_tpd(a, label):
    cert = check_tpd(a)
    if not cert.is_positive_definite:
        raise NotTPD(label, cert)


def cmd_check(args):
    a = fileio.read_tensor(args.file)
    cert = check_tpd(a, args.tol)
    print(f"verdict: {cert.verdict.value}")
    print(f"lambda_min: {fmt(cert.lambda_min)}")
    print(f"lambda_max: {fmt(cert.lambda_max)}")
    print(f"hermitian_residual: {fmt(cert.hermitian_residual)}")
    return EXIT_OK if cert.is_positive_definite else EXIT_DOMAIN


def cmd_gmean(args):
    if not 0.0 <= args.t <= 1.0:
        raise _UsageError(f"--t must lie in [0, 1], got {args.t}")
    a = fileio.read_tensor(args.file_a)
    b = fileio.read_tensor(args.file_b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"{args.file_a} is {a.shape}, {args.file_b} is {b.shape} (m, n, p)")
    _require_tpd(a, args.file_a)
    _require_tpd(b, args.file_b)
    path = MeanPath(args.path)
    info = sys.stdout if args.out else sys.stderr
    if args.t == 0.5:
        res = geometric_mean(a, b, path)
        x = res.mean
        print(f"riccati_residual: {fmt(res.riccati_residual)}", file=info)
    else:
        x = weighted_geometric_mean(a, b, args.t, path)
    if args.out:
        try:
            fileio.write_tensor(args.out, x)
        except OSError as exc:
            raise TensorFormatError(f"cannot write {args.out}: {exc.strerror}") from None
    else:
        print(fileio.dumps(x))
    return EXIT_OK


def cmd_dist(args):
    a = fileio.read_tensor(args.file_a)
    b = fileio.read_tensor(args.file_b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"{args.file_a} is {a.shape}, {args.file_b} is {b.shape} (m, n, p)")
    _require_tpd(a, args.file_a)
    _require_tpd(b, args.file_b)
    print(fmt(distance(a, b)))
    return EXIT_OK


def cmd_eig(args):
    a = fileio.read_tensor(args.file)
    print(_fmt_eig(t_eigenvalues(a)))
    return EXIT_OK


def _time_min(fn, reps):
    best, out = None, None
    for _ in range(reps):
        start = time.perf_counter()
        out = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, out


def run_bench(n_list, p_list, reps=3, seed=1, force_dense=False):
    """Time both mean computations over an ``n x p`` grid.

    Inputs for cell ``(n, p)`` come from ``default_rng([seed, n, p])``.
    The dense row is skipped when ``n * p`` exceeds the oracle cap, unless
    ``force_dense``.
    """
    records = []
    for n in n_list:
        for p in p_list:
            if n < 1 or p < 1:
                raise _UsageError(f"grid values must be positive, got n={n}, p={p}")
            rng = np.random.default_rng([seed, n, p])
            a = random_tpd_blocks(n, p, rng)
            b = random_tpd_blocks(n, p, rng)
            t_fast, fast = _time_min(
                lambda: geometric_mean(a, b, MeanPath.FOURIER_BLOCKS).mean, reps)
            if n * p <= oracle.SIZE_CAP or force_dense:
                t_dense, dense = _time_min(
                    lambda: geometric_mean(a, b, MeanPath.DENSE_ORACLE,
                                           allow_large=force_dense).mean, reps)
                rel = float(np.linalg.norm(fast.data - dense.data)
                            / np.linalg.norm(dense.data))
                records.append(BenchRecord(n, p, MeanPath.DENSE_ORACLE.value, t_dense, rel, reps))
                records.append(BenchRecord(n, p, MeanPath.FOURIER_BLOCKS.value, t_fast, rel, reps))
            else:
                records.append(BenchRecord(n, p, MeanPath.FOURIER_BLOCKS.value, t_fast, None, reps))
    return records


def cmd_bench(args):
    if args.reps < 1:
        raise _UsageError("--reps must be positive")
    # open the output first so an unwritable path fails before any timing
    try:
        fh = open(args.csv, "w", newline="", encoding="utf-8") if args.csv else None
    except OSError as exc:
        raise TensorFormatError(f"cannot write {args.csv}: {exc.strerror}") from None
    with (fh if fh is not None else nullcontext(sys.stdout)) as out:
        records = run_bench(args.n_list, args.p_list, args.reps, args.seed, args.force_dense)
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(BENCH_FIELDS)
        for rec in records:
            writer.writerow(rec.row())
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tpdmean",
        description="Geometric means and Riemannian distances of T-positive definite tensors.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="certify T-positive definiteness")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gmean", help="geometric mean or geodesic point")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--out", help="output tensor file (default: stdout)")
    p.add_argument("--path", choices=[m.value for m in MeanPath], default="blocks")
    p.add_argument("--t", type=float, default=0.5, help="geodesic parameter in [0, 1]")
    p.set_defaults(func=cmd_gmean)

    p = sub.add_parser("dist", help="Riemannian distance")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("eig", help="sorted T-eigenvalues")
    p.add_argument("file")
    p.set_defaults(func=cmd_eig)

    p = sub.add_parser("bench", help="time dense vs Fourier-block means")
    p.add_argument("--n-list", type=_int_list, default=[2, 4, 8])
    p.add_argument("--p-list", type=_int_list, default=[2, 8, 32])
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--csv", help="output CSV (default: stdout)")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--force-dense", action="store_true",
                   help=f"run the dense oracle even when n*p > {oracle.SIZE_CAP}")
    p.set_defaults(func=cmd_bench)
    return parser


def _thread_limit():
    raw = os.environ.get("TPD_THREADS")
    if not raw:
        return nullcontext()
    try:
        limit = int(raw)
        if limit < 1:
            raise ValueError
    except ValueError:
        raise _UsageError(f"TPD_THREADS must be a positive integer, got {raw!r}") from None
    from threadpoolctl import threadpool_limits
    return threadpool_limits(limits=limit)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _thread_limit():
            return args.func(args)
    except (NotTPD, NotTHermitian) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (TensorFormatError, DimensionMismatch, OracleTooLarge, _UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
