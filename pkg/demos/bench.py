"""Dense block circulant oracle versus Fourier blocks, timed.

The dense path eigendecomposes np x np matrices; the block path solves p
independent n x n problems. The gap widens quickly with p.
"""
from tpdmean.cli import run_bench

records = run_bench([2, 4, 8, 16], [2, 8, 32], reps=3)
times = {}
for r in records:
    times[(r.n, r.p, r.path)] = r.wall_time_s

print(f"{'n':>3} {'p':>3} {'dense [s]':>11} {'blocks [s]':>11} {'speedup':>8}")
for n in (2, 4, 8, 16):
    for p in (2, 8, 32):
        dense, fast = times[(n, p, "dense")], times[(n, p, "blocks")]
        print(f"{n:>3} {p:>3} {dense:11.5f} {fast:11.5f} {dense / fast:8.1f}")
