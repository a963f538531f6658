"""Compare the compiled kernel against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Micro-benchmarks run both kernel modules side by side in one process; the
end-to-end timing runs a Hopf check in a subprocess per backend, switching
with DSEHOPF_PURE_PYTHON.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from dsehopf import _kernel_py as pure

try:
    from dsehopf import _kernel as compiled
except ImportError:
    compiled = None


def _matrix(rng, rows, cols):
    return [[rng.randint(-5, 5) if rng.random() < 0.4 else 0 for _ in range(cols)] for _ in range(rows)]


def bench_echelon(module, vectors):
    rows, pivots = [], []
    for v in vectors:
        module.insert_row(rows, pivots, v)
    for v in vectors:
        module.reduce_vector(v, rows, pivots)


def _forest_map(rng, size):
    return {tuple(sorted(rng.sample(range(12), rng.randint(1, 4)), reverse=True)): rng.randint(-3, 3) or 1
            for _ in range(size)}


def bench_convolve(module, a, b):
    module.convolve(a, b, True)
    module.convolve(a, b, False)


END_TO_END = ("from dsehopf.hopfcheck import is_hopf; from dsehopf.series import solve_family;"
              "assert is_hopf(solve_family(1, 1, 7), 7, 'planar').passed")


def end_to_end(pure_python: bool) -> float:
    env = dict(os.environ)
    env.pop("DSEHOPF_PURE_PYTHON", None)
    if pure_python:
        env["DSEHOPF_PURE_PYTHON"] = "1"
    code = f"import time; t = time.perf_counter(); {END_TO_END}; print(time.perf_counter() - t)"
    out = subprocess.run([sys.executable, "-c", code], env=env, check=True,
                         capture_output=True, text=True).stdout
    return float(out)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = random.Random(0)
    vectors = _matrix(rng, 60, 80)
    a, b = _forest_map(rng, 150), _forest_map(rng, 150)

    modules = [("pure", pure)] + ([("compiled", compiled)] if compiled else [])
    if compiled is None:
        print("compiled kernel not built; timing the fallback only")
    print(f"{'benchmark':<22}" + "".join(f"{name:>12}" for name, _ in modules) + f"{'speedup':>10}")
    for label, fn, fargs in [("echelon 60x80", bench_echelon, (vectors,)),
                             ("convolve 150x150", bench_convolve, (a, b))]:
        times = [min(timeit.repeat(lambda: fn(m, *fargs), number=1, repeat=args.repeat))
                 for _, m in modules]
        speed = f"{times[0] / times[1]:>9.2f}x" if len(times) == 2 else ""
        print(f"{label:<22}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times) + speed)
    times = [min(end_to_end(name == "pure") for _ in range(max(1, args.repeat // 2))) for name, _ in modules]
    speed = f"{times[0] / times[1]:>9.2f}x" if len(times) == 2 else ""
    print(f"{'hopf check weight 7':<22}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
