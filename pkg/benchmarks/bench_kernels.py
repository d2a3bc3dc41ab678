"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each kernel runs on the same inputs through both paths; results are checked
for agreement before timings are printed.  An end-to-end falsification run
is timed in subprocesses with and without TRANSCERT_DISABLE_NUMBA.
"""

from __future__ import annotations

import argparse
import math
import os
import subprocess
import sys
import timeit

import numpy as np

from transcert import _kernels

END_TO_END = ("from transcert.curves import falsify_search;"
              "falsify_search('polygons', 'width', 2000, seed=1)")


def _inputs(rng):
    X = 10.0 - rng.uniform(0, 10, size=(200_000, 2, 2))
    t = rng.uniform(0, 2 * math.pi, 40)
    verts = np.stack([np.cos(np.sort(t)), np.sin(np.sort(t))], axis=1)
    thetas = np.linspace(0, math.pi, 4096, endpoint=False)
    center = verts.mean(axis=0)
    return {
        "ineq_entries": (X, math.pi, math.e),
        "polygon_widths": (verts, thetas),
        "polygon_chords": (verts, center, thetas),
    }


def _fast(name):
    return {"ineq_entries": _kernels.ineq_entries, "polygon_widths": _kernels.polygon_widths,
            "polygon_chords": _kernels.polygon_chords}[name]


def _end_to_end(disable: bool) -> float:
    env = dict(os.environ, TRANSCERT_DISABLE_NUMBA="1" if disable else "0")
    code = f"import time; t=time.perf_counter(); {END_TO_END}; print(time.perf_counter()-t)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()
    print(f"active backend: {_kernels.BACKEND}")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<16}{'numpy ms':>12}{'active ms':>12}{'speedup':>10}")
    for name, inp in _inputs(rng).items():
        ref, fast = _kernels.reference(name), _fast(name)
        a, b = ref(*inp), fast(*inp)  # also warms up the JIT
        for u, v in zip(a if isinstance(a, tuple) else (a,), b if isinstance(b, tuple) else (b,)):
            np.testing.assert_allclose(u, v, rtol=1e-12, atol=1e-12)
        t_ref = min(timeit.repeat(lambda: ref(*inp), number=1, repeat=args.repeat)) * 1e3
        t_fast = min(timeit.repeat(lambda: fast(*inp), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:<16}{t_ref:>12.3f}{t_fast:>12.3f}{t_ref / t_fast:>9.1f}x")
    if not args.skip_end_to_end:
        _end_to_end(False)  # populate the numba cache
        t_np, t_nb = _end_to_end(True), _end_to_end(False)
        print(f"falsify (2000 polygons): numpy {t_np:.2f} s, numba {t_nb:.2f} s")


if __name__ == "__main__":
    main()
