"""Compare the numba kernels with their numpy twins, then time one end-to-end run per backend.

Run: python3 benchmarks/bench_kernels.py [--repeat N] [--skip-e2e]
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from bifixgroup import _kernels as K

E2E = """
import time
from bifixgroup import automata as au, _kernels as K
from bifixgroup.examples import load_code, load_set
z = load_code("thue_morse_z.json"); f = load_set("thue_morse.json")
from bifixgroup.fgroup import intersect_code
star = au.star_automaton(intersect_code(z, f))
t = time.perf_counter(); rows = f.eta_image(star, "all"); dt = time.perf_counter() - t
print(K.backend(), len(rows), f"{dt:.2f}")
"""


def _time(fn, *args, repeat=5):
    fn(*args)  # warm-up, includes jit compile
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t)
    return best


def cases(rng):
    n, m = 46, 20000
    rows = rng.integers(-1, n, size=(m, n)).astype(np.int64)
    t = rng.integers(-1, n, size=n).astype(np.int64)
    delta = rng.integers(-1, n, size=(n, 2)).astype(np.int64)
    finals = np.zeros(n, dtype=bool)
    finals[0] = True
    word = rng.integers(0, 2, size=400).astype(np.int64)
    ext = np.hstack([np.where(rows < 0, n, rows), np.full((m, 1), n)]).astype(np.int64)
    left = rng.integers(0, m, size=200_000).astype(np.int64)
    right = rng.integers(0, m, size=200_000).astype(np.int64)
    salt = rng.integers(1, 2**62, size=n).astype(np.uint64)
    hits = rng.random((401, 401)) < 0.3
    ok = rng.random(401) < 0.7
    return {
        "compose_rows": (rows, t),
        "precompose_rows": (rows, t),
        "row_ranks": (rows,),
        "factor_hits": (delta, 0, finals, word),
        "count_parses": (hits, ok, ok),
        "pair_hashes": (ext, left, right, salt),
        "pair_products": (ext, left, right),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-e2e", action="store_true")
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    print(f"{'kernel':<18}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for name, a in cases(rng).items():
        t_np = _time(getattr(K, name + "_np"), *a, repeat=args.repeat)
        if K.HAVE_NUMBA:
            t_nb = _time(getattr(K, name + "_nb"), *a, repeat=args.repeat)
            print(f"{name:<18}{t_np * 1e3:12.2f}{t_nb * 1e3:12.2f}{t_np / t_nb:10.1f}")
        else:
            print(f"{name:<18}{t_np * 1e3:12.2f}{'n/a':>12}{'':>10}")
    if args.skip_e2e:
        return
    print("\nThue-Morse eta image (backend, elements, seconds)")
    for flag in ("0", "1"):
        env = dict(os.environ, BIFIXGROUP_NO_NUMBA=flag)
        out = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True, text=True)
        print(" ", out.stdout.strip() or out.stderr.strip().splitlines()[-1])


if __name__ == "__main__":
    main()
