"""Time the numba and numpy kernel paths side by side.

    python3 benchmarks/bench_kernels.py --max-n 12 --repeat 5

The first numba call per kernel includes JIT compilation (or a cache load);
it is reported separately and excluded from the steady-state timings.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from modsum import _kernels as K


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--min-n", type=int, default=6)
    ap.add_argument("--max-n", type=int, default=11)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--edge-m", type=int, default=4, help="vertices for the allowed-edge-mask kernel")
    ap.add_argument("--edge-n", type=int, default=4, help="modulus for the allowed-edge-mask kernel")
    args = ap.parse_args(argv)

    if not K.HAVE_NUMBA:
        print("numba is not installed; only the numpy path is available")
        return 1

    t0 = time.perf_counter()
    K.numba_sumset_table(3)
    K.numba_sumset_size_table(3)
    K.numba_allowed_edge_masks(np.ones((4, 4), dtype=bool), 2)
    print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.2f}s")

    print(f"{'kernel':<22}{'n':>4}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for n in range(args.min_n, args.max_n + 1):
        for name, np_fn, nb_fn in (
            ("sumset_table", K.numpy_sumset_table, K.numba_sumset_table),
            ("sumset_size_table", K.numpy_sumset_size_table, K.numba_sumset_size_table),
        ):
            assert np.array_equal(np_fn(n), nb_fn(n))
            t_np = best_of(lambda: np_fn(n), args.repeat)
            t_nb = best_of(lambda: nb_fn(n), args.repeat)
            print(f"{name:<22}{n:>4}{t_np * 1e3:>12.2f}{t_nb * 1e3:>12.2f}{t_np / t_nb:>9.1f}x")

    ok = K.numpy_sumset_table(args.edge_n) == np.uint64((1 << args.edge_n) - 1)
    a = K.numpy_allowed_edge_masks(ok, args.edge_m)
    b = K.numba_allowed_edge_masks(ok, args.edge_m)
    assert all(np.array_equal(x, y) for x, y in zip(a, b))
    t_np = best_of(lambda: K.numpy_allowed_edge_masks(ok, args.edge_m), args.repeat)
    t_nb = best_of(lambda: K.numba_allowed_edge_masks(ok, args.edge_m), args.repeat)
    label = f"allowed_edges m={args.edge_m}"
    print(f"{label:<22}{args.edge_n:>4}{t_np * 1e3:>12.2f}{t_nb * 1e3:>12.2f}{t_np / t_nb:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
