"""Time the brute-force matrix kernel: compiled path vs pure-Python path.

The default workload counts 3-regular graphs with unit edge weights on 8
labeled vertices (19355 of them), the densest shape the test suite leans on.
Run with SYMGRAPHS_NO_NUMBA=1 to confirm the fallback dispatch; scale with
--n/--degree/--weights.
"""

import argparse
import time

from symgraphs._kernel import dfs_count_numba, dfs_count_python, kernel_backend
from symgraphs.oracle import OracleConfig, kernel_arrays


def build_case(n, degree, weights):
    config = OracleConfig(n, frozenset(weights) | {0}, (degree,) * n)
    return kernel_arrays(config)


def time_kernel(kernel, args, repeat):
    best = float("inf")
    value = None
    for _ in range(repeat):
        started = time.perf_counter()
        value = kernel(*args)
        best = min(best, time.perf_counter() - started)
    return value, best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=8, help="number of vertices")
    parser.add_argument("--degree", type=int, default=3, help="regular degree")
    parser.add_argument(
        "--weights", default="1", help="comma-separated edge weights, e.g. 1,2"
    )
    parser.add_argument("--repeat", type=int, default=3, help="timed repetitions")
    cli_args = parser.parse_args()

    weights = {int(w) for w in cli_args.weights.split(",")}
    args = build_case(cli_args.n, cli_args.degree, weights)
    print(
        f"case: {cli_args.degree}-regular, n={cli_args.n}, "
        f"edge weights {sorted(weights)}"
    )
    print(f"dispatching backend: {kernel_backend()}")

    py_value, py_best = time_kernel(dfs_count_python, args, cli_args.repeat)
    print(f"python kernel : count={py_value}  best of {cli_args.repeat}: {py_best:.4f}s")

    if dfs_count_numba is None:
        print("numba kernel  : unavailable (not installed or disabled by env flag)")
        return

    compile_started = time.perf_counter()
    nb_value = dfs_count_numba(*args)
    compile_elapsed = time.perf_counter() - compile_started
    nb_value, nb_best = time_kernel(dfs_count_numba, args, cli_args.repeat)
    if nb_value != py_value:
        raise SystemExit(f"backend disagreement: python={py_value} numba={nb_value}")
    print(
        f"numba kernel  : count={nb_value}  best of {cli_args.repeat}: {nb_best:.4f}s"
        f"  (first call incl. compile/cache load: {compile_elapsed:.2f}s)"
    )
    if nb_best > 0:
        print(f"speedup       : {py_best / nb_best:.1f}x")


if __name__ == "__main__":
    main()
