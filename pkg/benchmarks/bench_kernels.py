"""Compare the pure-Python and compiled kernel backends.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--sizes 256,512,1024] [--repeats 5]

Times the three hot kernels (forward differences, Newton evaluation, first
violation scan) on seeded random tables and prints a per-size speedup
table. If the compiled extension is unavailable the script still runs and
says so instead of failing.
"""

import argparse
import random
import time

from idrlab.kernels import available_backends


def build_tables(size, rng):
    values = [rng.randint(-(10**6), 10**6) for _ in range(size)]
    coeffs = [rng.randint(-(10**6), 10**6) for _ in range(size)]
    return values, coeffs


def time_call(fn, *args, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def bench_backend(mod, values, coeffs, repeats):
    return {
        "coeffs": time_call(mod.forward_difference_coeffs, values, repeats=repeats),
        "values": time_call(mod.newton_values, coeffs, len(coeffs) - 1, repeats=repeats),
        "scan": time_call(mod.first_idr_violation, values, repeats=repeats),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="256,512,1024")
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=20260819)
    args = parser.parse_args()

    backends = available_backends()
    pure = backends["pure"]
    compiled = backends.get("compiled")
    if compiled is None:
        print("compiled extension not built; timing the pure backend only")

    rng = random.Random(args.seed)
    sizes = [int(s) for s in args.sizes.split(",")]

    header = f"{'size':>6} {'kernel':>8} {'pure (ms)':>12}"
    if compiled is not None:
        header += f" {'compiled (ms)':>14} {'speedup':>8}"
    print(header)
    for size in sizes:
        values, coeffs = build_tables(size, rng)
        pure_times = bench_backend(pure, values, coeffs, args.repeats)
        compiled_times = (
            bench_backend(compiled, values, coeffs, args.repeats)
            if compiled is not None
            else None
        )
        for kernel in ("coeffs", "values", "scan"):
            row = f"{size:>6} {kernel:>8} {pure_times[kernel] * 1e3:>12.3f}"
            if compiled_times is not None:
                ratio = pure_times[kernel] / compiled_times[kernel]
                row += f" {compiled_times[kernel] * 1e3:>14.3f} {ratio:>7.2f}x"
            print(row)

    # sanity: both backends agree on one table before trusting the numbers
    if compiled is not None:
        values, coeffs = build_tables(sizes[0], rng)
        assert pure.forward_difference_coeffs(values) == compiled.forward_difference_coeffs(values)
        assert pure.newton_values(coeffs, len(coeffs) - 1) == compiled.newton_values(
            coeffs, len(coeffs) - 1
        )
        print("agreement check: ok")


if __name__ == "__main__":
    main()
