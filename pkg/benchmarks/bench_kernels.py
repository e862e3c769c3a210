"""Compare the compiled convolution kernels against the pure-Python ones.

Both backends implement identical loop orderings, so their outputs are
bitwise equal; this script measures what the compiled extension buys on
the shapes the solver actually produces (polynomial degree grows by the
system's spatial order at every time order).

Run:  python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from taylorpde import _kernels_py

try:
    from taylorpde import _kernels
except ImportError:
    _kernels = None


def poly(rng: random.Random, degree: int) -> list[float]:
    return [rng.uniform(-1.0, 1.0) for _ in range(degree + 1)]


def bench(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=25, help="timing repetitions")
    args = parser.parse_args()

    if _kernels is None:
        print("compiled backend not built; nothing to compare")
        return 0

    rng = random.Random(20260816)
    cases = [
        ("conv deg 16x16", "conv", (poly(rng, 16), poly(rng, 16))),
        ("conv deg 64x64", "conv", (poly(rng, 64), poly(rng, 64))),
        (
            "series 8 terms, deg 16",
            "series_product",
            ([poly(rng, 16) for _ in range(9)], [poly(rng, 16) for _ in range(9)], 8),
        ),
        (
            "series 20 terms, deg 40",
            "series_product",
            ([poly(rng, 40) for _ in range(21)], [poly(rng, 40) for _ in range(21)], 20),
        ),
    ]

    print(f"{'case':<24} {'pure (us)':>12} {'compiled (us)':>14} {'speedup':>8}")
    for label, name, call_args in cases:
        pure_fn = getattr(_kernels_py, name)
        fast_fn = getattr(_kernels, name)
        if pure_fn(*call_args) != fast_fn(*call_args):
            raise SystemExit(f"backend mismatch on {label}")
        t_pure = bench(pure_fn, call_args, args.repeat)
        t_fast = bench(fast_fn, call_args, args.repeat)
        print(
            f"{label:<24} {t_pure * 1e6:>12.1f} {t_fast * 1e6:>14.1f} "
            f"{t_pure / t_fast:>7.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
