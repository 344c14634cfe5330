"""Compare the compiled beta kernel against the pure-Python fallback.

Times the two hot operations (regularized incomplete beta and quantile
inversion) over the same workload with each backend and prints a
throughput table plus a cross-check that both produce the same numbers.

Run from the repository root::

    python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

from condprob import _betakernel_py

try:
    from condprob import _betakernel as _compiled
except ImportError:
    _compiled = None

N_BETAINC = 20_000
N_QUANTILE = 2_000


def _workloads(seed: int = 1234):
    rng = random.Random(seed)
    cdf_args = [
        (rng.uniform(0.05, 60.0), rng.uniform(0.05, 60.0), rng.random())
        for _ in range(N_BETAINC)
    ]
    q_args = [
        (rng.uniform(0.2, 40.0), rng.uniform(0.2, 40.0), rng.uniform(0.005, 0.995))
        for _ in range(N_QUANTILE)
    ]
    return cdf_args, q_args


def _time(fn, args_list) -> float:
    t0 = time.perf_counter()
    for args in args_list:
        fn(*args)
    return time.perf_counter() - t0


def main() -> None:
    cdf_args, q_args = _workloads()
    backends = [("python", _betakernel_py)]
    if _compiled is not None:
        backends.append(("cython", _compiled))
    else:
        print("compiled kernel not available; timing the fallback only\n")

    results = {}
    for name, mod in backends:
        bt = _time(mod.betainc, cdf_args)
        qt = _time(mod.quantile, q_args)
        results[name] = (bt, qt)
        print(f"{name:>8}:  betainc {N_BETAINC / bt:>12,.0f} calls/s"
              f"   quantile {N_QUANTILE / qt:>10,.0f} calls/s")

    if len(results) == 2:
        pb, pq = results["python"]
        cb, cq = results["cython"]
        print(f"\nspeedup: betainc {pb / cb:.1f}x, quantile {pq / cq:.1f}x")
        worst = 0.0
        for a, b, x in cdf_args[::37]:
            worst = max(worst, abs(_betakernel_py.betainc(a, b, x)
                                   - _compiled.betainc(a, b, x)))
        print(f"max |python - cython| over betainc spot checks: {worst:.3e}")


if __name__ == "__main__":
    main()
