#!/usr/bin/env python3
"""Compare the compiled orbit kernel against the pure-Python fallback.

Usage: python3 benchmarks/bench_orbit.py [steps]
"""

import sys
import time

from fareycf.lyapunov import HAVE_FAST_ORBIT, birkhoff_log_deriv_py

try:
    from fareycf._fastorbit import birkhoff_log_deriv as fast
except ImportError:
    fast = None


def timed(fn, *args, repeats=3):
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return value, best


def main():
    steps = int(sys.argv[1]) if len(sys.argv) > 1 else 10**6
    args = (0.3, 0.1234567, steps, 1000)
    v_py, t_py = timed(birkhoff_log_deriv_py, *args)
    print(f"pure python : {t_py*1e3:9.2f} ms   value={v_py:.12f}")
    if fast is None:
        print("compiled    : unavailable (extension not built)")
        return
    v_c, t_c = timed(fast, *args)
    print(f"compiled    : {t_c*1e3:9.2f} ms   value={v_c:.12f}")
    print(f"speedup     : {t_py/t_c:9.1f}x   agree={abs(v_c - v_py) < 1e-9}")
    assert HAVE_FAST_ORBIT


if __name__ == "__main__":
    main()
