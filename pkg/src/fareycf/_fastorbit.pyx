# cython: boundscheck=False, wraparound=False, cdivision=True
"""Double-precision orbit kernel for Birkhoff averages of log |K'|.

One step of the interval map: x -> -1/x - floor(-1/x + 1 - alpha), and
log |K'(x)| = -2 log |x|.  This is the only hot loop in the package; the
exact-arithmetic layers never call it.
"""

from libc.math cimport floor, log, fabs


def birkhoff_log_deriv(double alpha, double x0, long steps, long burn_in):
    """Average of -2 log|x_j| over `steps` orbit points after `burn_in`."""
    cdef double x = x0
    cdef double acc = 0.0
    cdef double u
    cdef long i
    cdef long total = steps + burn_in
    for i in range(total):
        if x == 0.0 or x != x:
            x = 1e-13  # measure-zero hit of the fixed point; nudge off
        if i >= burn_in:
            acc += -2.0 * log(fabs(x))
        u = -1.0 / x
        x = u - floor(u + 1.0 - alpha)
    return acc / steps
