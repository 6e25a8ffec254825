"""Working precision for the floating outputs.

All geometry upstream is exact; floats appear only in final log and pi^2
evaluations and in decimal output columns.  Precision is in bits (mpmath
semantics), at least 64, default 128, overridable through the
FAREYCF_PRECISION environment variable.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

import mpmath

MIN_PRECISION = 64
DEFAULT_PRECISION = int(os.environ.get("FAREYCF_PRECISION", "128"))


def checked_precision(bits: int | None) -> int:
    bits = DEFAULT_PRECISION if bits is None else bits
    if bits < MIN_PRECISION:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION}")
    return bits


@contextmanager
def working_precision(bits: int | None = None):
    with mpmath.workprec(checked_precision(bits)):
        yield mpmath.mp
