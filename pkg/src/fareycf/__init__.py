"""Exact Farey-word combinatorics and entropy of integer-Mobius interval maps."""

from .bifurcation import (
    bin_interval,
    cardioid_angles,
    eb_membership,
    locate_qumterval,
    minkowski_q,
    phi_map,
    qumterval_of,
    zeta_partial,
)
from .exactnum import (
    INF,
    Mobius,
    QuadSurd,
    floor_exact,
    format_exact,
    make_surd,
    mobius_apply,
    surd_from_periodic_cf,
)
from .kdynamics import k_step, matching_matrices, orbit, verify_matching
from .lyapunov import lyapunov_estimate
from .natext import attractor_corners, build_attractor, entropy_at, entropy_curve
from .words import farey_list, rho, word_from_rational

__version__ = "0.1.0"
