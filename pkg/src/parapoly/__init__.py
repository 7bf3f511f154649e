"""Exact enumeration of parallelogram polyominoes by symmetry class."""

from .bijections import (
    DyckPath,
    closed_counts,
    d2_to_r2,
    dv_forward,
    dv_inverse,
    left_factor_series,
    r2_to_d2,
)
from .genfun import (
    GFMismatch,
    Window,
    area_window,
    asym_series,
    d1_series,
    d2_series,
    d12_series,
    dyck_gf,
    ln_series,
    orbit_series,
    par_gf,
    parallelogram_series,
    perimeter_window,
    pochhammer,
    qcatalan,
    r2_series,
)
from .oracle import enumerate_polyominoes, exact_counts, fix_counts, orbit_count
from .polyomino import (
    GroupElement,
    Polyomino,
    Subgroup,
    apply,
    exact_symmetry_group,
    is_fixed,
    parse_polyomino,
    realize,
)
from .series import (
    Monomial,
    MonomialSub,
    QPoly,
    TruncationError,
    TSeries,
    format_qpoly,
    qp_arith,
    ts_arith,
    ts_coefficient,
    ts_invert,
    ts_substitute,
)
from .tables import CountTable, genfun_table, oracle_table
from .verify import asymptotic_checks, proof_inequalities, run_suite

__version__ = "0.1.0"
