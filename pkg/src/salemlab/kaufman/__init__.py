"""Effective Kaufman pipeline: certified bump calculus, windowed prime
averages and their Fourier coefficients, the certified constants of the
decay lemmas, admissible schedules, and the level sets they generate."""

from .bump import BumpSpec, bump_derivative_l1, standard_bump
from .fourier import (
    CoefficientTable,
    WindowComponent,
    delta_table,
    fm_coefficient,
    fm_table,
    g_table_for_schedule,
    phi_hat,
    product_table,
)
from .constants import (
    CertifiedConstants,
    cn_bound,
    estimate_fm_constants,
    eta,
    g_function,
    g_plateau,
    tail_bound,
    x0_enclosure,
)
from .schedule import (
    InfeasibleScheduleError,
    KaufmanSchedule,
    ResourceCaps,
    theta_schedule,
)
from .levels import (
    LevelData,
    d_n,
    density_coefficients,
    p_alpha_k,
    prime_window,
    s_level,
)

__all__ = [
    "BumpSpec",
    "CertifiedConstants",
    "CoefficientTable",
    "InfeasibleScheduleError",
    "KaufmanSchedule",
    "LevelData",
    "ResourceCaps",
    "WindowComponent",
    "bump_derivative_l1",
    "cn_bound",
    "d_n",
    "delta_table",
    "density_coefficients",
    "estimate_fm_constants",
    "eta",
    "fm_coefficient",
    "fm_table",
    "g_function",
    "g_plateau",
    "g_table_for_schedule",
    "p_alpha_k",
    "phi_hat",
    "prime_window",
    "product_table",
    "s_level",
    "standard_bump",
    "tail_bound",
    "theta_schedule",
    "x0_enclosure",
]
