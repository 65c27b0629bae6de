"""Stationary layers and linear stability of a delayed tumor free-boundary model."""

from tumorstab._core import (
    DecayCertificate,
    FirstOrderCoefficients,
    FirstOrderStationary,
    GridFunction,
    InitialMode,
    ModeAmplitude,
    ModeIndex,
    ModeTrajectory,
    ModelParams,
    Parity,
    SolveError,
    SpectrumEntry,
    SpectrumTable,
    StationaryState,
    SurfaceSnapshot,
    admissible_witness,
    crossover_rho_bar,
    decay_certificate,
    evolve_mode,
    find_j0,
    first_order_coefficients,
    first_order_stationary,
    growth_rate_h,
    is_admissible,
    k1,
    k2,
    mu_star,
    mu_threshold,
    q1_boundary_flux,
    rho1_integral_residual,
    rho_star_1,
    solve_rho_s,
    solve_stationary,
    synthesize_surface,
)

__all__ = [
    "DecayCertificate",
    "FirstOrderCoefficients",
    "FirstOrderStationary",
    "GridFunction",
    "InitialMode",
    "ModeAmplitude",
    "ModeIndex",
    "ModeTrajectory",
    "ModelParams",
    "Parity",
    "SolveError",
    "SpectrumEntry",
    "SpectrumTable",
    "StationaryState",
    "SurfaceSnapshot",
    "admissible_witness",
    "crossover_rho_bar",
    "decay_certificate",
    "evolve_mode",
    "find_j0",
    "first_order_coefficients",
    "first_order_stationary",
    "growth_rate_h",
    "is_admissible",
    "k1",
    "k2",
    "mu_star",
    "mu_threshold",
    "q1_boundary_flux",
    "rho1_integral_residual",
    "rho_star_1",
    "solve_rho_s",
    "solve_stationary",
    "synthesize_surface",
]
