"""Casimir plates under a hypothetical single-mode vacuum fluctuation.

Exact and asymptotic contraction of the plate gap, fluctuation lifetimes,
Planck-scale limits and reproducible sweeps.
"""

from .core import (
    FluctuationOutcome,
    Mode,
    PlateConfig,
    casimir_energy,
    contraction_deficit,
    contraction_ratio_exact,
    fluctuation_energy,
    fluctuation_lifetime,
    fluctuation_lifetime_generalized,
    lifetime_lower_bound,
    mode_frequency,
)
from .planck import (
    PlanckReport,
    PrefactorMode,
    energy_at_planck_separation,
    lifetime_at_planck_mode,
    minimum_energy,
    minimum_separation,
    minimum_time,
    planck_report,
    planck_wavenumber,
)
from .quantities import Constants, DomainError, Profile, make_constants, mode_scale_l
from .regimes import (
    Measurability,
    Regime,
    RegimeReport,
    classify_regime,
    contraction_ratio_fast,
    contraction_ratio_slow,
    critical_wavenumber_n1,
    fluctuate,
    measurability_assessment,
    regime_report,
    relative_contraction,
)
from .sweep import Curve, SweepSpec, figure2_sweep, n_sweep, render_svg, write_csv

__version__ = "0.1.0"
