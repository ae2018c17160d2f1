"""Slow/fast regime split of the contraction map.

With x = n / n_1 the exact ratio is (1 + x)^(-1/3).  For x << 1 it is
1 - x/3 to second order; for x >> 1 it tends to x^(-1/3).  The helpers here
classify a mode, evaluate both asymptotes and bound their errors:

    |slow - exact|        <= (2/9) x^2      for x > 0
    |fast / exact - 1|    <= 1 / (3x)       for x > 0
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import (
    FluctuationOutcome,
    PlateConfig,
    _critical_load_scale,
    contraction_deficit,
    contraction_ratio_exact,
    fluctuation_energy,
    fluctuation_lifetime,
)
from .quantities import Constants, DomainError

__all__ = [
    "Regime",
    "Measurability",
    "SLOW_MAX",
    "FAST_MIN",
    "SLOW_FORMULA_MAX",
    "MEASURABILITY_THRESHOLD_S",
    "RegimeReport",
    "critical_wavenumber_n1",
    "classify_regime",
    "contraction_ratio_slow",
    "contraction_ratio_fast",
    "contraction_ratio_fast_paper",
    "relative_contraction",
    "slow_error_bound",
    "fast_error_bound",
    "measurability_assessment",
    "regime_report",
    "fluctuate",
]

SLOW_MAX = 0.1
FAST_MIN = 10.0
# slow formula is trusted (not flagged extrapolated) up to this load
SLOW_FORMULA_MAX = 0.3
MEASURABILITY_THRESHOLD_S = 1e-18


class Regime(str, enum.Enum):
    SLOW = "Slow"
    TRANSITION = "Transition"
    FAST = "Fast"


class Measurability(str, enum.Enum):
    PLAUSIBLY_MEASURABLE = "PlausiblyMeasurable"
    BEYOND_CURRENT_TECHNOLOGY = "BeyondCurrentTechnology"


def critical_wavenumber_n1(cfg: PlateConfig, k: Constants) -> float:
    """n_1 = l^2 / d^2, the mode index where the load n d^2/l^2 reaches one."""
    return _critical_load_scale(cfg, k)


def _load(n: float, n_1: float) -> float:
    if not n >= 0 or math.isinf(n):
        raise DomainError(f"n must be non-negative and finite, got {n!r}")
    if not n_1 > 0 or math.isinf(n_1):
        raise DomainError(f"n_1 must be positive and finite, got {n_1!r}")
    return n / n_1


def classify_regime(n: float, n_1: float) -> Regime:
    if not n > 0:
        raise DomainError(f"n must be positive, got {n!r}")
    x = _load(n, n_1)
    if x <= SLOW_MAX:
        return Regime.SLOW
    if x >= FAST_MIN:
        return Regime.FAST
    return Regime.TRANSITION


def contraction_ratio_slow(n: float, n_1: float) -> float:
    """First-order ratio 1 - n / (3 n_1)."""
    return 1.0 - _load(n, n_1) / 3.0


def relative_contraction(n: float, n_1: float) -> float:
    """(d' - d) / d to first order; same arithmetic path as the slow ratio."""
    return contraction_ratio_slow(n, n_1) - 1.0


def contraction_ratio_fast(n: float, n_1: float) -> float:
    """Large-load asymptote (n_1 / n)^(1/3)."""
    if not n > 0:
        raise DomainError(f"n must be positive, got {n!r}")
    _load(n, n_1)
    return (n_1 / n) ** (1.0 / 3.0)


def contraction_ratio_fast_paper(n: float) -> float:
    """Rounded fast-mode ratio 10 n^(-1/3), i.e. (1e4 / n)^(1/3) with 1e4^(1/3) -> 10."""
    if not n > 0:
        raise DomainError(f"n must be positive, got {n!r}")
    return 10.0 * n ** (-1.0 / 3.0)


def slow_error_bound(x: float) -> float:
    return 2.0 / 9.0 * x * x


def fast_error_bound(x: float) -> float:
    """Bound on the relative error of the fast asymptote; 0.4/x, loosened from 1/(3x)."""
    return 0.4 / x


def measurability_assessment(delta_t: float,
                             threshold: float = MEASURABILITY_THRESHOLD_S) -> Measurability:
    """Can a signal that lives ``delta_t`` seconds be resolved? Boundary inclusive."""
    if not delta_t > 0:
        raise DomainError(f"delta_t must be positive, got {delta_t!r}")
    if delta_t >= threshold:
        return Measurability.PLAUSIBLY_MEASURABLE
    return Measurability.BEYOND_CURRENT_TECHNOLOGY


@dataclass(frozen=True)
class RegimeReport:
    n: float
    n_1: float
    classification: Regime
    ratio_exact: float
    ratio_asymptotic: float
    asymptote: str
    extrapolated: bool
    delta_t: float
    measurable: Measurability

    @property
    def load(self) -> float:
        return self.n / self.n_1

    @property
    def asymptotic_abs_error(self) -> float:
        return abs(self.ratio_exact - self.ratio_asymptotic)


def regime_report(n: float, cfg: PlateConfig, k: Constants,
                  threshold: float = MEASURABILITY_THRESHOLD_S) -> RegimeReport:
    """Classify mode ``n`` and compare the matching asymptote with the exact ratio.

    In the transition band the nearer asymptote (slow below n_1, fast above)
    is reported and flagged as extrapolated.
    """
    n_1 = critical_wavenumber_n1(cfg, k)
    regime = classify_regime(n, n_1)
    x = n / n_1
    if x < 1.0:
        asymptote, approx = "slow", contraction_ratio_slow(n, n_1)
        extrapolated = x > SLOW_FORMULA_MAX
    else:
        asymptote, approx = "fast", contraction_ratio_fast(n, n_1)
        extrapolated = x < FAST_MIN
    delta_t = fluctuation_lifetime(n, cfg, k)
    return RegimeReport(
        n=float(n),
        n_1=n_1,
        classification=regime,
        ratio_exact=contraction_ratio_exact(n, cfg, k),
        ratio_asymptotic=approx,
        asymptote=asymptote,
        extrapolated=extrapolated,
        delta_t=delta_t,
        measurable=measurability_assessment(delta_t, threshold),
    )


def fluctuate(n: float, cfg: PlateConfig, k: Constants,
              threshold: float = MEASURABILITY_THRESHOLD_S) -> FluctuationOutcome:
    """Evaluate every consequence of a single mode-``n`` fluctuation."""
    if not n > 0:
        raise DomainError(f"n must be positive, got {n!r}")
    ratio = contraction_ratio_exact(n, cfg, k)
    deficit = contraction_deficit(n, cfg, k)
    d_prime = cfg.d * ratio
    delta_t = fluctuation_lifetime(n, cfg, k)
    return FluctuationOutcome(
        n=float(n),
        d=cfg.d,
        d_prime=d_prime,
        ratio=ratio,
        deficit=deficit,
        delta_E=fluctuation_energy(cfg, d_prime, k, deficit=deficit),
        delta_t=delta_t,
        regime=classify_regime(n, critical_wavenumber_n1(cfg, k)).value,
        measurable=measurability_assessment(delta_t, threshold).value,
    )
