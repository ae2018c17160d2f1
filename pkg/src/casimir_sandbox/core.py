"""Casimir energy, mode frequency, fluctuation energy balance and the exact
contraction map for two parallel plates hit by a single-mode fluctuation.

A fluctuation of mode ``n`` carries energy hbar * omega_n with
omega_n = 2 pi n c / d.  Equating it to the Casimir energy released when the
plates close from d to d' gives the contraction map

    d' / d = (1 + n d^2 / l^2) ** (-1/3)

where l is the mode scale from :func:`~casimir_sandbox.quantities.mode_scale_l`.
``n d^2 / l^2`` is called the *load* below; it equals n / n_1.

Mode indices are real numbers: Planck-scale modes reach ~1e29, well past any
machine integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .quantities import Constants, DomainError, mode_scale_l

__all__ = [
    "CASIMIR_VALID_MAX_RATIO",
    "PlateConfig",
    "Mode",
    "FluctuationOutcome",
    "casimir_energy",
    "mode_frequency",
    "fluctuation_energy",
    "mode_load",
    "contraction_ratio_exact",
    "contraction_deficit",
    "fluctuation_lifetime",
    "fluctuation_lifetime_generalized",
    "lifetime_lower_bound",
]

# d/L above this is computable but outside the thin-gap regime of the energy formula
CASIMIR_VALID_MAX_RATIO = 1e-2


def _positive(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        raise DomainError(f"{name} must be positive and finite, got {value!r}")
    return value


@dataclass(frozen=True)
class PlateConfig:
    """Plate geometry: lateral extension ``L`` and separation ``d`` (metres)."""

    L: float
    d: float

    def __post_init__(self):
        object.__setattr__(self, "L", _positive("L", self.L))
        object.__setattr__(self, "d", _positive("d", self.d))
        if not self.d < self.L:
            raise DomainError(f"d must be < L (got d={self.d!r}, L={self.L!r})")

    @property
    def d_over_L(self) -> float:
        return self.d / self.L

    @property
    def casimir_valid(self) -> bool:
        return self.d_over_L <= CASIMIR_VALID_MAX_RATIO

    @classmethod
    def from_ratio(cls, d_over_L: float, L: float) -> "PlateConfig":
        return cls(L=L, d=d_over_L * L)


@dataclass(frozen=True)
class Mode:
    n: float
    d: float

    def __post_init__(self):
        _positive("n", self.n)
        _positive("d", self.d)

    @property
    def wavelength(self) -> float:
        return self.d / self.n


@dataclass(frozen=True)
class FluctuationOutcome:
    """One hypothetical fluctuation of mode ``n`` between the plates.

    ``deficit`` is 1 - d'/d carried at full relative precision; for tiny
    loads it is far more accurate than ``1 - ratio``.
    """

    n: float
    d: float
    d_prime: float
    ratio: float
    deficit: float
    delta_E: float
    delta_t: float
    regime: str
    measurable: str

    @property
    def relative_contraction(self) -> float:
        return -self.deficit


def casimir_energy(cfg: PlateConfig, k: Constants) -> float:
    """Energy confined between the plates, -C hbar c L^2 / d^3 (J)."""
    aspect = cfg.L / cfg.d
    return -k.casimir_coefficient * k.hbar * k.c * (aspect * aspect) / cfg.d


def mode_frequency(n: float, d: float, k: Constants) -> float:
    """Angular frequency 2 pi n c / d of mode ``n`` (rad/s)."""
    n = _positive("n", n)
    d = _positive("d", d)
    return 2.0 * math.pi * k.c / d * n


def fluctuation_energy(cfg: PlateConfig, d_prime: float, k: Constants, *,
                       deficit: float | None = None) -> float:
    """Energy released when the gap closes from ``cfg.d`` to ``d_prime`` (J).

    ``deficit`` optionally supplies 1 - d_prime/d at higher precision than
    ``d_prime`` itself can hold; it must agree with ``d_prime``.
    """
    d_prime = _positive("d_prime", d_prime)
    if d_prime > cfg.d:
        raise DomainError(f"d_prime must not exceed d (fluctuations only contract): "
                          f"d_prime={d_prime!r} > d={cfg.d!r}")
    if deficit is None:
        deficit = 1.0 - d_prime / cfg.d
    else:
        if not 0.0 <= deficit < 1.0:
            raise DomainError(f"deficit must lie in [0, 1), got {deficit!r}")
        if abs((1.0 - deficit) * cfg.d - d_prime) > 1e-12 * cfg.d:
            raise DomainError("deficit is inconsistent with d_prime")
    # (d/d')^3 - 1 without cancellation
    cube_excess = math.expm1(-3.0 * math.log1p(-deficit))
    aspect = cfg.L / cfg.d
    return k.casimir_coefficient * k.hbar * k.c * (aspect * aspect) / cfg.d * cube_excess


def _critical_load_scale(cfg: PlateConfig, k: Constants) -> float:
    """(l / d)^2, i.e. n_1."""
    l_over_d = mode_scale_l(cfg.L, k) / cfg.d
    return l_over_d * l_over_d


def mode_load(n: float, cfg: PlateConfig, k: Constants) -> float:
    """n d^2 / l^2."""
    n = float(n)
    if not n >= 0 or math.isinf(n):
        raise DomainError(f"n must be non-negative and finite, got {n!r}")
    d_over_l = cfg.d / mode_scale_l(cfg.L, k)
    return n * (d_over_l * d_over_l)


def contraction_ratio_exact(n: float, cfg: PlateConfig, k: Constants) -> float:
    """d'/d = (1 + n d^2/l^2)^(-1/3)."""
    return math.exp(-math.log1p(mode_load(n, cfg, k)) / 3.0)


def contraction_deficit(n: float, cfg: PlateConfig, k: Constants) -> float:
    """1 - d'/d, accurate for loads far below 1."""
    return -math.expm1(-math.log1p(mode_load(n, cfg, k)) / 3.0)


def fluctuation_lifetime(n: float, cfg: PlateConfig, k: Constants) -> float:
    """Working lifetime estimate d / (n c) (s)."""
    n = _positive("n", n)
    return cfg.d / (n * k.c)


def fluctuation_lifetime_generalized(n: float, cfg: PlateConfig, k: Constants) -> float:
    """Lifetime written through the contracted gap: (d'/(n c)) (1 + n/n_1)^(1/3).

    Algebraically identical to :func:`fluctuation_lifetime`.
    """
    n = _positive("n", n)
    d_prime = cfg.d * contraction_ratio_exact(n, cfg, k)
    growth = math.exp(math.log1p(n / _critical_load_scale(cfg, k)) / 3.0)
    return d_prime / (n * k.c) * growth


def lifetime_lower_bound(n: float, cfg: PlateConfig, k: Constants) -> float:
    """Strict uncertainty bound hbar / (2 dE) = 1 / (2 omega_n) (s)."""
    return 0.5 / mode_frequency(n, cfg.d, k)
