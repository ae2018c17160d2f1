"""Planck-scale limits of the contraction map.

Pushing the mode index to the Planck wavenumber n_P = 2 d / L_P gives the
smallest gap the plates can be squeezed to,

    d_min = d (n_1 / n_P)^(1/3) = (l^2 L_P / 2)^(1/3),

which no longer depends on d.  Dropping all order-one coefficients gives the
order-of-magnitude form L^(2/3) L_P^(1/3).  Both are available through
:class:`PrefactorMode`:

``EXACT``  keeps C, the factor 2 and l = sqrt(C/2pi) L.  Then E(d_min) = -4 pi E_P.
``PAPER``  uses d_min = L^(2/3) L_P^(1/3) and C = 1.  Then E(d_min) = -E_P.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import PlateConfig, casimir_energy, fluctuation_lifetime
from .quantities import Constants, DomainError, mode_scale_l
from .regimes import critical_wavenumber_n1

__all__ = [
    "PrefactorMode",
    "PlanckReport",
    "planck_wavenumber",
    "minimum_separation",
    "minimum_time",
    "lifetime_at_planck_mode",
    "minimum_energy",
    "energy_at_planck_separation",
    "holographic_length",
    "planck_report",
]

# |E(d)| / E_P above which dropping the initial-state energy is questionable
INITIAL_ENERGY_FLAG = 1e-3


class PrefactorMode(str, enum.Enum):
    EXACT = "exact"
    PAPER = "paper"

    @classmethod
    def parse(cls, value: "str | PrefactorMode") -> "PrefactorMode":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        aliases = {"exact": cls.EXACT, "exactcoefficients": cls.EXACT,
                   "paper": cls.PAPER, "paperorderofmagnitude": cls.PAPER}
        try:
            return aliases[key]
        except KeyError:
            raise DomainError(f"unknown prefactor mode {value!r}") from None


def planck_wavenumber(d: float, k: Constants) -> float:
    """n_P = 2 d / L_P: the mode whose wavelength reaches the Planck length."""
    d = float(d)
    if not d > 0 or math.isinf(d):
        raise DomainError(f"d must be positive and finite, got {d!r}")
    return 2.0 * d / k.planck_length


def minimum_separation(cfg: PlateConfig, k: Constants,
                       mode: PrefactorMode = PrefactorMode.EXACT) -> float:
    mode = PrefactorMode.parse(mode)
    if mode is PrefactorMode.PAPER:
        return cfg.L ** (2.0 / 3.0) * k.planck_length ** (1.0 / 3.0)
    n_1 = critical_wavenumber_n1(cfg, k)
    n_P = planck_wavenumber(cfg.d, k)
    return cfg.d * (n_1 / n_P) ** (1.0 / 3.0)


def minimum_time(d_min: float, k: Constants) -> float:
    if not d_min > 0:
        raise DomainError(f"d_min must be positive, got {d_min!r}")
    return d_min / k.c


def lifetime_at_planck_mode(cfg: PlateConfig, k: Constants) -> tuple[float, float]:
    """Lifetime of the Planck mode as ``(exact, chain)``.

    ``exact`` is d / (n_P c), which is t_P / 2 for any geometry.  ``chain``
    is n_1^(1/3) t_P, the intermediate expression of the order-of-magnitude
    derivation; it exceeds the exact value by roughly 2 n_1^(1/3).
    """
    exact = fluctuation_lifetime(planck_wavenumber(cfg.d, k), cfg, k)
    chain = critical_wavenumber_n1(cfg, k) ** (1.0 / 3.0) * k.planck_time
    return exact, chain


def minimum_energy(cfg: PlateConfig, k: Constants,
                   mode: PrefactorMode = PrefactorMode.EXACT) -> float:
    """Casimir energy at d_min, ignoring the energy of the initial gap (J)."""
    mode = PrefactorMode.parse(mode)
    if mode is PrefactorMode.PAPER:
        # d_min^3 = L^2 L_P, so -hbar c L^2 / d_min^3 collapses to -hbar c / L_P;
        # going through the rounded cube root would cost ~1e-16 for nothing
        return -k.planck_energy
    d_min = minimum_separation(cfg, k, mode)
    aspect = cfg.L / d_min
    return -k.casimir_coefficient * k.hbar * k.c * (aspect * aspect) / d_min


def energy_at_planck_separation(cfg: PlateConfig, k: Constants) -> float:
    """-hbar c L^2 / L_P^3 = -E_P (L / L_P)^2, with unit coefficient (J)."""
    x = cfg.L / k.planck_length
    return -k.planck_energy * (x * x)


def holographic_length(L: float, k: Constants) -> float:
    """L_P^(2/3) L^(1/3); a comparison scalar only."""
    return k.planck_length ** (2.0 / 3.0) * L ** (1.0 / 3.0)


@dataclass(frozen=True)
class PlanckReport:
    L: float
    d: float
    prefactor_mode: PrefactorMode
    n_P: float
    n_1: float
    d_min: float
    t_min: float
    delta_t_at_nP: float
    delta_t_at_nP_chain: float
    E_min: float
    E_at_planck_sep: float
    E_initial: float
    holographic_length: float
    planck_length: float
    planck_time: float
    planck_energy: float

    @property
    def d_min_over_LP(self) -> float:
        return self.d_min / self.planck_length

    @property
    def t_min_over_tP(self) -> float:
        return self.t_min / self.planck_time

    @property
    def E_min_over_EP(self) -> float:
        return self.E_min / self.planck_energy

    @property
    def E_at_planck_sep_over_EP(self) -> float:
        return abs(self.E_at_planck_sep) / self.planck_energy

    @property
    def sub_planck(self) -> bool:
        """True when d_min falls below L_P, i.e. the geometry is itself sub-Planckian."""
        return not self.d_min > self.planck_length

    @property
    def initial_energy_significant(self) -> bool:
        return abs(self.E_initial) / self.planck_energy > INITIAL_ENERGY_FLAG


def planck_report(cfg: PlateConfig, k: Constants,
                  mode: PrefactorMode = PrefactorMode.EXACT) -> PlanckReport:
    mode = PrefactorMode.parse(mode)
    d_min = minimum_separation(cfg, k, mode)
    exact, chain = lifetime_at_planck_mode(cfg, k)
    return PlanckReport(
        L=cfg.L,
        d=cfg.d,
        prefactor_mode=mode,
        n_P=planck_wavenumber(cfg.d, k),
        n_1=critical_wavenumber_n1(cfg, k),
        d_min=d_min,
        t_min=minimum_time(d_min, k),
        delta_t_at_nP=exact,
        delta_t_at_nP_chain=chain,
        E_min=minimum_energy(cfg, k, mode),
        E_at_planck_sep=energy_at_planck_separation(cfg, k),
        E_initial=casimir_energy(cfg, k),
        holographic_length=holographic_length(cfg.L, k),
        planck_length=k.planck_length,
        planck_time=k.planck_time,
        planck_energy=k.planck_energy,
    )
