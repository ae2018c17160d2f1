"""Physical constants and named constant profiles.

Two profiles are provided:

``codata``
    CODATA 2018 values for hbar, c and the Planck length, the Casimir
    coefficient pi/24 and the mode scale l = sqrt(C / 2 pi) * L = L / sqrt(48).

``paper``
    The rounded arithmetic used for back-of-envelope estimates: c = 1e8 m/s
    and l = L / 7.  hbar, L_P and C are the CODATA ones.

All quantities are SI.  Derived Planck quantities are computed from the
primary ones so that t_P * c = L_P and E_P * L_P = hbar * c hold to rounding.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

__all__ = [
    "DomainError",
    "Profile",
    "Constants",
    "make_constants",
    "mode_scale_l",
    "HBAR_CODATA",
    "C_CODATA",
    "PLANCK_LENGTH_CODATA",
    "CASIMIR_COEFFICIENT",
]


class DomainError(ValueError):
    """An input lies outside the domain where a formula is defined."""


HBAR_CODATA = 1.054571817e-34  # J s
C_CODATA = 299792458.0  # m/s, exact by definition
PLANCK_LENGTH_CODATA = 1.616255e-35  # m
CASIMIR_COEFFICIENT = math.pi / 24

C_PAPER = 1.0e8
MODE_SCALE_PAPER = 1.0 / 7.0


class Profile(str, enum.Enum):
    CODATA = "codata"
    PAPER = "paper"

    @classmethod
    def parse(cls, value: "str | Profile") -> "Profile":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        aliases = {"codata": cls.CODATA, "paper": cls.PAPER, "paperrounded": cls.PAPER,
                   "paper_rounded": cls.PAPER}
        try:
            return aliases[key]
        except KeyError:
            raise DomainError(f"unknown constants profile {value!r}") from None


@dataclass(frozen=True)
class Constants:
    """Immutable bundle of the constants used by every formula.

    ``mode_scale_factor`` is l / L, the ratio of the lateral mode scale to
    the plate extension.
    """

    hbar: float
    c: float
    planck_length: float
    casimir_coefficient: float
    mode_scale_factor: float
    profile_name: str

    @property
    def planck_time(self) -> float:
        return self.planck_length / self.c

    @property
    def planck_energy(self) -> float:
        return self.hbar * self.c / self.planck_length

    @property
    def profile(self) -> Profile:
        return Profile(self.profile_name)


def make_constants(profile: "Profile | str" = Profile.CODATA) -> Constants:
    profile = Profile.parse(profile)
    if profile is Profile.CODATA:
        return Constants(
            hbar=HBAR_CODATA,
            c=C_CODATA,
            planck_length=PLANCK_LENGTH_CODATA,
            casimir_coefficient=CASIMIR_COEFFICIENT,
            mode_scale_factor=math.sqrt(CASIMIR_COEFFICIENT / (2.0 * math.pi)),
            profile_name=profile.value,
        )
    return Constants(
        hbar=HBAR_CODATA,
        c=C_PAPER,
        planck_length=PLANCK_LENGTH_CODATA,
        casimir_coefficient=CASIMIR_COEFFICIENT,
        mode_scale_factor=MODE_SCALE_PAPER,
        profile_name=profile.value,
    )


def mode_scale_l(L: float, constants: Constants) -> float:
    """Lateral mode scale l entering the contraction map (m)."""
    if not L > 0 or not math.isfinite(L):
        raise DomainError(f"lateral extension L must be positive and finite, got {L!r}")
    return constants.mode_scale_factor * L
