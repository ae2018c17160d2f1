"""Print every quoted number next to what the formulas give, in both profiles."""

import math

from casimir_sandbox import PlateConfig, make_constants
from casimir_sandbox.core import contraction_ratio_exact, fluctuation_lifetime
from casimir_sandbox.planck import PrefactorMode, planck_report
from casimir_sandbox.regimes import (
    contraction_ratio_fast,
    contraction_ratio_fast_paper,
    critical_wavenumber_n1,
    relative_contraction,
)


def row(label, quoted, value):
    print(f"  {label:<44} quoted {quoted:<10} computed {value:.4g}")


def main():
    for profile in ("codata", "paper"):
        k = make_constants(profile)
        cfg = PlateConfig(L=1e-6, d=1e-9)
        n_1 = critical_wavenumber_n1(cfg, k)
        print(f"[{profile}]  L = 1 um, d = 1 nm, c = {k.c:.6g} m/s, l/L = {k.mode_scale_factor:.6f}")
        row("n_1 at d/L = 1e-3", "~1e4", n_1)
        row("d/c at d = 1 nm (s)", "~1e-18", fluctuation_lifetime(1, cfg, k))
        row("(d'-d)/d at n = 10, n_1 = 1e4", "-3.33e-4", relative_contraction(10, 1e4))
        row("dt at n = 1e4 (s)", "1e-21", fluctuation_lifetime(1e4, cfg, k))
        for n, quoted in ((1e6, "0.1"), (1e9, "0.01")):
            row(f"d'/d at n = {n:.0e}, exact map", quoted, contraction_ratio_exact(n, cfg, k))
            row(f"d'/d at n = {n:.0e}, (n_1/n)^(1/3)", quoted, contraction_ratio_fast(n, n_1))
            row(f"d'/d at n = {n:.0e}, 10 n^(-1/3)", quoted, contraction_ratio_fast_paper(n))
        row("dt at n = 1e6 (s)", "~1e-24", fluctuation_lifetime(1e6, cfg, k))
        row("dt at n = 1e9 (s)", "~1e-27", fluctuation_lifetime(1e9, cfg, k))
        for mode in PrefactorMode:
            r = planck_report(cfg, k, mode)
            print(f"  -- prefactor {mode.value}")
            row("d_min / L_P", "(L/L_P)^(2/3)", r.d_min_over_LP)
            row("(L/L_P)^(2/3)", "", (cfg.L / k.planck_length) ** (2 / 3))
            row("dt(n_P) / t_P, exact", "~1", r.delta_t_at_nP / k.planck_time)
            row("dt(n_P) / t_P, n_1^(1/3) chain", "~1", r.delta_t_at_nP_chain / k.planck_time)
            row("E_min / E_P", "-1", r.E_min_over_EP)
            row("log10 |E(d=L_P)| / E_P", "", math.log10(r.E_at_planck_sep_over_EP))
        print()


if __name__ == "__main__":
    main()
