"""Exit criteria, one test per criterion; each prints a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -rA`` (the summary lines are
printed at the end of any pytest run that includes this module).
"""

import hashlib
import json
import math

import mpmath as mp
import numpy as np
import pytest

from casimir_sandbox import (
    PlateConfig,
    contraction_deficit,
    contraction_ratio_exact,
    fluctuation_energy,
    fluctuation_lifetime,
    fluctuation_lifetime_generalized,
    make_constants,
    mode_frequency,
)
from casimir_sandbox.cli import main
from casimir_sandbox.planck import (
    PrefactorMode,
    energy_at_planck_separation,
    minimum_energy,
    minimum_separation,
    planck_wavenumber,
)
from casimir_sandbox.regimes import (
    contraction_ratio_fast,
    contraction_ratio_slow,
    critical_wavenumber_n1,
    relative_contraction,
)
from casimir_sandbox.sweep import curves_to_csv, figure2_sweep

CODATA = make_constants("codata")
PAPER = make_constants("paper")
SEED = 20240611
RESULTS: list[str] = []


def verdict(number: int, title: str, checks: dict[str, bool], detail: str = "") -> None:
    ok = all(checks.values())
    failed = [name for name, good in checks.items() if not good]
    line = f"[criterion {number}] {'PASS' if ok else 'FAIL'}  {title}"
    if failed:
        line += f"  (failed: {', '.join(failed)})"
    if detail:
        line += f"  {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def samples():
    rng = np.random.default_rng(SEED)
    d_over_L = 10.0 ** rng.uniform(-5, -1, 1000)
    n = 10.0 ** rng.uniform(0, 12, 1000)
    L = 10.0 ** rng.uniform(-9, 0, 1000)
    return [(PlateConfig(L=Li, d=xi * Li), ni) for xi, ni, Li in zip(d_over_L, n, L)]


def test_criterion_1_round_trip(samples):
    worst = 0.0
    for cfg, n in samples:
        d_prime = cfg.d * contraction_ratio_exact(n, cfg, CODATA)
        dE = fluctuation_energy(cfg, d_prime, CODATA, deficit=contraction_deficit(n, cfg, CODATA))
        photon = CODATA.hbar * mode_frequency(n, cfg.d, CODATA)
        worst = max(worst, abs(dE / photon - 1))
    verdict(1, "round trip dE(d') = hbar*omega_n, 1000 samples, rel <= 1e-9",
            {"max rel error <= 1e-9": worst <= 1e-9}, f"max rel error {worst:.2e}")


def test_criterion_2_lifetime_identity(samples):
    worst = 0.0
    for cfg, n in samples:
        a = fluctuation_lifetime_generalized(n, cfg, CODATA)
        b = cfg.d / (n * CODATA.c)
        worst = max(worst, abs(a / b - 1))
    worst_p = 0.0
    for cfg, _ in samples:
        dt = fluctuation_lifetime(planck_wavenumber(cfg.d, CODATA), cfg, CODATA)
        worst_p = max(worst_p, abs(dt / (CODATA.planck_time / 2) - 1))
    verdict(2, "lifetime identity rel <= 1e-12; dt(n_P) = t_P/2 rel <= 1e-12",
            {"generalized form": worst <= 1e-12, "Planck mode": worst_p <= 1e-12},
            f"max rel {worst:.1e} / {worst_p:.1e}")


def test_criterion_3_n1():
    checks, vals = {}, []
    for k in (CODATA, PAPER):
        n_1 = critical_wavenumber_n1(PlateConfig(L=1.0, d=1e-3), k)
        vals.append(f"{k.profile_name} n_1={n_1:.4g}")
        checks[f"{k.profile_name} in [1e4,1e5)"] = 1e4 <= n_1 < 1e5
        checks[f"{k.profile_name} |log10 n_1 - 4| <= 0.5"] = abs(math.log10(n_1) - 4) <= 0.5
    verdict(3, "n_1 at d/L = 1e-3 is of order 1e4", checks, "; ".join(vals))


def test_criterion_4_slow_mode():
    rel = relative_contraction(10, 1e4)
    cfg = PlateConfig(L=1e-6, d=1e-9)
    n_1 = critical_wavenumber_n1(cfg, PAPER)
    dt = fluctuation_lifetime(n_1, cfg, PAPER)
    verdict(4, "slow mode: (d'-d)/d = -3.33e-4 +- 1e-6; dt(n = n_1, d = 1 nm) in [1e-22, 1e-21] s",
            {"relative contraction": abs(rel - (-3.33e-4)) <= 1e-6,
             "lifetime window": 1e-22 <= dt <= 1e-21},
            f"rel={rel:.6e} dt={dt:.3e} s [paper profile]")


def test_criterion_5_fast_mode():
    checks, parts = {}, []
    for k in (CODATA, PAPER):
        cfg = PlateConfig(L=1.0, d=1e-3)
        r6 = contraction_ratio_exact(1e6, cfg, k)
        r9 = contraction_ratio_exact(1e9, cfg, k)
        checks[f"{k.profile_name} ratio(1e6) in [0.09, 0.3]"] = 0.09 <= r6 <= 0.3
        checks[f"{k.profile_name} ratio(1e9) in [0.009, 0.03]"] = 0.009 <= r9 <= 0.03
        parts.append(f"{k.profile_name}: ratio {r6:.4f}/{r9:.5f}")
    plates = PlateConfig(L=1e-6, d=1e-9)
    for n, target in ((1e6, 1e-24), (1e9, 1e-27)):
        dt = fluctuation_lifetime(n, plates, CODATA)
        factor = max(dt / target, target / dt)
        checks[f"dt(n={n:.0e}) within x3 of {target:.0e} s"] = factor <= 3.0
        parts.append(f"dt(n={n:.0e})={dt:.3e} s (x{factor:.3f})")
    verdict(5, "fast mode ratios and lifetimes at d/L = 1e-3, d = 1 nm", checks, "; ".join(parts))


def test_criterion_6_error_bounds():
    # Near x -> 0 the slow error is (2/9)x^2 (1 - 7x/9 + ...): the margin under the
    # bound drops below one ulp of 1.0 for x < ~1e-4, so doubles are compared on
    # [1e-4, 0.3] and the remainder below that is checked at 50 digits.
    xs = np.geomspace(1e-4, 0.3, 400)
    slow_ok = all(abs(contraction_ratio_slow(x, 1.0) - (1 + x) ** (-1 / 3)) <= 2 / 9 * x * x for x in xs)
    mp.mp.dps = 50
    slow_small_ok = all(abs(1 - mp.mpf(x) / 3 - (1 + mp.mpf(x)) ** (-mp.mpf(1) / 3)) <= mp.mpf(2) / 9 * mp.mpf(x) ** 2
                        for x in np.geomspace(1e-12, 1e-4, 200))
    ys = np.geomspace(10, 1e10, 400)
    fast_ok = all(abs(contraction_ratio_fast(y, 1.0) / (1 + y) ** (-1 / 3) - 1) <= 0.4 / y for y in ys)
    # same bounds along the exact map of a real geometry
    cfg = PlateConfig(L=1e-6, d=1e-9)
    n_1 = critical_wavenumber_n1(cfg, CODATA)
    geo_ok = all(abs(contraction_ratio_slow(x * n_1, n_1) - contraction_ratio_exact(x * n_1, cfg, CODATA))
                 <= 2 / 9 * x * x for x in np.geomspace(1e-4, 0.3, 200))
    geo_ok &= all(abs(contraction_ratio_fast(y * n_1, n_1) / contraction_ratio_exact(y * n_1, cfg, CODATA) - 1)
                  <= 0.4 / y for y in np.geomspace(10, 1e8, 200))
    verdict(6, "asymptotic error bounds on >= 200-point geometric grids",
            {"slow (2/9)x^2, doubles": slow_ok, "slow (2/9)x^2, 50 digits": slow_small_ok,
             "fast 0.4/y": fast_ok, "bounds on geometry": geo_ok})


def test_criterion_7_planck_suite():
    k = CODATA
    ds = np.geomspace(1e-9, 1e-6, 31)
    dm = [minimum_separation(PlateConfig(L=1e-3, d=d), k, PrefactorMode.EXACT) for d in ds]
    spread = (max(dm) - min(dm)) / min(dm)
    Ls = np.geomspace(1e-7, 1e-3, 5)
    slope_ok = True
    for mode in PrefactorMode:
        logs = [math.log(minimum_separation(PlateConfig(L=L, d=L * 1e-3), k, mode)) for L in Ls]
        slopes = np.diff(logs) / np.diff(np.log(Ls))
        slope_ok &= bool(np.all(np.abs(slopes - 2 / 3) <= 1e-9))
    Lgrid = np.geomspace(1e-6, 1.0, 7)
    paper_exact = all(minimum_energy(PlateConfig(L=L, d=L * 1e-3), k, PrefactorMode.PAPER) == -k.planck_energy
                      for L in Lgrid)
    e_exact = [minimum_energy(PlateConfig(L=L, d=L * 1e-3), k, PrefactorMode.EXACT) for L in Lgrid]
    exact_ok = all(abs(e / (-4 * math.pi * k.planck_energy) - 1) <= 1e-12 for e in e_exact)
    e_spread = (max(e_exact) - min(e_exact)) / abs(min(e_exact))
    sep_ok = True
    for L in Lgrid:
        E = energy_at_planck_separation(PlateConfig(L=L, d=L * 1e-3), k)
        x = L / k.planck_length
        # quotient of two roundings: allow 2 ulp
        sep_ok &= abs((abs(E) / k.planck_energy) / (x * x) - 1) <= 4.5e-16
    verdict(7, "Planck suite", {
        "d_min d-invariant (< 1e-12)": spread < 1e-12,
        "slope 2/3 +- 1e-9": slope_ok,
        "E_min = -E_P (paper mode)": paper_exact,
        "E_min = -4 pi E_P (exact mode)": exact_ok and e_spread < 1e-12,
        "|E(d=L_P)|/E_P = (L/L_P)^2": sep_ok,
    }, f"d_min spread {spread:.1e}, E_min spread {e_spread:.1e}")


GOLDEN_SHA256 = "4b5c597074c2c35ea77cf8006bd91a27f811482303fc10d496a88cbc4726c513"


def test_criterion_8_figure2():
    curves = figure2_sweep()
    checks = {"8 curves": len(curves) == 8}
    checks["non-crossing"] = all(q.ratio < p.ratio for a, b in zip(curves, curves[1:])
                                 for p, q in zip(a.points, b.points))
    checks["monotone"] = all(q.ratio < p.ratio for c in curves for p, q in zip(c.points, c.points[1:]))
    sat = True
    for c in curves:
        for p in c.points:
            n_1 = critical_wavenumber_n1(PlateConfig.from_ratio(p.d_over_L, 1.0), CODATA)
            if c.n / n_1 >= 10:
                sat &= abs(contraction_ratio_fast(c.n, n_1) / p.ratio - 1) < 4.1e-2
    checks["saturation within 4.1e-2 of asymptote"] = sat
    a, b = curves_to_csv(curves), curves_to_csv(figure2_sweep())
    checks["byte-identical runs"] = a == b
    digest = hashlib.sha256(a.encode()).hexdigest()
    checks["golden checksum"] = digest == GOLDEN_SHA256
    verdict(8, "d'/d curve family reproduction", checks, f"sha256 {digest[:12]}")


def test_criterion_9_cli(capsys, tmp_path):
    matrix = [
        (["energy", "--L", "1e-6", "--d", "1e-8"], 0),
        (["energy", "--L", "1e-6", "--d", "2e-6"], 2),
        (["energy", "--L", "1e-6"], 1),
        (["contract", "--L", "1e-6", "--d", "1e-9", "--n", "0"], 2),
        (["contract", "--L", "1e-6", "--d", "1e-9", "--n", "1e6"], 0),
        (["planck", "--L", "1e-6", "--d", "1e-9"], 0),
        (["sweep", "--L", "1e-6", "--d", "1e-9", "--n-min", "1e9", "--n-max", "1"], 2),
        (["sweep", "--L", "1e-6", "--d", "1e-9", "--n-min", "1", "--n-max", "1e9"], 0),
        (["fig2", "--out", str(tmp_path / "f.csv")], 0),
        (["fig2", "--out", str(tmp_path / "missing" / "f.csv")], 3),
        (["nope"], 1),
    ]
    codes_ok = True
    for argv, want in matrix:
        got = main(argv)
        capsys.readouterr()
        codes_ok &= got == want
    cfg = PlateConfig(L=1e-6, d=1e-9)
    main(["contract", "--L", "1e-6", "--d", "1e-9", "--n", "1e6", "--format", "json"])
    rec = json.loads(capsys.readouterr().out)
    values_ok = (rec["dprime_over_d"] == contraction_ratio_exact(1e6, cfg, CODATA)
                 and rec["delta_t_s"] == fluctuation_lifetime(1e6, cfg, CODATA))
    main(["contract", "--L", "1e-6", "--d", "1e-9", "--n", "1e6"])
    out = capsys.readouterr().out
    line = next(l for l in out.splitlines() if l.strip().startswith("d'/d (exact)"))
    values_ok &= float(line.split("=")[1]) == float(f"{contraction_ratio_exact(1e6, cfg, CODATA):.6e}")
    verdict(9, "CLI exit codes and printed values", {"exit-code matrix": codes_ok,
                                                     "printed values": values_ok})
