"""Deterministic sweeps over d/L and n, with CSV / JSON / SVG output.

The d/L grid is logarithmic: point ``i`` sits at 10**(log10(d_over_L_min) + i/ppd).
Output order is fixed by the grid and by ascending n, never by evaluation
order, so files are byte-identical across runs.
"""

from __future__ import annotations

import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import PlateConfig, contraction_ratio_exact, fluctuation_lifetime
from .planck import PrefactorMode
from .quantities import Constants, DomainError, Profile, make_constants
from .regimes import MEASURABILITY_THRESHOLD_S, fluctuate

__all__ = [
    "FIG2_N_VALUES",
    "CSV_HEADER",
    "NSWEEP_HEADER",
    "SweepSpec",
    "CurvePoint",
    "Curve",
    "NSweepRow",
    "log_grid",
    "figure2_sweep",
    "n_sweep",
    "format_number",
    "curves_to_csv",
    "parse_csv",
    "write_csv",
    "curves_to_json",
    "write_json",
    "nsweep_to_csv",
    "render_svg",
    "svg_document",
]

FIG2_N_VALUES = tuple(10.0 ** k for k in range(1, 9))
CSV_HEADER = "d_over_L,n,dprime_over_d,delta_t_s"
NSWEEP_HEADER = "n,dprime_over_d,delta_E_J,delta_t_s,regime"


def format_number(value: float) -> str:
    """Scientific notation with 12 significant digits."""
    return f"{value:.11e}"


def log_grid(lo: float, hi: float, points_per_decade: int) -> list[float]:
    """Points equally spaced in log10 from ``lo`` to ``hi`` inclusive."""
    if not (0 < lo < hi) or math.isinf(hi):
        raise DomainError(f"need 0 < lo < hi, got lo={lo!r}, hi={hi!r}")
    if int(points_per_decade) != points_per_decade or points_per_decade < 1:
        raise DomainError(f"points_per_decade must be a positive integer, got {points_per_decade!r}")
    ppd = int(points_per_decade)
    a, b = math.log10(lo), math.log10(hi)
    steps = max(1, round((b - a) * ppd))
    pts = [10.0 ** (a + i * (b - a) / steps) for i in range(steps + 1)]
    pts[0], pts[-1] = float(lo), float(hi)
    return pts


@dataclass(frozen=True)
class SweepSpec:
    """Grid definition for the ratio-versus-d/L family of curves.

    ``L`` fixes the absolute scale needed for lifetimes; ratios depend on
    d/L only.
    """

    d_over_L_min: float = 1e-5
    d_over_L_max: float = 1e-1
    points_per_decade: int = 20
    n_values: tuple[float, ...] = FIG2_N_VALUES
    profile: Profile = Profile.CODATA
    prefactor_mode: PrefactorMode = PrefactorMode.EXACT
    L: float = 1e-6

    def __post_init__(self):
        object.__setattr__(self, "n_values", tuple(float(n) for n in self.n_values))
        object.__setattr__(self, "profile", Profile.parse(self.profile))
        object.__setattr__(self, "prefactor_mode", PrefactorMode.parse(self.prefactor_mode))
        if not 0 < self.d_over_L_min < self.d_over_L_max <= 0.5:
            raise DomainError("need 0 < d_over_L_min < d_over_L_max <= 0.5")
        if int(self.points_per_decade) != self.points_per_decade or self.points_per_decade < 1:
            raise DomainError("points_per_decade must be a positive integer")
        if not self.n_values:
            raise DomainError("n_values must not be empty")
        if any(not (n > 0 and math.isfinite(n)) for n in self.n_values):
            raise DomainError("n_values must be positive and finite")
        if any(b <= a for a, b in zip(self.n_values, self.n_values[1:])):
            raise DomainError("n_values must be strictly increasing")
        if not (self.L > 0 and math.isfinite(self.L)):
            raise DomainError("L must be positive and finite")

    def grid(self) -> list[float]:
        return log_grid(self.d_over_L_min, self.d_over_L_max, self.points_per_decade)


@dataclass(frozen=True)
class CurvePoint:
    d_over_L: float
    ratio: float
    delta_t: float


@dataclass(frozen=True)
class Curve:
    n: float
    points: tuple[CurvePoint, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class NSweepRow:
    n: float
    ratio: float
    delta_E: float
    delta_t: float
    regime: str
    measurable: str


def _curve(n: float, grid: Sequence[float], L: float, k: Constants) -> Curve:
    pts = []
    for x in grid:
        cfg = PlateConfig.from_ratio(x, L)
        pts.append(CurvePoint(x, contraction_ratio_exact(n, cfg, k), fluctuation_lifetime(n, cfg, k)))
    return Curve(n=n, points=tuple(pts))


def figure2_sweep(spec: SweepSpec | None = None, workers: int | None = None) -> list[Curve]:
    """One curve of d'/d against d/L per mode index in ``spec.n_values``."""
    spec = spec or SweepSpec()
    k = make_constants(spec.profile)
    grid = spec.grid()
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda n: _curve(n, grid, spec.L, k), spec.n_values))
    return [_curve(n, grid, spec.L, k) for n in spec.n_values]


def n_sweep(cfg: PlateConfig, n_min: float, n_max: float, points_per_decade: int,
            k: Constants, threshold: float = MEASURABILITY_THRESHOLD_S) -> list[NSweepRow]:
    """Tabulate ratio, energy, lifetime and regime over a log grid of n."""
    rows = []
    for n in log_grid(n_min, n_max, points_per_decade):
        out = fluctuate(n, cfg, k, threshold)
        rows.append(NSweepRow(n, out.ratio, out.delta_E, out.delta_t, out.regime, out.measurable))
    return rows


def _emit(text: str, destination) -> int:
    data = text.encode("utf-8")
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return len(data)


def curves_to_csv(curves: Iterable[Curve]) -> str:
    curves = sorted(curves, key=lambda c: c.n)
    if not curves:
        raise DomainError("no curves to write")
    f = format_number
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for c in curves:
        for p in sorted(c.points, key=lambda p: p.d_over_L):
            buf.write(f"{f(p.d_over_L)},{f(c.n)},{f(p.ratio)},{f(p.delta_t)}\n")
    return buf.getvalue()


def write_csv(curves: Iterable[Curve], destination) -> int:
    return _emit(curves_to_csv(curves), destination)


def parse_csv(text: str) -> list[Curve]:
    lines = text.split("\n")
    if lines[0] != CSV_HEADER:
        raise DomainError(f"unexpected header {lines[0]!r}")
    by_n: dict[float, list[CurvePoint]] = {}
    for line in lines[1:]:
        if not line:
            continue
        x, n, r, t = (float(v) for v in line.split(","))
        by_n.setdefault(n, []).append(CurvePoint(x, r, t))
    return [Curve(n, tuple(pts)) for n, pts in by_n.items()]


def curves_to_json(curves: Iterable[Curve]) -> str:
    f = format_number
    items = []
    for c in sorted(curves, key=lambda c: c.n):
        pts = ",".join(f"[{f(p.d_over_L)},{f(p.ratio)},{f(p.delta_t)}]" for p in c.points)
        items.append(f'{{"n":{f(c.n)},"points":[{pts}]}}')
    if not items:
        raise DomainError("no curves to write")
    return "[" + ",\n".join(items) + "]\n"


def write_json(curves: Iterable[Curve], destination) -> int:
    return _emit(curves_to_json(curves), destination)


def nsweep_to_csv(rows: Iterable[NSweepRow]) -> str:
    f = format_number
    out = [NSWEEP_HEADER]
    out += [f"{f(r.n)},{f(r.ratio)},{f(r.delta_E)},{f(r.delta_t)},{r.regime}" for r in rows]
    return "\n".join(out) + "\n"


# SVG layout, in viewBox units
_W, _H = 1000, 700
_LEFT, _RIGHT, _TOP, _BOTTOM = 90, 840, 40, 620
_PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
            "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


def _n_label(n: float) -> str:
    e = math.log10(n)
    if abs(e - round(e)) < 1e-12:
        return f"n = 1e{round(e)}"
    return f"n = {n:.3g}"


def svg_document(curves: Sequence[Curve], log_x: bool = True, log_y: bool = False) -> str:
    curves = sorted(curves, key=lambda c: c.n)
    if not curves or not any(c.points for c in curves):
        raise DomainError("no curves to render")
    tx = (lambda v: math.log10(v)) if log_x else float
    ty = (lambda v: math.log10(v)) if log_y else float
    xs = [tx(p.d_over_L) for c in curves for p in c.points]
    x0, x1 = min(xs), max(xs)
    if log_y:
        ys = [ty(p.ratio) for c in curves for p in c.points]
        y0, y1 = math.floor(min(ys)), 0.0
        if y0 == y1:
            y0 = -1.0
    else:
        y0, y1 = 0.0, 1.0
    if not x1 > x0:
        raise DomainError("empty x-axis range")

    def px(v):
        return _LEFT + (tx(v) - x0) / (x1 - x0) * (_RIGHT - _LEFT)

    def py(v):
        return _BOTTOM - (ty(v) - y0) / (y1 - y0) * (_BOTTOM - _TOP)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_W} {_H}" '
        f'width="{_W}" height="{_H}" font-family="sans-serif" font-size="14">',
        f'<rect x="0" y="0" width="{_W}" height="{_H}" fill="white"/>',
        f'<rect x="{_LEFT}" y="{_TOP}" width="{_RIGHT - _LEFT}" height="{_BOTTOM - _TOP}" '
        'fill="none" stroke="black"/>',
    ]
    # x ticks
    if log_x:
        ticks = [10.0 ** e for e in range(math.ceil(x0 - 1e-9), math.floor(x1 + 1e-9) + 1)]
        labels = [f"1e{round(math.log10(t))}" for t in ticks]
    else:
        ticks = [x0 + i * (x1 - x0) / 5 for i in range(6)]
        labels = [f"{t:.3g}" for t in ticks]
    for t, lab in zip(ticks, labels):
        x = px(t)
        out.append(f'<line x1="{x:.2f}" y1="{_BOTTOM}" x2="{x:.2f}" y2="{_BOTTOM + 6}" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{_BOTTOM + 24}" text-anchor="middle">{lab}</text>')
    # y ticks
    if log_y:
        yt = [10.0 ** e for e in range(int(y0), 1)]
        ylabels = [f"1e{round(math.log10(t))}" for t in yt]
    else:
        yt = [i / 5 for i in range(6)]
        ylabels = [f"{t:.1f}" for t in yt]
    for t, lab in zip(yt, ylabels):
        y = py(t)
        out.append(f'<line x1="{_LEFT - 6}" y1="{y:.2f}" x2="{_LEFT}" y2="{y:.2f}" stroke="black"/>')
        out.append(f'<text x="{_LEFT - 10}" y="{y + 5:.2f}" text-anchor="end">{lab}</text>')
    out.append(f'<text x="{(_LEFT + _RIGHT) / 2:.1f}" y="{_BOTTOM + 56}" text-anchor="middle">d/L</text>')
    out.append(f'<text x="24" y="{(_TOP + _BOTTOM) / 2:.1f}" text-anchor="middle" '
               f'transform="rotate(-90 24 {(_TOP + _BOTTOM) / 2:.1f})">d\'/d</text>')
    for i, c in enumerate(curves):
        color = _PALETTE[i % len(_PALETTE)]
        pts = " ".join(f"{px(p.d_over_L):.2f},{py(p.ratio):.2f}"
                       for p in sorted(c.points, key=lambda p: p.d_over_L))
        label = _n_label(c.n)
        out.append(f'<polyline data-n="{format_number(c.n)}" fill="none" stroke="{color}" '
                   f'stroke-width="2" points="{pts}"><title>{label}</title></polyline>')
        ly = _TOP + 20 + 24 * i
        out.append(f'<line x1="{_RIGHT + 16}" y1="{ly}" x2="{_RIGHT + 46}" y2="{ly}" '
                   f'stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{_RIGHT + 52}" y="{ly + 5}">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(curves: Sequence[Curve], destination, log_x: bool = True, log_y: bool = False) -> int:
    return _emit(svg_document(curves, log_x=log_x, log_y=log_y), destination)
