"""Command-line entry point.

Exit codes: 0 success, 1 usage, 2 domain error, 3 I/O error.

Settings resolve as: built-in defaults < $CASIMIR_SANDBOX_PROFILE (profile
only) < JSON file given by --config < command-line flags.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from .core import (
    PlateConfig,
    casimir_energy,
    lifetime_lower_bound,
    mode_frequency,
)
from .planck import PlanckReport, PrefactorMode, planck_report
from .quantities import Constants, DomainError, Profile, make_constants
from .regimes import (
    MEASURABILITY_THRESHOLD_S,
    contraction_ratio_fast,
    contraction_ratio_slow,
    critical_wavenumber_n1,
    fluctuate,
    relative_contraction,
)
from .sweep import (
    SweepSpec,
    figure2_sweep,
    format_number,
    n_sweep,
    nsweep_to_csv,
    render_svg,
    write_csv,
    write_json,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3
ENV_PROFILE = "CASIMIR_SANDBOX_PROFILE"
FORMATS = ("human", "csv", "json")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    profile: Profile = Profile.CODATA
    prefactor_mode: PrefactorMode = PrefactorMode.EXACT
    measurability_threshold_s: float = MEASURABILITY_THRESHOLD_S
    output_format: str = "human"
    output_path: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "profile", Profile.parse(self.profile))
        object.__setattr__(self, "prefactor_mode", PrefactorMode.parse(self.prefactor_mode))
        if self.output_format not in FORMATS:
            raise UsageError(f"unknown output format {self.output_format!r}")
        t = float(self.measurability_threshold_s)
        if not (t > 0 and math.isfinite(t)):
            raise DomainError("measurability threshold must be positive")
        object.__setattr__(self, "measurability_threshold_s", t)


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-1e-6" through as a value so the domain check reports it
        self._negative_number_matcher = re.compile(r"^-(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?$")

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _number(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return value


def _count(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _global_options(parser: argparse.ArgumentParser) -> None:
    s = argparse.SUPPRESS
    parser.add_argument("--profile", choices=[p.value for p in Profile], default=s,
                        help="constants profile (default codata)")
    parser.add_argument("--prefactor", choices=[m.value for m in PrefactorMode], default=s,
                        help="Planck-limit prefactor mode (default exact)")
    parser.add_argument("--threshold-s", type=_number, default=s,
                        help="measurability threshold in seconds (default 1e-18)")
    parser.add_argument("--format", choices=FORMATS, default=s, dest="output_format")
    parser.add_argument("--output", default=s, dest="output_path",
                        help="write the report here instead of stdout")
    parser.add_argument("--config", default=s, help="JSON file with CliConfig fields")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common)
    parser = _Parser(prog="casimir-sandbox",
                     description="Casimir plates under a single-mode vacuum fluctuation.")
    _global_options(parser)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("energy", parents=[common], help="Casimir energy between the plates")
    p.add_argument("--L", type=_number, required=True, help="lateral extension (m)")
    p.add_argument("--d", type=_number, required=True, help="separation (m)")

    p = sub.add_parser("contract", parents=[common], help="outcome of one mode-n fluctuation")
    p.add_argument("--L", type=_number, required=True)
    p.add_argument("--d", type=_number, required=True)
    p.add_argument("--n", type=_number, required=True, help="mode index")
    p.add_argument("--n1", type=_number, default=None,
                   help="override the critical wavenumber used by the asymptotic formulas")

    p = sub.add_parser("planck", parents=[common], help="Planck-scale limit report")
    p.add_argument("--L", type=_number, required=True)
    p.add_argument("--d", type=_number, required=True)

    p = sub.add_parser("fig2", parents=[common], help="ratio d'/d against d/L for n = 1e1..1e8")
    p.add_argument("--out", required=True, help="CSV destination")
    p.add_argument("--svg", default=None, help="optional SVG destination")
    p.add_argument("--json", default=None, help="optional JSON destination")
    p.add_argument("--points-per-decade", type=_count, default=20)

    p = sub.add_parser("sweep", parents=[common], help="table over a log grid of n")
    p.add_argument("--L", type=_number, required=True)
    p.add_argument("--d", type=_number, required=True)
    p.add_argument("--n-min", type=_number, required=True)
    p.add_argument("--n-max", type=_number, required=True)
    p.add_argument("--per-decade", type=_count, default=1)
    return parser


def resolve_config(args: argparse.Namespace, environ=None) -> CliConfig:
    environ = os.environ if environ is None else environ
    fields: dict[str, Any] = {}
    if environ.get(ENV_PROFILE):
        fields["profile"] = environ[ENV_PROFILE]
    path = getattr(args, "config", None)
    if path:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise UsageError("config file must hold a JSON object")
        known = set(CliConfig.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        fields.update(data)
    for attr, key in (("profile", "profile"), ("prefactor", "prefactor_mode"),
                      ("threshold_s", "measurability_threshold_s"),
                      ("output_format", "output_format"), ("output_path", "output_path")):
        if hasattr(args, attr):
            fields[key] = getattr(args, attr)
    return CliConfig(**fields)


# -- formatting --------------------------------------------------------------

def _fmt(v: float) -> str:
    return f"{v:.6e}"


def _human(title: str, rows: Sequence[tuple[str, Any, str]]) -> str:
    width = max(len(name) for name, _, _ in rows)
    lines = [title]
    for name, value, unit in rows:
        if isinstance(value, float):
            value = _fmt(value)
        elif isinstance(value, bool):
            value = "yes" if value else "no"
        lines.append(f"  {name:<{width}} = {value}{' ' + unit if unit else ''}")
    return "\n".join(lines) + "\n"


def _csv(record: dict[str, Any]) -> str:
    def cell(v):
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, float):
            return format_number(v)
        return str(v)
    return ",".join(record) + "\n" + ",".join(cell(v) for v in record.values()) + "\n"


def _render(record: dict[str, Any], title: str, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    if fmt == "csv":
        return _csv(record)
    return _human(title, rows)


# -- commands ----------------------------------------------------------------

def cmd_energy(args, cfg: CliConfig, k: Constants) -> str:
    plates = PlateConfig(L=args.L, d=args.d)
    E = casimir_energy(plates, k)
    record = {"command": "energy", "profile": k.profile_name, "L_m": plates.L, "d_m": plates.d,
              "d_over_L": plates.d_over_L, "energy_J": E, "energy_over_EP": E / k.planck_energy,
              "casimir_valid": plates.casimir_valid}
    rows = [("L", plates.L, "m"), ("d", plates.d, "m"), ("d/L", plates.d_over_L, ""),
            ("E", E, "J"), ("E/E_P", E / k.planck_energy, ""),
            ("casimir-valid (d/L <= 1e-2)", plates.casimir_valid, "")]
    return _render(record, f"Casimir energy [{k.profile_name}]", rows, cfg.output_format)


def cmd_contract(args, cfg: CliConfig, k: Constants) -> str:
    plates = PlateConfig(L=args.L, d=args.d)
    out = fluctuate(args.n, plates, k, cfg.measurability_threshold_s)
    n_1_geom = critical_wavenumber_n1(plates, k)
    n_1 = n_1_geom if args.n1 is None else args.n1
    if not n_1 > 0:
        raise DomainError(f"n1 must be positive, got {n_1!r}")
    rel_slow = relative_contraction(out.n, n_1)
    fast = contraction_ratio_fast(out.n, n_1)
    photon = k.hbar * mode_frequency(out.n, plates.d, k)
    bound = lifetime_lower_bound(out.n, plates, k)
    record = {
        "command": "contract", "profile": k.profile_name, "L_m": plates.L, "d_m": plates.d,
        "n": out.n, "n_1": n_1_geom, "n_1_asymptotes": n_1, "load": out.n / n_1_geom,
        "dprime_over_d": out.ratio, "dprime_m": out.d_prime,
        "relative_contraction": out.relative_contraction,
        "relative_contraction_slow": rel_slow,
        "dprime_over_d_slow": contraction_ratio_slow(out.n, n_1),
        "dprime_over_d_fast": fast,
        "delta_E_J": out.delta_E, "photon_energy_J": photon,
        "delta_t_s": out.delta_t, "delta_t_over_tP": out.delta_t / k.planck_time,
        "delta_t_lower_bound_s": bound,
        "regime": out.regime, "measurable": out.measurable,
        "casimir_valid": plates.casimir_valid,
    }
    rows = [("n", out.n, ""), ("n_1", n_1_geom, ""), ("n/n_1", out.n / n_1_geom, "")]
    if args.n1 is not None:
        rows.append(("n_1 used by asymptotes", n_1, ""))
    rows += [
            ("d'/d (exact)", out.ratio, ""), ("d'", out.d_prime, "m"),
            ("(d'-d)/d (exact)", out.relative_contraction, ""),
            ("(d'-d)/d (slow asymptote)", rel_slow, ""),
            ("d'/d (fast asymptote)", fast, ""),
            ("dE", out.delta_E, "J"), ("hbar*omega_n", photon, "J"),
            ("dt", out.delta_t, "s"), ("dt/t_P", out.delta_t / k.planck_time, ""),
            ("dt lower bound 1/(2 omega_n)", bound, "s"),
            ("regime", out.regime, ""), ("measurability", out.measurable, ""),
            ("casimir-valid (d/L <= 1e-2)", plates.casimir_valid, "")]
    return _render(record, f"Fluctuation outcome [{k.profile_name}]", rows, cfg.output_format)


def _planck_record(r: PlanckReport) -> dict[str, Any]:
    return {
        "prefactor_mode": r.prefactor_mode.value,
        "n_P": r.n_P, "n_1": r.n_1,
        "d_min_m": r.d_min, "d_min_over_LP": r.d_min_over_LP,
        "t_min_s": r.t_min, "t_min_over_tP": r.t_min_over_tP,
        "delta_t_at_nP_s": r.delta_t_at_nP, "delta_t_at_nP_over_tP": r.delta_t_at_nP / r.planck_time,
        "delta_t_at_nP_chain_s": r.delta_t_at_nP_chain,
        "delta_t_at_nP_chain_over_tP": r.delta_t_at_nP_chain / r.planck_time,
        "E_min_J": r.E_min, "E_min_over_EP": r.E_min_over_EP,
        "E_at_planck_sep_J": r.E_at_planck_sep, "E_at_planck_sep_over_EP": r.E_at_planck_sep_over_EP,
        "holographic_length_m": r.holographic_length,
        "sub_planck": r.sub_planck, "initial_energy_significant": r.initial_energy_significant,
    }


def cmd_planck(args, cfg: CliConfig, k: Constants) -> str:
    plates = PlateConfig(L=args.L, d=args.d)
    modes = [cfg.prefactor_mode] + [m for m in PrefactorMode if m is not cfg.prefactor_mode]
    reports = [planck_report(plates, k, m) for m in modes]
    if plates.L < k.planck_length or any(r.sub_planck for r in reports):
        print("warning: L at or below the Planck scale; d_min < L_P and the limits are "
              "physically nonsensical", file=sys.stderr)
    if any(r.initial_energy_significant for r in reports):
        print("warning: |E(d)| > 1e-3 E_P; dropping the initial-gap energy is not justified",
              file=sys.stderr)
    record = {"command": "planck", "profile": k.profile_name, "L_m": plates.L, "d_m": plates.d,
              "planck_length_m": k.planck_length, "planck_time_s": k.planck_time,
              "planck_energy_J": k.planck_energy,
              "modes": {r.prefactor_mode.value: _planck_record(r) for r in reports}}
    fmt = cfg.output_format
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    if fmt == "csv":
        recs = [_planck_record(r) for r in reports]
        lines = [",".join(recs[0])]
        for rec in recs:
            lines.append(",".join(format_number(v) if isinstance(v, float) else str(v).lower()
                                  for v in rec.values()))
        return "\n".join(lines) + "\n"
    text = _human(f"Planck limits [{k.profile_name}]",
                  [("L", plates.L, "m"), ("d", plates.d, "m"), ("L_P", k.planck_length, "m"),
                   ("t_P", k.planck_time, "s"), ("E_P", k.planck_energy, "J")])
    for r in reports:
        text += _human(f"prefactor mode: {r.prefactor_mode.value}", [
            ("n_P", r.n_P, ""), ("n_1", r.n_1, ""),
            ("d_min", r.d_min, "m"), ("d_min/L_P", r.d_min_over_LP, ""),
            ("t_min", r.t_min, "s"), ("t_min/t_P", r.t_min_over_tP, ""),
            ("dt(n_P) exact", r.delta_t_at_nP, "s"),
            ("dt(n_P) exact / t_P", r.delta_t_at_nP / r.planck_time, ""),
            ("dt(n_P) chain", r.delta_t_at_nP_chain, "s"),
            ("dt(n_P) chain / t_P", r.delta_t_at_nP_chain / r.planck_time, ""),
            ("E_min", r.E_min, "J"), ("E_min/E_P", r.E_min_over_EP, ""),
            ("|E(d=L_P)|/E_P", r.E_at_planck_sep_over_EP, ""),
            ("holographic L_P^(2/3) L^(1/3)", r.holographic_length, "m"),
        ])
    return text


def cmd_fig2(args, cfg: CliConfig, k: Constants) -> str:
    spec = SweepSpec(points_per_decade=args.points_per_decade, profile=cfg.profile,
                     prefactor_mode=cfg.prefactor_mode)
    curves = figure2_sweep(spec)
    written = {"csv": (args.out, write_csv(curves, args.out))}
    if args.svg:
        written["svg"] = (args.svg, render_svg(curves, args.svg))
    if args.json:
        written["json"] = (args.json, write_json(curves, args.json))
    npts = len(curves[0].points)
    record = {"command": "fig2", "profile": k.profile_name, "curves": len(curves), "points": npts,
              "files": {kind: {"path": str(p), "bytes": b} for kind, (p, b) in written.items()}}
    if cfg.output_format == "json":
        return json.dumps(record, indent=2) + "\n"
    lines = [f"{len(curves)} curves x {npts} points"]
    lines += [f"wrote {kind}: {p} ({b} bytes)" for kind, (p, b) in written.items()]
    return "\n".join(lines) + "\n"


def cmd_sweep(args, cfg: CliConfig, k: Constants) -> str:
    plates = PlateConfig(L=args.L, d=args.d)
    rows = n_sweep(plates, args.n_min, args.n_max, args.per_decade, k,
                   cfg.measurability_threshold_s)
    if cfg.output_format == "json":
        return json.dumps([{"n": r.n, "dprime_over_d": r.ratio, "delta_E_J": r.delta_E,
                            "delta_t_s": r.delta_t, "regime": r.regime,
                            "measurable": r.measurable} for r in rows], indent=2) + "\n"
    return nsweep_to_csv(rows)


COMMANDS = {"energy": cmd_energy, "contract": cmd_contract, "planck": cmd_planck,
            "fig2": cmd_fig2, "sweep": cmd_sweep}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = resolve_config(args)
    except UsageError as exc:
        print(f"casimir-sandbox: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"casimir-sandbox: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (OSError, json.JSONDecodeError) as exc:
        print(f"casimir-sandbox: cannot read config: {exc}", file=sys.stderr)
        return EXIT_IO
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    k = make_constants(cfg.profile)
    try:
        text = COMMANDS[args.command](args, cfg, k)
    except DomainError as exc:
        print(f"casimir-sandbox: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"casimir-sandbox: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        if cfg.output_path:
            with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"casimir-sandbox: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
