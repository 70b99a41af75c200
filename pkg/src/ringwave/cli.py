"""Command-line front end.

Examples:
    ringwave constants
    ringwave photon --format json
    ringwave semiphoton --zeta 0.8 --thomas
    ringwave invariants --beta-grid=-0.99,-0.5,0,0.5,0.99
    ringwave fields --kind semiplus --samples 512 --out fields.csv
    ringwave consistency --panels 128
    ringwave dispersion

Exit codes: 0 success, 1 a physics check failed, 2 usage error,
3 could not write --out.  Output is byte-deterministic for a fixed
invocation: human tables carry 6 significant digits, CSV 17, JSON
full-precision floats.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys

from .constants import PhysicalConstants, codata_constants, electron_scales
from .errors import RingwaveError
from .fields import (
    KIND_PHOTON,
    KIND_SEMI_MINUS,
    KIND_SEMI_PLUS,
    displacement_current,
    sample_grid,
    twirled_field,
)
from .geometry import TorusShape, frenet_at, ring_from_radius
from .lorentz import WavePacket, boost_packet
from .model import (
    dispersion_omega,
    invariant_constants,
    magnetic_moment,
    pair_threshold_photon,
    semi_photon_model,
    uncertainty_min_length,
)
from .quadrature import (
    RULE_GAUSS5,
    RULE_MIDPOINT,
    QuadratureSpec,
    total_charge,
    total_mass,
)
from .renorm import vacuum_polarization

INVARIANT_THRESHOLD = 1e-9
DEFAULT_BETA_GRID = (-0.99, -0.9, -0.5, -0.1, 0.0, 0.1, 0.5, 0.9, 0.99)

_KIND_MAP = {
    "photon": KIND_PHOTON,
    "semiplus": KIND_SEMI_PLUS,
    "semiminus": KIND_SEMI_MINUS,
}


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Validated invocation parameters."""

    command: str
    zeta: float = 1.0
    format: str = "table"
    out: str | None = None
    quadrature: QuadratureSpec = QuadratureSpec()
    thomas: bool = False
    kind: str = "photon"
    samples: int = 256
    beta_grid: tuple[float, ...] = DEFAULT_BETA_GRID
    amplitude: float | None = None
    k_wave: float | None = None


def _g6(v: float) -> str:
    return f"{float(v):.6g}"


def _g17(v: float) -> str:
    return f"{float(v) + 0.0:.17g}"  # + 0.0 folds -0.0 into 0


def _table(rows: list[tuple[str, str, str]]) -> str:
    width = max(len(name) for name, _, _ in rows)
    vwidth = max(len(value) for _, value, _ in rows)
    lines = [
        f"{name:<{width}}  {value:>{vwidth}}  {unit}".rstrip()
        for name, value, unit in rows
    ]
    return "\n".join(lines) + "\n"


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _zeta_arg(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 < v <= 1.0:
        raise argparse.ArgumentTypeError("must be in (0, 1]")
    return v


def _samples_arg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 2:
        raise argparse.ArgumentTypeError("need at least 2 samples")
    return v


def _panels_arg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("panel count must be >= 1")
    return v


def _amplitude_arg(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if v <= 0.0:
        raise argparse.ArgumentTypeError("amplitude must be positive")
    return v


def _beta_grid_arg(text: str) -> tuple[float, ...]:
    try:
        betas = tuple(float(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}")
    if not betas:
        raise argparse.ArgumentTypeError("beta grid must not be empty")
    for b in betas:
        if abs(b) >= 1.0:
            raise argparse.ArgumentTypeError(f"|beta| must be below 1, got {b}")
    return betas


def parse_args(argv: list[str] | None = None) -> RunConfig:
    """Parse and validate the command line into a RunConfig."""
    parser = argparse.ArgumentParser(
        prog="ringwave",
        description="Ring-wave model of the photon and the electron-positron pair",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write output to this path instead of stdout")

    add_common(sub.add_parser("constants", help="universal constants table"),
               ("table", "json"))
    add_common(sub.add_parser("photon", help="pair-threshold photon record"),
               ("table", "json"))

    p_semi = sub.add_parser("semiphoton", help="semi-photon record and renormalization")
    p_semi.add_argument("--zeta", type=_zeta_arg, default=1.0,
                        help="torus thinness ratio in (0, 1], default 1")
    p_semi.add_argument("--thomas", action="store_true",
                        help="apply the Thomas-precession factor 2 to mu_s")
    add_common(p_semi, ("table", "json"))

    p_inv = sub.add_parser("invariants", help="Lorentz-boost invariance sweep")
    p_inv.add_argument("--beta-grid", type=_beta_grid_arg,
                       default=DEFAULT_BETA_GRID, metavar="B1,B2,...",
                       help="comma-separated boost speeds, each |beta| < 1")
    add_common(p_inv, ("table", "json"))

    p_fields = sub.add_parser("fields", help="sample E, H, and currents to CSV")
    p_fields.add_argument("--kind", choices=sorted(_KIND_MAP), default="photon")
    p_fields.add_argument("--samples", type=_samples_arg, default=256)
    p_fields.add_argument("--amplitude", type=_amplitude_arg, default=None,
                          help="field amplitude in statV/cm; default is the"
                               " zeta=1 semi-photon amplitude")
    p_fields.add_argument("--out", help="write CSV to this path instead of stdout")

    p_cons = sub.add_parser("consistency",
                            help="integrated charge/mass vs stated closed forms")
    p_cons.add_argument("--panels", type=_panels_arg, default=64)
    p_cons.add_argument("--rule", choices=(RULE_GAUSS5, RULE_MIDPOINT),
                        default=RULE_GAUSS5)
    p_cons.add_argument("--toroidal-jacobian", action="store_true",
                        help="integrate the exact torus volume element")
    add_common(p_cons, ("table", "json"))

    add_common(sub.add_parser("dispersion", help="dispersion relation and "
                              "uncertainty bound"), ("table", "json"))

    ns = parser.parse_args(argv)
    return RunConfig(
        command=ns.command,
        zeta=getattr(ns, "zeta", 1.0),
        format=getattr(ns, "format", "table"),
        out=getattr(ns, "out", None),
        quadrature=QuadratureSpec(
            panels=getattr(ns, "panels", 64),
            rule=getattr(ns, "rule", RULE_GAUSS5),
            include_toroidal_jacobian=getattr(ns, "toroidal_jacobian", False),
        ),
        thomas=getattr(ns, "thomas", False),
        kind=getattr(ns, "kind", "photon"),
        samples=getattr(ns, "samples", 256),
        beta_grid=tuple(getattr(ns, "beta_grid", DEFAULT_BETA_GRID)),
        amplitude=getattr(ns, "amplitude", None),
    )


def _constants_data(k: PhysicalConstants) -> list[tuple[str, float, str]]:
    scales = electron_scales(k)
    return [
        ("c", k.c, "cm/s"),
        ("hbar", k.hbar, "erg*s"),
        ("h", k.h, "erg*s"),
        ("e", k.e, "statC"),
        ("m_e", k.m_e, "g"),
        ("alpha_exp", k.alpha_exp, ""),
        ("r_0", scales.r_0, "cm"),
        ("lambda_bar_c", scales.lambda_bar_c, "cm"),
        ("r_c", scales.r_c, "cm"),
    ]


def _cmd_constants(config: RunConfig, k: PhysicalConstants) -> tuple[str, int]:
    data = _constants_data(k)
    if config.format == "json":
        return _json_text({name: value for name, value, _ in data}), 0
    return _table([(name, _g6(value), unit) for name, value, unit in data]), 0


_PHOTON_UNITS = {
    "energy": "erg", "momentum": "g*cm/s", "omega_p": "rad/s",
    "lambda_p": "cm", "r_p": "cm", "s_p": "cm^2", "volume": "cm^3",
    "spin": "erg*s", "mass_equivalent": "g", "n": "", "nu": "1/s",
}

_SEMI_UNITS = {
    "zeta": "", "e_o": "statV/cm", "r_s": "cm", "omega_s": "rad/s",
    "q_s": "statC", "m_s": "g", "alpha_s": "", "sigma_s": "erg*s",
    "mu_s": "erg/G", "sign": "",
}

_RENORM_UNITS = {
    "eps_v": "", "alpha_bare": "", "alpha_exp": "", "q_bare": "statC",
    "q_exp": "statC", "r_bare": "cm", "r_0": "cm",
}


def _cmd_photon(config: RunConfig, k: PhysicalConstants) -> tuple[str, int]:
    record = dataclasses.asdict(pair_threshold_photon(k))
    if config.format == "json":
        return _json_text(record), 0
    rows = [(name, _g6(value), _PHOTON_UNITS[name]) for name, value in record.items()]
    return _table(rows), 0


def _cmd_semiphoton(config: RunConfig, k: PhysicalConstants) -> tuple[str, int]:
    model = semi_photon_model(config.zeta, k)
    record = dataclasses.asdict(model)
    record["mu_s"] = magnetic_moment(
        model.q_s, model.r_s, model.omega_s, k.c, thomas=config.thomas
    )
    vp = None
    if model.alpha_s > k.alpha_exp:
        vp = vacuum_polarization(model.alpha_s, k)

    if config.format == "json":
        return _json_text({
            "model": record,
            "thomas": config.thomas,
            "renormalization": dataclasses.asdict(vp) if vp is not None else None,
        }), 0

    rows = [("[model]", "", "")]
    for name, value in record.items():
        text = value if isinstance(value, str) else _g6(value)
        rows.append((name, text, _SEMI_UNITS[name]))
    rows.append(("thomas", "on" if config.thomas else "off", ""))
    if vp is not None:
        rows.append(("[renormalization]", "", ""))
        for name, value in dataclasses.asdict(vp).items():
            rows.append((name, _g6(value), _RENORM_UNITS[name]))
        rows.append(("q_bare/e", _g6(vp.q_bare / k.e), ""))
    else:
        rows.append(("[renormalization]", "skipped", ""))
        rows.append(("reason", "alpha_s <= alpha_exp", ""))
    return _table(rows), 0


def _threshold_packet(k: PhysicalConstants) -> WavePacket:
    photon = pair_threshold_photon(k)
    amp = semi_photon_model(1.0, k).e_o
    return WavePacket(
        e_o=amp,
        omega=photon.omega_p,
        energy=photon.energy,
        volume=photon.volume,
        direction=(1.0, 0.0, 0.0),
    )


def _cmd_invariants(config: RunConfig, k: PhysicalConstants) -> tuple[str, int]:
    packet = _threshold_packet(k)
    frames = []
    max_dev = 0.0
    for beta in config.beta_grid:
        report = boost_packet(packet, beta, packet.direction)
        prim = report.primed
        ic = invariant_constants(prim.e_o, prim.omega, prim.energy, prim.volume)
        frames.append({
            "beta": beta,
            "omega": prim.omega,
            "e_o": prim.e_o,
            "energy": prim.energy,
            "volume": prim.volume,
            "c1": ic.c1,
            "c2": ic.c2,
            "c3": ic.c3,
        })
        max_dev = max(max_dev, report.ratio_deviations)
    ok = max_dev <= INVARIANT_THRESHOLD

    if config.format == "json":
        return _json_text({
            "frames": frames,
            "max_deviation": max_dev,
            "threshold": INVARIANT_THRESHOLD,
            "pass": ok,
        }), 0 if ok else 1

    names = ("beta", "omega", "e_o", "energy", "volume", "c1", "c2", "c3")
    header = "  ".join(f"{name:>13}" for name in names)
    lines = [header]
    for frame in frames:
        lines.append("  ".join(f"{_g6(frame[name]):>13}" for name in names))
    lines.append(f"max deviation: {_g6(max_dev)} (threshold {INVARIANT_THRESHOLD:g})")
    lines.append("PASS" if ok else "FAIL")
    return "\n".join(lines) + "\n", 0 if ok else 1


def _cmd_fields(config: RunConfig, k: PhysicalConstants) -> tuple[str, int]:
    photon = pair_threshold_photon(k)
    ring = ring_from_radius(photon.r_p, k.c)
    amp = config.amplitude
    if amp is None:
        amp = semi_photon_model(1.0, k).e_o
    cfg = twirled_field(_KIND_MAP[config.kind], amp, ring)
    lines = ["l,x,y,z,Ex,Ey,Ez,Hx,Hy,Hz,jn,jtau"]
    for sample in sample_grid(cfg, config.samples):
        dec = displacement_current(cfg, sample.l)
        pos = frenet_at(ring, sample.l).position
        values = [sample.l, *pos, *sample.E, *sample.H,
                  dec.j_n_scalar, dec.j_tau_scalar]
        lines.append(",".join(_g17(v) for v in values))
    return "\n".join(lines) + "\n", 0


def _cmd_consistency(config: RunConfig, k: PhysicalConstants) -> tuple[str, int]:
    model = semi_photon_model(config.zeta, k)
    ring = ring_from_radius(model.r_s, k.c)
    shape = TorusShape(r_s=model.r_s, r_c=config.zeta * model.r_s)
    spec = config.quadrature
    photon_cfg = twirled_field(KIND_PHOTON, model.e_o, ring)
    semi_cfg = twirled_field(KIND_SEMI_PLUS, model.e_o, ring)
    reports = {
        "photon_charge": total_charge(photon_cfg, shape, spec),
        "semi_photon_charge": total_charge(semi_cfg, shape, spec),
        "semi_photon_mass": total_mass(semi_cfg, shape, spec),
    }

    if config.format == "json":
        return _json_text({name: dataclasses.asdict(r) for name, r in reports.items()}), 0

    header = (f"{'quantity':<20}  {'integrated':>13}  {'closed form':>13}  "
              f"{'factor':>7}")
    lines = [header]
    for name, report in reports.items():
        factor = ("n/a" if report.discrepancy_factor is None
                  else _g6(report.discrepancy_factor))
        lines.append(f"{name:<20}  {_g6(report.value):>13}  "
                     f"{_g6(report.closed_form):>13}  {factor:>7}")
    return "\n".join(lines) + "\n", 0


def _cmd_dispersion(config: RunConfig, k: PhysicalConstants) -> tuple[str, int]:
    photon = pair_threshold_photon(k)
    k_ref = 1.0 / photon.r_p
    lam_planck, lam_alpha = uncertainty_min_length(photon.energy, k)
    data = [
        ("omega_at_k0_m_e", dispersion_omega(0.0, k.m_e, k), "rad/s"),
        ("m_e_c2_over_hbar", k.m_e * k.c * k.c / k.hbar, "rad/s"),
        ("omega_massless_at_k_ref", dispersion_omega(k_ref, 0.0, k), "rad/s"),
        ("c_times_k_ref", k.c * k_ref, "rad/s"),
        ("k_ref", k_ref, "1/cm"),
        ("lambda_min_planck_form", lam_planck, "cm"),
        ("lambda_min_alpha_form", lam_alpha, "cm"),
        ("lambda_p", photon.lambda_p, "cm"),
    ]
    if config.format == "json":
        return _json_text({name: value for name, value, _ in data}), 0
    return _table([(name, _g6(value), unit) for name, value, unit in data]), 0


_COMMANDS = {
    "constants": _cmd_constants,
    "photon": _cmd_photon,
    "semiphoton": _cmd_semiphoton,
    "invariants": _cmd_invariants,
    "fields": _cmd_fields,
    "consistency": _cmd_consistency,
    "dispersion": _cmd_dispersion,
}


def run(config: RunConfig) -> int:
    """Execute a validated config; returns the process exit code."""
    k = codata_constants()
    try:
        text, code = _COMMANDS[config.command](config, k)
    except RingwaveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if config.out is not None:
        try:
            with open(config.out, "w", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {config.out}: {exc}", file=sys.stderr)
            return 3
    else:
        sys.stdout.write(text)
    return code


def main(argv: list[str] | None = None) -> int:
    return run(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
