"""Command-line front end.

Four subcommands: ``verify`` runs a scenario's full check suite, ``sample``
sweeps a grid and writes every field entry to CSV, ``charge`` runs the
monopole pipeline and emits a JSON report, ``decompose`` prints the
generator coefficients of a Hermitian matrix read from a JSON file.

All numeric output is formatted at 17 significant digits; identical
invocations produce byte-identical files.  Exit codes: 0 success, 1 failed
verification, 2 usage errors, 3 when every sampled point tripped a guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .dark_states import GAUGE_NUMERIC, GAUGE_PAIR12, GAUGE_PAIR13, GAUGE_TRIPOD
from .errors import DegenerateCoupling, NearSingularity, NotHermitian, UnknownScenario
from .gauge_fields import (
    CONNECTION_STEP_FACTOR,
    FIELD_STEP_FACTOR,
    magnetic_field,
    scalar_potential_numeric,
)
from .scenarios import (
    SCENARIO_IDS,
    ScenarioBundle,
    charge_report,
    make_scenario,
    verify_scenario,
)
from .su3 import decompose_hermitian

__all__ = ["execute", "main"]

_GAUGE_CHOICES = (GAUGE_TRIPOD, GAUGE_PAIR12, GAUGE_PAIR13, GAUGE_NUMERIC)
_CONFIG_KEYS = ("hbar", "mass", "k", "omega0", "radius", "big_theta", "k3_axis", "kr_sign")
_SINGLE_POINT = (1.0, 0.75, 0.5)


class _UsageError(Exception):
    pass


def _fmt(v: float) -> str:
    return f"{float(v):.17g}"


def _matrix_json(m: np.ndarray) -> list:
    m = np.asarray(m, dtype=complex)
    return [[[_fmt(z.real), _fmt(z.imag)] for z in row] for row in m]


def _load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _UsageError(f"cannot read config {path!r}: {exc}") from exc
    if not isinstance(raw, dict):
        raise _UsageError("config file must hold a JSON object")
    out = {}
    for key, value in raw.items():
        if key == "scenario":
            out["scenario"] = str(value)
        elif key == "k3_axis":
            out[key] = str(value)
        elif key == "kr_sign":
            out[key] = int(value)
        elif key in _CONFIG_KEYS:
            out[key] = float(value)
        else:
            raise _UsageError(f"unknown config key {key!r}")
    return out


def _build_scenario(args) -> ScenarioBundle:
    config = _load_config(getattr(args, "config", None))
    scenario_id = getattr(args, "scenario", None) or config.pop("scenario", None)
    if scenario_id is None:
        raise _UsageError("no scenario given on the command line or in the config")
    config.pop("scenario", None)
    try:
        return make_scenario(scenario_id, **config)
    except (UnknownScenario, ValueError) as exc:
        raise _UsageError(str(exc)) from exc


# ---------------------------------------------------------------------------
# verify


def _report_json(report) -> dict:
    return {
        "scenario": report.scenario,
        "passed": report.passed,
        "checks": [
            {
                "name": c.name,
                "claim": c.claim,
                "residual": _fmt(c.residual),
                "tolerance": _fmt(c.tolerance),
                "passed": c.passed,
            }
            for c in report.checks
        ],
        "environment": dict(report.environment),
    }


def _cmd_verify(args) -> int:
    bundle = _build_scenario(args)
    report = verify_scenario(bundle)
    width = max(len(c.name) for c in report.checks)
    for c in report.checks:
        tag = "PASS" if c.passed else "FAIL"
        print(f"[{tag}] {c.name:<{width}}  {_fmt(c.residual)} <= {_fmt(c.tolerance)}  {c.claim}")
    verdict = "PASSED" if report.passed else "FAILED"
    print(f"{verdict} {report.scenario}: {sum(c.passed for c in report.checks)}"
          f"/{len(report.checks)} checks")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(_report_json(report), fh, indent=2)
            fh.write("\n")
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# sample


def _parse_grid(spec: str) -> list[tuple[float, float, float]]:
    if spec == "single-point":
        return [_SINGLE_POINT]
    fields = {}
    for part in spec.split(","):
        if "=" not in part:
            raise _UsageError(f"malformed grid fragment {part!r}")
        key, _, value = part.partition("=")
        fields[key.strip()] = value.strip()
    if set(fields) == {"x", "y", "z"}:
        axes = []
        for key in ("x", "y", "z"):
            bits = fields[key].split(":")
            if len(bits) != 3:
                raise _UsageError(f"axis {key!r} wants min:max:count")
            try:
                lo, hi, count = float(bits[0]), float(bits[1]), int(bits[2])
            except ValueError as exc:
                raise _UsageError(f"axis {key!r}: {exc}") from exc
            if count < 1 or hi < lo:
                raise _UsageError(f"axis {key!r} wants count >= 1 and max >= min")
            axes.append(np.linspace(lo, hi, count))
        return [
            (float(x), float(y), float(z))
            for x in axes[0]
            for y in axes[1]
            for z in axes[2]
        ]
    if set(fields) == {"r", "theta", "phi"}:
        try:
            radius = float(fields["r"])
            n_theta, n_phi = int(fields["theta"]), int(fields["phi"])
        except ValueError as exc:
            raise _UsageError(f"spherical grid: {exc}") from exc
        if radius <= 0 or n_theta < 1 or n_phi < 1:
            raise _UsageError("spherical grid wants r > 0 and counts >= 1")
        thetas = np.pi * (np.arange(n_theta) + 0.5) / n_theta
        phis = 2.0 * np.pi * np.arange(n_phi) / n_phi
        return [
            (
                float(radius * np.sin(th) * np.cos(ph)),
                float(radius * np.sin(th) * np.sin(ph)),
                float(radius * np.cos(th)),
            )
            for th in thetas
            for ph in phis
        ]
    raise _UsageError(
        "grid must be 'single-point', 'x=lo:hi:n,y=...,z=...' or 'r=R,theta=N,phi=M'"
    )


def _field_columns(field: str, dim: int) -> list[str]:
    cols = []
    for i in range(1, dim + 1):
        for j in range(1, dim + 1):
            if field == "Phi":
                cols += [f"re_Phi_{i}{j}", f"im_Phi_{i}{j}"]
            else:
                for c in "xyz":
                    cols += [f"re_{field}_{i}{j}_{c}", f"im_{field}_{i}{j}_{c}"]
    return cols


def _field_sampler(bundle, field: str, gauge: str | None):
    connection = bundle.connection_sampler(gauge)
    if field == "A":
        return connection
    if field == "B":
        def b_sampler(p):
            h = FIELD_STEP_FACTOR * bundle.step_length(p)
            return magnetic_field(connection, p, h, bundle.hbar).values

        return b_sampler
    frame = bundle.frame_sampler(gauge)

    def phi_sampler(p):
        h = CONNECTION_STEP_FACTOR * bundle.step_length(p)
        return scalar_potential_numeric(frame, p, h, bundle.hbar, bundle.mass).values

    return phi_sampler


def _flatten(field: str, values: np.ndarray) -> list[str]:
    out = []
    if field == "Phi":
        for row in values:
            for z in row:
                out += [_fmt(z.real), _fmt(z.imag)]
        return out
    dim = values.shape[1]
    for i in range(dim):
        for j in range(dim):
            for ax in range(3):
                z = values[ax, i, j]
                out += [_fmt(z.real), _fmt(z.imag)]
    return out


def _cmd_sample(args) -> int:
    bundle = _build_scenario(args)
    points = _parse_grid(args.grid)
    gauge = args.gauge
    # probe point clear of every scenario's guards, used only to size columns
    dim = bundle.frame(_SINGLE_POINT).dimension
    sampler = _field_sampler(bundle, args.field, gauge)
    columns = _field_columns(args.field, dim)
    n_values = len(columns)

    def eval_point(p):
        try:
            return _flatten(args.field, sampler(p)), ""
        except NearSingularity:
            return [""] * n_values, "near-singularity"
        except DegenerateCoupling:
            return [""] * n_values, "degenerate-coupling"

    with ThreadPoolExecutor() as pool:
        rows = list(pool.map(eval_point, points))

    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(",".join(["x", "y", "z", *columns, "error"]) + "\n")
        for p, (cells, error) in zip(points, rows):
            coords = [_fmt(v) for v in p]
            fh.write(",".join([*coords, *cells, error]) + "\n")

    if all(error for _, error in rows):
        print("every grid point tripped a guard", file=sys.stderr)
        return 3
    return 0


# ---------------------------------------------------------------------------
# charge


def _charge_json(bundle, report, gauge: str, transformed: bool) -> dict:
    coeffs = report.coefficients
    return {
        "scenario": bundle.id,
        "radius": _fmt(report.radius),
        "gauge": gauge,
        "transformed": transformed,
        "charge": _matrix_json(report.charge),
        "convergence": _fmt(report.convergence),
        "pattern_charge": None if report.pattern_charge is None else _fmt(report.pattern_charge),
        "pattern_residual": (
            None if report.pattern_residual is None else _fmt(report.pattern_residual)
        ),
        "coefficients": {
            "c0": _fmt(coeffs.c0),
            "c": [_fmt(v) for v in coeffs.c],
        },
        "surface_charge": (
            None if report.surface_charge is None else _matrix_json(report.surface_charge)
        ),
        "surface_source": report.surface_source,
        "string": {
            "north_flux": _matrix_json(report.string.north_flux),
            "south_flux": _matrix_json(report.string.south_flux),
            "holonomy_defect": _fmt(report.string.holonomy_defect),
            "undetectable": report.string.undetectable,
        },
    }


def _cmd_charge(args) -> int:
    bundle = _build_scenario(args)
    if args.transformed and bundle.unitary_fn is None:
        raise _UsageError(f"scenario {bundle.id!r} bundles no gauge transform")
    gauge = args.gauge or bundle.default_gauge
    try:
        report, _ = charge_report(
            bundle, radius=args.radius, gauge=args.gauge, transformed=args.transformed
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    document = _charge_json(bundle, report, gauge, args.transformed)
    text = json.dumps(document, indent=2) + "\n"
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# decompose


def _parse_matrix(path: str) -> np.ndarray:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _UsageError(f"cannot read matrix {path!r}: {exc}") from exc
    if isinstance(raw, dict):
        raw = raw.get("matrix")
    try:
        rows = [
            [complex(z[0], z[1]) if isinstance(z, (list, tuple)) else complex(z) for z in row]
            for row in raw
        ]
        m = np.array(rows, dtype=complex)
    except (TypeError, IndexError, ValueError) as exc:
        raise _UsageError(f"malformed matrix file: {exc}") from exc
    if m.shape != (3, 3):
        raise _UsageError("matrix must be 3x3; entries are numbers or [re, im] pairs")
    return m


def _cmd_decompose(args) -> int:
    m = _parse_matrix(args.matrix)
    try:
        coeffs = decompose_hermitian(m)
    except NotHermitian as exc:
        raise _UsageError(str(exc)) from exc
    print(f"c0 = {_fmt(coeffs.c0)}")
    for idx, value in enumerate(coeffs.c, start=1):
        print(f"c{idx} = {_fmt(value)}")
    return 0


# ---------------------------------------------------------------------------
# wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="darkgauge",
        description="Artificial gauge fields of laser-dressed dark states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_scenario_args(p, positional_required=False):
        p.add_argument(
            "scenario",
            nargs=None if positional_required else "?",
            choices=SCENARIO_IDS,
            help="preset scenario id",
        )
        p.add_argument("--config", help="JSON file with physical parameters")

    p_verify = sub.add_parser("verify", help="run a scenario's full check suite")
    add_scenario_args(p_verify)
    p_verify.add_argument("--json", help="write the report as JSON to this path")

    p_sample = sub.add_parser("sample", help="sweep a grid and write fields to CSV")
    add_scenario_args(p_sample)
    p_sample.add_argument("--grid", required=True, help="single-point | x=.. | r=..")
    p_sample.add_argument("--field", required=True, choices=("A", "B", "Phi"))
    p_sample.add_argument("--out", required=True, help="CSV output path")
    p_sample.add_argument("--gauge", choices=_GAUGE_CHOICES, help="gauge fixing")

    p_charge = sub.add_parser("charge", help="monopole charge report as JSON")
    add_scenario_args(p_charge)
    p_charge.add_argument("--radius", type=float, default=1.0)
    p_charge.add_argument("--transformed", action="store_true")
    p_charge.add_argument("--json", help="write the report to this path")
    p_charge.add_argument("--gauge", choices=_GAUGE_CHOICES, help="gauge fixing")

    p_dec = sub.add_parser("decompose", help="generator coefficients of a matrix")
    p_dec.add_argument("--matrix", required=True, help="JSON file holding the matrix")

    return parser


def execute(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "verify": _cmd_verify,
        "sample": _cmd_sample,
        "charge": _cmd_charge,
        "decompose": _cmd_decompose,
    }
    try:
        return handlers[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotHermitian as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(execute(sys.argv[1:]))
