"""Command-line interface: the coverage, sweep, sample, and count subcommands.

Exit codes: 0 on success, 2 for any input problem (flags, descriptor,
geometry), 3 when an output file cannot be written.
"""

import argparse
import math
import sys

from .errors import OutputError, SaginDomeError
from .geometry import half_power_beamwidth
from .io import (
    Descriptor,
    dumps,
    load_descriptor,
    parse_descriptor,
    points_to_csv,
    sweep_rows_to_csv,
    write_text_file,
)
from .pointprocess import generate
from .scenarios import Direction, Scenario, coverage, validate
from .sweeps import (
    SweepParameter,
    SweepScale,
    SweepSpec,
    expected_count,
    full_sphere_count,
    parameter_applicable,
    run_sweep,
)

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_OUTPUT_ERROR = 3

_FLAG_TO_KEY = {
    "scenario": "scenario",
    "carrier_frequency_hz": "carrier_frequency_hz",
    "illumination_coefficient": "illumination_coefficient",
    "reflector_diameter_m": "reflector_diameter_m",
    "min_elevation_deg": "min_elevation_deg",
    "air_altitude_km": "air_altitude_km",
    "space_altitude_km": "space_altitude_km",
}

# CLI units for each sweepable parameter; angles enter in degrees and are
# converted to the library's radians at this boundary.
_SWEEP_PARAM_UNITS = {
    SweepParameter.CARRIER_FREQUENCY: "Hz",
    SweepParameter.MIN_ELEVATION: "degrees",
    SweepParameter.AIR_ALTITUDE: "km",
    SweepParameter.SPACE_ALTITUDE: "km",
}


def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scenario", choices=sorted(s.value for s in Scenario))
    parser.add_argument("--carrier-frequency-hz", type=float)
    parser.add_argument("--illumination-coefficient", type=float)
    parser.add_argument("--reflector-diameter-m", type=float)
    parser.add_argument("--min-elevation-deg", type=float)
    parser.add_argument("--air-altitude-km", type=float)
    parser.add_argument("--space-altitude-km", type=float)


def _add_earth_radius_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--earth-radius-km", type=float,
        help="override the Earth radius (takes precedence over the "
             "SAGIN_EARTH_RADIUS_KM environment variable)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sagindome",
        description="Spherical-dome coverage geometry and seeded transmitter "
                    "sampling for cross-layer space-air-ground links.")
    sub = parser.add_subparsers(dest="command", required=True)

    cov = sub.add_parser("coverage",
                         help="resolve one scenario into its coverage dome (JSON)")
    cov.add_argument("--descriptor", help="scenario descriptor JSON file")
    _add_scenario_flags(cov)
    _add_earth_radius_flag(cov)
    cov.set_defaults(handler=_cmd_coverage)

    swp = sub.add_parser("sweep", help="sweep one parameter over a grid (CSV)")
    _add_scenario_flags(swp)
    _add_earth_radius_flag(swp)
    swp.add_argument("--param", required=True,
                     choices=sorted(p.value for p in SweepParameter))
    swp.add_argument("--from", dest="sweep_from", type=float, required=True,
                     metavar="LOW",
                     help="grid start (Hz, degrees, or km per --param)")
    swp.add_argument("--to", dest="sweep_to", type=float, required=True,
                     metavar="HIGH", help="grid end")
    swp.add_argument("--steps", type=int, required=True)
    swp.add_argument("--scale", choices=[s.value for s in SweepScale],
                     default=SweepScale.LINEAR.value)
    swp.add_argument("--output", help="CSV path (default: standard output)")
    swp.set_defaults(handler=_cmd_sweep)

    smp = sub.add_parser("sample",
                         help="generate a seeded transmitter topology (CSV + JSON summary)")
    smp.add_argument("--descriptor", required=True)
    smp.add_argument("--output", required=True, help="points CSV path")
    _add_earth_radius_flag(smp)
    smp.set_defaults(handler=_cmd_sample)

    cnt = sub.add_parser("count", help="expected-count arithmetic (JSON)")
    cnt.add_argument("--descriptor", required=True)
    _add_earth_radius_flag(cnt)
    cnt.set_defaults(handler=_cmd_count)
    return parser


def _flags_to_data(args: argparse.Namespace) -> dict:
    data = {}
    for attr, key in _FLAG_TO_KEY.items():
        value = getattr(args, attr)
        if value is not None:
            data[key] = value
    return data


def _descriptor_from_args(args: argparse.Namespace) -> Descriptor:
    flags = _flags_to_data(args)
    if getattr(args, "descriptor", None):
        if flags:
            raise SaginDomeError(
                "pass either --descriptor or inline scenario flags, not both")
        return load_descriptor(args.descriptor,
                               earth_radius_override=args.earth_radius_km)
    return parse_descriptor(flags, earth_radius_override=args.earth_radius_km)


def _cmd_coverage(args: argparse.Namespace) -> int:
    descriptor = _descriptor_from_args(args)
    spec = descriptor.spec
    dome = coverage(spec)
    payload = {
        "scenario": spec.scenario.value,
        "r_t_km": dome.transmitter_radius_km,
        "r_r_km": dome.receiver_radius_km,
    }
    if spec.scenario.direction is Direction.UPLINK:
        payload["beamwidth_rad"] = half_power_beamwidth(spec.antenna, spec.constants)
    payload.update({
        "vertex_angle_rad": dome.vertex_angle_rad,
        "delta": dome.delta,
        "area_km2": dome.area_km2,
        "tangent_limited": dome.tangent_limited,
        "validation_warnings": [
            {
                "parameter": violation.parameter,
                "value": violation.value,
                "permitted": [violation.low, violation.high],
                "severity": violation.severity,
            }
            for violation in validate(spec).violations
        ],
    })
    print(dumps(payload))
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    parameter = SweepParameter(args.param)
    flags = _flags_to_data(args)
    # The swept parameter's own flag may be omitted; seed the base spec with
    # the grid start so it validates.  Inapplicable parameters are left for
    # SweepSpec to reject with the right diagnostic.
    key = {
        SweepParameter.CARRIER_FREQUENCY: "carrier_frequency_hz",
        SweepParameter.MIN_ELEVATION: "min_elevation_deg",
        SweepParameter.AIR_ALTITUDE: "air_altitude_km",
        SweepParameter.SPACE_ALTITUDE: "space_altitude_km",
    }[parameter]
    if "scenario" in flags and parameter_applicable(parameter, Scenario(flags["scenario"])):
        flags.setdefault(key, args.sweep_from)
    descriptor = parse_descriptor(flags, earth_radius_override=args.earth_radius_km)
    low, high = args.sweep_from, args.sweep_to
    if parameter is SweepParameter.MIN_ELEVATION:
        low, high = math.radians(low), math.radians(high)
    sweep = SweepSpec(
        base=descriptor.spec,
        parameter=parameter,
        low=low,
        high=high,
        steps=args.steps,
        scale=SweepScale(args.scale),
    )
    text = sweep_rows_to_csv(run_sweep(sweep))
    if args.output:
        write_text_file(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_sample(args: argparse.Namespace) -> int:
    descriptor = load_descriptor(args.descriptor,
                                 earth_radius_override=args.earth_radius_km)
    config = descriptor.sample_config()
    dome = coverage(descriptor.spec)
    topology = generate(dome, config)
    write_text_file(args.output, points_to_csv(topology))
    print(dumps({
        "count": topology.count,
        "area_km2": dome.area_km2,
        "vertex_angle_rad": dome.vertex_angle_rad,
        "seed": config.seed,
        "rng_algorithm": config.rng_algorithm,
        "mode": config.mode.value,
    }))
    return EXIT_OK


def _cmd_count(args: argparse.Namespace) -> int:
    descriptor = load_descriptor(args.descriptor,
                                 earth_radius_override=args.earth_radius_km)
    if descriptor.density_per_km2 is None:
        raise SaginDomeError("descriptor is missing density_per_km2")
    dome = coverage(descriptor.spec)
    exact, mean = expected_count(dome, descriptor.density_per_km2)
    print(dumps({
        "exact_product": exact,
        "poisson_mean": mean,
        "full_sphere_count": full_sphere_count(dome.transmitter_radius_km,
                                               descriptor.density_per_km2),
    }))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except OutputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OUTPUT_ERROR
    except SaginDomeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
