"""Scenario descriptor files and text output formats.

Descriptors are flat JSON objects.  Angles cross this boundary in degrees
(keys suffixed ``_deg``) and are converted to radians exactly once, on load.
All real numbers are printed with 17 significant digits, so parsing the text
reproduces the underlying doubles bit for bit.
"""

import json
import math
import os
from dataclasses import dataclass

from .errors import DescriptorError, OutputError
from .geometry import DEFAULT_EARTH_RADIUS_KM, AntennaConfig, PhysicalConstants
from .pointprocess import DEFAULT_RNG_ALGORITHM, SampleConfig, SampleMode, Topology
from .scenarios import Direction, Layer, Scenario, ScenarioSpec
from .sweeps import SweepRow

ENV_EARTH_RADIUS = "SAGIN_EARTH_RADIUS_KM"

_ANTENNA_KEYS = ("carrier_frequency_hz", "illumination_coefficient",
                 "reflector_diameter_m")
_KNOWN_KEYS = frozenset({
    "scenario", *_ANTENNA_KEYS, "min_elevation_deg", "air_altitude_km",
    "space_altitude_km", "earth_radius_km", "density_per_km2",
    "rx_azimuth_deg", "rx_polar_deg", "seed", "mode",
})

SWEEP_CSV_HEADER = "param_value,vertex_angle_rad,area_km2,tangent_limited"
POINTS_CSV_HEADER = "x_km,y_km,z_km"


@dataclass(frozen=True)
class Descriptor:
    """A parsed descriptor: the scenario plus optional sampling fields."""

    spec: ScenarioSpec
    density_per_km2: float | None
    rx_azimuth_rad: float
    rx_polar_rad: float
    seed: int | None
    mode: SampleMode

    def sample_config(self) -> SampleConfig:
        if self.density_per_km2 is None:
            raise DescriptorError("descriptor is missing density_per_km2")
        if self.seed is None:
            raise DescriptorError("descriptor is missing seed")
        return SampleConfig(
            density_per_km2=self.density_per_km2,
            rx_azimuth_rad=self.rx_azimuth_rad,
            rx_polar_rad=self.rx_polar_rad,
            mode=self.mode,
            seed=self.seed,
            rng_algorithm=DEFAULT_RNG_ALGORITHM,
        )


def _reject_nonfinite(token: str) -> float:
    raise DescriptorError(f"non-finite JSON number {token!r} is not allowed")


def _real(data: dict, key: str) -> float:
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DescriptorError(f"{key} must be a number, got {value!r}")
    return float(value)


def _integer(data: dict, key: str) -> int:
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DescriptorError(f"{key} must be an integer, got {value!r}")
    return value


def _earth_radius_km(data: dict, override: float | None) -> float:
    if override is not None:
        return override
    if "earth_radius_km" in data:
        return _real(data, "earth_radius_km")
    env = os.environ.get(ENV_EARTH_RADIUS)
    if env is not None and env != "":
        try:
            return float(env)
        except ValueError:
            raise DescriptorError(
                f"{ENV_EARTH_RADIUS}={env!r} is not a number") from None
    return DEFAULT_EARTH_RADIUS_KM


def parse_descriptor(data: object, *,
                     earth_radius_override: float | None = None) -> Descriptor:
    """Validate a descriptor object and build the scenario it describes.

    Unknown keys and keys inapplicable to the scenario's direction or layers
    are rejected outright.
    """
    if not isinstance(data, dict):
        raise DescriptorError(f"descriptor must be a JSON object, got {type(data).__name__}")
    unknown = sorted(set(data) - _KNOWN_KEYS)
    if unknown:
        raise DescriptorError(f"unknown descriptor keys: {', '.join(unknown)}")
    if "scenario" not in data:
        raise DescriptorError("descriptor is missing the scenario key")
    raw_scenario = data["scenario"]
    try:
        scenario = Scenario(raw_scenario)
    except ValueError:
        raise DescriptorError(
            f"scenario must be one of {sorted(s.value for s in Scenario)}, "
            f"got {raw_scenario!r}") from None

    inapplicable = []
    if scenario.direction is Direction.UPLINK:
        inapplicable.append("min_elevation_deg")
        required = list(_ANTENNA_KEYS)
    else:
        inapplicable.extend(_ANTENNA_KEYS)
        required = ["min_elevation_deg"]
    if Layer.AIR in scenario.layers:
        required.append("air_altitude_km")
    else:
        inapplicable.append("air_altitude_km")
    if Layer.SPACE in scenario.layers:
        required.append("space_altitude_km")
    else:
        inapplicable.append("space_altitude_km")

    present_inapplicable = sorted(k for k in inapplicable if k in data)
    if present_inapplicable:
        raise DescriptorError(
            f"keys not applicable to scenario {scenario.value}: "
            f"{', '.join(present_inapplicable)}")
    missing = sorted(k for k in required if k not in data)
    if missing:
        raise DescriptorError(
            f"scenario {scenario.value} requires keys: {', '.join(missing)}")

    constants = PhysicalConstants(
        earth_radius_km=_earth_radius_km(data, earth_radius_override))
    antenna = None
    min_elevation_rad = None
    if scenario.direction is Direction.UPLINK:
        antenna = AntennaConfig(
            illumination_coefficient=_real(data, "illumination_coefficient"),
            reflector_diameter_m=_real(data, "reflector_diameter_m"),
            carrier_frequency_hz=_real(data, "carrier_frequency_hz"),
        )
    else:
        min_elevation_rad = math.radians(_real(data, "min_elevation_deg"))
    spec = ScenarioSpec(
        scenario=scenario,
        air_altitude_km=_real(data, "air_altitude_km")
        if "air_altitude_km" in data else None,
        space_altitude_km=_real(data, "space_altitude_km")
        if "space_altitude_km" in data else None,
        antenna=antenna,
        min_elevation_rad=min_elevation_rad,
        constants=constants,
    )

    mode_value = data.get("mode", SampleMode.AREA_UNIFORM.value)
    try:
        mode = SampleMode(mode_value)
    except ValueError:
        raise DescriptorError(
            f"mode must be one of {[m.value for m in SampleMode]}, "
            f"got {mode_value!r}") from None
    density = _real(data, "density_per_km2") if "density_per_km2" in data else None
    if density is not None and density < 0.0:
        raise DescriptorError(f"density_per_km2 must be >= 0, got {density!r}")
    return Descriptor(
        spec=spec,
        density_per_km2=density,
        rx_azimuth_rad=math.radians(_real(data, "rx_azimuth_deg"))
        if "rx_azimuth_deg" in data else 0.0,
        rx_polar_rad=math.radians(_real(data, "rx_polar_deg"))
        if "rx_polar_deg" in data else 0.0,
        seed=_integer(data, "seed") if "seed" in data else None,
        mode=mode,
    )


def load_descriptor(path: str, *,
                    earth_radius_override: float | None = None) -> Descriptor:
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle, parse_constant=_reject_nonfinite)
    except OSError as exc:
        raise DescriptorError(f"cannot read descriptor {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"descriptor {path} is not valid JSON: {exc}") from exc
    return parse_descriptor(data, earth_radius_override=earth_radius_override)


def format_real(value: float) -> str:
    """17 significant digits: enough to round-trip any double exactly."""
    return format(float(value), ".17g")


def dumps(payload: object, indent: int = 0) -> str:
    """Serialize to JSON with every real at 17 significant digits.

    The stdlib encoder prints floats via repr; this tiny writer exists only
    to pin the real-number format.
    """
    pad = "  " * indent
    if isinstance(payload, dict):
        if not payload:
            return "{}"
        items = ",\n".join(
            f'{pad}  {json.dumps(str(key))}: {dumps(value, indent + 1)}'
            for key, value in payload.items())
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(payload, (list, tuple)):
        if not payload:
            return "[]"
        items = ",\n".join(f"{pad}  {dumps(value, indent + 1)}" for value in payload)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(payload, bool):
        return "true" if payload else "false"
    if isinstance(payload, int):
        return str(payload)
    if isinstance(payload, float):
        return format_real(payload)
    if payload is None:
        return "null"
    return json.dumps(str(payload))


def sweep_rows_to_csv(rows: list[SweepRow]) -> str:
    """Sweep rows as CSV text (LF line endings, dot decimal separator).

    Failed grid points keep their parameter value and carry nan in the
    numeric columns so plotting pipelines skip them naturally.
    """
    lines = [SWEEP_CSV_HEADER]
    for row in rows:
        lines.append(",".join((
            format_real(row.parameter_value),
            format_real(row.vertex_angle_rad),
            format_real(row.area_km2),
            "true" if row.tangent_limited else "false",
        )))
    return "\n".join(lines) + "\n"


def points_to_csv(topology: Topology) -> str:
    """Topology points as CSV text, one x,y,z row per point."""
    lines = [POINTS_CSV_HEADER]
    for x, y, z in topology.points:
        lines.append(f"{format_real(x)},{format_real(y)},{format_real(z)}")
    return "\n".join(lines) + "\n"


def write_text_file(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc
