"""Parameter sweeps over scenario geometry and expected-count arithmetic."""

import dataclasses
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidParameterError, SaginDomeError
from .geometry import DomeGeometry
from .scenarios import Direction, Layer, ScenarioSpec, coverage


class SweepParameter(Enum):
    CARRIER_FREQUENCY = "carrier_frequency"
    MIN_ELEVATION = "min_elevation"
    AIR_ALTITUDE = "air_altitude"
    SPACE_ALTITUDE = "space_altitude"


class SweepScale(Enum):
    LINEAR = "linear"
    LOGARITHMIC = "log"


@dataclass(frozen=True)
class SweepSpec:
    """One swept parameter over a fixed base scenario.

    ``low`` and ``high`` are in the parameter's library unit: Hz for the
    carrier frequency, radians for the elevation angle, km for altitudes.
    """

    base: ScenarioSpec
    parameter: SweepParameter
    low: float
    high: float
    steps: int
    scale: SweepScale = SweepScale.LINEAR

    def __post_init__(self) -> None:
        if not isinstance(self.parameter, SweepParameter):
            raise InvalidParameterError(
                f"parameter must be a SweepParameter, got {self.parameter!r}")
        if not isinstance(self.scale, SweepScale):
            raise InvalidParameterError(f"scale must be a SweepScale, got {self.scale!r}")
        if not self.low < self.high:
            raise InvalidParameterError(
                f"sweep range requires low < high, got low={self.low!r} high={self.high!r}")
        if self.steps < 2:
            raise InvalidParameterError(f"steps must be >= 2, got {self.steps!r}")
        if self.scale is SweepScale.LOGARITHMIC and self.low <= 0.0:
            raise InvalidParameterError("logarithmic sweeps require low > 0")
        self._check_applicable()

    def _check_applicable(self) -> None:
        if not parameter_applicable(self.parameter, self.base.scenario):
            raise InvalidParameterError(
                f"parameter {self.parameter.value} is inapplicable to "
                f"scenario {self.base.scenario.value}")


def parameter_applicable(parameter: SweepParameter, scenario) -> bool:
    """Whether a sweep parameter exists at all for the given scenario."""
    if parameter is SweepParameter.CARRIER_FREQUENCY:
        return scenario.direction is Direction.UPLINK
    if parameter is SweepParameter.MIN_ELEVATION:
        return scenario.direction is Direction.DOWNLINK
    if parameter is SweepParameter.AIR_ALTITUDE:
        return Layer.AIR in scenario.layers
    return Layer.SPACE in scenario.layers


@dataclass(frozen=True)
class SweepRow:
    """One grid point; ``error`` carries the failure message for points that
    could not be evaluated instead of aborting the sweep."""

    parameter_value: float
    vertex_angle_rad: float
    area_km2: float
    tangent_limited: bool
    error: str | None = None


def sweep_grid(spec: SweepSpec) -> np.ndarray:
    if spec.scale is SweepScale.LOGARITHMIC:
        return np.geomspace(spec.low, spec.high, spec.steps)
    return np.linspace(spec.low, spec.high, spec.steps)


def _with_parameter(base: ScenarioSpec, parameter: SweepParameter,
                    value: float) -> ScenarioSpec:
    if parameter is SweepParameter.CARRIER_FREQUENCY:
        antenna = dataclasses.replace(base.antenna, carrier_frequency_hz=value)
        return dataclasses.replace(base, antenna=antenna)
    if parameter is SweepParameter.MIN_ELEVATION:
        return dataclasses.replace(base, min_elevation_rad=value)
    if parameter is SweepParameter.AIR_ALTITUDE:
        return dataclasses.replace(base, air_altitude_km=value)
    return dataclasses.replace(base, space_altitude_km=value)


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate coverage at each grid point, in grid order."""
    rows: list[SweepRow] = []
    for value in sweep_grid(spec):
        value = float(value)
        try:
            dome: DomeGeometry = coverage(_with_parameter(spec.base, spec.parameter, value))
        except SaginDomeError as exc:
            rows.append(SweepRow(value, math.nan, math.nan, False, error=str(exc)))
        else:
            rows.append(SweepRow(value, dome.vertex_angle_rad, dome.area_km2,
                                 dome.tangent_limited))
    return rows


def expected_count(dome: DomeGeometry, density_per_km2: float) -> tuple[float, int]:
    """(density * area, floor(density * area)): the exact product and the
    integer mean actually fed to the Poisson draw."""
    if not (math.isfinite(density_per_km2) and density_per_km2 >= 0.0):
        raise InvalidParameterError(
            f"density_per_km2 must be finite and >= 0, got {density_per_km2!r}")
    product = density_per_km2 * dome.area_km2
    return product, int(math.floor(product))


def full_sphere_count(radius_km: float, density_per_km2: float) -> float:
    """Expected node count of a whole sphere, 4*pi*r^2 * density."""
    if not radius_km > 0.0:
        raise InvalidParameterError(f"radius_km must be > 0, got {radius_km!r}")
    if not (math.isfinite(density_per_km2) and density_per_km2 >= 0.0):
        raise InvalidParameterError(
            f"density_per_km2 must be finite and >= 0, got {density_per_km2!r}")
    return 4.0 * math.pi * radius_km * radius_km * density_per_km2


def relay_path_count(count_hop1: float, count_hop2: float) -> float:
    """Rough two-hop relay capacity heuristic: the plain product of the
    per-hop expected counts.  Nothing more is implied."""
    if count_hop1 < 0.0 or count_hop2 < 0.0:
        raise InvalidParameterError("hop counts must be >= 0")
    return count_hop1 * count_hop2
