"""The six cross-layer link scenarios and their resolved dome geometry.

Three uplinks (G2A, A2S, G2S) where an elevated receiver points a beam at
the transmitter sphere below, and three downlinks (A2G, S2A, S2G) where a
lower receiver observes the transmitter sphere above a minimum elevation.
The transmitter radius is always the transmitting layer's radius.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import InvalidGeometryError, InvalidParameterError
from .geometry import (
    AntennaConfig,
    DomeGeometry,
    PhysicalConstants,
    cap_area,
    half_power_beamwidth,
    vertex_angle_downlink,
    vertex_angle_uplink,
)


class Direction(Enum):
    UPLINK = "uplink"
    DOWNLINK = "downlink"


class Layer(Enum):
    GROUND = "ground"
    AIR = "air"
    SPACE = "space"


class Scenario(Enum):
    """Transmitter-layer to receiver-layer pairing."""

    G2A = "g2a"
    A2S = "a2s"
    G2S = "g2s"
    A2G = "a2g"
    S2A = "s2a"
    S2G = "s2g"

    @property
    def transmitter_layer(self) -> Layer:
        return _LAYER_PAIRS[self][0]

    @property
    def receiver_layer(self) -> Layer:
        return _LAYER_PAIRS[self][1]

    @property
    def direction(self) -> Direction:
        if self in (Scenario.G2A, Scenario.A2S, Scenario.G2S):
            return Direction.UPLINK
        return Direction.DOWNLINK

    @property
    def layers(self) -> frozenset[Layer]:
        return frozenset(_LAYER_PAIRS[self])


_LAYER_PAIRS = {
    Scenario.G2A: (Layer.GROUND, Layer.AIR),
    Scenario.A2S: (Layer.AIR, Layer.SPACE),
    Scenario.G2S: (Layer.GROUND, Layer.SPACE),
    Scenario.A2G: (Layer.AIR, Layer.GROUND),
    Scenario.S2A: (Layer.SPACE, Layer.AIR),
    Scenario.S2G: (Layer.SPACE, Layer.GROUND),
}

# Scenario family (by the lower endpoint of the link) selects the carrier
# frequency range: ground-air links use the low band, links touching space
# the satellite band.
_FREQUENCY_FAMILY = {
    Scenario.G2A: 1, Scenario.A2G: 1,
    Scenario.A2S: 2, Scenario.S2A: 2,
    Scenario.G2S: 3, Scenario.S2G: 3,
}

FREQUENCY_RANGE_HZ = {1: (300e6, 2.4e9), 2: (2e9, 40e9), 3: (2e9, 40e9)}
AIR_ALTITUDE_RANGE_KM = (1.0, 50.0)
SPACE_ALTITUDE_RANGE_KM = (500.0, 35786.0)
ELEVATION_RANGE_RAD = (math.radians(5.0), math.radians(30.0))


@dataclass(frozen=True)
class ScenarioSpec:
    """A fully parameterized scenario.

    Uplink specs carry an antenna (whose beamwidth sets the cap) and no
    elevation angle; downlink specs carry a minimum elevation angle and no
    antenna.  Altitudes are required exactly for the layers the scenario
    touches.
    """

    scenario: Scenario
    air_altitude_km: float | None = None
    space_altitude_km: float | None = None
    antenna: AntennaConfig | None = None
    min_elevation_rad: float | None = None
    constants: PhysicalConstants = field(default_factory=PhysicalConstants)

    def __post_init__(self) -> None:
        sc = self.scenario
        if not isinstance(sc, Scenario):
            raise InvalidParameterError(f"scenario must be a Scenario, got {sc!r}")
        if sc.direction is Direction.UPLINK:
            if self.antenna is None:
                raise InvalidParameterError(f"{sc.value}: uplink spec requires an antenna")
            if self.min_elevation_rad is not None:
                raise InvalidParameterError(
                    f"{sc.value}: min_elevation_rad is not applicable to an uplink spec")
        else:
            if self.min_elevation_rad is None:
                raise InvalidParameterError(
                    f"{sc.value}: downlink spec requires min_elevation_rad")
            if self.antenna is not None:
                raise InvalidParameterError(
                    f"{sc.value}: antenna is not applicable to a downlink spec")
            if not 0.0 <= self.min_elevation_rad <= 0.5 * math.pi:
                raise InvalidParameterError(
                    f"min_elevation_rad must lie in [0, pi/2], got {self.min_elevation_rad!r}")
        self._check_altitude(Layer.AIR, "air_altitude_km", self.air_altitude_km)
        self._check_altitude(Layer.SPACE, "space_altitude_km", self.space_altitude_km)
        if (self.air_altitude_km is not None and self.space_altitude_km is not None
                and self.air_altitude_km >= self.space_altitude_km):
            raise InvalidGeometryError(
                f"air_altitude_km={self.air_altitude_km!r} must be below "
                f"space_altitude_km={self.space_altitude_km!r}")

    def _check_altitude(self, layer: Layer, name: str, value: float | None) -> None:
        if layer in self.scenario.layers:
            if value is None:
                raise InvalidParameterError(f"{self.scenario.value}: {name} is required")
            if not value > 0.0:
                raise InvalidParameterError(f"{name} must be > 0, got {value!r}")
        elif value is not None:
            raise InvalidParameterError(
                f"{self.scenario.value}: {name} is not applicable to this scenario")


@dataclass(frozen=True)
class RangeViolation:
    """A parameter outside its customary operating range (advisory only)."""

    parameter: str
    value: float
    low: float
    high: float
    severity: str = "warning"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[RangeViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _layer_radius_km(spec: ScenarioSpec, layer: Layer) -> float:
    base = spec.constants.earth_radius_km
    if layer is Layer.GROUND:
        return base
    if layer is Layer.AIR:
        return base + spec.air_altitude_km
    return base + spec.space_altitude_km


def resolve_radii(spec: ScenarioSpec) -> tuple[float, float]:
    """Resolve (transmitter radius, receiver radius), both in km."""
    return (_layer_radius_km(spec, spec.scenario.transmitter_layer),
            _layer_radius_km(spec, spec.scenario.receiver_layer))


def validate(spec: ScenarioSpec) -> ValidationReport:
    """Range-check parameters against customary operating ranges.

    Violations are warnings, never hard errors: sweeps and literature
    reproductions routinely evaluate at range edges and beyond.
    """
    found: list[RangeViolation] = []

    def check(parameter: str, value: float, low: float, high: float) -> None:
        if not low <= value <= high:
            found.append(RangeViolation(parameter, value, low, high))

    if spec.antenna is not None:
        low, high = FREQUENCY_RANGE_HZ[_FREQUENCY_FAMILY[spec.scenario]]
        check("carrier_frequency_hz", spec.antenna.carrier_frequency_hz, low, high)
    if spec.min_elevation_rad is not None:
        check("min_elevation_rad", spec.min_elevation_rad, *ELEVATION_RANGE_RAD)
    if spec.air_altitude_km is not None:
        check("air_altitude_km", spec.air_altitude_km, *AIR_ALTITUDE_RANGE_KM)
    if spec.space_altitude_km is not None:
        check("space_altitude_km", spec.space_altitude_km, *SPACE_ALTITUDE_RANGE_KM)
    return ValidationReport(tuple(found))


def coverage(spec: ScenarioSpec) -> DomeGeometry:
    """Resolve the scenario end to end into its coverage dome."""
    r_t, r_r = resolve_radii(spec)
    if spec.scenario.direction is Direction.UPLINK:
        beamwidth = half_power_beamwidth(spec.antenna, spec.constants)
        phi, tangent_limited = vertex_angle_uplink(beamwidth, r_t, r_r)
    else:
        phi = vertex_angle_downlink(spec.min_elevation_rad, r_t, r_r)
        tangent_limited = False
    return DomeGeometry(
        transmitter_radius_km=r_t,
        receiver_radius_km=r_r,
        vertex_angle_rad=phi,
        delta=math.cos(phi),
        area_km2=cap_area(r_t, phi),
        tangent_limited=tangent_limited,
    )
