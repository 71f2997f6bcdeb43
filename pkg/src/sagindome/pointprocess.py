"""Seeded stochastic transmitter generation on a coverage dome.

Reproducibility contract: a fixed (dome, config) pair yields bit-identical
output across runs and platforms.  Uniform variates come from a named numpy
bit generator (``SampleConfig.rng_algorithm``) through ``Generator.random``;
the Poisson count is drawn by this module's own samplers (sequential
inversion below mean 30, Hormann's PTRS transformed rejection above) so the
stream never depends on numpy's distribution internals.  ``generate`` always
consumes the stream in the order: count, then all azimuths, then all polar
angles.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidParameterError, NumericDomainError
from .geometry import CLAMP_TOLERANCE, DomeGeometry

RNG_ALGORITHMS = {
    "pcg64": np.random.PCG64,
    "philox": np.random.Philox,
    "sfc64": np.random.SFC64,
    "mt19937": np.random.MT19937,
}

DEFAULT_RNG_ALGORITHM = "pcg64"

# Mean at which the Poisson sampler switches from sequential inversion to
# transformed rejection.
_POISSON_REJECTION_THRESHOLD = 30


class SampleMode(Enum):
    """How polar angles are drawn inside the cap.

    AREA_UNIFORM places points with uniform surface density (a homogeneous
    point process on the cap).  PAPER_FAITHFUL draws the signed polar angle
    uniformly on [-phi, phi], which over-weights the cap centre by a factor
    1/sin(polar) but reproduces the classic generation recipe verbatim.
    """

    AREA_UNIFORM = "area_uniform"
    PAPER_FAITHFUL = "paper_faithful"


@dataclass(frozen=True)
class PolarPoint:
    """A point in Earth-centred spherical coordinates, normalized on creation."""

    radius_km: float
    azimuth_rad: float
    polar_rad: float

    def __post_init__(self) -> None:
        if not self.radius_km > 0.0:
            raise InvalidParameterError(f"radius_km must be > 0, got {self.radius_km!r}")
        azimuth = self.azimuth_rad
        polar = self.polar_rad % (2.0 * math.pi)
        if polar > math.pi:
            polar = 2.0 * math.pi - polar
            azimuth += math.pi
        object.__setattr__(self, "polar_rad", polar)
        object.__setattr__(self, "azimuth_rad", azimuth % (2.0 * math.pi))


@dataclass(frozen=True)
class CartesianPoint:
    x_km: float
    y_km: float
    z_km: float


def polar_to_cartesian(point: PolarPoint) -> CartesianPoint:
    r, sin_p = point.radius_km, math.sin(point.polar_rad)
    return CartesianPoint(
        x_km=r * sin_p * math.cos(point.azimuth_rad),
        y_km=r * sin_p * math.sin(point.azimuth_rad),
        z_km=r * math.cos(point.polar_rad),
    )


def cartesian_to_polar(point: CartesianPoint) -> PolarPoint:
    r = math.sqrt(point.x_km ** 2 + point.y_km ** 2 + point.z_km ** 2)
    if r == 0.0:
        raise InvalidParameterError("cannot convert the origin to polar coordinates")
    return PolarPoint(
        radius_km=r,
        azimuth_rad=math.atan2(point.y_km, point.x_km),
        polar_rad=math.acos(max(-1.0, min(1.0, point.z_km / r))),
    )


@dataclass(frozen=True)
class SampleConfig:
    """Density, receiver orientation, sampling mode, and RNG identity."""

    density_per_km2: float
    rx_azimuth_rad: float = 0.0
    rx_polar_rad: float = 0.0
    mode: SampleMode = SampleMode.AREA_UNIFORM
    seed: int = 0
    rng_algorithm: str = DEFAULT_RNG_ALGORITHM

    def __post_init__(self) -> None:
        if not (math.isfinite(self.density_per_km2) and self.density_per_km2 >= 0.0):
            raise InvalidParameterError(
                f"density_per_km2 must be finite and >= 0, got {self.density_per_km2!r}")
        for name in ("rx_azimuth_rad", "rx_polar_rad"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParameterError(f"{name} must be finite")
        if isinstance(self.mode, str):
            try:
                object.__setattr__(self, "mode", SampleMode(self.mode))
            except ValueError:
                raise InvalidParameterError(
                    f"mode must be one of {[m.value for m in SampleMode]}, "
                    f"got {self.mode!r}") from None
        elif not isinstance(self.mode, SampleMode):
            raise InvalidParameterError(f"mode must be a SampleMode, got {self.mode!r}")
        _check_seed(self.seed)
        if self.rng_algorithm not in RNG_ALGORITHMS:
            raise InvalidParameterError(
                f"rng_algorithm must be one of {sorted(RNG_ALGORITHMS)}, "
                f"got {self.rng_algorithm!r}")


@dataclass(frozen=True, eq=False)
class Topology:
    """Generated transmitter positions: an (n, 3) array of x, y, z in km."""

    points: np.ndarray
    count: int
    dome: DomeGeometry
    config: SampleConfig

    def cartesian_points(self) -> list[CartesianPoint]:
        return [CartesianPoint(*row) for row in self.points]


def _check_seed(seed: int) -> None:
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise InvalidParameterError(f"seed must be an integer, got {seed!r}")
    if not 0 <= seed < 2 ** 64:
        raise InvalidParameterError(f"seed must lie in [0, 2**64), got {seed!r}")


def make_rng(seed: int, rng_algorithm: str = DEFAULT_RNG_ALGORITHM) -> np.random.Generator:
    """Build the named, seeded generator used by all sampling routines."""
    _check_seed(seed)
    try:
        bit_generator = RNG_ALGORITHMS[rng_algorithm]
    except KeyError:
        raise InvalidParameterError(
            f"rng_algorithm must be one of {sorted(RNG_ALGORITHMS)}, "
            f"got {rng_algorithm!r}") from None
    return np.random.Generator(bit_generator(seed))


def _poisson_inversion(mean: int, rng: np.random.Generator) -> int:
    # Multiplicative sequential search; one uniform per candidate value.
    limit = math.exp(-mean)
    k = 0
    product = rng.random()
    while product > limit:
        k += 1
        product *= rng.random()
    return k


def _poisson_ptrs(mean: int, rng: np.random.Generator) -> int:
    # Transformed rejection with squeeze (Hormann 1993, algorithm PTRS),
    # valid for mean >= 10.  Two uniforms per trial, acceptance rate ~98%.
    b = 0.931 + 2.53 * math.sqrt(mean)
    a = -0.059 + 0.02483 * b
    inv_alpha = 1.1239 + 1.1328 / (b - 3.4)
    v_r = 0.9277 - 3.6224 / (b - 2.0)
    log_mean = math.log(mean)
    while True:
        u = rng.random() - 0.5
        v = rng.random()
        u_shifted = 0.5 - abs(u)
        k = math.floor((2.0 * a / u_shifted + b) * u + mean + 0.43)
        if u_shifted >= 0.07 and v <= v_r:
            return int(k)
        if k < 0 or (u_shifted < 0.013 and v > u_shifted):
            continue
        if (math.log(v * inv_alpha / (a / (u_shifted * u_shifted) + b))
                <= k * log_mean - mean - math.lgamma(k + 1.0)):
            return int(k)


def poisson_count(density_per_km2: float, area_km2: float,
                  rng: np.random.Generator) -> int:
    """Poisson node count with mean floor(density * area)."""
    if not (math.isfinite(density_per_km2) and density_per_km2 >= 0.0):
        raise InvalidParameterError(
            f"density_per_km2 must be finite and >= 0, got {density_per_km2!r}")
    if not (math.isfinite(area_km2) and area_km2 >= 0.0):
        raise InvalidParameterError(
            f"area_km2 must be finite and >= 0, got {area_km2!r}")
    mean = int(math.floor(density_per_km2 * area_km2))
    if mean == 0:
        return 0
    if mean < _POISSON_REJECTION_THRESHOLD:
        return _poisson_inversion(mean, rng)
    return _poisson_ptrs(mean, rng)


def sample_cap_angles(vertex_angle_rad: float, count: int, mode: SampleMode,
                      rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Draw (azimuth, polar) angle arrays for ``count`` points inside a cap.

    Azimuths are uniform on [0, 2*pi) in both modes.  AREA_UNIFORM draws
    polar = arccos(1 - U * (1 - cos(phi))), evaluated in the equivalent
    cancellation-free form 2*arcsin(sqrt(U) * sin(phi/2)); PAPER_FAITHFUL
    draws polar uniformly on [-phi, phi].
    """
    if not 0.0 <= vertex_angle_rad <= math.pi:
        raise InvalidParameterError(
            f"vertex_angle_rad must lie in [0, pi], got {vertex_angle_rad!r}")
    if count < 0:
        raise InvalidParameterError(f"count must be >= 0, got {count!r}")
    try:
        mode = SampleMode(mode)
    except ValueError:
        raise InvalidParameterError(
            f"mode must be one of {[m.value for m in SampleMode]}, "
            f"got {mode!r}") from None
    azimuth = 2.0 * math.pi * rng.random(count)
    if mode is SampleMode.PAPER_FAITHFUL:
        polar = vertex_angle_rad * (2.0 * rng.random(count) - 1.0)
    else:
        polar = 2.0 * np.arcsin(np.sqrt(rng.random(count))
                                * math.sin(0.5 * vertex_angle_rad))
    return azimuth, polar


def yaw_pitch_matrix(rx_azimuth_rad: float, rx_polar_rad: float) -> np.ndarray:
    """Rotation R_z(azimuth) @ R_y(polar) moving the +z pole onto the receiver direction."""
    ca, sa = math.cos(rx_azimuth_rad), math.sin(rx_azimuth_rad)
    cp, sp = math.cos(rx_polar_rad), math.sin(rx_polar_rad)
    yaw = np.array([[ca, -sa, 0.0], [sa, ca, 0.0], [0.0, 0.0, 1.0]])
    pitch = np.array([[cp, 0.0, sp], [0.0, 1.0, 0.0], [-sp, 0.0, cp]])
    return yaw @ pitch


def cap_center_direction(rx_azimuth_rad: float, rx_polar_rad: float) -> np.ndarray:
    """Unit vector of the cap centre for a receiver at (azimuth, polar)."""
    sin_p = math.sin(rx_polar_rad)
    return np.array([sin_p * math.cos(rx_azimuth_rad),
                     sin_p * math.sin(rx_azimuth_rad),
                     math.cos(rx_polar_rad)])


def generate(dome: DomeGeometry, config: SampleConfig) -> Topology:
    """Generate a seeded transmitter topology inside the coverage dome.

    Points are sampled about the +z pole on the transmitter sphere, then
    rotated by the yaw-pitch matrix so the cap centre lands on the receiver
    direction (sin(polar)cos(azimuth), sin(polar)sin(azimuth), cos(polar)).
    """
    rng = make_rng(config.seed, config.rng_algorithm)
    count = poisson_count(config.density_per_km2, dome.area_km2, rng)
    azimuth, polar = sample_cap_angles(dome.vertex_angle_rad, count, config.mode, rng)
    r_t = dome.transmitter_radius_km
    sin_polar = np.sin(polar)
    local = np.column_stack((
        r_t * sin_polar * np.cos(azimuth),
        r_t * sin_polar * np.sin(azimuth),
        r_t * np.cos(polar),
    ))
    rotation = yaw_pitch_matrix(config.rx_azimuth_rad, config.rx_polar_rad)
    return Topology(points=local @ rotation.T, count=count, dome=dome, config=config)


def angular_distance(points, center_direction) -> np.ndarray | float:
    """Angle(s) in radians between point vector(s) and a cap-centre direction.

    Accepts one (3,) vector or an (n, 3) stack; applies the shared clamp
    rule to the cosine before arccos.
    """
    p = np.asarray(points, dtype=float)
    c = np.asarray(center_direction, dtype=float)
    p_norm = np.linalg.norm(p, axis=-1)
    c_norm = np.linalg.norm(c)
    if c_norm == 0.0 or np.any(p_norm == 0.0):
        raise InvalidParameterError("angular_distance is undefined for zero vectors")
    cosine = (p @ c) / (p_norm * c_norm)
    excess = np.max(np.abs(cosine)) - 1.0 if cosine.size else 0.0
    if excess > CLAMP_TOLERANCE:
        raise NumericDomainError(
            f"direction cosine leaves [-1, 1] by {excess!r}, beyond tolerance")
    angles = np.arccos(np.clip(cosine, -1.0, 1.0))
    return float(angles) if angles.ndim == 0 else angles
