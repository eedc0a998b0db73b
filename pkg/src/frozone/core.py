"""Freezing-avoidance core: classify pedestrians, predict their positions,
build the potential freezing zone, and compute a bounded deviation angle.

The pipeline runs once per control tick on a sensor frame:

1. classify every observed pedestrian as potentially freezing or not,
2. extrapolate the potentially-freezing ones one horizon ahead,
3. wrap the predicted positions in a conservative zone (circle, inflated
   segment, or convex hull depending on the count),
4. if the robot's own lookahead point falls inside the zone and within the
   comfort distance of the nearest such pedestrian, rotate the guiding
   velocity by the smallest workable angle.

The returned angle is always bounded by atan(sqrt(eta^2 - f^2) / f), where f
is the sensing blind offset, so the robot never snaps its heading hard enough
to lose track of its surroundings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .geometry import (
    Circle,
    ConvexPolygon,
    InflatedSegment,
    Pfz,
    Vec2,
    contains,
    convex_hull,
    rotate,
    signed_gap,
    zone_encoding,
)
from .sensing import SensorFrame

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class FrozoneConfig:
    eta: float = 1.4  # pedestrian comfort distance, m
    pred_dt: float = 1.2  # prediction horizon, s
    single_ped_radius: float = 0.6  # zone radius around a lone pedestrian, m
    segment_inflation: float = 0.6  # zone half-width for the two-pedestrian case, m
    sweep_step: float = math.radians(1.0)  # deviation grid resolution, rad
    # A rotation only counts as clearing the zone if it clears by this much;
    # boundary-grazing angles are worthless once sensing noise moves the zone.
    sweep_margin: float = 0.25  # m
    min_dist_threshold: float = 0.5  # hard clearance floor (Omega), m
    sensor_offset: float = 0.5  # sensing blind offset f, m (bounds the angle)
    head_on_band: float = 0.3  # half-width of the on-axis band for case (d), m
    axis_dir_tol: float = 0.5  # |v_y| <= tol * speed counts as axis-aligned

    def __post_init__(self) -> None:
        if not self.eta > self.sensor_offset:
            raise ValueError("eta must be > sensor_offset")
        if not self.pred_dt > 0.0:
            raise ValueError("pred_dt must be > 0")
        if not 0.0 < self.sweep_step <= 0.1:
            raise ValueError("sweep_step must be in (0, 0.1]")
        for name in ("single_ped_radius", "segment_inflation", "min_dist_threshold"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be > 0")
        if self.head_on_band < 0.0 or self.axis_dir_tol < 0.0:
            raise ValueError("band and tolerance must be >= 0")
        if self.sweep_margin < 0.0:
            raise ValueError("sweep_margin must be >= 0")

    @property
    def phi_max(self) -> float:
        """Hard bound on the deviation angle."""
        f = self.sensor_offset
        return math.atan(math.sqrt(self.eta * self.eta - f * f) / f)


class PedLabel(Enum):
    POTENTIALLY_FREEZING = "potentially_freezing"
    NON_FREEZING = "non_freezing"


class Branch(Enum):
    PHI1 = "phi1"
    PHI2 = "phi2"
    NONE = "none"


@dataclass(frozen=True)
class DeviationResult:
    triggered: bool
    phi: float
    chosen_branch: Branch
    new_velocity: Vec2
    sweep_feasible: bool = True


def classify(
    frame: SensorFrame, robot_speed: float, cfg: FrozoneConfig
) -> dict[int, PedLabel]:
    """Label every observation in the frame.

    A pedestrian is potentially freezing when any of these hold:
    (a) it is in the right half of the region (y < 0) moving into the robot's
        path (velocity within 45 degrees of +y),
    (b) mirrored for the left half (y > 0, velocity within 45 degrees of -y),
    (c) it is slower than the robot, regardless of heading,
    (d) it moves along the robot's axis (head-on or dead away) while sitting
        inside the on-axis band.
    Unknown motion counts as zero velocity.
    """
    labels: dict[int, PedLabel] = {}
    for o in frame.observations:
        vel = o.velocity()
        spd = vel.norm()
        freezing = False
        if spd < robot_speed:
            freezing = True  # closing on the robot no matter where it points
        elif spd > 0.0:
            half = spd / _SQRT2
            if o.position.y < 0.0 and vel.y >= half and abs(vel.x) <= half:
                freezing = True
            elif o.position.y > 0.0 and vel.y <= -half and abs(vel.x) <= half:
                freezing = True
            elif (
                abs(o.position.y) <= cfg.head_on_band
                and abs(vel.y) <= cfg.axis_dir_tol * spd
            ):
                freezing = True
        labels[o.ped_id] = (
            PedLabel.POTENTIALLY_FREEZING if freezing else PedLabel.NON_FREEZING
        )
    return labels


def predict(
    frame: SensorFrame, classification: dict[int, PedLabel], pred_dt: float
) -> list[Vec2]:
    """Constant-velocity extrapolation of the potentially-freezing pedestrians."""
    if not pred_dt > 0.0:
        raise ValueError("pred_dt must be > 0")
    out = []
    for o in frame.observations:
        if classification[o.ped_id] is PedLabel.POTENTIALLY_FREEZING:
            out.append(o.position + o.velocity().scaled(pred_dt))
    return out


def build_pfz(predicted: list[Vec2], cfg: FrozoneConfig) -> Pfz | None:
    """Wrap predicted positions in a conservative zone.

    No pedestrians: no zone.  One: a circle.  Two (or any collinear set): an
    inflated segment between the extremes.  Three or more in general
    position: their convex hull.
    """
    if not predicted:
        return None
    if len(predicted) == 1:
        return Circle(predicted[0], cfg.single_ped_radius)
    hull = convex_hull(predicted)
    if isinstance(hull, ConvexPolygon):
        return hull
    if isinstance(hull, Vec2):  # all predictions coincide
        return InflatedSegment(hull, hull, cfg.segment_inflation)
    return InflatedSegment(hull[0], hull[1], cfg.segment_inflation)


def should_deviate(
    robot_vel: Vec2, pfz: Pfz, closest_pred: Vec2, cfg: FrozoneConfig
) -> bool:
    """Trigger test: the lookahead point is both near the closest prediction
    and inside the zone."""
    look = robot_vel.scaled(cfg.pred_dt)
    dx = look.x - closest_pred.x
    dy = look.y - closest_pred.y
    return math.sqrt(dx * dx + dy * dy) <= cfg.eta and contains(pfz, look)


_SIDE_DECISIVE = 0.2  # rad; pedestrian bearings larger than this pick the side


def deviation_angle(
    robot_vel: Vec2,
    goal: Vec2,
    pfz: Pfz,
    closest_ped_current: Vec2,
    cfg: FrozoneConfig,
    side_hint: float = 0.0,
) -> DeviationResult:
    """Pick the deviation angle once the trigger has fired.

    Two candidates compete.  phi1 comes from a bounded grid sweep: among
    angles whose rotated lookahead clears the zone, the one closest to the
    goal (ties to smaller magnitude, then to the preferred side).  phi2 aims
    straight at the nearest potentially-freezing pedestrian's current
    position; since that pedestrian is about to vacate it, following phi2
    passes behind.  phi2 is used whenever it is workable (nonzero, within the
    angle bound, and actually clearing the zone) unless phi1 clears the zone
    on the same side with less deviation.  If no grid angle clears the zone,
    the sweep falls back to the angle maximising boundary clearance.

    side_hint (+-1) is the hysteresis input: the sign of the deviation that
    is already in progress.  Sensor noise moves the zone across the robot's
    axis from tick to tick, and without the hint the rotation flips sides and
    the robot wobbles in place instead of escaping.  The hint never overrides
    feasibility, it only breaks the left/right choice.
    """
    look = robot_vel.scaled(cfg.pred_dt)
    phi2 = math.atan2(closest_ped_current.y, closest_ped_current.x)
    if side_hint != 0.0:
        side = math.copysign(1.0, side_hint)
    elif abs(phi2) > _SIDE_DECISIVE:
        side = math.copysign(1.0, phi2)
    else:
        side = -1.0  # dead ahead: break symmetric ties to the right

    kind, data = zone_encoding(pfz)
    phi1, sweep_feasible = _kernels.sweep_deviation(
        kind,
        np.asarray(data, dtype=np.float64),
        look.x,
        look.y,
        goal.x,
        goal.y,
        cfg.phi_max,
        cfg.sweep_step,
        side,
        side_hint,
        cfg.sweep_margin,
    )

    # phi2 aims at the pedestrian's current spot, which often sits close to
    # the zone boundary; it only needs to clear the zone, not the margin.
    phi2_ok = (
        phi2 != 0.0
        and abs(phi2) <= cfg.phi_max
        and not contains(pfz, rotate(look, phi2))
        and (side_hint == 0.0 or phi2 * side_hint > 0.0)
    )
    same_side_shorter = (
        sweep_feasible
        and phi1 != 0.0
        and math.copysign(1.0, phi1) == math.copysign(1.0, phi2)
        and abs(phi1) < abs(phi2)
    )
    if phi2_ok and not same_side_shorter:
        phi = phi2
        branch = Branch.PHI2
    else:
        phi = phi1
        branch = Branch.PHI1
    return DeviationResult(True, phi, branch, rotate(robot_vel, phi), sweep_feasible)


@dataclass(frozen=True)
class FrozoneDecision:
    """Full record of one control tick, for logging and analysis."""

    velocity: Vec2
    triggered: bool = False
    phi: float = 0.0
    branch: Branch = Branch.NONE
    sweep_feasible: bool = True
    pfz: Pfz | None = None
    lookahead: Vec2 | None = None
    classification: dict[int, PedLabel] | None = None


def evaluate(
    frame: SensorFrame,
    goal: Vec2,
    guiding_vel: Vec2,
    cfg: FrozoneConfig,
    side_hint: float = 0.0,
) -> FrozoneDecision:
    """Run the full pipeline on one frame and return the decision record.

    The robot speed used for classification is the speed of the guiding
    velocity, i.e. the speed the robot is about to travel at.
    """
    classification = classify(frame, guiding_vel.norm(), cfg)
    freezing = [
        o
        for o in frame.observations
        if classification[o.ped_id] is PedLabel.POTENTIALLY_FREEZING
    ]
    predicted = [o.position + o.velocity().scaled(cfg.pred_dt) for o in freezing]
    pfz = build_pfz(predicted, cfg)
    if pfz is None:
        return FrozoneDecision(guiding_vel, classification=classification)
    idx = min(
        range(len(freezing)), key=lambda i: (freezing[i].position.norm(), freezing[i].ped_id)
    )
    if not should_deviate(guiding_vel, pfz, predicted[idx], cfg):
        return FrozoneDecision(
            guiding_vel,
            pfz=pfz,
            lookahead=guiding_vel.scaled(cfg.pred_dt),
            classification=classification,
        )
    res = deviation_angle(
        guiding_vel, goal, pfz, freezing[idx].position, cfg, side_hint
    )
    return FrozoneDecision(
        velocity=res.new_velocity,
        triggered=True,
        phi=res.phi,
        branch=res.chosen_branch,
        sweep_feasible=res.sweep_feasible,
        pfz=pfz,
        lookahead=guiding_vel.scaled(cfg.pred_dt),
        classification=classification,
    )


def frozone_step(
    frame: SensorFrame, goal: Vec2, guiding_vel: Vec2, cfg: FrozoneConfig
) -> Vec2:
    """Pipeline entry point: returns the (possibly rotated) guiding velocity."""
    return evaluate(frame, goal, guiding_vel, cfg).velocity
