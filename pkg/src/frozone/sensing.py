"""Limited-range sensing: offset square region, noisy observations, motion
estimation by frame differencing, and bounding-box position recovery.

The robot senses an offset square in front of itself (a blind band of
``offset`` meters, then ``side`` meters of range) intersected with the
camera's angular field of view.  Observed positions carry Gaussian noise and
are re-clipped into the square so downstream code can rely on the region
invariant.  Motion is recovered by differencing two frames after compensating
for the robot's own displacement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from .geometry import Vec2, rotate


@dataclass(frozen=True)
class SensorConfig:
    side: float = 3.0  # square side length, m
    offset: float = 0.5  # blind offset in front of the robot, m
    fov: float = math.pi / 3  # camera field of view, rad
    image_w: int = 150  # synthetic image width, px
    image_h: int = 120  # synthetic image height, px
    pos_noise_sigma: float = 0.05  # per-axis position noise, m
    frame_dt: float = 0.1  # time between frames, s

    def __post_init__(self) -> None:
        if not self.side > 0.0:
            raise ValueError("side must be > 0")
        if not 0.0 < self.offset < self.side:
            raise ValueError("offset must be in (0, side)")
        if not 0.0 < self.fov < math.pi:
            raise ValueError("fov must be in (0, pi)")
        if self.image_w <= 0 or self.image_h <= 0:
            raise ValueError("image dimensions must be positive")
        if self.pos_noise_sigma < 0.0:
            raise ValueError("pos_noise_sigma must be >= 0")
        if not self.frame_dt > 0.0:
            raise ValueError("frame_dt must be > 0")

    def in_square(self, p: Vec2) -> bool:
        half = self.side / 2.0
        return self.offset <= p.x <= self.offset + self.side and -half <= p.y <= half

    def in_fov(self, p: Vec2) -> bool:
        return abs(math.atan2(p.y, p.x)) <= self.fov / 2.0


@dataclass(frozen=True)
class LidarConfig:
    """Wide-arc range sensing for the local planner.

    The classification pipeline runs on the camera's offset square region;
    collision checking needs to keep seeing agents the robot has already
    out-turned, so the planner gets this second channel.
    """

    range_m: float = 4.0
    fov: float = math.radians(240.0)
    min_range: float = 0.05
    noise_sigma: float = 0.01

    def __post_init__(self) -> None:
        if not self.range_m > 0.0:
            raise ValueError("range_m must be > 0")
        if not 0.0 < self.fov <= 2.0 * math.pi:
            raise ValueError("fov must be in (0, 2*pi]")
        if not 0.0 <= self.min_range < self.range_m:
            raise ValueError("min_range must be in [0, range_m)")
        if self.noise_sigma < 0.0:
            raise ValueError("noise_sigma must be >= 0")


@dataclass(frozen=True)
class Observation:
    ped_id: int
    position: Vec2  # robot frame
    forward: Vec2 | None = None  # unit vector, None until motion is resolved
    speed: float | None = None  # m/s, None until motion is resolved

    def velocity(self) -> Vec2:
        """Effective velocity; unknown motion counts as standing still."""
        if self.forward is None or self.speed is None:
            return Vec2(0.0, 0.0)
        return self.forward.scaled(self.speed)


@dataclass(frozen=True)
class SensorFrame:
    timestamp: float
    robot_pose: tuple[float, float, float]  # world x, y, heading at capture
    observations: tuple[Observation, ...]


def sense(
    agents: Iterable[tuple[int, Vec2]],
    robot_pose: tuple[float, float, float],
    cfg: SensorConfig,
    rng: np.random.Generator,
    timestamp: float = 0.0,
) -> SensorFrame:
    """Observe world-frame agents from a robot pose.

    An agent is included only if its true robot-frame position lies in the
    sensing square and inside the angular field of view.  Noise is then added
    per axis and the result clipped back into the square.  Motion fields stay
    unknown; estimate_motion fills them from a previous frame.
    """
    rx, ry, heading = robot_pose
    half = cfg.side / 2.0
    obs = []
    for ped_id, world_pos in sorted(agents, key=lambda a: a[0]):
        rel = rotate(world_pos - Vec2(rx, ry), -heading)
        if not (cfg.in_square(rel) and cfg.in_fov(rel)):
            continue
        nx = rel.x + rng.normal(0.0, cfg.pos_noise_sigma)
        ny = rel.y + rng.normal(0.0, cfg.pos_noise_sigma)
        nx = min(max(nx, cfg.offset), cfg.offset + cfg.side)
        ny = min(max(ny, -half), half)
        obs.append(Observation(ped_id, Vec2(nx, ny)))
    return SensorFrame(timestamp, robot_pose, tuple(obs))


def sense_arc(
    agents: Iterable[tuple[int, Vec2]],
    robot_pose: tuple[float, float, float],
    cfg: LidarConfig,
    rng: np.random.Generator,
    timestamp: float = 0.0,
) -> SensorFrame:
    """Observe world-frame agents over a wide arc (planner channel)."""
    rx, ry, heading = robot_pose
    obs = []
    for ped_id, world_pos in sorted(agents, key=lambda a: a[0]):
        rel = rotate(world_pos - Vec2(rx, ry), -heading)
        r = rel.norm()
        if not (cfg.min_range <= r <= cfg.range_m):
            continue
        if abs(math.atan2(rel.y, rel.x)) > cfg.fov / 2.0:
            continue
        nx = rel.x + rng.normal(0.0, cfg.noise_sigma)
        ny = rel.y + rng.normal(0.0, cfg.noise_sigma)
        obs.append(Observation(ped_id, Vec2(nx, ny)))
    return SensorFrame(timestamp, robot_pose, tuple(obs))


def estimate_motion(prev: SensorFrame, curr: SensorFrame) -> SensorFrame:
    """Fill in forward/speed for ids present in both frames.

    Positions are first mapped back to the world frame using each frame's
    robot pose, so the robot's own motion between frames cancels out; the
    recovered world velocity is then re-expressed in the current robot frame.
    Ids appearing only in the current frame keep unknown motion.
    """
    dt = curr.timestamp - prev.timestamp
    if dt <= 0.0:
        raise ValueError("frames must be ordered in time (dt > 0)")
    prev_by_id = {o.ped_id: o for o in prev.observations}
    out = []
    for o in curr.observations:
        before = prev_by_id.get(o.ped_id)
        if before is None:
            out.append(o)
            continue
        w0 = _to_world(before.position, prev.robot_pose)
        w1 = _to_world(o.position, curr.robot_pose)
        vel_world = (w1 - w0).scaled(1.0 / dt)
        vel = rotate(vel_world, -curr.robot_pose[2])
        speed = vel.norm()
        if speed < 1e-12:
            out.append(replace(o, forward=None, speed=0.0))
        else:
            out.append(replace(o, forward=vel.scaled(1.0 / speed), speed=speed))
    return replace(curr, observations=tuple(out))


def _to_world(rel: Vec2, pose: tuple[float, float, float]) -> Vec2:
    return Vec2(pose[0], pose[1]) + rotate(rel, pose[2])


@dataclass(frozen=True)
class SyntheticBBox:
    """Detection stand-in: horizontal centroid plus mean depth of a target."""

    ped_id: int
    centroid_x: float  # px, in [0, image_w]
    mean_depth: float  # m


def bbox_to_position(box: SyntheticBBox, cfg: SensorConfig) -> Vec2:
    """Recover a robot-frame position from a synthetic bounding box.

    The image center maps to straight ahead and the left image edge to the
    robot's left (+y), so the angular displacement is measured from the
    optical axis.
    """
    psi = (0.5 - box.centroid_x / cfg.image_w) * cfg.fov
    return Vec2(box.mean_depth * math.cos(psi), box.mean_depth * math.sin(psi))


def position_to_bbox(ped_id: int, position: Vec2, cfg: SensorConfig) -> SyntheticBBox:
    """Exact inverse of bbox_to_position, used to synthesize detections."""
    psi = math.atan2(position.y, position.x)
    centroid_x = (0.5 - psi / cfg.fov) * cfg.image_w
    return SyntheticBBox(ped_id, centroid_x, position.norm())
