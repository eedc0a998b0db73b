"""Pedestrian walking model and scripted kinematics.

Pedestrians follow fixed waypoint scripts (they do not cooperate with the
robot), but their speed responds to crowding: the walking-speed law scales
with the square of the free space in front of them, capped at a preferred
speed, so a pedestrian naturally slows and stops when someone blocks the way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import _kernels
from .geometry import Vec2

WAYPOINT_CAPTURE = 0.1  # m; a waypoint closer than this counts as reached
DEFAULT_FRONT_CAP = 4.0  # m; free space is never reported beyond this


@dataclass(frozen=True)
class FdParams:
    """Constants of the walking-speed law.

    alpha and beta absorb stride properties, height_factor is height/1.72.
    The defaults saturate the law at the preferred speed once ~1.8 m of free
    space is available.
    """

    alpha: float = 1.0
    beta: float = 0.6
    height_factor: float = 1.0

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "height_factor"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be > 0")


@dataclass(frozen=True)
class PedestrianState:
    position: Vec2
    forward: Vec2  # unit vector
    pref_speed: float = 1.3
    radius: float = 0.25
    waypoints: tuple[Vec2, ...] = ()
    waypoint_index: int = 0

    def __post_init__(self) -> None:
        if abs(self.forward.norm() - 1.0) > 1e-9:
            raise ValueError("forward must be a unit vector")
        if not 0.0 < self.pref_speed <= 3.0:
            raise ValueError("pref_speed must be in (0, 3]")
        if not 0.0 < self.radius <= 0.5:
            raise ValueError("radius must be in (0, 0.5]")

    @property
    def done(self) -> bool:
        return self.waypoint_index >= len(self.waypoints)


def walking_speed(front_space: float, params: FdParams, pref_speed: float) -> float:
    """Natural walking speed for a given amount of free space ahead."""
    if front_space < 0.0:
        raise ValueError("front_space must be >= 0")
    s = (front_space * params.alpha / (params.height_factor * (1.0 + params.beta))) ** 2
    return min(pref_speed, s)


def front_space(
    ped: PedestrianState,
    others: list[PedestrianState],
    robot_disc: tuple[Vec2, float] | None,
    cap: float = DEFAULT_FRONT_CAP,
) -> float:
    """Free space ahead of a pedestrian, by sweeping its disc forward.

    Every other agent disc (pedestrians plus the robot) is inflated by the
    pedestrian's own radius and intersected with the forward ray, i.e. the
    pedestrian's body width counts: a shoulder-grazing obstruction shortens
    the space just like a dead-ahead one.  The result is clamped to [0, cap].
    """
    if not cap > 0.0:
        raise ValueError("cap must be > 0")
    xs, ys, rs = [], [], []
    for o in others:
        if o is ped:
            continue
        xs.append(o.position.x)
        ys.append(o.position.y)
        rs.append(o.radius + ped.radius)
    if robot_disc is not None:
        xs.append(robot_disc[0].x)
        ys.append(robot_disc[0].y)
        rs.append(robot_disc[1] + ped.radius)
    return _kernels.ray_gap(
        ped.position.x,
        ped.position.y,
        ped.forward.x,
        ped.forward.y,
        0.0,
        np.asarray(xs, dtype=np.float64),
        np.asarray(ys, dtype=np.float64),
        np.asarray(rs, dtype=np.float64),
        cap,
    )


def step_pedestrian(ped: PedestrianState, speed: float, dt: float) -> PedestrianState:
    """Advance a pedestrian speed*dt toward its current waypoint.

    The forward vector re-aims at the waypoint before moving, the waypoint
    index advances once the pedestrian is within the capture radius, and the
    pedestrian halts (keeping its last forward) after the final waypoint.
    """
    if not dt > 0.0:
        raise ValueError("dt must be > 0")
    if ped.done:
        return ped
    wp = ped.waypoints[ped.waypoint_index]
    to_wp = wp - ped.position
    d = to_wp.norm()
    forward = ped.forward if d < 1e-12 else to_wp.scaled(1.0 / d)
    pos = ped.position + forward.scaled(speed * dt)
    idx = ped.waypoint_index
    while idx < len(ped.waypoints) and _reached(pos, ped.waypoints[idx]):
        idx += 1
    return replace(ped, position=pos, forward=forward, waypoint_index=idx)


def _reached(p: Vec2, wp: Vec2) -> bool:
    dx = p.x - wp.x
    dy = p.y - wp.y
    return math.sqrt(dx * dx + dy * dy) < WAYPOINT_CAPTURE
