"""Guiding-velocity planners: a sampling-based local planner (the baseline)
and the density switch that decides when the freezing-avoidance layer runs.

The baseline samples (v, w) pairs on a grid inside the robot's kinematic
limits, rolls each pair out against the observed pedestrian discs, throws
away anything whose clearance drops below the hard floor, and scores the
survivors on goal alignment, clearance, and speed.  When every sample is
discarded it returns a zero velocity; that standstill is exactly the
behavior the freezing-avoidance layer exists to preempt.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels, core
from .geometry import Vec2, rotate
from .sensing import SensorFrame


@dataclass(frozen=True)
class RobotState:
    position: Vec2  # world frame, m
    heading: float  # rad
    lin_vel: float  # m/s
    ang_vel: float  # rad/s
    goal: Vec2  # world frame, m
    radius: float = 0.3
    v_max: float = 0.6
    w_max: float = 1.5

    def __post_init__(self) -> None:
        if not (0.0 <= self.lin_vel <= self.v_max + 1e-12):
            raise ValueError("lin_vel must be in [0, v_max]")
        if abs(self.ang_vel) > self.w_max + 1e-12:
            raise ValueError("|ang_vel| must be <= w_max")
        if self.radius <= 0.0 or self.v_max <= 0.0 or self.w_max <= 0.0:
            raise ValueError("radius, v_max, w_max must be > 0")

    def goal_in_robot_frame(self) -> Vec2:
        return rotate(self.goal - self.position, -self.heading)


@dataclass(frozen=True)
class DwaParams:
    v_samples: int = 11
    w_samples: int = 21
    rollout_time: float = 1.0  # s
    rollout_dt: float = 0.1  # s
    min_clearance: float = 0.5  # hard clearance floor (Omega), m
    clearance_cap: float = 1.0  # clearance beyond this scores no extra, m
    w_goal: float = 2.0
    # Clearance must stay worth less than the velocity term per meter, or
    # standing still strictly dominates and the planner parks far from any
    # obstacle instead of driving at the clearance-filter limit.
    w_clear: float = 0.3
    w_vel: float = 0.5
    ped_radius: float = 0.25  # assumed radius of an observed pedestrian, m

    def __post_init__(self) -> None:
        if self.v_samples < 2 or self.w_samples < 2:
            raise ValueError("need at least 2 samples per axis")
        if self.rollout_time <= 0.0 or self.rollout_dt <= 0.0:
            raise ValueError("rollout times must be > 0")
        if not 0.0 < self.min_clearance < self.clearance_cap:
            raise ValueError("need 0 < min_clearance < clearance_cap")


class PlannerBranch(Enum):
    FROZONE = "frozone"
    BASELINE = "baseline"


@dataclass(frozen=True)
class PlannerChoice:
    branch: PlannerBranch
    ped_count: int
    threshold: int


@dataclass(frozen=True)
class DwaCommand:
    v: float  # m/s
    w: float  # rad/s
    clearance: float  # worst rollout clearance, m (-1 when infeasible)
    score: float
    feasible: bool


def dwa_select(robot: RobotState, frame: SensorFrame, params: DwaParams) -> DwaCommand:
    """Run the sampler and return the winning command with its diagnostics."""
    xs = np.array([o.position.x for o in frame.observations], dtype=np.float64)
    ys = np.array([o.position.y for o in frame.observations], dtype=np.float64)
    rs = np.full(len(frame.observations), params.ped_radius + robot.radius)
    goal = robot.goal_in_robot_frame()
    v, w, clearance, score, feasible = _kernels.dwa_best(
        xs,
        ys,
        rs,
        goal.x,
        goal.y,
        robot.v_max,
        params.v_samples,
        robot.w_max,
        params.w_samples,
        params.rollout_time,
        params.rollout_dt,
        params.min_clearance,
        params.clearance_cap,
        params.w_goal,
        params.w_clear,
        params.w_vel,
    )
    if not feasible:
        return DwaCommand(0.0, 0.0, -1.0, -math.inf, False)
    return DwaCommand(v, w, clearance, score, True)


def _command_vector(cmd: DwaCommand, params: DwaParams) -> Vec2:
    # Direction is the mean heading over the rollout arc (w*T/2), which is
    # exactly the bearing of the arc's net displacement.
    if not cmd.feasible:
        return Vec2(0.0, 0.0)
    ang = cmd.w * params.rollout_time * 0.5
    return Vec2(cmd.v * math.cos(ang), cmd.v * math.sin(ang))


def baseline_velocity(
    robot: RobotState, frame: SensorFrame, params: DwaParams | None = None
) -> Vec2:
    """Best collision-checked velocity as a robot-frame vector.

    Zero when every sample collides; that is the freezing behavior the
    hybrid planner is meant to preempt.
    """
    params = params or DwaParams()
    return _command_vector(dwa_select(robot, frame, params), params)


def hybrid_select(frame: SensorFrame, sensing_side: float) -> PlannerChoice:
    """Density switch: the avoidance layer runs only up to side^2 pedestrians.

    With the square sensing region that count corresponds to one pedestrian
    per square meter; beyond it the guiding planner runs alone.
    """
    threshold = int(math.floor(sensing_side * sensing_side))
    count = len(frame.observations)
    branch = PlannerBranch.FROZONE if count <= threshold else PlannerBranch.BASELINE
    return PlannerChoice(branch, count, threshold)


@dataclass(frozen=True)
class HybridDecision:
    velocity: Vec2
    choice: PlannerChoice
    command: DwaCommand
    frozone: core.FrozoneDecision | None


def hybrid_step(
    robot: RobotState,
    frame: SensorFrame,
    fz_cfg: core.FrozoneConfig,
    params: DwaParams | None = None,
    sensing_side: float = 3.0,
    side_hint: float = 0.0,
    planner_frame: SensorFrame | None = None,
) -> HybridDecision:
    """Compute the guiding velocity and pipe it through the avoidance layer
    when the crowd is sparse enough.

    `frame` is the classification channel (the offset square region) and also
    provides the pedestrian count for the density switch.  `planner_frame`,
    when given, is a wider channel for the collision-checking sampler so the
    robot keeps seeing agents it has already out-turned; it defaults to
    `frame`.  side_hint carries the sign of a deviation already in progress
    so the avoidance layer does not flip sides between ticks.
    """
    params = params or DwaParams()
    cmd = dwa_select(robot, planner_frame or frame, params)
    guiding = _command_vector(cmd, params)
    choice = hybrid_select(frame, sensing_side)
    if choice.branch is PlannerBranch.BASELINE:
        return HybridDecision(guiding, choice, cmd, None)
    decision = core.evaluate(
        frame, robot.goal_in_robot_frame(), guiding, fz_cfg, side_hint
    )
    return HybridDecision(decision.velocity, choice, cmd, decision)
