"""Deterministic scenario simulation: world stepping, outcome detection,
metrics, and the builtin scenario catalog.

A run advances on a fixed step (default 0.05 s).  Sensing and replanning
happen every sensor frame (default 0.1 s); between replans the last unicycle
command holds.  Pedestrians follow their waypoint scripts at the
crowding-dependent walking speed, with every other agent (pedestrians, the
robot, wall discs) eating into their front space.  Everything is driven by a
single seeded generator, so equal seeds give bit-identical runs.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Sequence

import numpy as np

from . import _kernels
from .core import FrozoneConfig, FrozoneDecision
from .geometry import Pfz, Vec2, contains, dist, rotate
from .pedestrian import FdParams, PedestrianState, step_pedestrian, walking_speed
from .planners import (
    DwaParams,
    HybridDecision,
    PlannerBranch,
    RobotState,
    dwa_select,
    hybrid_step,
    _command_vector,
)
from .sensing import LidarConfig, SensorConfig, SensorFrame, estimate_motion, sense, sense_arc

PF_MAX = 10.0  # score granted for passing every close pedestrian from behind
STATIC_ID_BASE = 1000  # sensing ids for wall discs live above this


class Outcome(Enum):
    SUCCESS = "success"
    COLLISION = "collision"
    FROZEN = "frozen"
    TIMEOUT = "timeout"


@dataclass(frozen=True)
class PedScript:
    start: Vec2
    waypoints: tuple[Vec2, ...]
    pref_speed: float = 1.3
    radius: float = 0.25


@dataclass(frozen=True)
class StaticDisc:
    x: float
    y: float
    radius: float


@dataclass(frozen=True)
class RobotSpec:
    start: Vec2 = Vec2(0.0, 0.0)
    heading: float = 0.0
    goal: Vec2 = Vec2(8.0, 0.0)
    radius: float = 0.3
    v_max: float = 0.6
    w_max: float = 1.5


@dataclass(frozen=True)
class ScenarioConfig:
    name: str
    seed: int = 0
    duration_limit: float = 120.0
    planner: str = "hybrid"  # "hybrid", "baseline", or "none" (script-only)
    robot: RobotSpec = RobotSpec()
    pedestrians: tuple[PedScript, ...] = ()
    statics: tuple[StaticDisc, ...] = ()
    bounds: tuple[float, float, float, float] = (-5.0, -5.0, 15.0, 5.0)
    sensing: SensorConfig = SensorConfig()
    lidar: LidarConfig = LidarConfig()
    frozone: FrozoneConfig = FrozoneConfig()
    dwa: DwaParams = DwaParams()
    fd: FdParams = FdParams()
    sim_dt: float = 0.05
    accel: float = 0.5  # m/s^2 linear rate limit applied to commands
    heading_gain: float = 2.0  # 1/s, proportional heading controller
    goal_tolerance: float = 0.3  # m
    freeze_window: float = 10.0  # s
    freeze_displacement: float = 0.2  # m
    freeze_goal_margin: float = 0.5  # m
    ped_jitter: float = 0.0  # per-seed start-position noise, m
    speed_jitter: float = 0.0  # per-seed preferred-speed noise, m/s
    front_space_cap: float = 4.0  # m
    # Sensor noise makes the deviation trigger flicker; a maneuver keeps
    # applying its last rotation for this long after the trigger last fired,
    # instead of snapping straight back toward the pedestrian.
    maneuver_hold: float = 1.5  # s

    def __post_init__(self) -> None:
        if not self.duration_limit > 0.0:
            raise ValueError("duration_limit must be > 0")
        if not self.sim_dt > 0.0:
            raise ValueError("sim_dt must be > 0")
        if self.planner not in ("hybrid", "baseline", "none"):
            raise ValueError("planner must be 'hybrid', 'baseline', or 'none'")


@dataclass(frozen=True)
class WorldState:
    time: float
    robot: RobotState
    pedestrians: tuple[PedestrianState, ...]
    statics: tuple[StaticDisc, ...]
    bounds: tuple[float, float, float, float]


@dataclass(frozen=True)
class TrajectoryRecord:
    t: float
    robot_x: float
    robot_y: float
    robot_heading: float
    cmd_v: float
    cmd_w: float
    branch: str
    triggered: bool
    phi: float
    sweep_feasible: bool
    post_clear: bool
    obs_count: int
    ped_xy: tuple[float, ...]  # world x, y per scripted pedestrian


@dataclass
class RunReport:
    scenario: str
    seed: int
    outcome: Outcome
    time_to_goal: float | None
    avg_speed: float
    pf: float
    min_ped_dist: float | None
    froze: bool
    trajectory: list[TrajectoryRecord] = field(default_factory=list)
    pfz_events: list[tuple[float, Pfz]] = field(default_factory=list)
    n_peds: int = 0


def freeze_detector(
    window: Sequence[tuple[float, Vec2]],
    goal: Vec2,
    span: float = 10.0,
    max_displacement: float = 0.2,
    goal_margin: float = 0.5,
) -> bool:
    """True when a full window of samples shows no real progress.

    The window must cover at least `span` seconds (shorter windows are
    insufficient evidence), the net start-to-end displacement must stay under
    `max_displacement`, and the robot must still be away from its goal.
    """
    if len(window) < 2:
        return False
    t0, p0 = window[0]
    t1, p1 = window[-1]
    if t1 - t0 < span - 1e-9:
        return False
    if dist(p1, goal) <= goal_margin:
        return False
    return dist(p0, p1) < max_displacement


def frp_predicate(
    ped_positions: Sequence[Vec2], omega: float, cfg: SensorConfig
) -> bool:
    """Freezing-situation test on robot-frame pedestrian positions.

    Holds when the pedestrians inside the (forward-extended) sensing region
    are all within omega of the robot and can be ordered into a chain whose
    consecutive gaps are all below 2*omega.  The region is extended back to
    the robot body: with omega at or below the blind offset the literal
    offset square could never witness the situation it defines.
    """
    half = cfg.side / 2.0
    in_region = [
        p
        for p in ped_positions
        if 0.0 <= p.x <= cfg.offset + cfg.side and -half <= p.y <= half
    ]
    if not in_region:
        return False
    origin = Vec2(0.0, 0.0)
    if any(dist(origin, p) > omega for p in in_region):
        return False
    if len(in_region) == 1:
        return True
    gap = 2.0 * omega
    if len(in_region) <= 8:
        for order in itertools.permutations(in_region):
            if all(dist(order[i], order[i + 1]) < gap for i in range(len(order) - 1)):
                return True
        return False
    ordered = sorted(in_region, key=lambda p: math.atan2(p.y, p.x))
    return all(dist(ordered[i], ordered[i + 1]) < gap for i in range(len(ordered) - 1))


class Simulation:
    """One scenario run.  Owns all mutable state; step() advances sim_dt."""

    def __init__(self, cfg: ScenarioConfig):
        self.cfg = cfg
        self.rng = np.random.default_rng(cfg.seed)
        self.peds: list[PedestrianState] = []
        for script in cfg.pedestrians:
            jx = self.rng.normal(0.0, cfg.ped_jitter) if cfg.ped_jitter > 0 else 0.0
            jy = self.rng.normal(0.0, cfg.ped_jitter) if cfg.ped_jitter > 0 else 0.0
            js = self.rng.normal(0.0, cfg.speed_jitter) if cfg.speed_jitter > 0 else 0.0
            start = Vec2(script.start.x + jx, script.start.y + jy)
            pref = min(max(script.pref_speed + js, 0.1), 3.0)
            if script.waypoints and dist(start, script.waypoints[0]) > 1e-9:
                forward = (script.waypoints[0] - start).normalized()
            else:
                forward = Vec2(1.0, 0.0)
            self.peds.append(
                PedestrianState(
                    position=start,
                    forward=forward,
                    pref_speed=pref,
                    radius=script.radius,
                    waypoints=script.waypoints,
                )
            )
        r = cfg.robot
        self.robot = RobotState(
            position=r.start,
            heading=r.heading,
            lin_vel=0.0,
            ang_vel=0.0,
            goal=r.goal,
            radius=r.radius,
            v_max=r.v_max,
            w_max=r.w_max,
        )
        self.step_index = 0
        self.steps_per_replan = max(1, round(cfg.sensing.frame_dt / cfg.sim_dt))
        self.prev_frame: SensorFrame | None = None
        self.side_hint = 0.0  # sign of the avoidance maneuver in progress
        self._last_trigger_t = -math.inf
        self._held_phi = 0.0
        self.cmd_v = 0.0
        self.cmd_w = 0.0
        self.v_real = 0.0
        self.outcome: Outcome | None = None
        self.time_to_goal: float | None = None
        self.froze = False
        self.path_length = 0.0
        self.min_ped_dist = math.inf
        self._closest: list[tuple[float, float]] = [
            (math.inf, 1.0) for _ in self.peds
        ]  # (min distance, behind-dot at that instant)
        self._window: deque[tuple[float, Vec2]] = deque()
        self._window.append((0.0, self.robot.position))
        self.records: list[TrajectoryRecord] = []
        self.pfz_events: list[tuple[float, Pfz]] = []

    @property
    def t(self) -> float:
        return self.step_index * self.cfg.sim_dt

    @property
    def world(self) -> WorldState:
        return WorldState(
            self.t, self.robot, tuple(self.peds), self.cfg.statics, self.cfg.bounds
        )

    def _agents(self) -> list[tuple[int, Vec2]]:
        out = [(i, p.position) for i, p in enumerate(self.peds)]
        out.extend(
            (STATIC_ID_BASE + j, Vec2(s.x, s.y)) for j, s in enumerate(self.cfg.statics)
        )
        return out

    def _replan(self) -> None:
        cfg = self.cfg
        pose = (self.robot.position.x, self.robot.position.y, self.robot.heading)
        agents = self._agents()
        raw = sense(agents, pose, cfg.sensing, self.rng, self.t)
        frame = estimate_motion(self.prev_frame, raw) if self.prev_frame else raw
        self.prev_frame = frame
        planner_frame = sense_arc(agents, pose, cfg.lidar, self.rng, self.t)

        fz: FrozoneDecision | None = None
        if cfg.planner == "hybrid":
            decision: HybridDecision = hybrid_step(
                self.robot, frame, cfg.frozone, cfg.dwa, cfg.sensing.side,
                self.side_hint, planner_frame,
            )
            vel = decision.velocity
            branch = decision.choice.branch.value
            fz = decision.frozone
        elif cfg.planner == "baseline":
            cmd = dwa_select(self.robot, planner_frame, cfg.dwa)
            vel = _command_vector(cmd, cfg.dwa)
            branch = PlannerBranch.BASELINE.value
        else:  # "none": scripted world, robot holds still
            vel = Vec2(0.0, 0.0)
            branch = PlannerBranch.BASELINE.value

        triggered = bool(fz and fz.triggered)
        phi = fz.phi if fz else 0.0
        sweep_feasible = fz.sweep_feasible if fz else True
        post_clear = True
        if triggered and fz and fz.pfz is not None and fz.lookahead is not None:
            post_clear = not contains(fz.pfz, rotate(fz.lookahead, fz.phi))
            self.pfz_events.append((self.t, fz.pfz))
        # The trigger flickers with sensor noise.  While a maneuver is in
        # progress, briefly-untriggered ticks keep applying the last rotation
        # instead of snapping straight back toward the pedestrian, and the
        # committed side is kept alive for the same grace period.
        if triggered:
            self._last_trigger_t = self.t
            self._held_phi = phi
            if phi != 0.0:
                self.side_hint = math.copysign(1.0, phi)
        elif self.t - self._last_trigger_t <= cfg.maneuver_hold:
            if (
                fz is not None  # on the avoidance branch this tick
                and self._held_phi != 0.0
            ):
                vel = rotate(vel, self._held_phi)
        else:
            self.side_hint = 0.0
            self._held_phi = 0.0

        self.cmd_v, self.cmd_w = self._realize(vel)

        ped_xy: list[float] = []
        for p in self.peds:
            ped_xy.append(p.position.x)
            ped_xy.append(p.position.y)
        self.records.append(
            TrajectoryRecord(
                t=self.t,
                robot_x=self.robot.position.x,
                robot_y=self.robot.position.y,
                robot_heading=self.robot.heading,
                cmd_v=self.cmd_v,
                cmd_w=self.cmd_w,
                branch=branch,
                triggered=triggered,
                phi=phi,
                sweep_feasible=sweep_feasible,
                post_clear=post_clear,
                obs_count=len(frame.observations),
                ped_xy=tuple(ped_xy),
            )
        )

    def _realize(self, vel: Vec2) -> tuple[float, float]:
        """Turn a robot-frame velocity vector into a (v, w) unicycle command."""
        cfg = self.cfg
        n = vel.norm()
        if n < 1e-9:
            return 0.0, 0.0
        delta = math.atan2(vel.y, vel.x)
        w = max(-self.robot.w_max, min(self.robot.w_max, cfg.heading_gain * delta))
        v = min(n, self.robot.v_max) * max(math.cos(delta), 0.0)
        return v, w

    def step(self) -> None:
        """Advance one sim_dt: replan if due, integrate robot, move crowd."""
        cfg = self.cfg
        dt = cfg.sim_dt
        if self.step_index % self.steps_per_replan == 0:
            self._replan()

        # robot: rate-limited linear speed, commanded turn rate
        dv = self.cmd_v - self.v_real
        max_dv = cfg.accel * dt
        if dv > max_dv:
            dv = max_dv
        elif dv < -max_dv:
            dv = -max_dv
        self.v_real += dv
        pos = self.robot.position
        heading = self.robot.heading
        new_pos = Vec2(
            pos.x + self.v_real * math.cos(heading) * dt,
            pos.y + self.v_real * math.sin(heading) * dt,
        )
        new_heading = _wrap(heading + self.cmd_w * dt)
        self.path_length += dist(pos, new_pos)
        self.robot = replace(
            self.robot,
            position=new_pos,
            heading=new_heading,
            lin_vel=self.v_real,
            ang_vel=self.cmd_w,
        )

        # pedestrians: speeds from the crowding law on a frozen snapshot,
        # then everyone moves
        discs = [(p.position, p.radius) for p in self.peds]
        discs.extend((Vec2(s.x, s.y), s.radius) for s in self.cfg.statics)
        robot_disc = (self.robot.position, self.robot.radius)
        speeds = []
        for i, p in enumerate(self.peds):
            if p.done:
                speeds.append(0.0)
                continue
            # disc sweep: other agents inflated by this pedestrian's radius
            others = [
                (c, r + p.radius)
                for j, (c, r) in enumerate(discs[: len(self.peds)])
                if j != i
            ]
            others.extend((c, r + p.radius) for c, r in discs[len(self.peds) :])
            others.append((robot_disc[0], robot_disc[1] + p.radius))
            s = _ray_free_space(
                p.position, p.forward, 0.0, others, cfg.front_space_cap
            )
            speeds.append(walking_speed(s, cfg.fd, p.pref_speed))
        self.peds = [
            step_pedestrian(p, speeds[i], dt) if not p.done else p
            for i, p in enumerate(self.peds)
        ]

        self.step_index += 1
        t = self.t

        # outcome checks: collision, then goal, then freeze
        for i, p in enumerate(self.peds):
            d = dist(self.robot.position, p.position)
            if d < self.min_ped_dist:
                self.min_ped_dist = d
            if d < self._closest[i][0]:
                rel = self.robot.position - p.position
                self._closest[i] = (d, rel.dot(p.forward))
            if d < self.robot.radius + p.radius:
                self.outcome = Outcome.COLLISION
                return
        for s in cfg.statics:
            if dist(self.robot.position, Vec2(s.x, s.y)) < self.robot.radius + s.radius:
                self.outcome = Outcome.COLLISION
                return
        if dist(self.robot.position, self.robot.goal) <= cfg.goal_tolerance:
            self.outcome = Outcome.SUCCESS
            self.time_to_goal = t
            return
        self._window.append((t, self.robot.position))
        while self._window[0][0] < t - cfg.freeze_window - 1e-9:
            self._window.popleft()
        if freeze_detector(
            self._window,
            self.robot.goal,
            cfg.freeze_window,
            cfg.freeze_displacement,
            cfg.freeze_goal_margin,
        ):
            self.froze = True
            self.outcome = Outcome.FROZEN

    def run(self) -> RunReport:
        cfg = self.cfg
        max_steps = int(math.floor(cfg.duration_limit / cfg.sim_dt + 1e-9))
        while self.outcome is None and self.step_index < max_steps:
            self.step()
        if self.outcome is None:
            self.outcome = Outcome.TIMEOUT
        elapsed = max(self.t, cfg.sim_dt)
        encounters = [c for c in self._closest if c[0] < cfg.frozone.eta]
        passed_behind = all(c[1] < 0.0 for c in encounters)
        if passed_behind:
            pf = PF_MAX
        else:
            pf = self.min_ped_dist
        return RunReport(
            scenario=cfg.name,
            seed=cfg.seed,
            outcome=self.outcome,
            time_to_goal=self.time_to_goal,
            avg_speed=self.path_length / elapsed,
            pf=pf,
            min_ped_dist=None if math.isinf(self.min_ped_dist) else self.min_ped_dist,
            froze=self.froze,
            trajectory=self.records,
            pfz_events=self.pfz_events,
            n_peds=len(self.peds),
        )


def _ray_free_space(
    origin: Vec2,
    direction: Vec2,
    self_radius: float,
    discs: list[tuple[Vec2, float]],
    cap: float,
) -> float:
    xs = np.array([c.x for c, _ in discs], dtype=np.float64)
    ys = np.array([c.y for c, _ in discs], dtype=np.float64)
    rs = np.array([r for _, r in discs], dtype=np.float64)
    return _kernels.ray_gap(
        origin.x, origin.y, direction.x, direction.y, self_radius, xs, ys, rs, cap
    )


def _wrap(angle: float) -> float:
    while angle > math.pi:
        angle -= 2.0 * math.pi
    while angle < -math.pi:
        angle += 2.0 * math.pi
    return angle


def run_scenario(cfg: ScenarioConfig) -> RunReport:
    """Run one scenario to its outcome."""
    return Simulation(cfg).run()


def run_batch(cfg: ScenarioConfig, n_seeds: int) -> tuple[list[RunReport], dict]:
    """Run n_seeds consecutive seeds and aggregate the headline metrics."""
    if n_seeds < 1:
        raise ValueError("n_seeds must be >= 1")
    reports = [run_scenario(replace(cfg, seed=cfg.seed + k)) for k in range(n_seeds)]
    return reports, aggregate(reports)


def aggregate(reports: list[RunReport]) -> dict:
    n = len(reports)
    successes = [r for r in reports if r.outcome is Outcome.SUCCESS]
    agg = {
        "n_runs": n,
        "success_rate": sum(r.outcome is Outcome.SUCCESS for r in reports) / n,
        "collision_rate": sum(r.outcome is Outcome.COLLISION for r in reports) / n,
        "freezing_rate": sum(r.froze for r in reports) / n,
        "timeout_rate": sum(r.outcome is Outcome.TIMEOUT for r in reports) / n,
        "mean_pf": sum(r.pf for r in reports) / n,
        "mean_time": (
            sum(r.time_to_goal for r in successes) / len(successes)
            if successes
            else None
        ),
        "avg_velocity": (
            sum(r.avg_speed for r in successes) / len(successes) if successes else None
        ),
    }
    return agg


def _wall(x0: float, y0: float, x1: float, y1: float, spacing: float = 0.5,
          radius: float = 0.2) -> list[StaticDisc]:
    """Discretize a wall segment into fixed discs."""
    length = math.sqrt((x1 - x0) ** 2 + (y1 - y0) ** 2)
    n = max(1, int(round(length / spacing)))
    out = []
    for k in range(n + 1):
        t = k / n
        out.append(StaticDisc(x0 + t * (x1 - x0), y0 + t * (y1 - y0), radius))
    return out


# Builtin scenarios share one sensing/crowd tuning: a wide field of view (the
# square region does the limiting), light position noise, and a walking law
# that only brakes pedestrians inside ~1.3 m of an obstruction so that scripted
# approach speeds survive until the interaction actually happens.
_SCENARIO_SENSING = SensorConfig(fov=3.1, pos_noise_sigma=0.01)
_SCENARIO_FD = FdParams(alpha=2.0)


def _scenario(name: str, **kw) -> ScenarioConfig:
    kw.setdefault("sensing", _SCENARIO_SENSING)
    kw.setdefault("fd", _SCENARIO_FD)
    return ScenarioConfig(name=name, **kw)


def _corridor() -> ScenarioConfig:
    statics = _wall(-1.0, -2.0, 13.0, -2.0) + _wall(-1.0, 2.0, 13.0, 2.0)
    peds = []
    rows = [4.0, 5.5, 7.0, 8.5, 10.0]
    for x in rows:
        for lane in (-1.0, 1.0):  # pairs walking straight at the robot
            peds.append(
                PedScript(Vec2(x, lane), (Vec2(-2.0, lane),), pref_speed=1.1)
            )
        # middle walker zig-zags between lanes on the way out
        peds.append(
            PedScript(
                Vec2(x, 0.0),
                (Vec2(x - 2.5, 0.9), Vec2(x - 5.0, -0.9), Vec2(-2.0, 0.0)),
                pref_speed=1.0,
            )
        )
    return _scenario(
        "corridor",
        robot=RobotSpec(goal=Vec2(11.0, 0.0)),
        pedestrians=tuple(peds),
        statics=tuple(statics),
        bounds=(-2.5, -2.5, 13.5, 2.5),
        ped_jitter=0.25,
        speed_jitter=0.1,
    )


def _crossing() -> ScenarioConfig:
    statics = (
        _wall(-1.0, -2.0, 4.5, -2.0)
        + _wall(7.5, -2.0, 13.0, -2.0)
        + _wall(-1.0, 2.0, 4.5, 2.0)
        + _wall(7.5, 2.0, 13.0, 2.0)
        + _wall(4.5, 2.0, 4.5, 7.0)
        + _wall(7.5, 2.0, 7.5, 7.0)
        + _wall(4.5, -2.0, 4.5, -7.0)
        + _wall(7.5, -2.0, 7.5, -7.0)
    )
    peds = []
    # perpendicular flow through the junction, staggered to meet the robot
    for k, y0 in enumerate((-7.0, -9.0, -11.0, -13.0)):
        x = 5.3 if k % 2 == 0 else 6.1
        peds.append(PedScript(Vec2(x, y0), (Vec2(x, 8.0),), pref_speed=1.2))
    for k, y0 in enumerate((7.5, 9.5, 11.5, 13.5)):
        x = 6.7 if k % 2 == 0 else 5.9
        peds.append(PedScript(Vec2(x, y0), (Vec2(x, -8.0),), pref_speed=1.2))
    return _scenario(
        "crossing",
        robot=RobotSpec(goal=Vec2(12.0, 0.0)),
        pedestrians=tuple(peds),
        statics=tuple(statics),
        bounds=(-2.5, -14.0, 13.5, 14.0),
        ped_jitter=0.2,
        speed_jitter=0.1,
    )


def _random_5() -> ScenarioConfig:
    peds = (
        PedScript(Vec2(3.0, -2.5), (Vec2(3.5, 2.5),), pref_speed=1.1),
        PedScript(Vec2(4.5, 2.5), (Vec2(4.0, -2.5),), pref_speed=1.2),
        PedScript(Vec2(6.0, -2.0), (Vec2(2.0, 2.0),), pref_speed=1.0),
        PedScript(Vec2(6.5, 0.0), (Vec2(-1.0, 0.0),), pref_speed=1.0),
        PedScript(Vec2(2.5, 1.5), (Vec2(5.0, -1.5),), pref_speed=0.9),
    )
    return _scenario(
        "random-5",
        duration_limit=90.0,
        robot=RobotSpec(goal=Vec2(8.0, 0.0)),
        pedestrians=peds,
        bounds=(-2.0, -4.0, 10.0, 4.0),
        ped_jitter=0.35,
        speed_jitter=0.15,
    )


def _random_10() -> ScenarioConfig:
    # ten walkers funnel through a gate ahead of the robot and disperse, so
    # the observed count briefly exceeds the density switch threshold
    center = Vec2(4.5, 0.0)
    peds = []
    for k in range(10):
        ang = 2.0 * math.pi * k / 10.0 + 0.3
        start = center + Vec2(3.2 * math.cos(ang), 2.6 * math.sin(ang))
        through = center + Vec2(0.4 * math.cos(ang + math.pi), 0.4 * math.sin(ang + math.pi))
        exit_pt = center + Vec2(3.6 * math.cos(ang + math.pi), 3.2 * math.sin(ang + math.pi))
        peds.append(
            PedScript(start, (through, exit_pt), pref_speed=1.0 + 0.05 * (k % 4))
        )
    return _scenario(
        "random-10",
        duration_limit=90.0,
        robot=RobotSpec(goal=Vec2(10.0, 0.0)),
        pedestrians=tuple(peds),
        bounds=(-2.0, -5.0, 12.0, 5.0),
        ped_jitter=0.3,
        speed_jitter=0.1,
    )


def _one_ped(name: str, start_x: float) -> ScenarioConfig:
    # a walker approaches head-on at 1 m/s aiming at the robot's start point
    # and ends up halting in front of it, the classic freezing situation
    ped = PedScript(Vec2(start_x, 0.0), (Vec2(0.0, 0.0),), pref_speed=1.0)
    return _scenario(
        name,
        duration_limit=60.0,
        robot=RobotSpec(goal=Vec2(8.0, 0.0)),
        pedestrians=(ped,),
        bounds=(-2.0, -3.0, 10.0, 3.0),
        ped_jitter=0.1,
        speed_jitter=0.05,
    )


def _ped_perp(name: str, cross_x: float) -> ScenarioConfig:
    # a walker crosses the robot's path at right angles, timed to meet it
    # cross_x meters ahead of the start
    t_arrival = 1.2 + (cross_x - 0.36) / 0.6  # accel phase, then cruise
    y0 = -(t_arrival - 0.4)  # slightly early: the walker is mid-path on arrival
    ped = PedScript(Vec2(cross_x, y0), (Vec2(cross_x, 5.0),), pref_speed=1.0)
    return _scenario(
        name,
        duration_limit=60.0,
        robot=RobotSpec(goal=Vec2(8.0, 0.0)),
        pedestrians=(ped,),
        bounds=(-2.0, -9.0, 10.0, 7.0),
        ped_jitter=0.1,
        speed_jitter=0.05,
    )


def builtin_scenarios() -> dict[str, ScenarioConfig]:
    """The benchmark catalog, keyed by scenario name."""
    scenarios = [
        _corridor(),
        _crossing(),
        _random_5(),
        _random_10(),
        _one_ped("1ped-3m", 3.0),
        _one_ped("1ped-4m", 4.0),
        _ped_perp("ped-perp-3m", 3.0),
        _ped_perp("ped-perp-4m", 4.0),
    ]
    return {s.name: s for s in scenarios}
