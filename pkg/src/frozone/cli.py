"""Scenario config parsing, run serialization, SVG plots, and the CLI.

Config files are a single JSON object; unknown keys are rejected with the
offending location so typos fail loudly.  Every writer is deterministic:
identical runs produce byte-identical CSV, JSON, and SVG output.

Exit codes: 0 success, 1 validation error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import asdict, replace
from pathlib import Path
from typing import Any

from .core import FrozoneConfig
from .geometry import Circle, ConvexPolygon, InflatedSegment, Vec2
from .pedestrian import FdParams
from .planners import DwaParams
from .sensing import LidarConfig, SensorConfig
from .simulator import (
    PedScript,
    RobotSpec,
    RunReport,
    ScenarioConfig,
    StaticDisc,
    TrajectoryRecord,
    aggregate,
    builtin_scenarios,
    run_batch,
)

SCHEMA_VERSION = 1
SVG_SCALE = 40.0  # px per meter


class ConfigError(ValueError):
    """Raised for malformed scenario configs, naming key and location."""


def _fail(loc: str, message: str) -> None:
    raise ConfigError(f"{loc}: {message}" if loc else message)


def _take(d: dict, key: str, kind, loc: str, default=None, required=False):
    if key not in d:
        if required:
            _fail(loc, f"missing required key '{key}'")
        return default
    val = d.pop(key)
    if kind is float and isinstance(val, int) and not isinstance(val, bool):
        val = float(val)
    if not isinstance(val, kind) or isinstance(val, bool) and kind is not bool:
        _fail(f"{loc}.{key}" if loc else key, f"expected {kind.__name__}")
    return val


def _vec(raw: Any, loc: str) -> Vec2:
    if not isinstance(raw, list) or len(raw) != 2:
        _fail(loc, "expected a [x, y] pair")
    return Vec2(float(raw[0]), float(raw[1]))


def _no_extras(d: dict, loc: str) -> None:
    if d:
        key = sorted(d)[0]
        _fail(f"{loc}.{key}" if loc else key, "unknown key")


def _sub_config(raw: dict, loc: str, cls, defaults):
    """Build a parameter dataclass from a dict of overrides."""
    if not isinstance(raw, dict):
        _fail(loc, "expected an object")
    kwargs = {}
    names = {f for f in defaults.__dataclass_fields__}
    for key in list(raw):
        if key not in names:
            _fail(f"{loc}.{key}", "unknown key")
        val = raw.pop(key)
        if isinstance(val, bool) or not isinstance(val, (int, float)):
            _fail(f"{loc}.{key}", "expected a number")
        field_type = type(getattr(defaults, key))
        kwargs[key] = int(val) if field_type is int else float(val)
    try:
        return replace(defaults, **kwargs)
    except ValueError as e:
        _fail(loc, str(e))


def parse_scenario_dict(raw: dict, loc: str = "") -> ScenarioConfig:
    if not isinstance(raw, dict):
        _fail(loc, "config must be a JSON object")
    raw = dict(raw)

    base_name = _take(raw, "name", str, loc, required=True)
    base = _take(raw, "base", str, loc)
    if base is not None:
        catalog = builtin_scenarios()
        if base not in catalog:
            _fail(f"{loc}.base" if loc else "base", f"unknown builtin '{base}'")
        defaults = replace(catalog[base], name=base_name)
    else:
        defaults = ScenarioConfig(name=base_name)

    kwargs: dict[str, Any] = {}
    if "seed" in raw:
        kwargs["seed"] = _take(raw, "seed", int, loc)
    for key in (
        "duration_limit",
        "sim_dt",
        "accel",
        "heading_gain",
        "goal_tolerance",
        "freeze_window",
        "freeze_displacement",
        "freeze_goal_margin",
        "ped_jitter",
        "speed_jitter",
        "front_space_cap",
        "maneuver_hold",
    ):
        if key in raw:
            kwargs[key] = _take(raw, key, float, loc)
    if "planner" in raw:
        planner = _take(raw, "planner", str, loc)
        if planner not in ("hybrid", "baseline", "none"):
            _fail(f"{loc}.planner" if loc else "planner", "must be 'hybrid' or 'baseline'")
        kwargs["planner"] = planner

    if "robot" in raw:
        rd = raw.pop("robot")
        rloc = f"{loc}.robot" if loc else "robot"
        if not isinstance(rd, dict):
            _fail(rloc, "expected an object")
        rd = dict(rd)
        rkw = {}
        if "start" in rd:
            rkw["start"] = _vec(rd.pop("start"), f"{rloc}.start")
        if "goal" in rd:
            rkw["goal"] = _vec(rd.pop("goal"), f"{rloc}.goal")
        for key in ("heading", "radius", "v_max", "w_max"):
            if key in rd:
                rkw[key] = _take(rd, key, float, rloc)
        _no_extras(rd, rloc)
        kwargs["robot"] = replace(defaults.robot, **rkw)

    if "pedestrians" in raw:
        pl = raw.pop("pedestrians")
        ploc = f"{loc}.pedestrians" if loc else "pedestrians"
        if not isinstance(pl, list):
            _fail(ploc, "expected a list")
        peds = []
        for i, pd in enumerate(pl):
            iloc = f"{ploc}[{i}]"
            if not isinstance(pd, dict):
                _fail(iloc, "expected an object")
            pd = dict(pd)
            start = _vec(pd.pop("start", None), f"{iloc}.start")
            wps = pd.pop("waypoints", [])
            if not isinstance(wps, list):
                _fail(f"{iloc}.waypoints", "expected a list")
            waypoints = tuple(_vec(w, f"{iloc}.waypoints[{j}]") for j, w in enumerate(wps))
            pref = _take(pd, "pref_speed", float, iloc, default=1.3)
            radius = _take(pd, "radius", float, iloc, default=0.25)
            _no_extras(pd, iloc)
            try:
                peds.append(PedScript(start, waypoints, pref, radius))
            except ValueError as e:
                _fail(iloc, str(e))
        kwargs["pedestrians"] = tuple(peds)

    if "statics" in raw:
        sl = raw.pop("statics")
        sloc = f"{loc}.statics" if loc else "statics"
        if not isinstance(sl, list):
            _fail(sloc, "expected a list")
        statics = []
        for i, sd in enumerate(sl):
            iloc = f"{sloc}[{i}]"
            if not isinstance(sd, dict):
                _fail(iloc, "expected an object")
            sd = dict(sd)
            x = _take(sd, "x", float, iloc, required=True)
            y = _take(sd, "y", float, iloc, required=True)
            r = _take(sd, "radius", float, iloc, required=True)
            _no_extras(sd, iloc)
            statics.append(StaticDisc(x, y, r))
        kwargs["statics"] = tuple(statics)

    if "bounds" in raw:
        b = raw.pop("bounds")
        if not isinstance(b, list) or len(b) != 4:
            _fail(f"{loc}.bounds" if loc else "bounds", "expected [x0, y0, x1, y1]")
        kwargs["bounds"] = tuple(float(v) for v in b)

    for key, cls, current in (
        ("sensing", SensorConfig, defaults.sensing),
        ("lidar", LidarConfig, defaults.lidar),
        ("frozone", FrozoneConfig, defaults.frozone),
        ("dwa", DwaParams, defaults.dwa),
        ("fd", FdParams, defaults.fd),
    ):
        if key in raw:
            kwargs[key] = _sub_config(
                raw.pop(key), f"{loc}.{key}" if loc else key, cls, current
            )

    _no_extras(raw, loc)
    try:
        return replace(defaults, **kwargs)
    except ValueError as e:
        _fail(loc, str(e))


def parse_scenario(path: str | Path) -> ScenarioConfig:
    """Load and validate a scenario config file (JSON object)."""
    text = Path(path).read_text()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path}: invalid JSON: {e}") from e
    return parse_scenario_dict(raw)


def serialize_scenario(cfg: ScenarioConfig) -> dict:
    """Full config echo; parse_scenario_dict maps it back to an equal config."""
    return {
        "name": cfg.name,
        "seed": cfg.seed,
        "duration_limit": cfg.duration_limit,
        "planner": cfg.planner,
        "robot": {
            "start": [cfg.robot.start.x, cfg.robot.start.y],
            "heading": cfg.robot.heading,
            "goal": [cfg.robot.goal.x, cfg.robot.goal.y],
            "radius": cfg.robot.radius,
            "v_max": cfg.robot.v_max,
            "w_max": cfg.robot.w_max,
        },
        "pedestrians": [
            {
                "start": [p.start.x, p.start.y],
                "waypoints": [[w.x, w.y] for w in p.waypoints],
                "pref_speed": p.pref_speed,
                "radius": p.radius,
            }
            for p in cfg.pedestrians
        ],
        "statics": [{"x": s.x, "y": s.y, "radius": s.radius} for s in cfg.statics],
        "bounds": list(cfg.bounds),
        "sensing": asdict(cfg.sensing),
        "lidar": asdict(cfg.lidar),
        "frozone": asdict(cfg.frozone),
        "dwa": asdict(cfg.dwa),
        "fd": asdict(cfg.fd),
        "sim_dt": cfg.sim_dt,
        "accel": cfg.accel,
        "heading_gain": cfg.heading_gain,
        "goal_tolerance": cfg.goal_tolerance,
        "freeze_window": cfg.freeze_window,
        "freeze_displacement": cfg.freeze_displacement,
        "freeze_goal_margin": cfg.freeze_goal_margin,
        "ped_jitter": cfg.ped_jitter,
        "speed_jitter": cfg.speed_jitter,
        "front_space_cap": cfg.front_space_cap,
        "maneuver_hold": cfg.maneuver_hold,
    }


def resolve_scenario(name_or_path: str) -> ScenarioConfig:
    """Builtin name, or a path to a JSON config."""
    catalog = builtin_scenarios()
    if name_or_path in catalog:
        return catalog[name_or_path]
    path = Path(name_or_path)
    if not path.exists():
        raise ConfigError(
            f"'{name_or_path}' is neither a builtin scenario "
            f"({', '.join(sorted(catalog))}) nor an existing file"
        )
    return parse_scenario(path)


_CSV_FIXED = [
    "t",
    "robot_x",
    "robot_y",
    "robot_heading",
    "cmd_v",
    "cmd_w",
    "branch",
    "triggered",
    "phi",
    "sweep_feasible",
    "post_clear",
    "obs_count",
]


def write_trajectory(report: RunReport, path: str | Path) -> None:
    """Write one run's per-tick records as CSV (header mandatory)."""
    header = list(_CSV_FIXED)
    for i in range(report.n_peds):
        header.append(f"ped_{i}_x")
        header.append(f"ped_{i}_y")
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for r in report.trajectory:
            row = [
                repr(r.t),
                repr(r.robot_x),
                repr(r.robot_y),
                repr(r.robot_heading),
                repr(r.cmd_v),
                repr(r.cmd_w),
                r.branch,
                int(r.triggered),
                repr(r.phi),
                int(r.sweep_feasible),
                int(r.post_clear),
                r.obs_count,
            ]
            row.extend(repr(v) for v in r.ped_xy)
            w.writerow(row)


def read_trajectory(path: str | Path) -> list[TrajectoryRecord]:
    """Parse a trajectory CSV back into records."""
    out = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        n_fixed = len(_CSV_FIXED)
        if header[:n_fixed] != _CSV_FIXED:
            raise ConfigError(f"{path}: unexpected trajectory header")
        for row in reader:
            out.append(
                TrajectoryRecord(
                    t=float(row[0]),
                    robot_x=float(row[1]),
                    robot_y=float(row[2]),
                    robot_heading=float(row[3]),
                    cmd_v=float(row[4]),
                    cmd_w=float(row[5]),
                    branch=row[6],
                    triggered=bool(int(row[7])),
                    phi=float(row[8]),
                    sweep_feasible=bool(int(row[9])),
                    post_clear=bool(int(row[10])),
                    obs_count=int(row[11]),
                    ped_xy=tuple(float(v) for v in row[n_fixed:]),
                )
            )
    return out


def write_report(
    reports: list[RunReport], path: str | Path, config: ScenarioConfig
) -> None:
    """Write the batch report document (JSON, schema_version 1)."""
    doc = {
        "schema_version": SCHEMA_VERSION,
        "scenario": config.name,
        "planner": config.planner,
        "seeds": [r.seed for r in reports],
        "config": serialize_scenario(config),
        "runs": [
            {
                "seed": r.seed,
                "outcome": r.outcome.value,
                "time_to_goal": r.time_to_goal,
                "avg_speed": r.avg_speed,
                "pf": r.pf,
                "min_ped_dist": r.min_ped_dist,
                "froze": r.froze,
            }
            for r in reports
        ],
        "aggregate": aggregate(reports),
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_svg(report: RunReport, cfg: ScenarioConfig, path: str | Path) -> None:
    """Plot one run: robot path in green, pedestrians gray, zones red.

    The viewport maps 1 m to 40 px and element order is fixed, so repeated
    runs produce byte-identical files.
    """
    x0, y0, x1, y1 = cfg.bounds
    width = (x1 - x0) * SVG_SCALE
    height = (y1 - y0) * SVG_SCALE

    def px(x: float) -> str:
        return _fmt((x - x0) * SVG_SCALE)

    def py(y: float) -> str:
        return _fmt((y1 - y) * SVG_SCALE)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="#ffffff"/>',
    ]
    for s in cfg.statics:
        parts.append(
            f'<circle cx="{px(s.x)}" cy="{py(s.y)}" r="{_fmt(s.radius * SVG_SCALE)}" '
            f'fill="#555555"/>'
        )
    for i in range(report.n_peds):
        pts = " ".join(
            f"{px(r.ped_xy[2 * i])},{py(r.ped_xy[2 * i + 1])}" for r in report.trajectory
        )
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="#999999" stroke-width="2"/>'
        )
    for _, zone in report.pfz_events:
        if isinstance(zone, Circle):
            parts.append(
                f'<circle cx="{px(zone.center.x)}" cy="{py(zone.center.y)}" '
                f'r="{_fmt(zone.radius * SVG_SCALE)}" fill="#dd2222" opacity="0.3"/>'
            )
        elif isinstance(zone, InflatedSegment):
            parts.append(
                f'<line x1="{px(zone.a.x)}" y1="{py(zone.a.y)}" '
                f'x2="{px(zone.b.x)}" y2="{py(zone.b.y)}" stroke="#dd2222" '
                f'stroke-width="{_fmt(2 * zone.inflation * SVG_SCALE)}" '
                f'stroke-linecap="round" opacity="0.3"/>'
            )
        elif isinstance(zone, ConvexPolygon):
            pts = " ".join(f"{px(v.x)},{py(v.y)}" for v in zone.vertices)
            parts.append(f'<polygon points="{pts}" fill="#dd2222" opacity="0.3"/>')
    robot_pts = " ".join(
        f"{px(r.robot_x)},{py(r.robot_y)}" for r in report.trajectory
    )
    parts.append(
        f'<polyline points="{robot_pts}" fill="none" stroke="#22aa22" stroke-width="3"/>'
    )
    parts.append(
        f'<circle cx="{px(cfg.robot.start.x)}" cy="{py(cfg.robot.start.y)}" r="5" '
        f'fill="#22aa22"/>'
    )
    parts.append(
        f'<circle cx="{px(cfg.robot.goal.x)}" cy="{py(cfg.robot.goal.y)}" r="6" '
        f'fill="#ddaa00"/>'
    )
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n")


def _run_command(args: argparse.Namespace) -> int:
    cfg = resolve_scenario(args.scenario)
    if args.planner:
        cfg = replace(cfg, planner=args.planner)
    if args.sim_dt:
        cfg = replace(cfg, sim_dt=args.sim_dt)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    reports, agg = run_batch(cfg, args.seeds)
    stem = f"{cfg.name}_{cfg.planner}"
    for rep in reports:
        write_trajectory(rep, out_dir / f"{stem}_seed{rep.seed}.csv")
        if args.svg:
            render_svg(rep, cfg, out_dir / f"{stem}_seed{rep.seed}.svg")
    write_report(reports, out_dir / f"{stem}_report.json", cfg)
    print(f"{cfg.name} [{cfg.planner}] over {args.seeds} seed(s):")
    for key in (
        "success_rate",
        "freezing_rate",
        "collision_rate",
        "timeout_rate",
        "mean_time",
        "avg_velocity",
        "mean_pf",
    ):
        val = agg[key]
        print(f"  {key}: {'-' if val is None else f'{val:.3f}'}")
    print(f"  outputs in {out_dir}")
    return 0


def _compare_command(args: argparse.Namespace) -> int:
    cfg = resolve_scenario(args.scenario)
    rows = {}
    for planner in ("baseline", "hybrid"):
        _, agg = run_batch(replace(cfg, planner=planner), args.seeds)
        rows[planner] = agg
    keys = (
        "success_rate",
        "freezing_rate",
        "collision_rate",
        "timeout_rate",
        "mean_time",
        "avg_velocity",
        "mean_pf",
    )
    print(f"{cfg.name}, {args.seeds} seed(s) per planner")
    print(f"{'metric':<16}{'baseline':>12}{'hybrid':>12}")
    for key in keys:
        cells = [
            "-" if rows[p][key] is None else f"{rows[p][key]:.3f}"
            for p in ("baseline", "hybrid")
        ]
        print(f"{key:<16}{cells[0]:>12}{cells[1]:>12}")
    return 0


def _list_command(_args: argparse.Namespace) -> int:
    for name, cfg in sorted(builtin_scenarios().items()):
        print(
            f"{name:<14} peds={len(cfg.pedestrians):<3} "
            f"walls={len(cfg.statics):<4} goal=({cfg.robot.goal.x:g}, {cfg.robot.goal.y:g})"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frozone",
        description="Crowd-navigation scenario simulator and benchmark",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a scenario over one or more seeds")
    run_p.add_argument("--scenario", required=True, help="builtin name or config path")
    run_p.add_argument("--planner", choices=["baseline", "hybrid"], default=None)
    run_p.add_argument("--seeds", type=int, default=1)
    run_p.add_argument("--out", default="out")
    run_p.add_argument("--svg", action="store_true", help="also render SVG plots")
    run_p.add_argument("--sim-dt", type=float, default=None)
    run_p.set_defaults(func=_run_command)

    cmp_p = sub.add_parser("compare", help="run both planners and print the deltas")
    cmp_p.add_argument("--scenario", required=True)
    cmp_p.add_argument("--seeds", type=int, default=10)
    cmp_p.set_defaults(func=_compare_command)

    list_p = sub.add_parser("list-scenarios", help="list builtin scenarios")
    list_p.set_defaults(func=_list_command)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
