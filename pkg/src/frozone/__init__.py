"""Freezing-aware crowd navigation.

Classifies nearby pedestrians, predicts where the troublesome ones will be,
wraps those predictions in a conservative zone, and bends the robot's guiding
velocity around it by a bounded angle.  Ships with a sampling-based baseline
planner, a deterministic 2-D scenario simulator, and a benchmark CLI.
"""

from ._kernels import BACKEND
from .core import (
    Branch,
    DeviationResult,
    FrozoneConfig,
    PedLabel,
    build_pfz,
    classify,
    deviation_angle,
    frozone_step,
    predict,
    should_deviate,
)
from .geometry import (
    Circle,
    ConvexPolygon,
    InflatedSegment,
    Pfz,
    Vec2,
    contains,
    convex_hull,
    dist,
    dist_to_zone,
    rotate,
)
from .pedestrian import FdParams, PedestrianState, front_space, step_pedestrian, walking_speed
from .planners import (
    DwaParams,
    PlannerBranch,
    PlannerChoice,
    RobotState,
    baseline_velocity,
    hybrid_select,
    hybrid_step,
)
from .sensing import (
    Observation,
    SensorConfig,
    SensorFrame,
    SyntheticBBox,
    bbox_to_position,
    estimate_motion,
    position_to_bbox,
    sense,
)
from .simulator import (
    Outcome,
    RunReport,
    ScenarioConfig,
    builtin_scenarios,
    freeze_detector,
    frp_predicate,
    run_batch,
    run_scenario,
)

__version__ = "0.1.0"
