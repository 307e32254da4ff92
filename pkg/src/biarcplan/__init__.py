"""Biarc motion primitives with closed-form swept collision detection."""

from .errors import (
    BiarcPlanError,
    CoincidentEndpointsError,
    DegenerateCenterError,
    HeadingMismatchError,
    NoPathError,
    PoleError,
)
from .geometry import (
    ArcSegment,
    Biarc,
    BiarcMetrics,
    ChordFrame,
    JointLocus,
    Pose,
    biarc_equal_chord,
    biarc_with_alpha,
    chord_frame,
    joint_locus,
    sinc,
    wrap_angle,
)

__all__ = [
    "ArcSegment",
    "Biarc",
    "BiarcMetrics",
    "BiarcPlanError",
    "ChordFrame",
    "CoincidentEndpointsError",
    "DegenerateCenterError",
    "HeadingMismatchError",
    "JointLocus",
    "NoPathError",
    "Pose",
    "PoleError",
    "biarc_equal_chord",
    "biarc_with_alpha",
    "chord_frame",
    "joint_locus",
    "sinc",
    "wrap_angle",
]
