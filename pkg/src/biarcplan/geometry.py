"""Planar poses, circular arcs, and tangent-continuous arc pairs (biarcs).

An arc is stored as (start pose, signed curvature, length); curvature zero
encodes a straight segment, so infinite radii never appear.  A biarc joins
two such arcs with a common tangent at the joint and is the motion
primitive used by everything else in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .errors import CoincidentEndpointsError, PoleError

TWO_PI = 2.0 * math.pi

# Position/angle tolerance used for continuity and endpoint checks (meters, radians).
GEOM_TOL = 1e-9
# Below this, two endpoints count as coincident and no chord frame exists.
COINCIDENT_TOL = 1e-12
# Heading differences below this make the joint locus a line instead of a circle.
DEGENERATE_GAMMA_TOL = 1e-9


def wrap_angle(angle: float) -> float:
    """Normalize an angle to (-pi, pi]."""
    a = math.remainder(angle, TWO_PI)
    if a <= -math.pi:
        a += TWO_PI
    return a


def sinc(x: float) -> float:
    """Unnormalized sinc, sin(x)/x with sinc(0) = 1.

    A 4-term Taylor series is used for |x| < 1e-4 to avoid cancellation.
    """
    if abs(x) < 1e-4:
        x2 = x * x
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0
    return math.sin(x) / x


@dataclass(frozen=True)
class Pose:
    """Planar position plus heading; theta is normalized to (-pi, pi]."""

    x: float
    y: float
    theta: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", wrap_angle(self.theta))

    @property
    def position(self) -> tuple[float, float]:
        return (self.x, self.y)

    def transformed(self, dx: float, dy: float, rot: float) -> "Pose":
        """Apply the rigid transform (rotate by rot about the origin, then translate)."""
        c, s = math.cos(rot), math.sin(rot)
        return Pose(c * self.x - s * self.y + dx, s * self.x + c * self.y + dy, self.theta + rot)


@dataclass(frozen=True)
class ArcSegment:
    """Circular arc traversed forward from ``start`` for ``length`` meters.

    Positive curvature turns counterclockwise; curvature zero is a straight
    segment.  The end pose follows exactly from the closed form: the heading
    advances by curvature * length and the position by a chord of length
    s * sinc(curvature * s / 2) along the mean heading.
    """

    start: Pose
    curvature: float
    length: float

    def __post_init__(self) -> None:
        if self.length < 0.0:
            raise ValueError(f"arc length must be >= 0, got {self.length}")

    @property
    def spanned_angle(self) -> float:
        return self.curvature * self.length

    @property
    def is_straight(self) -> bool:
        return abs(self.curvature) < 1e-12

    def center(self) -> tuple[float, float]:
        """Rotation center; only meaningful for non-straight arcs."""
        if self.is_straight:
            raise ValueError("straight segment has no rotation center")
        r = 1.0 / self.curvature
        th = self.start.theta
        return (self.start.x - r * math.sin(th), self.start.y + r * math.cos(th))

    def pose_at(self, s: float) -> Pose:
        """Pose after arclength s in [0, length]."""
        if s < -1e-12 or s > self.length + 1e-12:
            raise ValueError(f"arclength {s} outside [0, {self.length}]")
        s = min(max(s, 0.0), self.length)
        th = self.start.theta
        half = 0.5 * self.curvature * s
        chord = s * sinc(half)
        return Pose(
            self.start.x + chord * math.cos(th + half),
            self.start.y + chord * math.sin(th + half),
            th + self.curvature * s,
        )

    @cached_property
    def end(self) -> Pose:
        return self.pose_at(self.length)


def _arc_to_point(start: Pose, target: tuple[float, float]) -> ArcSegment:
    """Unique arc leaving ``start`` along its heading and ending at ``target``.

    The tangent/chord angle delta determines everything: the spanned angle is
    -2*delta, curvature -2*sin(delta)/chord, length chord/sinc(delta).  A
    target directly behind the start heading (|delta| = pi) has no finite arc.
    """
    dx = target[0] - start.x
    dy = target[1] - start.y
    chord = math.hypot(dx, dy)
    if chord <= COINCIDENT_TOL:
        raise CoincidentEndpointsError("arc target coincides with start")
    delta = wrap_angle(start.theta - math.atan2(dy, dx))
    if math.pi - abs(delta) < GEOM_TOL:
        raise PoleError("target lies directly behind the start heading")
    return ArcSegment(start, -2.0 * math.sin(delta) / chord, chord / sinc(delta))


def _arc_from_point(source: tuple[float, float], end: Pose) -> ArcSegment:
    """Unique arc from ``source`` that arrives at ``end`` along its heading."""
    dx = end.x - source[0]
    dy = end.y - source[1]
    chord = math.hypot(dx, dy)
    if chord <= COINCIDENT_TOL:
        raise CoincidentEndpointsError("arc source coincides with end")
    delta = wrap_angle(end.theta - math.atan2(dy, dx))
    if math.pi - abs(delta) < GEOM_TOL:
        raise PoleError("source lies directly ahead of the end heading")
    k = 2.0 * math.sin(delta) / chord
    start = Pose(source[0], source[1], end.theta - 2.0 * delta)
    return ArcSegment(start, k, chord / sinc(delta))


@dataclass(frozen=True)
class Biarc:
    """Two arcs with a common tangent at the joint.

    Positional continuity at the joint is always required.  The heading check
    is skipped when one arc has zero length: such biarcs degenerate to a
    single arc and the zero-length arc only carries the endpoint heading.
    """

    arc_a: ArcSegment
    arc_b: ArcSegment

    def __post_init__(self) -> None:
        ea, sb = self.arc_a.end, self.arc_b.start
        if math.hypot(ea.x - sb.x, ea.y - sb.y) > GEOM_TOL:
            raise ValueError("biarc arcs are not positionally continuous at the joint")
        if self.arc_a.length > 0.0 and self.arc_b.length > 0.0:
            if abs(wrap_angle(ea.theta - sb.theta)) > GEOM_TOL:
                raise ValueError("biarc arcs are not tangent-continuous at the joint")

    @property
    def start(self) -> Pose:
        return self.arc_a.start

    @property
    def end(self) -> Pose:
        return self.arc_b.end

    @property
    def joint(self) -> tuple[float, float]:
        return self.arc_b.start.position

    @property
    def length(self) -> float:
        return self.arc_a.length + self.arc_b.length

    def metrics(self) -> "BiarcMetrics":
        return BiarcMetrics(
            l_a=self.arc_a.length,
            l_b=self.arc_b.length,
            l=self.length,
            k_a=self.arc_a.curvature,
            k_b=self.arc_b.curvature,
            dk=self.arc_b.curvature - self.arc_a.curvature,
        )

    def pose_at(self, s: float) -> Pose:
        if s < self.arc_a.length:
            return self.arc_a.pose_at(s)
        return self.arc_b.pose_at(min(s - self.arc_a.length, self.arc_b.length))

    def sample(self, ds: float) -> list[Pose]:
        """Poses at arclengths 0, ds, 2ds, ..., plus the joint and both endpoints.

        Coincident abscissae are merged, so the result is strictly increasing
        in arclength.
        """
        if ds <= 0.0:
            raise ValueError("ds must be positive")
        total = self.length
        values = [i * ds for i in range(int(total / ds) + 1)]
        values.append(self.arc_a.length)
        values.append(total)
        values.sort()
        poses: list[Pose] = []
        last = -math.inf
        for s in values:
            if s - last < 1e-12:
                continue
            poses.append(self.pose_at(s))
            last = s
        return poses


@dataclass(frozen=True)
class BiarcMetrics:
    """Lengths and signed curvatures of the two arcs, plus their totals."""

    l_a: float
    l_b: float
    l: float
    k_a: float
    k_b: float
    dk: float


@dataclass(frozen=True)
class ChordFrame:
    """Chord-aligned frame for a pose pair: unit vectors, headings, angles.

    ``u`` points from A to B, ``v`` is u rotated +90 degrees.  ``phi_a`` and
    ``phi_b`` are the headings measured from the chord, ``gamma`` their
    difference (in (-2pi, 2pi)), and ``alpha_ha``/``alpha_hb`` locate the
    infinite-length joint placements on the joint locus.
    """

    a: Pose
    b: Pose
    ux: float
    uy: float
    vx: float
    vy: float
    chord: float
    mid: tuple[float, float]
    phi_a: float
    phi_b: float
    gamma: float
    phi_m: float
    alpha_ha: float
    alpha_hb: float

    @property
    def degenerate(self) -> bool:
        """True when start and end headings agree, making the joint locus a line."""
        return abs(wrap_angle(self.gamma)) < DEGENERATE_GAMMA_TOL


def chord_frame(a: Pose, b: Pose) -> ChordFrame:
    """Build the chord frame for a pose pair; endpoints must be distinct."""
    dx = b.x - a.x
    dy = b.y - a.y
    chord = math.hypot(dx, dy)
    if chord <= COINCIDENT_TOL:
        raise CoincidentEndpointsError("pose positions coincide")
    ux, uy = dx / chord, dy / chord
    chord_angle = math.atan2(dy, dx)
    phi_a = wrap_angle(a.theta - chord_angle)
    phi_b = wrap_angle(b.theta - chord_angle)
    phi_m = 0.5 * (phi_a + phi_b)
    return ChordFrame(
        a=a,
        b=b,
        ux=ux,
        uy=uy,
        vx=-uy,
        vy=ux,
        chord=chord,
        mid=(a.x + 0.5 * chord * ux, a.y + 0.5 * chord * uy),
        phi_a=phi_a,
        phi_b=phi_b,
        gamma=phi_b - phi_a,
        phi_m=phi_m,
        alpha_ha=phi_m + phi_a,
        alpha_hb=phi_m + phi_b,
    )


@dataclass(frozen=True)
class JointLocus:
    """Locus of valid joint points: a circle through A and B, or the line AB."""

    kind: str  # "circle" | "line"
    center: tuple[float, float] | None = None
    radius: float | None = None
    point: tuple[float, float] | None = None
    direction: tuple[float, float] | None = None


def joint_locus(frame: ChordFrame) -> JointLocus:
    """Circle of joint points (line AB when the headings agree)."""
    if frame.degenerate:
        return JointLocus(
            kind="line",
            point=frame.a.position,
            direction=(frame.ux, frame.uy),
        )
    half = frame.chord * 0.5
    if abs(wrap_angle(frame.gamma - math.pi)) < DEGENERATE_GAMMA_TOL:
        center = frame.mid
    else:
        t = half / math.tan(0.5 * frame.gamma)
        center = (frame.mid[0] + t * frame.vx, frame.mid[1] + t * frame.vy)
    radius = half / abs(math.sin(0.5 * frame.gamma))
    return JointLocus(kind="circle", center=center, radius=radius)


def _equal_chord_joint(frame: ChordFrame) -> tuple[float, float]:
    """Joint on the perpendicular bisector of AB, offset by -(|AB|/2) tan(gamma/4)."""
    t = -0.5 * frame.chord * math.tan(0.25 * frame.gamma)
    return (frame.mid[0] + t * frame.vx, frame.mid[1] + t * frame.vy)


def biarc_equal_chord(a: Pose, b: Pose) -> Biarc:
    """Biarc with the joint on the perpendicular bisector of AB (|AJ| = |JB|).

    Closed-form joint, curvatures, and arc lengths; this is the default joint
    choice because it keeps the curvature jump locally minimal without ever
    producing excessively long paths.
    """
    frame = chord_frame(a, b)
    return _equal_chord_from_frame(frame)


def _equal_chord_from_frame(frame: ChordFrame) -> Biarc:
    half_ha = 0.5 * frame.alpha_ha
    half_hb = 0.5 * frame.alpha_hb
    if math.pi - abs(half_ha) < GEOM_TOL or math.pi - abs(half_hb) < GEOM_TOL:
        raise PoleError("both headings oppose the chord; equal-chord biarc has no finite length")
    c = frame.chord
    jx, jy = _equal_chord_joint(frame)
    k_a = -2.0 * (math.sin(frame.phi_m) + math.sin(frame.phi_a)) / c
    k_b = 2.0 * (math.sin(frame.phi_m) + math.sin(frame.phi_b)) / c
    chord_aj = 0.5 * c / math.cos(0.25 * frame.gamma)
    l_a = chord_aj / sinc(half_ha)
    l_b = chord_aj / sinc(half_hb)
    arc_a = ArcSegment(frame.a, k_a, l_a)
    joint_pose = Pose(jx, jy, frame.a.theta + k_a * l_a)
    arc_b = ArcSegment(joint_pose, k_b, l_b)
    return Biarc(arc_a, arc_b)


def biarc_with_alpha(frame: ChordFrame, alpha: float) -> Biarc:
    """Biarc for an explicit joint choice.

    Non-degenerate frames: ``alpha`` is the angle along the joint-locus circle
    measured from the equal-chord joint, so alpha = 0 reproduces
    :func:`biarc_equal_chord` and alpha = +-gamma/2 lands the joint on B or A.

    Degenerate frames (equal headings): ``alpha`` is the dimensionless
    position of the joint on line AB, J = A(1/2 - alpha) + B(1/2 + alpha).

    Raises :class:`PoleError` for joints that force infinite arc length, and
    for |alpha| = 1/2 in the degenerate case where curvature diverges.
    """
    a, b = frame.a, frame.b
    if frame.degenerate:
        if abs(abs(alpha) - 0.5) < GEOM_TOL and abs(frame.phi_a) > GEOM_TOL:
            raise PoleError("joint at an endpoint with oblique heading: curvature diverges")
        t = 0.5 + alpha
        joint = (a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
    else:
        locus = joint_locus(frame)
        cx, cy = locus.center  # type: ignore[misc]
        r = locus.radius  # type: ignore[operator]
        j0x, j0y = _equal_chord_joint(frame)
        d0x, d0y = (j0x - cx) / r, (j0y - cy) / r
        ca, sa = math.cos(alpha), math.sin(alpha)
        joint = (cx + r * (ca * d0x - sa * d0y), cy + r * (sa * d0x + ca * d0y))

    tol = GEOM_TOL * max(1.0, frame.chord)
    if math.hypot(joint[0] - a.x, joint[1] - a.y) <= tol:
        # Joint at A: single arc constrained by the end heading, with an
        # in-place rotation absorbed at the zero-length first arc.
        arc_b = _arc_from_point(a.position, b)
        return Biarc(ArcSegment(a, 0.0, 0.0), arc_b)
    if math.hypot(joint[0] - b.x, joint[1] - b.y) <= tol:
        arc_a = _arc_to_point(a, b.position)
        return Biarc(arc_a, ArcSegment(b, 0.0, 0.0))
    arc_a = _arc_to_point(a, joint)
    arc_b = _arc_to_point(arc_a.end, b.position)
    return Biarc(arc_a, arc_b)


def biarc_lengths_for_alpha(frame: ChordFrame, alpha: float) -> tuple[float, float]:
    """Closed-form arc lengths for a joint choice, math.inf at the poles.

    Independent of the constructive path in :func:`biarc_with_alpha`: chords
    come from the law of sines and each length is chord / sinc(half spanned
    angle).
    """
    c = frame.chord
    if frame.degenerate:
        phi = frame.phi_a
        phi_bar = math.pi - abs(phi)
        if alpha < -0.5:
            l_a = c * (-0.5 - alpha) / sinc(phi_bar) if abs(phi) > 0.0 else math.inf
        else:
            l_a = c * (0.5 + alpha) / sinc(phi) if abs(abs(phi) - math.pi) > 0.0 else math.inf
        if alpha > 0.5:
            l_b = c * (alpha - 0.5) / sinc(phi_bar) if abs(phi) > 0.0 else math.inf
        else:
            l_b = c * (0.5 - alpha) / sinc(phi) if abs(abs(phi) - math.pi) > 0.0 else math.inf
        return (l_a, l_b)
    s_half = abs(math.sin(0.5 * frame.gamma))
    chord_aj = c * abs(math.sin(0.5 * alpha + 0.25 * frame.gamma)) / s_half
    chord_jb = c * abs(math.sin(0.5 * alpha - 0.25 * frame.gamma)) / s_half
    delta_a = wrap_angle(0.5 * (frame.alpha_ha - alpha))
    delta_b = wrap_angle(0.5 * (frame.alpha_hb - alpha))
    l_a = chord_aj / sinc(delta_a) if math.pi - abs(delta_a) > 1e-15 else math.inf
    l_b = chord_jb / sinc(delta_b) if math.pi - abs(delta_b) > 1e-15 else math.inf
    if l_a < 0.0 or l_b < 0.0:
        # sinc goes negative past the pole; the joint is unreachable there.
        return (math.inf, math.inf)
    return (l_a, l_b)


def curvature_difference_for_alpha(frame: ChordFrame, alpha: float) -> float:
    """Closed-form curvature jump k_b - k_a for a joint choice."""
    c = frame.chord
    if frame.degenerate:
        denom = 0.25 - alpha * alpha
        if denom == 0.0:
            return math.inf
        return 2.0 * math.sin(frame.phi_a) / (c * denom)
    g_half = 0.5 * frame.gamma
    denom = math.cos(g_half) - math.cos(alpha)
    if denom == 0.0:
        return math.inf
    num = 2.0 * math.sin(g_half) * (math.cos(frame.phi_b) - math.cos(frame.phi_a))
    return num / (c * denom)
