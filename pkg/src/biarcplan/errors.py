"""Exception types shared across the package."""


class BiarcPlanError(Exception):
    """Base class for all errors raised by this package."""


class CoincidentEndpointsError(BiarcPlanError, ValueError):
    """Start and end positions coincide; no chord frame exists."""


class PoleError(BiarcPlanError, ValueError):
    """Requested joint placement gives an arc of infinite length or curvature."""


class HeadingMismatchError(BiarcPlanError, ValueError):
    """Straight-move sweep requires equal start and end headings."""


class DegenerateCenterError(BiarcPlanError, ValueError):
    """Both lines pass through the rotation center; half-tangent formulas diverge."""


class NoPathError(BiarcPlanError, RuntimeError):
    """Lattice search exhausted the maximum lateral expansion without a path."""
