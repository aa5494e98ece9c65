"""Exception taxonomy shared across the package."""


class GpadeError(Exception):
    """Base class for all package-specific failures."""


class PreconditionError(GpadeError, ValueError):
    """An operation was called outside its documented domain."""


class NoConvergentTailBound(GpadeError):
    """A certified enclosure was requested where no tail bound converges (e.g. C|z| >= 1)."""


class InsufficientPrecisionError(GpadeError):
    """Precision escalation hit its cap before the question could be decided."""


class KernelVectorError(GpadeError):
    """A claimed kernel vector does not annihilate the constraint matrix."""


class RankDeficiencyError(GpadeError):
    """An evaluation matrix that must have full rank does not."""


class DivisibilityError(GpadeError):
    """A certified divisibility property failed; indicates an internal bug upstream."""


class InternalCertificateError(GpadeError):
    """Two independent computations of the same object disagree."""


class InsufficientDigitsError(GpadeError, ValueError):
    """A digit-string query needs more certified digits than are available."""


class HypothesisUnmetError(GpadeError):
    """A theorem hypothesis fails at the given parameters (strict mode only)."""
