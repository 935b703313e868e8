"""Exception types shared across the package."""


class MaxmonoError(Exception):
    """Base class for all maxmono errors."""


class DimensionMismatchError(MaxmonoError):
    """Vectors, points or subspaces of incompatible dimensions were combined."""


class ModeMismatchError(MaxmonoError):
    """Objects built under different arithmetic modes were combined."""


class NotMonotoneError(MaxmonoError):
    """An operation required a monotone operator and got a non-monotone one."""


class NotMaximalMonotoneError(MaxmonoError):
    """An operation required a maximal monotone operator."""


class NotSelfCancellingError(MaxmonoError):
    """An operation required a self-cancelling subspace."""


class NotMaximalSelfCancellingError(MaxmonoError):
    """An operation required a maximal self-cancelling subspace."""


class DualNotMonotoneError(MaxmonoError):
    """The annihilator of the given subspace is not monotone.

    Signals the caller that no maximal monotone operator arises from this
    subspace directly; negating it may work (sign disambiguation).
    """


class DimensionTooLargeError(MaxmonoError):
    """A brute-force oracle was asked to run beyond its feasible dimension."""


class UndefinedExtRealError(MaxmonoError):
    """Extended-real arithmetic hit an undefined form (infinity minus infinity)."""


class DocumentError(MaxmonoError):
    """An operator document failed to parse; the message names the bad field."""
