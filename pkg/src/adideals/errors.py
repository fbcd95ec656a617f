"""Exception hierarchy shared by every module of the package."""


class AdIdealsError(Exception):
    """Base class for all errors raised by :mod:`adideals`."""


class InputError(AdIdealsError, ValueError):
    """Caller supplied an argument outside the operation's domain."""


class PartitionError(InputError):
    """A partition does not label a nilpotent orbit of the requested type."""


class GuardError(InputError):
    """Requested computation exceeds the exhaustive-enumeration guard."""


class InternalError(AdIdealsError, RuntimeError):
    """A consistency check that should be impossible to fail has failed."""
