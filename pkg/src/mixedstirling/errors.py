"""Exception types raised by the package."""


class MixedStirlingError(Exception):
    """Base class for all errors raised by mixedstirling."""


class InvalidArgument(MixedStirlingError, ValueError):
    """An argument lies outside the domain of the requested quantity."""


class SizeGuardExceeded(MixedStirlingError):
    """The enumeration oracle refused an instance larger than its guard."""


class UnknownIdentity(MixedStirlingError, KeyError):
    """An audit identity id is not in the registry."""

    def __str__(self):
        return f"unknown identity: {self.args[0]!r}" if self.args else "unknown identity"


class OracleInconsistency(MixedStirlingError, AssertionError):
    """Pruned and unpruned enumeration disagreed in cross-check mode."""
