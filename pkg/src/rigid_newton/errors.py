"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`RigidNewtonError`, which is a ``ValueError`` so that callers that
only care about "bad input" can catch the builtin.
"""

from __future__ import annotations


class RigidNewtonError(ValueError):
    """Base class; ``invariant`` names the violated condition for diagnostics."""

    invariant = "unspecified"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.invariant)
        self.details = details


class NonFiniteQuotient(RigidNewtonError):
    invariant = "quotient lattice must be finite"


class UnsupportedType(RigidNewtonError):
    invariant = "root datum family/rank must be implemented"


class NotRegular(RigidNewtonError):
    invariant = "regular vector must pair nonzero with every root"


class TooLarge(RigidNewtonError):
    invariant = "enumeration guard"


class InvalidSubsystem(RigidNewtonError):
    invariant = "subsystem must be closed and symmetric"


class NotAutomorphism(RigidNewtonError):
    invariant = "generator must be a unimodular root datum automorphism"


class NotFinite(RigidNewtonError):
    invariant = "generated group must be finite"


class NotStable(RigidNewtonError):
    invariant = "subsystem must be stable under the Galois action"


class NotLevi(RigidNewtonError):
    invariant = "subsystem must be a Levi subsystem"


class NotNormalized(RigidNewtonError):
    invariant = "point must lie in the closed fundamental alcove"


class NotElliptic(RigidNewtonError):
    invariant = "Galois norm of the cocharacter must be central"


class DegenerateMu(RigidNewtonError):
    invariant = "twisted cocharacter vanished on a proper Levi subsystem"


class UnknownCase(RigidNewtonError):
    invariant = "case id must be in the casebook inventory"
