"""Exception hierarchy. Every error raised by the workbench derives from BrwError."""


class BrwError(Exception):
    pass


class FieldMismatch(BrwError):
    """Mixed moduli in a field or matrix operation."""


class DivisionByZero(BrwError, ZeroDivisionError):
    """Inversion of zero in a prime field."""


class InvalidConductor(BrwError):
    """Cyclotomic conductor must be a positive integer."""


class SpecError(BrwError):
    """Malformed algebra spec (JSON ingestion)."""


class NotSplitBasic(BrwError):
    """Algebra failed split-basic certification."""


class NotBimodule(BrwError):
    """Subspace not closed under the diagonal bimodule action."""


class TooLarge(BrwError):
    """A configured size cap was exceeded."""


class NotInsideRadical(BrwError):
    pass


class NotNormal(BrwError):
    pass


class NotSubgroup(BrwError):
    pass


class GroupMismatch(BrwError):
    pass


class NotInvariant(BrwError):
    """Character fails the required invariance (P- or G-invariance)."""


class PreconditionFailure(BrwError):
    pass


class NotOverTheta(BrwError):
    """Character does not lie over the given linear character."""


class LiftFailure(BrwError):
    """Modular-to-cyclotomic lift produced an inconsistent table (assertion-level)."""


class CliffordFailure(BrwError):
    """Clifford correspondent not unique (assertion-level)."""


class NoExtension(BrwError):
    """No extension of the invariant character exists (assertion-level)."""


class CertificationFailure(BrwError):
    """A stabilizer could not be certified as the unit group of a subalgebra."""


class DecompositionFailure(BrwError):
    """Constructive decomposition failed (would contradict the finite theorem)."""


class VerificationFailure(BrwError):
    """Brute-force verification found an irreducible with no witness."""
