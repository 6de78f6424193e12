"""Exception types shared across the package."""


class PosetRepsError(Exception):
    """Base class for all errors raised by this package."""


class CycleError(PosetRepsError):
    """The given relations are not antisymmetric after transitive closure."""


class DimensionMismatch(PosetRepsError):
    """A vector or matrix has the wrong number of entries."""


class ConvergenceFailure(PosetRepsError):
    """An iterative matrix factorization failed to converge."""


class NonSquare(PosetRepsError):
    """A square matrix was required."""


class SizeMismatch(PosetRepsError):
    """Two matrices were required to have equal sizes."""


class InvalidSummand(PosetRepsError):
    """A summand label is not valid for the given poset."""


class PosetMismatch(PosetRepsError):
    """Two block matrices or systems live over different posets."""


class NotUnitary(PosetRepsError):
    """A matrix required to be unitary is not, within tolerance."""


class NotAdmissible(PosetRepsError):
    """A column transform violates the zero pattern required by the order."""


class Singular(PosetRepsError):
    """A matrix required to be nonsingular is singular."""


class NotAChain(PosetRepsError):
    """The poset of the block matrix is not a chain."""


class NotASemichain(PosetRepsError):
    """The poset of the block matrix is not a semichain."""


class WildPoset(PosetRepsError):
    """No canonical form exists: the poset is not a semichain."""


class InclusionViolation(PosetRepsError):
    """A subspace system violates its order-inclusion constraint."""


class IsSemichain(PosetRepsError):
    """A non-semichain poset was required."""
