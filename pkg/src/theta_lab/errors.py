"""Exception hierarchy shared across the library."""


class ThetaLabError(Exception):
    """Base class for all library errors."""


class PolyParseError(ThetaLabError):
    """Syntax error while parsing a polynomial expression."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RankMismatchError(ThetaLabError):
    """Free-module ranks of the operands disagree."""


class NotInModuleError(ThetaLabError):
    """Lift target does not lie in the generated submodule."""


class NotAFactorizationError(ThetaLabError):
    """Matrix pair fails A*B = B*A = f*I."""


class FreeModuleError(ThetaLabError):
    """Module has finite projective dimension; no matrix factorization."""


class NonIsolatedError(ThetaLabError):
    """Jacobian ideal has infinite colength."""


class InfiniteLengthError(ThetaLabError):
    """A homology module that must be finite length is not."""


class NotProperError(ThetaLabError):
    """Intersection of supports is not zero-dimensional."""


class ParityError(ThetaLabError):
    """Operation requires the other parity of the variable count."""


class NotQuasiHomogeneousError(ThetaLabError):
    """Weight vector does not make the polynomial quasi-homogeneous."""
