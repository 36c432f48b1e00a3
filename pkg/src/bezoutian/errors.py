"""Exception types shared across the package."""


class BackendMismatchError(TypeError):
    """Raised when exact-rational and float64 values are mixed in one operation."""


class NonMonicError(ValueError):
    """Raised by operations that require a monic input polynomial."""


class DegreeMismatchError(ValueError):
    """Raised when a polynomial has the wrong degree for the requested operation."""


class NonHyperbolicError(ValueError):
    """Raised when a polynomial required to be real rooted has complex roots."""


class NonzeroRemainderError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder.

    The bivariate division defining the Bezout matrix is always exact in
    algebra, so a nonzero remainder signals an internal arithmetic fault.
    """


class MultipleRootError(ValueError):
    """Raised by operations that are only defined for simple roots."""
