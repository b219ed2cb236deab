"""Error taxonomy shared by all modules."""


class MonomialHHError(Exception):
    """Base class for every error this package raises on purpose."""


class DuplicateArrowId(MonomialHHError):
    pass


class NonComposableRelation(MonomialHHError):
    """A relation word whose consecutive arrows do not compose."""


class InfiniteDimensional(MonomialHHError):
    """The algebra has infinitely many relation-free paths."""


class DegreeUnderflow(MonomialHHError):
    """A degree below the complex was requested (e.g. d at the augmentation)."""


class WrongDegree(MonomialHHError):
    """An element of the wrong homological degree was supplied."""


class ImageNotInKernel(MonomialHHError):
    """quotient_basis precondition im ⊆ ker failed; the complex is broken."""


class NotACocycle(MonomialHHError):
    pass


class NotTriangular(MonomialHHError):
    """A triangular-only verifier was called on a quiver with oriented cycles."""


class BudgetExceeded(MonomialHHError):
    """A size budget ran out; carries the last degree that completed."""

    def __init__(self, degree_reached: int, message: str):
        super().__init__(message)
        self.degree_reached = degree_reached


class BadInput(MonomialHHError):
    """Input problem outside a parsed file (unreadable path, bad field spec)."""


class ParseError(MonomialHHError):
    """Algebra file syntax/semantic error with a 1-based source location."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message
