"""Exception types shared across the package.

Two families: ContrastError covers domain violations (bad operands,
singular inputs, failed convergence) and maps to CLI exit code 1;
ParseError covers malformed input files and maps to exit code 2.
"""


class ContrastError(Exception):
    """Base class for domain errors."""


class NotPositiveError(ContrastError):
    """Operand is not positive semidefinite within tolerance."""


class SingularMatrixError(ContrastError):
    """Operand is singular relative to the eigenvalue threshold."""


class ZeroOperatorError(ContrastError):
    """Operation is undefined for the zero operator."""


class NonConvergenceError(ContrastError):
    """An iterative routine failed to reach its tolerance."""


class DimensionMismatchError(ContrastError):
    """Square operands have different dimensions."""


class ShapeMismatchError(ContrastError):
    """Rectangular operands have different shapes."""


class StructureMismatchError(ContrastError):
    """Block operators have different block structures."""


class EmptyInputError(ContrastError):
    """A nonempty sample collection was required."""


class ParseError(Exception):
    """Base class for input file errors."""


class MatrixFormatError(ParseError):
    """Malformed matrix or block-operator text file."""


class PnmError(ParseError):
    """Malformed PNM image. Carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class BadMagicError(PnmError):
    pass


class TruncatedDataError(PnmError):
    pass


class MaxvalOutOfRangeError(PnmError):
    pass
