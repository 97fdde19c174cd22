"""Exception types shared across the package."""


class RinglatError(Exception):
    """Base class for all ringlat errors."""


class NotSquareError(RinglatError):
    """Matrix operation requires a square matrix."""


class NotFullRankError(RinglatError):
    """Lattice basis operation requires a nonsingular (full-rank) matrix."""


class DimensionMismatchError(RinglatError):
    """Operand dimensions are incompatible."""


class ParseError(RinglatError):
    """Malformed matrix or polynomial input.

    Carries a human-readable location so CLI diagnostics can name
    line/column.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)
