"""
Exception hierarchy shared by every module.

All positions, rows and columns carried by these errors are 1-based.
"""
from typing import Any, Optional


class DyckError(Exception):
    """Base class for every domain failure (CLI exit status 1)"""

    def __init__(self, message: str = ""):
        self.message = message
        super().__init__(self._format_error())

    @property
    def name(self) -> str:
        return type(self).__name__

    def _format_error(self) -> str:
        if self.message:
            return f"{self.name} {self.message}"
        return self.name


# ------- words -------

class WordError(DyckError):
    pass


class InvalidChar(WordError):
    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"at position {position}: unexpected character {char!r}")


class PrefixViolation(WordError):
    def __init__(self, position: int):
        self.position = position
        super().__init__(f"at position {position}: more D's than x's in prefix")


class Unbalanced(WordError):
    def __init__(self, x_count: int, d_count: int):
        self.x_count = x_count
        self.d_count = d_count
        super().__init__(f"at end of input: {x_count} x's, {d_count} D's")


class EmptyWord(WordError):
    def __init__(self):
        super().__init__("(the word has no symbols)")


# ------- matrices -------

class MatrixError(DyckError):
    pass


class NotRectangular(MatrixError):
    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(detail)


class NotBinary(MatrixError):
    def __init__(self, row: int, column: int, value: Any):
        self.row = row
        self.column = column
        self.value = value
        super().__init__(f"at row {row}, column {column}: {value!r} is not 0 or 1")


class M1Violation(MatrixError):
    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(detail)


class M2Violation(MatrixError):
    def __init__(self, i: int, clause: str, detail: str = ""):
        self.i = i
        self.clause = clause
        self.detail = detail
        message = f"at transition {i}->{i + 1} ({clause})"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class EmptyColumn(MatrixError):
    def __init__(self, column: int):
        self.column = column
        super().__init__(f"column {column} has no 1")


class OutOfRange(MatrixError):
    def __init__(self, i: int, n: int):
        self.i = i
        self.n = n
        super().__init__(f"transition index {i} not in 1..{n - 1}")


class InvalidMatrix(MatrixError):
    def __init__(self, cause: MatrixError):
        self.cause = cause
        super().__init__(f"({cause})")


# ------- digraphs -------

class DigraphError(DyckError):
    pass


class MalformedCycle(DigraphError):
    def __init__(self, index: int, detail: str):
        self.index = index
        self.detail = detail
        super().__init__(f"cycle {index}: {detail}")


class NotInFamily(DigraphError):
    def __init__(self, cause: Optional[MatrixError] = None, detail: str = ""):
        self.cause = cause
        self.detail = detail
        super().__init__(f"({cause})" if cause else detail)
