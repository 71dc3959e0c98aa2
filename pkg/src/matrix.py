"""
Dyck matrices: storage, the M1/M2 validator, row transitions, the padded
(virtual zero rows) view and the column-structure check.

Rows and columns are 1-based in every public signature and error.
"""
import logging
from dataclasses import dataclass, field
from itertools import pairwise
from typing import Any, Iterable, Iterator, List, Optional, Sequence, Tuple

from src.errors import (
    EmptyColumn,
    M1Violation,
    M2Violation,
    NotBinary,
    NotRectangular,
    OutOfRange,
)

logger = logging.getLogger(__name__)

Row = Tuple[int, ...]
Grid = Tuple[Row, ...]


@dataclass(frozen=True, slots=True)
class RowTransition:
    """(a_i, b_i, c_i) of the transition from row i to row i+1."""

    i: int
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if not 1 <= self.a <= self.b < self.c:
            raise ValueError(f"transition {self.i} needs 1 <= a <= b < c, got ({self.a}, {self.b}, {self.c})")


def _coerce_row(row_number: int, values: Sequence[Any]) -> Row:
    coerced = []
    for column, value in enumerate(values, start=1):
        if isinstance(value, bool) or not isinstance(value, int) or value not in (0, 1):
            raise NotBinary(row_number, column, value)
        coerced.append(value)
    return tuple(coerced)


def check_first_row(row: Row) -> int:
    """(M1): the first row is 1^h 0^(k-h) with h >= 1. Returns h."""
    h = 0
    while h < len(row) and row[h]:
        h += 1
    if h == 0:
        raise M1Violation("first row must start with a 1")
    if any(row[h:]):
        raise M1Violation(f"first row has a 1 after the leading block of {h}")
    return h


def check_transition(i: int, upper: Row, lower: Row) -> RowTransition:
    """(M2) for rows i and i+1, first failing clause in the order M2, M2.1 .. M2.4."""
    k = len(upper)
    a = next((j for j in range(1, k + 1) if upper[j - 1] == 1 and lower[j - 1] == 0), None)
    b = next((j for j in range(k, 0, -1) if upper[j - 1] == 1), None)
    c = next((j for j in range(k, 0, -1) if lower[j - 1] == 1), None)

    if a is None:
        raise M2Violation(i, "M2", "no column where row i has 1 and row i+1 has 0")
    if c is None:
        raise M2Violation(i, "M2", "row i+1 has no 1")
    if not b < c:
        raise M2Violation(i, "M2", f"b={b} < c={c} fails")

    for j in range(1, a):
        if lower[j - 1] != upper[j - 1]:
            raise M2Violation(i, "M2.1", f"column {j} differs before a={a}")
    for j in range(a, b + 1):
        if lower[j - 1] != 0:
            raise M2Violation(i, "M2.2", f"column {j} must be 0 for a={a}..b={b}")
    for j in range(b + 1, c + 1):
        if lower[j - 1] != 1:
            raise M2Violation(i, "M2.3", f"column {j} must be 1 for b+1={b + 1}..c={c}")
    for j in range(c + 1, k + 1):
        if lower[j - 1] != 0:
            raise M2Violation(i, "M2.4", f"column {j} must be 0 after c={c}")
    return RowTransition(i, a, b, c)


class RowValidator:
    """M1 and M2 checked one row at a time.

    Every condition only relates consecutive rows, so a matrix can be
    validated while it is being read.
    """

    def __init__(self):
        self.width: Optional[int] = None
        self.rows_seen = 0
        self.previous: Optional[Row] = None

    def push(self, values: Sequence[Any]) -> Optional[RowTransition]:
        row_number = self.rows_seen + 1
        if self.width is None:
            if len(values) == 0:
                raise NotRectangular("matrix has no columns")
            self.width = len(values)
        elif len(values) != self.width:
            raise NotRectangular(f"row {row_number} has {len(values)} entries, expected {self.width}")
        row = _coerce_row(row_number, values)

        transition = None
        if self.previous is None:
            check_first_row(row)
        else:
            transition = check_transition(self.rows_seen, self.previous, row)
        self.previous = row
        self.rows_seen = row_number
        return transition

    def finish(self) -> None:
        """End of the matrix: every column holds a 1.

        The greatest 1-column strictly increases from row to row and the
        columns in between are covered, so it is enough that the last row
        reaches column k.
        """
        if self.previous is None:
            raise NotRectangular("matrix has no rows")
        last_one = max(j for j, bit in enumerate(self.previous, start=1) if bit)
        if last_one < self.width:
            raise EmptyColumn(last_one + 1)


@dataclass(frozen=True, slots=True)
class DyckMatrix:
    """Validated n x k binary matrix; constructing one runs the full validator."""

    rows: Grid
    transitions: Tuple[RowTransition, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.rows) == 0:
            raise NotRectangular("matrix has no rows")
        validator = RowValidator()
        transitions = []
        for values in self.rows:
            transition = validator.push(values)
            if transition is not None:
                transitions.append(transition)
        validator.finish()
        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        object.__setattr__(self, "transitions", tuple(transitions))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def k(self) -> int:
        return len(self.rows[0])

    @property
    def ones(self) -> int:
        return sum(map(sum, self.rows))

    def row_support(self, i: int) -> Tuple[int, ...]:
        """1-columns of row i, increasing"""
        return tuple(j for j, bit in enumerate(self.rows[i - 1], start=1) if bit)

    def column(self, j: int) -> Row:
        return tuple(row[j - 1] for row in self.rows)

    def padded_view(self) -> "PaddedView":
        return PaddedView(self)

    def to_text(self) -> str:
        return "\n".join("".join(map(str, row)) for row in self.rows)

    def __str__(self) -> str:
        return self.to_text()


def validate_matrix(raw: Sequence[Sequence[Any]]) -> DyckMatrix:
    return DyckMatrix(tuple(tuple(row) for row in raw))


def row_transition(matrix: DyckMatrix, i: int) -> RowTransition:
    if not 1 <= i < matrix.n:
        raise OutOfRange(i, matrix.n)
    return matrix.transitions[i - 1]


class PaddedView:
    """The matrix with a virtual all-zero row 0 and row n+1.

    Only index translation; the stored rows are never copied.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix: DyckMatrix):
        self.matrix = matrix

    @property
    def shape(self) -> Tuple[int, int]:
        return self.matrix.n + 2, self.matrix.k

    def __len__(self) -> int:
        return self.matrix.n + 2

    def __getitem__(self, index: Tuple[int, int]) -> int:
        r, j = index
        if not 0 <= r <= self.matrix.n + 1 or not 1 <= j <= self.matrix.k:
            raise IndexError(f"({r}, {j}) outside the padded {self.shape[0]}x{self.shape[1]} view")
        if r == 0 or r == self.matrix.n + 1:
            return 0
        return self.matrix.rows[r - 1][j - 1]

    def row(self, r: int) -> Row:
        if r == 0 or r == self.matrix.n + 1:
            return (0,) * self.matrix.k
        if not 1 <= r <= self.matrix.n:
            raise IndexError(f"row {r} outside 0..{self.matrix.n + 1}")
        return self.matrix.rows[r - 1]

    def column(self, j: int) -> Row:
        return (0,) + self.matrix.column(j) + (0,)

    def __iter__(self) -> Iterator[Row]:
        for r in range(len(self)):
            yield self.row(r)


def padded_view(matrix: DyckMatrix) -> PaddedView:
    return PaddedView(matrix)


def column_structure_check(matrix: DyckMatrix) -> bool:
    """Every padded column reads 0..0 1..1 0..0 with all three blocks non-empty."""
    view = matrix.padded_view()
    for j in range(1, matrix.k + 1):
        changes = [(above, below) for above, below in pairwise(view.column(j)) if above != below]
        if changes != [(0, 1), (1, 0)]:
            logger.debug(f"Column {j} breaks the 0/1/0 block structure: {view.column(j)}")
            return False
    return True


def iter_matrix_rows(lines: Iterable[str]) -> Iterator[List[int]]:
    """Read '11100' or '1 1 1 0 0' rows, one per line; each line may end with one newline."""
    for row_number, line in enumerate(lines, start=1):
        if line.endswith("\n"):
            line = line[:-1]
        if not line:
            raise NotRectangular(f"row {row_number} is empty")
        cells = line.split(" ") if " " in line else list(line)
        if any(len(cell) != 1 for cell in cells):
            raise NotRectangular(f"row {row_number}: entries must be single characters separated by at most one space")
        row = []
        for column, cell in enumerate(cells, start=1):
            if cell not in ("0", "1"):
                raise NotBinary(row_number, column, cell)
            row.append(int(cell))
        yield row


def parse_matrix_text(text: str) -> List[List[int]]:
    """Whole-text form of iter_matrix_rows; a single terminating newline is accepted."""
    if text.endswith("\n"):
        text = text[:-1]
    if not text:
        raise NotRectangular("matrix has no rows")
    return list(iter_matrix_rows(text.split("\n")))
