"""
The two directions of the bijection.

get_matrix reads a word once, symbol by symbol, and grows the matrix one row
per valley plus a final row at end of input. get_dyck_word slides a vertical
2x1 window over the zero-padded matrix.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Union

from src.dyck_core import CANONICAL, Alphabet, DyckWord, Symbol, iter_symbols
from src.errors import EmptyWord, InvalidMatrix, MatrixError, PrefixViolation, Unbalanced
from src.matrix import DyckMatrix, Grid, RowValidator, validate_matrix

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class ConverterState:
    x_count: int = 0   # x's of the current segment, shared vertices included
    d_count: int = 0   # D's of the current descent
    shared: int = 0    # vertices the next row keeps from the last one
    prev: Symbol = Symbol.X
    position: int = 0
    total_x: int = 0
    total_d: int = 0


class MatrixBuilder:
    """Streaming word -> matrix state machine.

    One symbol per feed(); nothing but the current symbol is held from the
    input. Rows are padded with 0's as later rows add columns, so only the
    matrix returned by finish() is canonical.
    """

    def __init__(self):
        self.state = ConverterState()
        self._rows: List[List[int]] = []
        self._finished = False

    def feed(self, symbol: Symbol) -> None:
        if self._finished:
            raise RuntimeError("builder already finished")
        state = self.state
        state.position += 1
        if symbol is Symbol.D:
            state.prev = Symbol.D
            state.d_count += 1
            state.total_d += 1
            if state.d_count > state.x_count:
                raise PrefixViolation(state.position)
            return

        state.total_x += 1
        if state.prev is Symbol.X:
            state.x_count += 1
            return

        # valley: the descent just ended closes a cycle
        self._emit_row()
        state.shared = state.x_count - state.d_count
        state.x_count = state.shared + 1
        state.d_count = 0
        state.prev = Symbol.X

    def _emit_row(self) -> None:
        state = self.state
        new_columns = state.x_count - state.shared
        # keep the first `shared` ones of the previous row
        kept: List[int] = []
        if self._rows:
            remaining = state.shared
            for bit in self._rows[-1]:
                if bit and remaining:
                    kept.append(1)
                    remaining -= 1
                else:
                    kept.append(0)
        for row in self._rows:
            row.extend([0] * new_columns)
        # one new vertex per x of the slope
        self._rows.append(kept + [1] * new_columns)
        logger.debug(f"Row {len(self._rows)} emitted at position {state.position}: shared={state.shared}, new={new_columns}")

    def snapshot(self) -> Grid:
        """Rows emitted so far, padded to the current width. Not a Dyck matrix until finish()."""
        return tuple(tuple(row) for row in self._rows)

    def finish(self) -> DyckMatrix:
        if self._finished:
            raise RuntimeError("builder already finished")
        state = self.state
        if state.position == 0:
            raise EmptyWord()
        if state.x_count != state.d_count:
            raise Unbalanced(state.total_x, state.total_d)
        self._emit_row()
        self._finished = True
        return DyckMatrix(self.snapshot())


def get_matrix(stream: Iterable[Union[str, Symbol]], alphabet: Alphabet = CANONICAL) -> DyckMatrix:
    """Dyck matrix of the word read from a single-use symbol source."""
    builder = MatrixBuilder()
    for symbol in iter_symbols(stream, alphabet):
        builder.feed(symbol)
    return builder.finish()


@dataclass(frozen=True, slots=True)
class Window:
    above: int
    below: int

    def __post_init__(self) -> None:
        if self.above not in (0, 1) or self.below not in (0, 1):
            raise ValueError(f"window bits must be 0 or 1, got ({self.above}, {self.below})")

    def emit(self) -> Optional[Symbol]:
        if self.above == 1 and self.below == 0:
            return Symbol.D
        if self.above == 0 and self.below == 1:
            return Symbol.X
        return None


def check_window(above: int, below: int) -> Optional[Symbol]:
    return Window(above, below).emit()


def _scan_window_row(above: Sequence[int], below: Sequence[int]) -> Iterator[Symbol]:
    for top, bottom in zip(above, below):
        symbol = check_window(top, bottom)
        if symbol is not None:
            yield symbol


def get_dyck_word(matrix: Union[DyckMatrix, Sequence[Sequence[int]]]) -> DyckWord:
    """Dyck word of a matrix; anything but a DyckMatrix is validated first."""
    if not isinstance(matrix, DyckMatrix):
        try:
            matrix = validate_matrix(matrix)
        except MatrixError as e:
            raise InvalidMatrix(e) from e
    view = matrix.padded_view()
    symbols: List[Symbol] = []
    for i in range(1, matrix.n + 2):
        symbols.extend(_scan_window_row(view.row(i - 1), view.row(i)))
    return DyckWord(tuple(symbols))


def iter_word_from_rows(rows: Iterable[Sequence[int]]) -> Iterator[Symbol]:
    """Row-stream form of get_dyck_word.

    Each row is validated against its predecessor before its window row is
    scanned, so symbols are only produced for a valid prefix of the matrix.
    """
    validator = RowValidator()
    previous: Optional[Sequence[int]] = None
    for values in rows:
        try:
            validator.push(values)
        except MatrixError as e:
            raise InvalidMatrix(e) from e
        current = validator.previous
        yield from _scan_window_row(previous or (0,) * len(current), current)
        previous = current
    try:
        validator.finish()
    except MatrixError as e:
        raise InvalidMatrix(e) from e
    yield from _scan_window_row(previous, (0,) * len(previous))
