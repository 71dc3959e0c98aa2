"""
Dyck words: parsing, validation, slope/descent decomposition, enumeration
and the lattice-path view.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Tuple, Union

from src.errors import EmptyWord, InvalidChar, PrefixViolation, Unbalanced

logger = logging.getLogger(__name__)


class Symbol(str, Enum):
    X = "x"  # up, multiply by x
    D = "D"  # down, differentiate


@dataclass(frozen=True, slots=True)
class Alphabet:
    """Parse-time mapping of two characters onto X and D."""

    up: str = "x"
    down: str = "D"

    def __post_init__(self) -> None:
        if len(self.up) != 1 or len(self.down) != 1:
            raise ValueError("alphabet characters must be single characters")
        if self.up == self.down:
            raise ValueError(f"alphabet characters must be distinct, got {self.up!r} twice")

    @classmethod
    def from_pair(cls, pair: str) -> "Alphabet":
        """'()' -> ( is X, ) is D"""
        if len(pair) != 2:
            raise ValueError(f"alphabet must be exactly two characters, got {pair!r}")
        return cls(pair[0], pair[1])

    def lookup(self, char: str) -> Optional[Symbol]:
        if char == self.up:
            return Symbol.X
        if char == self.down:
            return Symbol.D
        return None

    def render(self, symbols: Iterable[Symbol]) -> str:
        return "".join(self.up if s is Symbol.X else self.down for s in symbols)

    @property
    def pair(self) -> str:
        return self.up + self.down


CANONICAL = Alphabet()


def iter_symbols(chars: Iterable[Union[str, Symbol]], alphabet: Alphabet = CANONICAL) -> Iterator[Symbol]:
    """Lazily map characters to symbols; Symbol values pass through untouched."""
    for position, char in enumerate(chars, start=1):
        if isinstance(char, Symbol):
            yield char
            continue
        symbol = alphabet.lookup(char)
        if symbol is None:
            raise InvalidChar(position, char)
        yield symbol


@dataclass(frozen=True, slots=True)
class DyckWord:
    symbols: Tuple[Symbol, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(Symbol(s) for s in self.symbols))
        height = 0
        for position, symbol in enumerate(self.symbols, start=1):
            height += 1 if symbol is Symbol.X else -1
            if height < 0:
                raise PrefixViolation(position)
        if height != 0:
            x_count = self.symbols.count(Symbol.X)
            raise Unbalanced(x_count, len(self.symbols) - x_count)

    @property
    def semilength(self) -> int:
        return len(self.symbols) // 2

    @property
    def peaks(self) -> int:
        return sum(1 for a, b in zip(self.symbols, self.symbols[1:]) if a is Symbol.X and b is Symbol.D)

    @property
    def valleys(self) -> int:
        return sum(1 for a, b in zip(self.symbols, self.symbols[1:]) if a is Symbol.D and b is Symbol.X)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __str__(self) -> str:
        return CANONICAL.render(self.symbols)


def parse_word(text: Iterable[str], alphabet: Alphabet = CANONICAL) -> DyckWord:
    """Parse and validate a word over the given alphabet.

    Errors are reported at the first offending position: InvalidChar for a
    character outside the alphabet, PrefixViolation for the first D that
    takes the count below zero, Unbalanced at end of input.
    """
    symbols: List[Symbol] = []
    height = 0
    for position, symbol in enumerate(iter_symbols(text, alphabet), start=1):
        height += 1 if symbol is Symbol.X else -1
        if height < 0:
            raise PrefixViolation(position)
        symbols.append(symbol)
    return DyckWord(tuple(symbols))


def render(word: DyckWord, alphabet: Alphabet = CANONICAL) -> str:
    return alphabet.render(word.symbols)


@dataclass(frozen=True, slots=True)
class PeakDecomposition:
    """Slope/descent factorization x^u1 D^d1 ... x^un D^dn."""

    pairs: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.pairs:
            raise ValueError("a decomposition has at least one pair")
        height = 0
        for index, (up, down) in enumerate(self.pairs, start=1):
            if up < 1 or down < 1:
                raise ValueError(f"pair {index} has a non-positive run length")
            height += up - down
            if height < 0:
                raise ValueError(f"pair {index} descends below zero")
        if height != 0:
            raise ValueError("slope and descent totals differ")

    @property
    def n(self) -> int:
        return len(self.pairs)

    def to_word(self) -> DyckWord:
        symbols: List[Symbol] = []
        for up, down in self.pairs:
            symbols.extend([Symbol.X] * up)
            symbols.extend([Symbol.D] * down)
        return DyckWord(tuple(symbols))


def decompose(word: DyckWord) -> PeakDecomposition:
    if not word.symbols:
        raise EmptyWord()
    pairs: List[Tuple[int, int]] = []
    up = down = 0
    for symbol in word.symbols:
        if symbol is Symbol.X:
            if down:
                pairs.append((up, down))
                up = down = 0
            up += 1
        else:
            down += 1
    pairs.append((up, down))
    return PeakDecomposition(tuple(pairs))


class Step(str, Enum):
    NORTH = "N"
    EAST = "E"


@dataclass(frozen=True, slots=True)
class LatticePath:
    steps: Tuple[Step, ...]

    @property
    def endpoint(self) -> Tuple[int, int]:
        east = self.steps.count(Step.EAST)
        return east, len(self.steps) - east

    def points(self) -> List[Tuple[int, int]]:
        x = y = 0
        visited = [(0, 0)]
        for step in self.steps:
            if step is Step.NORTH:
                y += 1
            else:
                x += 1
            visited.append((x, y))
        return visited

    def render_grid(self) -> str:
        """ASCII picture, top row first: 'o' path point, '/' diagonal, '+' other lattice points."""
        size = self.endpoint[1]
        on_path = set(self.points())
        lines = []
        for y in range(size, -1, -1):
            cells = []
            for x in range(size + 1):
                if (x, y) in on_path:
                    cells.append("o")
                elif x == y:
                    cells.append("/")
                else:
                    cells.append("+")
            lines.append(" ".join(cells))
        return "\n".join(lines)


def to_path(word: DyckWord) -> LatticePath:
    return LatticePath(tuple(Step.NORTH if s is Symbol.X else Step.EAST for s in word.symbols))


def enumerate_words(n: int) -> Iterator[DyckWord]:
    """Every Dyck word of semilength n, lexicographic with X < D."""
    if n < 0:
        raise ValueError(f"semilength must be >= 0, got {n}")
    logger.debug(f"Enumerating Dyck words of semilength {n}")
    prefix: List[Symbol] = []

    def extend(x_left: int, d_left: int) -> Iterator[DyckWord]:
        if not x_left and not d_left:
            yield DyckWord(tuple(prefix))
            return
        if x_left:
            prefix.append(Symbol.X)
            yield from extend(x_left - 1, d_left)
            prefix.pop()
        if d_left > x_left:
            prefix.append(Symbol.D)
            yield from extend(x_left, d_left - 1)
            prefix.pop()

    yield from extend(n, n)
