"""
Exhaustive desk-scale verification of the word <-> matrix <-> digraph bijection.
"""
import logging
import math
from dataclasses import dataclass, field
from itertools import combinations, pairwise
from typing import Iterator, List, Optional, Set, Tuple

from src.config_manager import ConfigManager
from src.convert import check_window, get_dyck_word, get_matrix
from src.digraph import (
    LabelledEulerianDigraph,
    cycle_lengths,
    digraph_to_matrix,
    is_balanced,
    matrix_to_digraph,
    verify_family,
)
from src.dyck_core import DyckWord, Symbol, decompose, enumerate_words
from src.errors import DyckError, NotInFamily
from src.matrix import DyckMatrix, column_structure_check

logger = logging.getLogger(__name__)

CycleSystem = Tuple[Tuple[int, ...], ...]


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


@dataclass
class SemilengthReport:
    n: int
    word_count: int = 0
    matrix_count: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def catalan(self) -> int:
        return catalan(self.n)

    @property
    def passed(self) -> bool:
        return not self.failures and self.word_count == self.matrix_count == self.catalan


@dataclass
class FamilySearchReport:
    max_vertices: int
    max_cycles: int
    systems_explored: int = 0
    accepted: int = 0
    counterexamples: List[CycleSystem] = field(default_factory=list)


class BijectionVerifier:
    def __init__(self, config: ConfigManager):
        self.config = config

    def check_word(self, word: DyckWord) -> Tuple[Optional[DyckMatrix], List[str]]:
        """Run every per-word invariant; returns the matrix (if any) and the failures found."""
        failures: List[str] = []
        try:
            matrix = get_matrix(word.symbols)
        except DyckError as e:
            return None, [f"{word}: get_matrix raised {e}"]

        back = get_dyck_word(matrix)
        if back != word:
            failures.append(f"{word}: get_dyck_word returned {back}")
        elif get_matrix(back.symbols) != matrix:
            failures.append(f"{word}: get_matrix(get_dyck_word(M)) differs from M")

        if not column_structure_check(matrix):
            failures.append(f"{word}: a padded column is not 0/1/0 blocks")

        maxima = [max(matrix.row_support(i)) for i in range(1, matrix.n + 1)]
        if any(upper >= lower for upper, lower in pairwise(maxima)):
            failures.append(f"{word}: row maxima {maxima} do not strictly increase")
        if any(t.b >= t.c for t in matrix.transitions):
            failures.append(f"{word}: a transition has b >= c")

        supports = [frozenset(matrix.row_support(i)) for i in range(1, matrix.n + 1)]
        for (i, first), (j, second) in combinations(enumerate(supports, start=1), 2):
            if first <= second or second <= first:
                failures.append(f"{word}: row supports {i} and {j} are nested")

        failures.extend(self._check_rows_against_slopes(word, matrix))
        failures.extend(self._check_window_rows(word, matrix))
        failures.extend(self._check_digraph(word, matrix))
        return matrix, failures

    def _check_rows_against_slopes(self, word: DyckWord, matrix: DyckMatrix) -> List[str]:
        pairs = decompose(word).pairs
        if matrix.n != len(pairs) or matrix.n != word.peaks:
            return [f"{word}: {matrix.n} rows for {len(pairs)} peaks"]
        failures = []
        shared = 0
        for i, (up, down) in enumerate(pairs, start=1):
            ones = sum(matrix.rows[i - 1])
            if ones != shared + up:
                failures.append(f"{word}: row {i} has {ones} ones, expected {shared} + {up}")
            shared += up - down
        return failures

    def _check_window_rows(self, word: DyckWord, matrix: DyckMatrix) -> List[str]:
        view = matrix.padded_view()
        failures = []
        for i in range(1, matrix.n + 2):
            emitted = [check_window(a, b) for a, b in zip(view.row(i - 1), view.row(i))]
            emitted = [s for s in emitted if s is not None]
            if i == 1 and Symbol.D in emitted:
                failures.append(f"{word}: window row 1 emits a D")
            if any(a is Symbol.X and b is Symbol.D for a, b in pairwise(emitted)):
                failures.append(f"{word}: window row {i} emits a D after an x")
        return failures

    def _check_digraph(self, word: DyckWord, matrix: DyckMatrix) -> List[str]:
        digraph = matrix_to_digraph(matrix)
        failures = []
        report = verify_family(digraph)
        if not report.passed:
            failures.append(f"{word}: {report}")
        if not is_balanced(digraph):
            failures.append(f"{word}: digraph has a vertex with in-degree != out-degree")
        if len(digraph.edges) != matrix.ones or sum(cycle_lengths(digraph)) != matrix.ones:
            failures.append(f"{word}: edge count differs from the number of 1's")
        if digraph.vertex_count != matrix.k or matrix.k != word.semilength:
            failures.append(f"{word}: {digraph.vertex_count} vertices for semilength {word.semilength}")
        try:
            if digraph_to_matrix(digraph) != matrix:
                failures.append(f"{word}: digraph_to_matrix does not invert matrix_to_digraph")
        except NotInFamily as e:
            failures.append(f"{word}: digraph_to_matrix raised {e}")
        return failures

    def check_semilength(self, n: int) -> SemilengthReport:
        report = SemilengthReport(n)
        seen: Set[DyckMatrix] = set()
        for word in enumerate_words(n):
            report.word_count += 1
            matrix, failures = self.check_word(word)
            report.failures.extend(failures)
            if matrix is None:
                continue
            if matrix in seen:
                report.failures.append(f"{word}: matrix already produced by another word")
            seen.add(matrix)
        report.matrix_count = len(seen)
        logger.info(f"Semilength {n}: {report.word_count} words, {len(report.failures)} failures")
        return report

    def clamp(self, max_n: int) -> int:
        limit = self.config.get_safety_limit()
        if max_n > limit:
            logger.warning(f"Semilength bound {max_n} capped at the safety limit {limit}")
            return limit
        return max_n

    def check_up_to(self, max_n: int) -> List[SemilengthReport]:
        return [self.check_semilength(n) for n in range(1, self.clamp(max_n) + 1)]

    # ------- E1/E2 characterisation -------

    def search_cycle_systems(self, max_vertices: Optional[int] = None, max_cycles: Optional[int] = None) -> FamilySearchReport:
        """Every canonical ordered cycle system passing E1/E2, checked against the matrix rules.

        Systems are numbered by first appearance, so the first cycle is
        (1..s) and fresh vertices enter in increasing order. E2 is built into
        the candidate generator and E1 is checked as each cycle is appended;
        a violation of either survives every extension, so failing prefixes
        are pruned.
        """
        default_vertices, default_cycles = self.config.get_family_limits()
        report = FamilySearchReport(max_vertices or default_vertices, max_cycles or default_cycles)

        for s in range(1, report.max_vertices + 1):
            self._explore((tuple(range(1, s + 1)),), s, report)

        if report.counterexamples:
            logger.warning(
                f"{len(report.counterexamples)} of {report.systems_explored} cycle systems pass E1/E2 "
                f"but are not Dyck matrices"
            )
        return report

    def _explore(self, system: CycleSystem, used: int, report: FamilySearchReport) -> None:
        digraph = LabelledEulerianDigraph(system)
        if not verify_family(digraph).passed:
            return
        report.systems_explored += 1
        try:
            digraph_to_matrix(digraph)
            report.accepted += 1
        except NotInFamily:
            report.counterexamples.append(system)

        if len(system) == report.max_cycles:
            return
        previous_sets = [frozenset(cycle) for cycle in system]
        for cycle in _next_cycles(system[-1], used, report.max_vertices):
            vertices = frozenset(cycle)
            if any(vertices <= earlier or earlier <= vertices for earlier in previous_sets):
                continue
            self._explore(system + (cycle,), max(used, max(cycle)), report)


def _next_cycles(previous: Tuple[int, ...], used: int, max_vertices: int) -> Iterator[Tuple[int, ...]]:
    """Cycles sharing exactly a proper prefix of `previous`, in matching order."""
    outside = [v for v in range(1, used + 1) if v not in previous]

    def tails(tail: List[int], fresh: int) -> Iterator[Tuple[int, ...]]:
        if tail:
            yield tuple(tail)
        for v in outside:
            if v not in tail:
                yield from tails(tail + [v], fresh)
        if fresh <= max_vertices:
            yield from tails(tail + [fresh], fresh + 1)

    for m in range(len(previous)):
        for tail in tails([], used + 1):
            yield previous[:m] + tail
