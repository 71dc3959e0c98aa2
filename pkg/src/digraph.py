"""
Ordered s-labelled Eulerian digraphs and their cycle matrices.

A digraph is stored as its ordered cycle partition; edges, degrees and the
vertex numbering are derived from it.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, pairwise
from typing import Dict, Hashable, List, Tuple

import networkx as nx

from src.errors import MalformedCycle, MatrixError, NotInFamily
from src.matrix import DyckMatrix, validate_matrix

logger = logging.getLogger(__name__)

Cycle = Tuple[Hashable, ...]


@dataclass(frozen=True, slots=True)
class Edge:
    cycle: int   # i, 1-based
    index: int   # m, 1-based position inside the cycle
    source: Hashable
    target: Hashable

    @property
    def label(self) -> str:
        return f"e{self.cycle}{self.index}"


@dataclass(frozen=True, slots=True)
class LabelledEulerianDigraph:
    """Ordered directed cycles C_1..C_n; the first listed edge of each cycle is its distinguished first edge."""

    cycles: Tuple[Cycle, ...]

    def __post_init__(self) -> None:
        cycles = tuple(tuple(cycle) for cycle in self.cycles)
        if not cycles:
            raise ValueError("a digraph needs at least one cycle")
        for i, cycle in enumerate(cycles, start=1):
            if not cycle:
                raise MalformedCycle(i, "cycle is empty")
            if len(set(cycle)) != len(cycle):
                raise MalformedCycle(i, "cycle repeats a vertex")
        object.__setattr__(self, "cycles", cycles)

    @property
    def vertices(self) -> Tuple[Hashable, ...]:
        """Vertices by first appearance: cycle order, then listed order."""
        return tuple(dict.fromkeys(v for cycle in self.cycles for v in cycle))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        edges = []
        for i, cycle in enumerate(self.cycles, start=1):
            for m, source in enumerate(cycle, start=1):
                edges.append(Edge(i, m, source, cycle[m % len(cycle)]))
        return tuple(edges)

    def numbering(self) -> Dict[Hashable, int]:
        return {v: j for j, v in enumerate(self.vertices, start=1)}


def matrix_to_digraph(matrix: DyckMatrix) -> LabelledEulerianDigraph:
    """Row i becomes cycle C_i through the vertices at its 1-columns, in column order."""
    return LabelledEulerianDigraph(tuple(matrix.row_support(i) for i in range(1, matrix.n + 1)))


def digraph_to_matrix(digraph: LabelledEulerianDigraph) -> DyckMatrix:
    """Cycle matrix of a digraph after first-appearance renumbering.

    Raises NotInFamily when the grid is not a Dyck matrix, or when a cycle
    does not list its vertices in the column order the matrix implies.
    """
    numbering = digraph.numbering()
    k = len(numbering)
    grid = []
    for cycle in digraph.cycles:
        row = [0] * k
        for v in cycle:
            row[numbering[v] - 1] = 1
        grid.append(row)
    try:
        matrix = validate_matrix(grid)
    except MatrixError as e:
        raise NotInFamily(e) from e

    for i, cycle in enumerate(digraph.cycles, start=1):
        listed = tuple(numbering[v] for v in cycle)
        if listed != matrix.row_support(i):
            raise NotInFamily(detail=f"cycle {i} lists its vertices as {listed}, expected {matrix.row_support(i)}")
    return matrix


@dataclass(frozen=True, slots=True)
class Violation:
    condition: str              # "E1" or "E2"
    indices: Tuple[int, int]    # 1-based cycle indices
    detail: str = ""


@dataclass(frozen=True, slots=True)
class FamilyReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.passed:
            return "E1 and E2 hold"
        return "; ".join(f"{v.condition} {v.indices}: {v.detail}" for v in self.violations)


def verify_family(digraph: LabelledEulerianDigraph) -> FamilyReport:
    """E1 over every pair of cycles, E2 over consecutive cycles."""
    violations: List[Violation] = []
    vertex_sets = [frozenset(cycle) for cycle in digraph.cycles]

    for (i, first), (j, second) in combinations(enumerate(vertex_sets, start=1), 2):
        if first <= second or second <= first:
            violations.append(Violation("E1", (i, j), "one cycle's vertices contain the other's"))

    for i, (cycle, following) in enumerate(pairwise(digraph.cycles), start=1):
        shared = vertex_sets[i - 1] & vertex_sets[i]
        m = len(shared)
        if set(cycle[:m]) != shared or cycle[:m] != following[:m]:
            violations.append(Violation("E2", (i, i + 1), f"{m} shared vertices are not the first {m} of both cycles"))

    return FamilyReport(tuple(violations))


def cycle_lengths(digraph: LabelledEulerianDigraph) -> Tuple[int, ...]:
    return tuple(len(cycle) for cycle in digraph.cycles)


def s_labelling(digraph: LabelledEulerianDigraph) -> Counter:
    """Cycle lengths as a multiset"""
    return Counter(cycle_lengths(digraph))


def to_networkx(digraph: LabelledEulerianDigraph) -> nx.MultiDiGraph:
    graph = nx.MultiDiGraph()
    graph.add_nodes_from(digraph.vertices)
    for edge in digraph.edges:
        graph.add_edge(edge.source, edge.target, key=edge.label, cycle=edge.cycle, index=edge.index)
    return graph


def is_balanced(digraph: LabelledEulerianDigraph) -> bool:
    """In-degree equals out-degree at every vertex."""
    graph = to_networkx(digraph)
    return all(graph.in_degree(v) == graph.out_degree(v) for v in graph.nodes)


def to_dot(digraph: LabelledEulerianDigraph) -> str:
    """Deterministic DOT text: vertices v1..vk, then one edge per e_ij in cycle order."""
    numbering = digraph.numbering()
    lines = ["digraph {"]
    lines.extend(f"  v{j};" for j in numbering.values())
    for edge in digraph.edges:
        lines.append(f'  v{numbering[edge.source]} -> v{numbering[edge.target]} [label="{edge.label}"];')
    lines.append("}")
    return "\n".join(lines)
