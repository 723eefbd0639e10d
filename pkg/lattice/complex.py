"""
Quotient lattices L^n/JZ^n as finite node/circle complexes.

Nodes are the classes Z2^m of integer points. The lattice line along axis j
(in block i) through an integer point closes up into a two-node circle; the
circle is named by the block-class bits w of its points with bit i removed.
The full quotient L^n/Z^n has one node and n projective-line loops.
"""

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from config.settings import settings
from config.logging_config import get_logger
from groups.errors import CapExceededError, InvalidElementError
from groups.partition import PartitionSpec

logger = get_logger(__name__)

Node = Tuple[int, ...]


class CircleKind(Enum):
    """Circle type with its admissible discrete multipliers."""
    CIRCLE2 = "Circle2"    # R/2Z with two nodes, only the identity multiplier
    PROJLINE = "ProjLine"  # R/Z with one node, multipliers +1 and -1

    @property
    def admissible_multipliers(self) -> Tuple[int, ...]:
        return (1,) if self is CircleKind.CIRCLE2 else (1, -1)


@dataclass(frozen=True)
class Circle:
    """Circle (block, axis, other_class); axis is 0-based."""
    block: int
    axis: int
    other_class: Node
    kind: CircleKind = CircleKind.CIRCLE2

    def to_json(self) -> dict:
        return {
            "block": self.block + 1,
            "axis": self.axis + 1,
            "other_class": "".join(str(b) for b in self.other_class),
            "kind": self.kind.value,
        }


def insert_bit(w: Node, position: int, bit: int) -> Node:
    return w[:position] + (bit,) + w[position:]


def remove_bit(v: Node, position: int) -> Node:
    return v[:position] + v[position + 1:]


@dataclass(frozen=True)
class QuotientComplex:
    """Node/circle/incidence data of L^n/JZ^n (partition None means L^n/Z^n)."""
    n: int
    partition: Optional[PartitionSpec]
    nodes: Tuple[Node, ...]
    circles: Tuple[Circle, ...]

    @property
    def m(self) -> int:
        return self.partition.m if self.partition is not None else 0

    def circle_nodes(self, circle: Circle) -> Tuple[Node, ...]:
        if circle.kind is CircleKind.PROJLINE:
            return (circle.other_class,)
        return (
            insert_bit(circle.other_class, circle.block, 0),
            insert_bit(circle.other_class, circle.block, 1),
        )

    @property
    def incidence(self) -> Dict[Circle, Tuple[Node, ...]]:
        return {c: self.circle_nodes(c) for c in self.circles}

    def node_circles(self, node: Node) -> List[Circle]:
        return [c for c in self.circles if node in self.circle_nodes(c)]

    def is_incident(self, node: Node, circle: Circle) -> bool:
        return node in self.circle_nodes(circle)


def _complex_guard(n: int, m: int) -> None:
    if n > settings.complex_max_n or m > settings.complex_max_n:
        raise CapExceededError("quotient complex size", settings.complex_max_n, max(n, m))


def build_complex(partition: PartitionSpec) -> QuotientComplex:
    """L^n/JZ^n: 2^m nodes and n * 2^(m-1) two-node circles."""
    n, m = partition.n, partition.m
    _complex_guard(n, m)
    nodes = tuple(itertools.product((0, 1), repeat=m))
    circles = []
    for i, block in enumerate(partition.blocks):
        for axis in block:
            for w in itertools.product((0, 1), repeat=m - 1):
                circles.append(Circle(i, axis, tuple(w)))
    logger.debug("complex %s: %d nodes, %d circles", partition.to_text(), len(nodes), len(circles))
    return QuotientComplex(n, partition, nodes, tuple(circles))


def build_full_complex(n: int) -> QuotientComplex:
    """L^n/Z^n: one node and n projective-line loops."""
    if n < 1:
        raise InvalidElementError(f"n must be positive, got {n}")
    _complex_guard(n, 0)
    circles = tuple(Circle(0, axis, (), CircleKind.PROJLINE) for axis in range(n))
    return QuotientComplex(n, None, ((),), circles)


def check_complex(qc: QuotientComplex) -> dict:
    """Well-formedness: node count, circle count, node degree n, Circle2 endpoints."""
    m = qc.m
    expected_nodes = 2 ** m
    expected_circles = qc.n * 2 ** (m - 1) if qc.partition is not None else qc.n
    degrees = {v: 0 for v in qc.nodes}
    axes_at = {v: set() for v in qc.nodes}
    endpoints_ok = True
    for circle in qc.circles:
        ends = qc.circle_nodes(circle)
        if circle.kind is CircleKind.CIRCLE2:
            a, b = ends
            differing = [k for k in range(m) if a[k] != b[k]]
            endpoints_ok &= differing == [circle.block]
        for v in ends:
            degrees[v] += 1
            axes_at[v].add(circle.axis)
    result = {
        "nodes": len(qc.nodes),
        "circles": len(qc.circles),
        "node_count_ok": len(qc.nodes) == expected_nodes,
        "circle_count_ok": len(qc.circles) == expected_circles,
        "degree_ok": all(d == qc.n for d in degrees.values()),
        "one_circle_per_axis": all(len(axes) == qc.n for axes in axes_at.values()),
        "endpoints_ok": endpoints_ok,
    }
    result["passed"] = all(v for k, v in result.items() if k.endswith("_ok") or k == "one_circle_per_axis")
    return result


def complex_to_json(qc: QuotientComplex) -> dict:
    """{nodes, circles, incidence} for external drawing tools."""
    def node_text(v: Node) -> str:
        return "".join(str(b) for b in v) or "0"

    return {
        "partition": qc.partition.to_text() if qc.partition is not None else None,
        "n": qc.n,
        "nodes": [node_text(v) for v in qc.nodes],
        "circles": [c.to_json() for c in qc.circles],
        "incidence": [[node_text(v) for v in qc.circle_nodes(c)] for c in qc.circles],
    }
