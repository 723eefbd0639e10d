"""
Ordered partitions J = {I_1, ..., I_m} of the axis set {1..n}.

Every J-indexed construction (JP_n, JZ^n, quotient complexes, Lie
generators) takes a PartitionSpec. Blocks are stored 0-based and sorted.
"""

from typing import Dict, Iterator, List, Sequence, Tuple

from .errors import PartitionError


class PartitionSpec:
    """Disjoint ordered blocks covering {0..n-1}."""

    __slots__ = ("blocks", "_block_of", "_position")

    def __init__(self, blocks: Sequence[Sequence[int]]):
        normalized = tuple(tuple(sorted(int(a) for a in block)) for block in blocks)
        if not normalized:
            raise PartitionError("A partition needs at least one block")
        if any(len(block) == 0 for block in normalized):
            raise PartitionError("Every block must be nonempty")
        flat = [a for block in normalized for a in block]
        n = len(flat)
        if sorted(flat) != list(range(n)):
            raise PartitionError(f"Blocks {self._describe(normalized)} do not cover 1..{n} disjointly")
        self.blocks: Tuple[Tuple[int, ...], ...] = normalized
        block_of: Dict[int, int] = {}
        position: Dict[int, int] = {}
        for i, block in enumerate(normalized):
            for p, axis in enumerate(block):
                block_of[axis] = i
                position[axis] = p
        self._block_of = block_of
        self._position = position

    @classmethod
    def from_sizes(cls, sizes: Sequence[int]) -> "PartitionSpec":
        """Consecutive ascending blocks: [2, 1] gives I1={1,2}, I2={3}."""
        blocks: List[List[int]] = []
        start = 0
        for size in sizes:
            size = int(size)
            if size < 1:
                raise PartitionError(f"Block sizes must be positive, got {size}")
            blocks.append(list(range(start, start + size)))
            start += size
        return cls(blocks)

    @classmethod
    def single_block(cls, n: int) -> "PartitionSpec":
        return cls.from_sizes([n])

    @classmethod
    def singletons(cls, n: int) -> "PartitionSpec":
        return cls.from_sizes([1] * n)

    @staticmethod
    def _describe(blocks) -> str:
        return "; ".join("{" + ",".join(str(a + 1) for a in b) + "}" for b in blocks)

    @property
    def n(self) -> int:
        return len(self._block_of)

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(block) for block in self.blocks)

    def block_of(self, axis: int) -> int:
        return self._block_of[axis]

    def position(self, axis: int) -> int:
        """Ordinal position of an axis inside its sorted block."""
        return self._position[axis]

    def to_text(self) -> str:
        return ",".join(str(s) for s in self.sizes)

    def describe(self) -> str:
        return self._describe(self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, PartitionSpec) and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __repr__(self) -> str:
        return f"PartitionSpec({self.describe()})"


def compositions(n: int) -> Iterator[PartitionSpec]:
    """Every ordered consecutive-block partition of n (2^(n-1) of them)."""
    def rec(remaining: int, prefix: List[int]):
        if remaining == 0:
            yield PartitionSpec.from_sizes(prefix)
            return
        for size in range(1, remaining + 1):
            yield from rec(remaining - size, prefix + [size])
    yield from rec(n, [])
