"""
Generators of SO(n_1, ..., n_m) at the Lie-algebra level and exact bracket
closure of their span.

Rotation generators E_jk - E_kj act inside a block, hyperbolic generators
E_jk + E_kj couple two blocks. Closure is computed over Q with a reduced
echelon basis of the n^2-dimensional coordinate space, so its result does
not depend on generator order.
"""

import itertools
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np
from scipy.linalg import expm

from config.settings import settings
from config.logging_config import get_logger
from groups.errors import CapExceededError, DegreeMismatchError, InvalidElementError
from groups.partition import PartitionSpec

from .matrices import EchelonSpan, RationalMatrix, bracket

logger = get_logger(__name__)


def _check_pair(j: int, k: int, n: int) -> None:
    if not (1 <= j < k <= n):
        raise InvalidElementError(f"Need 1 <= j < k <= n, got j={j}, k={k}, n={n}")


def so2_generator(j: int, k: int, n: int) -> RationalMatrix:
    """E_jk - E_kj (1-based j < k)."""
    _check_pair(j, k, n)
    return RationalMatrix.unit(n, j - 1, k - 1) - RationalMatrix.unit(n, k - 1, j - 1)


def so11_generator(j: int, k: int, n: int) -> RationalMatrix:
    """E_jk + E_kj (1-based j < k)."""
    _check_pair(j, k, n)
    return RationalMatrix.unit(n, j - 1, k - 1) + RationalMatrix.unit(n, k - 1, j - 1)


def generator_pairs(partition: PartitionSpec, minimal: bool) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """(rotation pairs, hyperbolic pairs), 1-based."""
    rotations = [
        (a + 1, b + 1)
        for block in partition.blocks
        for a, b in itertools.combinations(block, 2)
    ]
    hyperbolic = []
    for first, second in itertools.combinations(partition.blocks, 2):
        if minimal:
            a, b = sorted((min(first), min(second)))
            hyperbolic.append((a + 1, b + 1))
        else:
            hyperbolic.extend(tuple(sorted((a + 1, b + 1))) for a in first for b in second)
    return rotations, sorted(hyperbolic)


def generator_set(partition: PartitionSpec, minimal: bool = True) -> List[RationalMatrix]:
    """
    All within-block rotations plus the hyperbolic generators: every
    cross-block pair, or one per block pair (smallest indices) when minimal.
    """
    n = partition.n
    rotations, hyperbolic = generator_pairs(partition, minimal)
    return [so2_generator(j, k, n) for j, k in rotations] + [so11_generator(j, k, n) for j, k in hyperbolic]


def p_formula(partition: PartitionSpec) -> int:
    """sum n_i(n_i - 1)/2 + m(m - 1)/2."""
    m = partition.m
    return sum(size * (size - 1) // 2 for size in partition.sizes) + m * (m - 1) // 2


@dataclass(frozen=True)
class LieBasis:
    """Reduced echelon basis of a bracket-closed subspace of gl(n, Q)."""
    n: int
    basis: Tuple[RationalMatrix, ...] = field(default_factory=tuple)
    complete: bool = True

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def span(self) -> EchelonSpan:
        span = EchelonSpan(self.n * self.n)
        for b in self.basis:
            span.add(b.flatten())
        return span

    def contains(self, matrix: RationalMatrix) -> bool:
        return self.span().contains(matrix.flatten())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dimension": self.dimension,
            "basis": [b.to_json() for b in self.basis],
        }


def bracket_closure(gens: Sequence[RationalMatrix]) -> LieBasis:
    """Smallest bracket-closed linear span containing gens."""
    gens = list(gens)
    if not gens:
        raise InvalidElementError("bracket_closure needs at least one generator")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise DegreeMismatchError("Generators of different sizes")
    if n > settings.lie_max_n:
        raise CapExceededError("bracket closure matrix size", settings.lie_max_n, n)

    span = EchelonSpan(n * n)
    independent: List[RationalMatrix] = []
    for g in gens:
        if span.add(g.flatten()):
            independent.append(g)

    k = 0
    while k < len(independent):
        current = independent[k]
        for i in range(k):
            c = bracket(independent[i], current)
            if not c.is_zero() and span.add(c.flatten()):
                independent.append(c)
        k += 1

    basis = tuple(RationalMatrix.from_flat(n, row) for row in span.basis())
    logger.debug("bracket closure: %d generators -> dimension %d", len(gens), len(basis))
    return LieBasis(n, basis)


def is_bracket_closed(lie: LieBasis) -> bool:
    """Every pairwise bracket of basis elements lies in the span."""
    span = lie.span()
    return all(
        span.contains(bracket(a, b).flatten())
        for a, b in itertools.combinations(lie.basis, 2)
    )


def closure_report(partition: PartitionSpec) -> dict:
    """p next to the closure dimensions of the minimal and full generator sets."""
    minimal_gens = generator_set(partition, minimal=True)
    full_gens = generator_set(partition, minimal=False)
    # a single axis has no generators and the zero algebra
    minimal = bracket_closure(minimal_gens) if minimal_gens else LieBasis(partition.n)
    full = bracket_closure(full_gens) if full_gens else LieBasis(partition.n)
    return {
        "partition": partition.to_text(),
        "p": p_formula(partition),
        "generators_minimal": len(minimal_gens),
        "generators_full": len(full_gens),
        "dim_minimal": minimal.dimension,
        "dim_full": full.dimension,
        "spans_equal": minimal.basis == full.basis,
    }


def one_parameter(generator: RationalMatrix, t: float) -> np.ndarray:
    """exp(t X) in floating point."""
    return expm(t * np.array(generator.to_floats(), dtype=float))
