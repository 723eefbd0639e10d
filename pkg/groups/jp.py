"""
The abstract finite parity group JP_n = (CP_{n_1} x ... x CP_{n_m}) x| BP_m.

Elements are triples (c, delta, tau): one CP_{n_i} component per block, one
sign per block with product +1, and a block permutation. The block
permutation is restricted to size-preserving maps (n_{tau(i)} = n_i); the
components of equal-size blocks are identified by ordinal position.

Group law: (c, d, t)(c', d', t') = (c * t(c'), d * t(d'), t o t') with
t(c')_i = c'_{t^-1(i)}.
"""

import itertools
import math
from typing import List, Sequence, Tuple

from config.settings import settings
from config.logging_config import get_logger

from .engine import standard_subgroup
from .errors import CapExceededError, DegreeMismatchError, InvalidElementError
from .isomorphism import FiniteGroup
from .partition import PartitionSpec
from .signed_perm import ParityKind, SignedPermutation, compose, identity, inverse, parity

logger = get_logger(__name__)


class JPElement:
    """Immutable element (c, delta, tau) of JP_n; tau is 0-based."""

    __slots__ = ("c", "delta", "tau", "_hash")

    def __init__(self, c: Sequence[SignedPermutation], delta: Sequence[int], tau: Sequence[int]):
        object.__setattr__(self, "c", tuple(c))
        object.__setattr__(self, "delta", tuple(int(d) for d in delta))
        object.__setattr__(self, "tau", tuple(int(t) for t in tau))
        object.__setattr__(self, "_hash", hash((self.c, self.delta, self.tau)))

    def __setattr__(self, name, value):
        raise AttributeError("JPElement is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, JPElement):
            return NotImplemented
        return self.c == other.c and self.delta == other.delta and self.tau == other.tau

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self):
        return (
            self.tau,
            tuple(0 if d == 1 else 1 for d in self.delta),
            tuple(g.sort_key() for g in self.c),
        )

    def __repr__(self) -> str:
        comps = ", ".join(g.to_text() for g in self.c)
        return f"JPElement(c=[{comps}], δ={list(self.delta)}, τ={[t + 1 for t in self.tau]})"

    def validate(self, partition: PartitionSpec) -> None:
        """Raise InvalidElementError unless the element belongs to JP for this partition."""
        m = partition.m
        if len(self.c) != m or len(self.delta) != m or len(self.tau) != m:
            raise InvalidElementError(f"Element does not have {m} block entries")
        for i, (comp, size) in enumerate(zip(self.c, partition.sizes)):
            if comp.n != size:
                raise InvalidElementError(f"Component {i + 1} has degree {comp.n}, block size {size}")
            if parity(comp, ParityKind.TYPE3) != 1:
                raise InvalidElementError(f"Component {i + 1} is not in CP_{size}")
        if any(d not in (1, -1) for d in self.delta) or math.prod(self.delta) != 1:
            raise InvalidElementError("Block signs must be +-1 with product +1")
        if sorted(self.tau) != list(range(m)):
            raise InvalidElementError("tau is not a block permutation")
        if any(partition.sizes[self.tau[i]] != partition.sizes[i] for i in range(m)):
            raise InvalidElementError("tau must preserve block sizes")


def size_preserving_block_perms(partition: PartitionSpec) -> List[Tuple[int, ...]]:
    """Block permutations tau with n_{tau(i)} = n_i, in lexicographic order."""
    sizes = partition.sizes
    return [
        tau for tau in itertools.permutations(range(partition.m))
        if all(sizes[tau[i]] == sizes[i] for i in range(partition.m))
    ]


def jp_order(partition: PartitionSpec) -> int:
    """|JP| = prod |CP_{n_i}| * 2^(m-1) * #size-preserving tau."""
    cp_orders = math.prod(max(1, 2 ** size * math.factorial(size) // 2) for size in partition.sizes)
    return cp_orders * 2 ** (partition.m - 1) * len(size_preserving_block_perms(partition))


def jp_identity(partition: PartitionSpec) -> JPElement:
    return JPElement(
        [identity(size) for size in partition.sizes],
        [1] * partition.m,
        range(partition.m),
    )


def _transport(values: Sequence, tau: Sequence[int]) -> tuple:
    # tau(v)_i = v_{tau^-1(i)}
    out = [None] * len(tau)
    for i, t in enumerate(tau):
        out[t] = values[i]
    return tuple(out)


def jp_compose(a: JPElement, b: JPElement) -> JPElement:
    """Semidirect-product law of JP_n."""
    if len(a.tau) != len(b.tau):
        raise DegreeMismatchError("JP elements over different partitions")
    moved_c = _transport(b.c, a.tau)
    moved_delta = _transport(b.delta, a.tau)
    c = []
    for x, y in zip(a.c, moved_c):
        if x.n != y.n:
            raise InvalidElementError("Block permutation does not preserve block sizes")
        c.append(compose(x, y))
    delta = [x * y for x, y in zip(a.delta, moved_delta)]
    tau = [a.tau[t] for t in b.tau]
    return JPElement(c, delta, tau)


def jp_inverse(a: JPElement) -> JPElement:
    """(c, d, t)^-1 = (t^-1(c^-1), t^-1(d), t^-1)."""
    # t^-1(v)_i = v_{t(i)}
    c = tuple(inverse(a.c[t]) for t in a.tau)
    delta = tuple(a.delta[t] for t in a.tau)
    tau_inv = [0] * len(a.tau)
    for i, t in enumerate(a.tau):
        tau_inv[t] = i
    return JPElement(c, delta, tau_inv)


def jp_enumerate(partition: PartitionSpec) -> List[JPElement]:
    """All elements of JP for the partition, in canonical order."""
    order = jp_order(partition)
    if order > settings.jp_cap:
        raise CapExceededError("JP enumeration", settings.jp_cap, order)
    m = partition.m
    components = [standard_subgroup("CP", size).elements for size in partition.sizes]
    deltas = [d for d in itertools.product((1, -1), repeat=m) if math.prod(d) == 1]
    taus = size_preserving_block_perms(partition)
    elements = [
        JPElement(c, delta, tau)
        for tau in taus
        for delta in deltas
        for c in itertools.product(*components)
    ]
    elements.sort(key=JPElement.sort_key)
    logger.debug("JP for partition %s has order %d", partition.to_text(), len(elements))
    return elements


def jp_group(partition: PartitionSpec) -> FiniteGroup:
    """JP for the partition wrapped as a FiniteGroup."""
    return FiniteGroup(f"JP[{partition.to_text()}]", jp_enumerate(partition), jp_compose, jp_identity(partition))
