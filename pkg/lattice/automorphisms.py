"""
Based automorphisms of quotient complexes.

A based automorphism (tau, s, eps) permutes blocks by the size-preserving
tau, sends axis j of block i to axis s(j) of block tau(i) and flips the
orientation of the circles along j when eps_j = -1. It fixes the node of
the zero class. Composition is that of the signed permutation (s, eps)
together with tau.
"""

import itertools
import math
import random
from typing import Iterable, List, Sequence, Tuple, Union

from config.settings import settings
from config.logging_config import get_logger
from groups.errors import CapExceededError, DegreeMismatchError, InvalidElementError, VerificationFailure
from groups.isomorphism import FiniteGroup
from groups.jp import JPElement, size_preserving_block_perms
from groups.partition import PartitionSpec
from groups.signed_perm import SignedPermutation, compose, permutation_sign

from .complex import Circle, CircleKind, Node, QuotientComplex, insert_bit, remove_bit

logger = get_logger(__name__)


class BasedAutomorphism:
    """Immutable triple (tau, s, eps); all indices 0-based."""

    __slots__ = ("tau", "s", "eps", "_hash")

    def __init__(self, tau: Sequence[int], s: Sequence[int], eps: Sequence[int]):
        tau, s, eps = tuple(int(t) for t in tau), tuple(int(j) for j in s), tuple(int(e) for e in eps)
        if len(s) != len(eps):
            raise InvalidElementError("Axis map and sign sequence differ in length")
        if sorted(s) != list(range(len(s))):
            raise InvalidElementError(f"Axis map {[j + 1 for j in s]} is not a bijection")
        if sorted(tau) != list(range(len(tau))):
            raise InvalidElementError(f"Block map {[t + 1 for t in tau]} is not a bijection")
        if any(e not in (1, -1) for e in eps):
            raise InvalidElementError("Orientation signs must be +1 or -1")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "_hash", hash((tau, s, eps)))

    def __setattr__(self, name, value):
        raise AttributeError("BasedAutomorphism is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, BasedAutomorphism):
            return NotImplemented
        return self.tau == other.tau and self.s == other.s and self.eps == other.eps

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return (
            f"BasedAutomorphism(τ={[t + 1 for t in self.tau]}, "
            f"s={[j + 1 for j in self.s]}, ε={list(self.eps)})"
        )

    @property
    def n(self) -> int:
        return len(self.s)

    def sort_key(self):
        return (self.tau, self.as_signed_permutation().sort_key())

    def as_signed_permutation(self) -> SignedPermutation:
        return SignedPermutation(self.s, self.eps)

    def to_text(self) -> str:
        tau = ",".join(str(t + 1) for t in self.tau)
        return f"τ:[{tau}];{self.as_signed_permutation().to_text()}"

    def is_identity(self) -> bool:
        return self.tau == tuple(range(len(self.tau))) and self.as_signed_permutation().is_identity()

    def validate(self, partition: PartitionSpec) -> None:
        """Raise InvalidElementError unless the triple is block-compatible."""
        if self.n != partition.n or len(self.tau) != partition.m:
            raise DegreeMismatchError(f"Automorphism does not match partition {partition.to_text()}")
        for i, block in enumerate(partition.blocks):
            target = partition.blocks[self.tau[i]]
            if len(target) != len(block):
                raise InvalidElementError("tau must preserve block sizes")
            if sorted(self.s[j] for j in block) != list(target):
                raise InvalidElementError(f"s does not map block {i + 1} onto block {self.tau[i] + 1}")


def identity_automorphism(n: int, m: int) -> BasedAutomorphism:
    return BasedAutomorphism(range(m), range(n), [1] * n)


def compose_automorphisms(a: BasedAutomorphism, b: BasedAutomorphism) -> BasedAutomorphism:
    """a after b."""
    if a.n != b.n or len(a.tau) != len(b.tau):
        raise DegreeMismatchError("Automorphisms of different complexes")
    signed = compose(a.as_signed_permutation(), b.as_signed_permutation())
    tau = [a.tau[t] for t in b.tau]
    return BasedAutomorphism(tau, signed.perm, signed.signs)


# ----------------------------------------------------------------------
# action on the complex


def apply_to_node(a: BasedAutomorphism, node: Node) -> Node:
    """v'[tau(i)] = v[i]."""
    if len(node) != len(a.tau):
        raise DegreeMismatchError(f"Node of length {len(node)} for {len(a.tau)} blocks")
    out = [0] * len(node)
    for i, bit in enumerate(node):
        out[a.tau[i]] = bit
    return tuple(out)


def apply_to_circle(a: BasedAutomorphism, circle: Circle) -> Circle:
    """Image circle: block tau(i), axis s(j), other class of the image endpoints."""
    if circle.kind is CircleKind.PROJLINE:
        return Circle(circle.block, a.s[circle.axis], circle.other_class, circle.kind)
    target = a.tau[circle.block]
    endpoint = apply_to_node(a, insert_bit(circle.other_class, circle.block, 0))
    return Circle(target, a.s[circle.axis], remove_bit(endpoint, target), circle.kind)


def apply(a: BasedAutomorphism, target: Union[Node, Circle]) -> Union[Node, Circle]:
    """Image of a node (bit tuple) or a circle."""
    if isinstance(target, Circle):
        return apply_to_circle(a, target)
    return apply_to_node(a, tuple(target))


def preserves_incidence(a: BasedAutomorphism, qc: QuotientComplex) -> bool:
    """Nodes map to nodes, circles to circles, and incidences are preserved."""
    nodes = set(qc.nodes)
    circles = set(qc.circles)
    if {apply_to_node(a, v) for v in qc.nodes} != nodes:
        return False
    for circle in qc.circles:
        image = apply_to_circle(a, circle)
        if image not in circles:
            return False
        if {apply_to_node(a, v) for v in qc.circle_nodes(circle)} != set(qc.circle_nodes(image)):
            return False
    return True


# ----------------------------------------------------------------------
# candidates and the rotation predicate


def _require_partition(qc: QuotientComplex) -> PartitionSpec:
    if qc.partition is None:
        raise InvalidElementError("Operation needs a complex built from a partition")
    return qc.partition


def candidate_count(partition: PartitionSpec) -> int:
    """|size-preserving tau| * prod n_i! * 2^n."""
    taus = len(size_preserving_block_perms(partition))
    return taus * math.prod(math.factorial(size) for size in partition.sizes) * 2 ** partition.n


def candidate_automorphisms(qc: QuotientComplex) -> List[BasedAutomorphism]:
    """Every block-compatible triple (tau, s, eps), in canonical order."""
    partition = _require_partition(qc)
    count = candidate_count(partition)
    if count > settings.candidate_cap:
        raise CapExceededError("candidate automorphisms", settings.candidate_cap, count)
    blocks = partition.blocks
    n = partition.n
    sign_choices = list(itertools.product((1, -1), repeat=n))
    result = []
    for tau in size_preserving_block_perms(partition):
        local = [itertools.permutations(range(len(block))) for block in blocks]
        for ordinals in itertools.product(*local):
            s = [0] * n
            for i, block in enumerate(blocks):
                target = blocks[tau[i]]
                for p, axis in enumerate(block):
                    s[axis] = target[ordinals[i][p]]
            for eps in sign_choices:
                result.append(BasedAutomorphism(tau, s, eps))
    result.sort(key=BasedAutomorphism.sort_key)
    logger.debug("partition %s: %d candidate automorphisms", partition.to_text(), len(result))
    return result


def block_determinants(a: BasedAutomorphism, partition: PartitionSpec) -> Tuple[int, ...]:
    """d_i = sgn(local ordinal permutation of s on block i) * prod of eps over block i."""
    dets = []
    for i, block in enumerate(partition.blocks):
        target = partition.blocks[a.tau[i]]
        ordinal = [target.index(a.s[axis]) for axis in block]
        dets.append(permutation_sign(ordinal) * math.prod(a.eps[axis] for axis in block))
    return tuple(dets)


def is_rotation(a: BasedAutomorphism, qc: QuotientComplex) -> bool:
    """
    Even blocks must carry d_i = +1; when every block is odd the product of
    all d_i must also be +1.
    """
    partition = _require_partition(qc)
    a.validate(partition)
    dets = block_determinants(a, partition)
    for size, d in zip(partition.sizes, dets):
        if size % 2 == 0 and d != 1:
            return False
    if all(size % 2 == 1 for size in partition.sizes):
        return math.prod(dets) == 1
    return True


def check_closed(elements: Sequence[BasedAutomorphism], label: str, seed: int = 0) -> int:
    """
    Closure under composition; exhaustive up to homomorphism_pair_cap pairs,
    seeded sampling beyond. Returns the number of pairs checked.
    """
    members = set(elements)
    pairs: Iterable[Tuple[BasedAutomorphism, BasedAutomorphism]]
    if len(elements) ** 2 <= settings.homomorphism_pair_cap:
        pairs = itertools.product(elements, repeat=2)
        checked = len(elements) ** 2
    else:
        rng = random.Random(seed)
        checked = settings.homomorphism_pair_cap
        pairs = ((rng.choice(elements), rng.choice(elements)) for _ in range(checked))
    for a, b in pairs:
        if compose_automorphisms(a, b) not in members:
            raise VerificationFailure(f"{label} is not closed under composition", (a, b))
    return checked


def rotation_group(qc: QuotientComplex) -> List[BasedAutomorphism]:
    """Candidates satisfying is_rotation; identity membership and closure are checked."""
    partition = _require_partition(qc)
    rotations = [a for a in candidate_automorphisms(qc) if is_rotation(a, qc)]
    if identity_automorphism(partition.n, partition.m) not in set(rotations):
        raise VerificationFailure("Rotation set lacks the identity", partition.to_text())
    check_closed(rotations, f"rotation group of {partition.to_text()}")
    return rotations


def as_finite_group(elements: Sequence[BasedAutomorphism], name: str) -> FiniteGroup:
    n = elements[0].n
    m = len(elements[0].tau)
    return FiniteGroup(name, elements, compose_automorphisms, identity_automorphism(n, m))


# ----------------------------------------------------------------------
# JP action


def jp_action(e: JPElement, qc: QuotientComplex) -> BasedAutomorphism:
    """
    Automorphism induced by (c, delta, tau): axis at ordinal p of block i goes
    to ordinal c_k.perm[p] of block k = tau(i), with sign c_k.signs[p] * delta_k.
    """
    partition = _require_partition(qc)
    e.validate(partition)
    blocks = partition.blocks
    n = partition.n
    s = [0] * n
    eps = [1] * n
    for i, block in enumerate(blocks):
        k = e.tau[i]
        component = e.c[k]
        target = blocks[k]
        for p, axis in enumerate(block):
            s[axis] = target[component.perm[p]]
            eps[axis] = component.signs[p] * e.delta[k]
    return BasedAutomorphism(e.tau, s, eps)


# ----------------------------------------------------------------------
# L^n / Z^n


def full_candidates(n: int) -> List[BasedAutomorphism]:
    """Every (s, eps) on the one-node complex; all ProjLine multipliers are admissible."""
    order = 2 ** n * math.factorial(n)
    if order > settings.candidate_cap:
        raise CapExceededError("full quotient automorphisms", settings.candidate_cap, order)
    result = [
        BasedAutomorphism((), perm, eps)
        for perm in itertools.permutations(range(n))
        for eps in itertools.product((1, -1), repeat=n)
    ]
    result.sort(key=BasedAutomorphism.sort_key)
    return result


def to_signed_permutation_map(elements: Sequence[BasedAutomorphism]) -> dict:
    """The forgetful map (tau, s, eps) -> (s, eps); bijective on tau-free automorphisms."""
    return {a: a.as_signed_permutation() for a in elements}
