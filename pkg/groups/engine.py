"""
Finite-group machinery over P_n: closure enumeration, parity kernels, the
standard subgroups AP_n / BP_n / CP_n, embedded low-degree generators and
the Z2^n parity checks.
"""

import itertools
import math
from typing import Dict, Iterable, List, Sequence, Tuple

from config.settings import settings
from config.logging_config import get_logger

from .errors import CapExceededError, DegreeMismatchError, InvalidElementError
from .isomorphism import FiniteGroup
from .signed_perm import (
    ParityKind,
    SignedPermutation,
    compose,
    embed,
    identity,
    inverse,
    iter_Pn,
    parity,
    permutation_sign,
)

logger = get_logger(__name__)

STANDARD_KINDS = {"AP": ParityKind.TYPE1, "BP": ParityKind.TYPE2, "CP": ParityKind.TYPE3}


class ElementSet:
    """
    Deduplicated elements of P_n in canonical order.

    ``is_group`` marks sets produced by closure or kernel construction.
    """

    __slots__ = ("n", "elements", "is_group", "_members")

    def __init__(self, n: int, elements: Iterable[SignedPermutation], is_group: bool = False):
        members = set()
        for g in elements:
            if g.n != n:
                raise DegreeMismatchError(f"Element of degree {g.n} in a degree {n} set")
            members.add(g)
        self.n = n
        self.elements: Tuple[SignedPermutation, ...] = tuple(sorted(members, key=SignedPermutation.sort_key))
        self.is_group = is_group
        self._members = frozenset(members)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._members

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.n == other.n and self._members == other._members

    def __hash__(self) -> int:
        return hash((self.n, self._members))

    def __repr__(self) -> str:
        return f"ElementSet(n={self.n}, order={len(self)})"

    @property
    def order(self) -> int:
        return len(self.elements)

    def to_json(self) -> List[str]:
        return [g.to_text() for g in self.elements]

    def is_closed(self) -> bool:
        """Closed under compose and inverse, and contains the identity."""
        if identity(self.n) not in self._members:
            return False
        if any(inverse(g) not in self._members for g in self.elements):
            return False
        return all(compose(g, h) in self._members for g in self.elements for h in self.elements)


def _enumeration_guard(n: int) -> None:
    if n < 1:
        raise InvalidElementError(f"Degree must be positive, got {n}")
    if n > settings.enumeration_max_n:
        raise CapExceededError("P_n enumeration degree", settings.enumeration_max_n, n)
    order = 2 ** n * math.factorial(n)
    if order > settings.closure_cap:
        raise CapExceededError("P_n enumeration", settings.closure_cap, order)


def closure(gens: Iterable[SignedPermutation]) -> ElementSet:
    """
    Smallest subgroup containing ``gens``.

    Breadth-first right multiplication by generators starting from the
    identity; the output is canonical and independent of generator order.
    """
    gens = list(gens)
    if not gens:
        raise InvalidElementError("closure needs at least one generator")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise DegreeMismatchError("Generators have different degrees")

    generators = sorted(set(gens), key=SignedPermutation.sort_key)
    cap = settings.closure_cap
    start = identity(n)
    seen = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for x in frontier:
            for g in generators:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise CapExceededError("closure", cap, len(seen))
                    next_frontier.append(y)
        frontier = next_frontier
    logger.debug("closure of %d generators in degree %d has order %d", len(generators), n, len(seen))
    return ElementSet(n, seen, is_group=True)


def enumerate_Pn(n: int) -> ElementSet:
    """All 2^n n! elements of P_n."""
    _enumeration_guard(n)
    return ElementSet(n, iter_Pn(n), is_group=True)


def kernel(n: int, kind) -> ElementSet:
    """Elements of P_n on which the given parity is +1 (AP_n, BP_n, CP_n)."""
    kind = ParityKind.from_value(kind)
    _enumeration_guard(n)
    return ElementSet(n, (z for z in iter_Pn(n) if parity(z, kind) == 1), is_group=True)


def standard_subgroup(kind: str, n: int) -> ElementSet:
    """
    AP_n / BP_n / CP_n built directly from their defining predicates.

    Independent of :func:`parity` so that it can be compared with kernel().
    """
    kind = kind.upper()
    if kind not in STANDARD_KINDS:
        raise InvalidElementError(f"Unknown standard subgroup {kind!r}; use AP, BP or CP")
    _enumeration_guard(n)
    sign_tuples = list(itertools.product((1, -1), repeat=n))
    members = []
    for perm in itertools.permutations(range(n)):
        perm_sign = permutation_sign(perm)
        if kind == "AP" and perm_sign != 1:
            continue
        for signs in sign_tuples:
            sign_product = math.prod(signs)
            if kind == "BP" and sign_product != 1:
                continue
            if kind == "CP" and perm_sign * sign_product != 1:
                continue
            members.append(SignedPermutation._trusted(perm, signs))
    return ElementSet(n, members, is_group=True)


def full_group(kind: str, n: int) -> ElementSet:
    """P_n itself for kind "P", otherwise the standard subgroup."""
    if kind.upper() == "P":
        return enumerate_Pn(n)
    return standard_subgroup(kind, n)


_SMALL_GROUPS: Dict[str, Tuple[int, str]] = {
    "AP3": (3, "AP"),
    "BP2": (2, "BP"),
    "CP2": (2, "CP"),
    "P2": (2, "P"),
}


def embedded_generators(kind: str, n: int) -> List[SignedPermutation]:
    """
    Nontrivial elements of AP3 / BP2 / CP2 / P2 placed on every axis pair
    (or triple), identity on the remaining axes.
    """
    kind = kind.upper()
    if kind not in _SMALL_GROUPS:
        raise InvalidElementError(f"Unknown embedded kind {kind!r}; use {', '.join(_SMALL_GROUPS)}")
    degree, base = _SMALL_GROUPS[kind]
    if n < degree:
        raise InvalidElementError(f"{kind} copies need n >= {degree}, got {n}")
    small = [g for g in full_group(base, degree) if not g.is_identity()]
    gens = set()
    for axes in itertools.combinations(range(n), degree):
        for g in small:
            gens.add(embed(g, axes, n))
    return sorted(gens, key=SignedPermutation.sort_key)


def structure_check(kind: str, n: int) -> dict:
    """
    Semidirect structure of AP_n (Z2^n x| A_n) and BP_n (AZ2^n x| S_n).

    N = pure sign elements of G, H = pure permutations of G.
    """
    kind = kind.upper()
    if kind not in ("AP", "BP"):
        raise InvalidElementError("structure_check covers AP and BP")
    group = standard_subgroup(kind, n)
    normal_part = [g for g in group if all(p == j for j, p in enumerate(g.perm))]
    complement = [g for g in group if all(s == 1 for s in g.signs)]
    normal_set = set(normal_part)

    # weight <= 2 sign flips generate both Z2^n and AZ2^n
    flip_gens = [g for g in normal_part if 0 < sum(1 for s in g.signs if s == -1) <= 2]
    normal = all(compose(compose(g, x), inverse(g)) in normal_set for g in group for x in flip_gens)

    expected_normal_order = 2 ** n if kind == "AP" else 2 ** (n - 1)
    expected_complement_order = math.factorial(n) // (2 if kind == "AP" and n >= 2 else 1)
    complement_perm_signs_ok = all(
        permutation_sign(g.perm) == 1 for g in complement
    ) if kind == "AP" else len(complement) == math.factorial(n)
    intersection_trivial = set(normal_part) & set(complement) == {identity(n)}

    result = {
        "kind": kind,
        "n": n,
        "order": len(group),
        "normal_order": len(normal_part),
        "complement_order": len(complement),
        "normal_subgroup": normal,
        "intersection_trivial": intersection_trivial,
        "product_order": len(normal_part) * len(complement) == len(group),
        "normal_matches": len(normal_part) == expected_normal_order,
        "complement_matches": len(complement) == expected_complement_order and complement_perm_signs_ok,
    }
    result["passed"] = all(
        result[key] for key in
        ("normal_subgroup", "intersection_trivial", "product_order", "normal_matches", "complement_matches")
    )
    return result


# ----------------------------------------------------------------------
# Z2^n parity


class Z2Vector:
    """Immutable bit vector over the two-element field."""

    __slots__ = ("bits",)

    def __init__(self, bits: Sequence[int]):
        bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in bits):
            raise InvalidElementError(f"Z2 vector entries must be 0 or 1, got {list(bits)}")
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("Z2Vector is immutable")

    def __len__(self) -> int:
        return len(self.bits)

    def __eq__(self, other) -> bool:
        return isinstance(other, Z2Vector) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __add__(self, other: "Z2Vector") -> "Z2Vector":
        if len(self) != len(other):
            raise DegreeMismatchError("Z2 vectors of different length")
        return Z2Vector(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __repr__(self) -> str:
        return f"Z2Vector({''.join(str(b) for b in self.bits)})"


def z2_parity(v: Z2Vector) -> int:
    """Sum of the bits mod 2."""
    return sum(v.bits) % 2


def z2_span(vectors: Iterable[int]) -> set:
    """All sums of the given bitmask vectors."""
    span = {0}
    for v in vectors:
        if v not in span:
            span |= {s ^ v for s in span}
    return span


def z2_A_generated_check(n: int) -> dict:
    """Even-weight subgroup AZ2^n equals the span of two-coordinate vectors."""
    if n < 1:
        raise InvalidElementError(f"n must be positive, got {n}")
    if n > settings.z2_max_n:
        raise CapExceededError("Z2 vector length", settings.z2_max_n, n)
    even = {v for v in range(2 ** n) if bin(v).count("1") % 2 == 0}
    pairs = [(1 << i) | (1 << j) for i, j in itertools.combinations(range(n), 2)]
    span = z2_span(pairs)
    return {
        "n": n,
        "even_weight_order": len(even),
        "span_order": len(span),
        "expected_order": 2 ** (n - 1),
        "passed": span == even and len(even) == 2 ** (n - 1),
    }


def as_group(element_set: ElementSet, name: str = "G") -> FiniteGroup:
    """Wrap an ElementSet for the generic isomorphism machinery."""
    return FiniteGroup(name, element_set.elements, compose, identity(element_set.n))
