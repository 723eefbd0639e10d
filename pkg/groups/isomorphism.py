"""
Generic finite groups and isomorphism search by generator-image backtracking.

Desk scale only: orders above ``settings.isomorphism_cap`` are refused.
"""

from collections import Counter
from typing import Callable, Dict, Generic, Hashable, Iterable, List, Optional, Sequence, TypeVar

from config.settings import settings
from config.logging_config import get_logger

from .errors import CapExceededError, VerificationFailure

logger = get_logger(__name__)

T = TypeVar("T", bound=Hashable)


class FiniteGroup(Generic[T]):
    """Elements with a multiplication callback; elements keep the given order."""

    def __init__(self, name: str, elements: Sequence[T], multiply: Callable[[T, T], T], identity: T):
        self.name = name
        self.elements: List[T] = list(elements)
        self.multiply = multiply
        self.identity = identity
        self._index = {x: i for i, x in enumerate(self.elements)}
        self._orders: Optional[Dict[T, int]] = None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={len(self)})"

    def element_order(self, x: T) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.multiply(y, x)
            k += 1
            if k > len(self.elements):
                raise VerificationFailure(f"{self.name} is not closed: element of unbounded order", x)
        return k

    @property
    def orders(self) -> Dict[T, int]:
        if self._orders is None:
            self._orders = {x: self.element_order(x) for x in self.elements}
        return self._orders

    def order_histogram(self) -> Dict[int, int]:
        return dict(sorted(Counter(self.orders.values()).items()))

    def square_root_counts(self) -> Dict[T, int]:
        counts = Counter(self.multiply(y, y) for y in self.elements)
        return {x: counts.get(x, 0) for x in self.elements}

    def generated(self, gens: Iterable[T]) -> set:
        gens = list(gens)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.multiply(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def generating_set(self) -> List[T]:
        """Greedy small generating set, highest element order first."""
        ranked = sorted(self.elements, key=lambda x: (-self.orders[x], self._index[x]))
        gens: List[T] = []
        span = {self.identity}
        for x in ranked:
            if len(span) == len(self.elements):
                break
            if x not in span:
                gens.append(x)
                span = self.generated(gens)
        return gens

    def is_closed(self) -> bool:
        return all(self.multiply(a, b) in self._index for a in self.elements for b in self.elements)

    def cayley_table(self) -> List[List[int]]:
        """Products as element indices: ``table[i][j]`` is the index of elements[i] * elements[j]."""
        table = []
        for a in self.elements:
            row = []
            for b in self.elements:
                k = self._index.get(self.multiply(a, b))
                if k is None:
                    raise VerificationFailure(f"{self.name} is not closed under multiplication", (a, b))
                row.append(k)
            table.append(row)
        return table

    def index(self, x: T) -> int:
        return self._index[x]


def _check_cap(group: FiniteGroup) -> None:
    if len(group) > settings.isomorphism_cap:
        raise CapExceededError(f"isomorphism search on {group.name}", settings.isomorphism_cap, len(group))


def _extend(G: FiniteGroup, H: FiniteGroup, gens: Sequence, images: Sequence) -> Optional[dict]:
    """Extend generator images to a bijective homomorphism, or None."""
    phi = {G.identity: H.identity}
    used = {H.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            fx = phi[x]
            for g, h in zip(gens, images):
                y = G.multiply(x, g)
                fy = H.multiply(fx, h)
                known = phi.get(y)
                if known is None:
                    if fy in used:
                        return None
                    phi[y] = fy
                    used.add(fy)
                    nxt.append(y)
                elif known != fy:
                    return None
        frontier = nxt
    if len(phi) != len(G):
        return None
    return phi


def isomorphic(G: FiniteGroup, H: FiniteGroup) -> Optional[dict]:
    """
    An isomorphism G -> H as a dict, or None when the groups differ.

    Candidates for each generator image must match element order and
    number of square roots; partial assignments are pruned by the orders
    of pairwise products.
    """
    _check_cap(G)
    _check_cap(H)
    if len(G) != len(H):
        return None
    if G.order_histogram() != H.order_histogram():
        return None

    g_roots = G.square_root_counts()
    h_roots = H.square_root_counts()
    if Counter(zip(G.orders.values(), g_roots.values())) != Counter(zip(H.orders.values(), h_roots.values())):
        return None

    gens = G.generating_set()
    candidates = [
        [h for h in H.elements if H.orders[h] == G.orders[g] and h_roots[h] == g_roots[g]]
        for g in gens
    ]
    pair_orders = {
        (i, j): G.element_order(G.multiply(gens[i], gens[j]))
        for i in range(len(gens)) for j in range(len(gens)) if i != j
    }

    chosen: List = []

    def search(k: int) -> Optional[dict]:
        if k == len(gens):
            return _extend(G, H, gens, chosen)
        for h in candidates[k]:
            if any(
                H.element_order(H.multiply(chosen[i], h)) != pair_orders[(i, k)]
                or H.element_order(H.multiply(h, chosen[i])) != pair_orders[(k, i)]
                for i in range(k)
            ):
                continue
            chosen.append(h)
            found = search(k + 1)
            chosen.pop()
            if found is not None:
                return found
        return None

    result = search(0)
    logger.debug("isomorphism %s -> %s: %s", G.name, H.name, "found" if result else "none")
    return result


def quotient_group(G: FiniteGroup, normal: Iterable) -> FiniteGroup:
    """G/K with cosets represented by their first element in G's order."""
    normal = list(normal)
    representative = {}
    reps = []
    for x in G.elements:
        if x in representative:
            continue
        reps.append(x)
        for k in normal:
            representative[G.multiply(x, k)] = x

    def multiply(a, b):
        return representative[G.multiply(a, b)]

    return FiniteGroup(f"{G.name}/K", reps, multiply, representative[G.identity])
