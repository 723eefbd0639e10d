"""
Mechanical check that the rotation group of L^n/JZ^n is the image of JP
under its action on the complex, and the full-quotient automorphism group.
"""

import itertools
import random
import time
from typing import List, Optional

from pydantic import BaseModel, Field

from config.settings import settings
from config.logging_config import get_logger
from groups.engine import as_group, enumerate_Pn
from groups.errors import VerificationFailure
from groups.isomorphism import FiniteGroup, isomorphic, quotient_group
from groups.jp import jp_compose, jp_enumerate, jp_group
from groups.partition import PartitionSpec
from groups.signed_perm import compose

from .automorphisms import (
    BasedAutomorphism,
    as_finite_group,
    candidate_automorphisms,
    compose_automorphisms,
    full_candidates,
    jp_action,
    preserves_incidence,
    rotation_group,
    to_signed_permutation_map,
)
from .complex import QuotientComplex, build_complex, build_full_complex

logger = get_logger(__name__)


class Prop1Report(BaseModel):
    """Result of comparing the JP image with the rotation predicate."""

    partition: str
    jp_order: int
    image_order: int
    kernel_order: int
    rotation_order: int
    candidate_order: int
    predicate_equals_image: bool
    orders_consistent: bool
    homomorphism_pairs_checked: int
    iso_check: Optional[bool] = Field(
        default=None,
        description="JP/kernel isomorphic to the rotation group; None when above the isomorphism cap",
    )
    equivalence: str = Field(description="'isomorphic' or the kernel the equivalence factors through")
    block_permutations: str = "size-preserving"
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.predicate_equals_image and self.orders_consistent and self.iso_check is not False


class FullQuotientReport(BaseModel):
    """Automorphisms of the one-node complex L^n/Z^n."""

    n: int
    nodes: int
    loops: int
    order: int
    expected_order: int
    incidence_preserved: bool
    signed_map_bijective: bool
    signed_map_homomorphic: bool
    iso_check: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return (
            self.order == self.expected_order
            and self.incidence_preserved
            and self.signed_map_bijective
            and self.signed_map_homomorphic
            and self.iso_check is not False
        )


def _pairs(elements: List, seed: int):
    if len(elements) ** 2 <= settings.homomorphism_pair_cap:
        return len(elements) ** 2, itertools.product(elements, repeat=2)
    rng = random.Random(seed)
    count = settings.homomorphism_pair_cap
    return count, ((rng.choice(elements), rng.choice(elements)) for _ in range(count))


def verify_prop1(partition: PartitionSpec, seed: Optional[int] = None) -> Prop1Report:
    """
    Enumerate JP, push it through jp_action, and compare with rotation_group.

    Raises VerificationFailure on the first pair violating the homomorphism law.
    """
    started = time.perf_counter()
    seed = settings.default_seed if seed is None else seed
    qc = build_complex(partition)
    label = partition.to_text()

    jp_elements = jp_enumerate(partition)
    action = {e: jp_action(e, qc) for e in jp_elements}

    checked, pairs = _pairs(jp_elements, seed)
    for a, b in pairs:
        lhs = action[jp_compose(a, b)]
        rhs = compose_automorphisms(action[a], action[b])
        if lhs != rhs:
            raise VerificationFailure(f"JP action on {label} is not a homomorphism", (a, b, lhs, rhs))

    kernel = [e for e, a in action.items() if a.is_identity()]
    if not kernel:
        raise VerificationFailure(f"JP action on {label} misses the identity", label)
    image = set(action.values())

    candidates = candidate_automorphisms(qc)
    rotations = rotation_group(qc)
    predicate_equals_image = image == set(rotations)
    if not predicate_equals_image:
        stray = sorted(image.symmetric_difference(rotations), key=BasedAutomorphism.sort_key)
        logger.error("rotation predicate and JP image disagree on %s: %s", label, stray[:1])

    iso_check: Optional[bool] = None
    if len(jp_elements) <= settings.isomorphism_cap:
        jp = jp_group(partition)
        quotient = quotient_group(jp, kernel)
        iso_check = isomorphic(quotient, as_finite_group(rotations, f"Rot[{label}]")) is not None

    equivalence = "isomorphic" if len(kernel) == 1 else f"isomorphic modulo a kernel of order {len(kernel)}"
    report = Prop1Report(
        partition=label,
        jp_order=len(jp_elements),
        image_order=len(image),
        kernel_order=len(kernel),
        rotation_order=len(rotations),
        candidate_order=len(candidates),
        predicate_equals_image=predicate_equals_image,
        orders_consistent=len(image) * len(kernel) == len(jp_elements),
        homomorphism_pairs_checked=checked,
        iso_check=iso_check,
        equivalence=equivalence,
        elapsed_seconds=round(time.perf_counter() - started, 6),
    )
    logger.info("action check %s: %s", label, report.model_dump())
    return report


def full_quotient_automorphisms(n: int, seed: Optional[int] = None) -> FullQuotientReport:
    """
    All (s, eps) on L^n/Z^n. The forgetful map to P_n is checked to be a
    bijective homomorphism; the isomorphism search runs when P_n is small enough.
    """
    seed = settings.default_seed if seed is None else seed
    qc: QuotientComplex = build_full_complex(n)
    elements = full_candidates(n)
    group: FiniteGroup = as_finite_group(elements, f"Aut[L^{n}/Z^{n}]")

    incidence = all(preserves_incidence(a, qc) for a in elements)
    signed = to_signed_permutation_map(elements)
    pn = enumerate_Pn(n)
    bijective = set(signed.values()) == set(pn.elements) and len(signed) == len(pn)

    homomorphic = True
    _, pairs = _pairs(elements, seed)
    for a, b in pairs:
        if signed[compose_automorphisms(a, b)] != compose(signed[a], signed[b]):
            homomorphic = False
            logger.error("forgetful map fails on %s, %s", a, b)
            break

    iso_check: Optional[bool] = None
    if len(elements) <= settings.isomorphism_cap:
        iso_check = isomorphic(group, as_group(pn, f"P{n}")) is not None

    return FullQuotientReport(
        n=n,
        nodes=len(qc.nodes),
        loops=len(qc.circles),
        order=len(elements),
        expected_order=len(pn),
        incidence_preserved=incidence,
        signed_map_bijective=bijective,
        signed_map_homomorphic=homomorphic,
        iso_check=iso_check,
    )
