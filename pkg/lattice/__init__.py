"""
Quotient lattice complexes, their based automorphisms and the check that
the discrete rotations of L^n/JZ^n come from JP.
"""

from .complex import (
    Circle,
    CircleKind,
    QuotientComplex,
    build_complex,
    build_full_complex,
    check_complex,
    complex_to_json,
)
from .automorphisms import (
    BasedAutomorphism,
    apply,
    apply_to_circle,
    apply_to_node,
    block_determinants,
    candidate_automorphisms,
    candidate_count,
    compose_automorphisms,
    identity_automorphism,
    is_rotation,
    jp_action,
    preserves_incidence,
    rotation_group,
)
from .action import FullQuotientReport, Prop1Report, full_quotient_automorphisms, verify_prop1

__all__ = [
    "Circle", "CircleKind", "QuotientComplex", "build_complex", "build_full_complex",
    "check_complex", "complex_to_json",
    "BasedAutomorphism", "apply", "apply_to_circle", "apply_to_node", "block_determinants",
    "candidate_automorphisms", "candidate_count", "compose_automorphisms", "identity_automorphism",
    "is_rotation", "jp_action", "preserves_incidence", "rotation_group",
    "FullQuotientReport", "Prop1Report", "full_quotient_automorphisms", "verify_prop1",
]
