"""
Signed-permutation groups and the finite parity groups.

Provides exact P_n arithmetic, the three parity homomorphisms, closure
enumeration, the kernels AP_n / BP_n / CP_n, the abstract group JP_n and a
small-group isomorphism search.
"""

from .errors import (
    CapExceededError,
    DecompositionError,
    DegreeMismatchError,
    InvalidElementError,
    ParityGroupError,
    PartitionError,
    ResidueCheckError,
    VerificationFailure,
)
from .signed_perm import (
    ParityKind,
    SignedMatrix,
    SignedPermutation,
    compose,
    decompose,
    from_matrix,
    identity,
    inverse,
    parity,
    to_matrix,
)
from .partition import PartitionSpec, compositions
from .engine import (
    ElementSet,
    Z2Vector,
    as_group,
    closure,
    embedded_generators,
    enumerate_Pn,
    kernel,
    standard_subgroup,
    structure_check,
    z2_A_generated_check,
    z2_parity,
)
from .jp import JPElement, jp_compose, jp_enumerate, jp_group, jp_identity, jp_inverse, jp_order
from .isomorphism import FiniteGroup, isomorphic, quotient_group

__all__ = [
    "CapExceededError", "DecompositionError", "DegreeMismatchError", "InvalidElementError",
    "ParityGroupError", "PartitionError", "ResidueCheckError", "VerificationFailure",
    "ParityKind", "SignedMatrix", "SignedPermutation", "compose", "decompose", "from_matrix",
    "identity", "inverse", "parity", "to_matrix",
    "PartitionSpec", "compositions",
    "ElementSet", "Z2Vector", "as_group", "closure", "embedded_generators", "enumerate_Pn",
    "kernel", "standard_subgroup", "structure_check", "z2_A_generated_check", "z2_parity",
    "JPElement", "jp_compose", "jp_enumerate", "jp_group", "jp_identity", "jp_inverse", "jp_order",
    "FiniteGroup", "isomorphic", "quotient_group",
]
