"""
Invertible monomial matrices: every such matrix is a signed permutation
times a positive diagonal, and the signed permutation names its component.
"""

import random
from fractions import Fraction
from typing import Tuple

from groups.errors import InvalidElementError
from groups.signed_perm import SignedPermutation, to_matrix

from .matrices import RationalMatrix


def factor_monomial(m: RationalMatrix) -> Tuple[SignedPermutation, Tuple[Fraction, ...]]:
    """M = to_matrix(P) * diag(D) with D > 0."""
    n = m.n
    images = []
    signs = []
    diagonal = []
    for j in range(n):
        column = [(i, m[i, j]) for i in range(n) if m[i, j] != 0]
        if len(column) != 1:
            raise InvalidElementError(f"Column {j + 1} has {len(column)} nonzero entries; matrix is not monomial")
        row, value = column[0]
        images.append(row)
        signs.append(1 if value > 0 else -1)
        diagonal.append(abs(value))
    if sorted(images) != list(range(n)):
        raise InvalidElementError("Two columns share a nonzero row; matrix is singular")
    return SignedPermutation(images, signs), tuple(diagonal)


def reconstruct_monomial(p: SignedPermutation, diagonal) -> RationalMatrix:
    """to_matrix(P) * diag(D)."""
    return RationalMatrix(to_matrix(p).to_lists()) @ RationalMatrix.diagonal(list(diagonal))


def random_monomial(n: int, rng: random.Random, max_entry: int = 9) -> RationalMatrix:
    """Random invertible monomial matrix with small nonzero rational entries."""
    images = list(range(n))
    rng.shuffle(images)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for j, i in enumerate(images):
        value = Fraction(rng.randint(1, max_entry), rng.randint(1, max_entry))
        rows[i][j] = value if rng.random() < 0.5 else -value
    return RationalMatrix(rows)
