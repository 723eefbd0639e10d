"""
Exact square matrices over the rationals and incremental row echelon forms.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from groups.errors import DegreeMismatchError, InvalidElementError


class RationalMatrix:
    """Immutable n x n matrix of Fractions."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        if n == 0:
            raise InvalidElementError("Matrix must have at least one row")
        try:
            data = tuple(tuple(Fraction(v) for v in row) for row in rows)
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise InvalidElementError(f"Matrix entries must be rationals: {e}") from None
        if any(len(row) != n for row in data):
            raise InvalidElementError("Matrix is not square")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "_hash", hash(data))

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def zeros(cls, n: int) -> "RationalMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "RationalMatrix":
        """E_ij with 0-based indices."""
        return cls([[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "RationalMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"RationalMatrix({self.to_json()})"

    def _check(self, other: "RationalMatrix") -> None:
        if self.n != other.n:
            raise DegreeMismatchError(f"Matrix sizes {self.n} and {other.n} differ")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check(other)
        return RationalMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check(other)
        return RationalMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([[-a for a in r] for r in self.rows])

    def scale(self, factor) -> "RationalMatrix":
        factor = Fraction(factor)
        return RationalMatrix([[factor * a for a in r] for r in self.rows])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check(other)
        cols = list(zip(*other.rows))
        return RationalMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.rows])

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.rows)))

    def is_antisymmetric(self) -> bool:
        return self == -self.transpose()

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.rows for a in r)

    def flatten(self) -> List[Fraction]:
        return [a for r in self.rows for a in r]

    @classmethod
    def from_flat(cls, n: int, values: Sequence[Fraction]) -> "RationalMatrix":
        if len(values) != n * n:
            raise DegreeMismatchError(f"{len(values)} coordinates for a {n}x{n} matrix")
        return cls([values[i * n:(i + 1) * n] for i in range(n)])

    def to_json(self) -> List[List[str]]:
        return [[str(a) for a in r] for r in self.rows]

    def to_floats(self) -> List[List[float]]:
        return [[float(a) for a in r] for r in self.rows]


def bracket(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """[a, b] = ab - ba."""
    return a @ b - b @ a


class EchelonSpan:
    """
    Reduced row echelon basis of a subspace of Q^d, grown one vector at a time.

    ``add`` returns True when the vector was independent of the current span.
    """

    def __init__(self, dimension: int):
        self.dimension = dimension
        self.rows: List[List[Fraction]] = []
        self.pivots: List[int] = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vector: Sequence) -> List[Fraction]:
        v = [Fraction(a) for a in vector]
        if len(v) != self.dimension:
            raise DegreeMismatchError(f"Vector of length {len(v)} in a space of dimension {self.dimension}")
        for row, pivot in zip(self.rows, self.pivots):
            if v[pivot] != 0:
                factor = v[pivot]
                v = [a - factor * b for a, b in zip(v, row)]
        return v

    def contains(self, vector: Sequence) -> bool:
        return not any(self.reduce(vector))

    def add(self, vector: Sequence) -> bool:
        v = self.reduce(vector)
        pivot = next((k for k, a in enumerate(v) if a != 0), None)
        if pivot is None:
            return False
        lead = v[pivot]
        v = [a / lead for a in v]
        # keep the basis fully reduced
        for idx, row in enumerate(self.rows):
            if row[pivot] != 0:
                factor = row[pivot]
                self.rows[idx] = [a - factor * b for a, b in zip(row, v)]
        position = next((k for k, p in enumerate(self.pivots) if p > pivot), len(self.pivots))
        self.rows.insert(position, v)
        self.pivots.insert(position, pivot)
        return True

    def basis(self) -> List[Tuple[Fraction, ...]]:
        return [tuple(r) for r in self.rows]


def rank(vectors: Iterable[Sequence], dimension: Optional[int] = None) -> int:
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    span = EchelonSpan(dimension if dimension is not None else len(vectors[0]))
    for v in vectors:
        span.add(v)
    return len(span)
