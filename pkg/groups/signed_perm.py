"""
Exact arithmetic for the hyperoctahedral group P_n = S2 wr S_n.

An element is an axis bijection together with one sign per axis. It acts on
basis vectors by M e_j = signs[j] * e_{perm[j]}: the sign is applied before
the permutation, so z = x y with x the permutation part and y the sign part.
Axes are 0-based internally and 1-based in every text form.
"""

import itertools
import re
from enum import Enum
from typing import Iterator, List, Sequence, Tuple

from config.settings import settings
from config.logging_config import get_logger

from .errors import DegreeMismatchError, InvalidElementError

logger = get_logger(__name__)


class ParityKind(Enum):
    """The three parity homomorphisms P_n -> {+1, -1}."""
    TYPE1 = 1  # sign of the permutation part
    TYPE2 = 2  # product of the sign entries
    TYPE3 = 3  # product of both, equals the determinant

    @classmethod
    def from_value(cls, value) -> "ParityKind":
        if isinstance(value, ParityKind):
            return value
        text = str(value).strip().upper().replace("TYPE", "")
        try:
            return cls(int(text))
        except ValueError:
            raise InvalidElementError(f"Unknown parity kind: {value!r}") from None


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a 0-based permutation, by cycle decomposition."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _check_degree(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidElementError(f"Degree must be a positive integer, got {n!r}")
    if n > settings.max_degree:
        raise InvalidElementError(f"Degree {n} exceeds the constructor cap {settings.max_degree}")


class SignedPermutation:
    """
    Immutable element of P_n.

    ``perm`` holds the 0-based image of every axis, ``signs`` its sign.
    Use :meth:`from_images` to build from the 1-based notation.
    """

    __slots__ = ("perm", "signs", "_hash")

    def __init__(self, perm: Sequence[int], signs: Sequence[int]):
        perm = tuple(int(p) for p in perm)
        signs = tuple(int(s) for s in signs)
        n = len(perm)
        _check_degree(n)
        if len(signs) != n:
            raise InvalidElementError(f"{n} images but {len(signs)} signs")
        if sorted(perm) != list(range(n)):
            raise InvalidElementError(f"Images {[p + 1 for p in perm]} are not a bijection of 1..{n}")
        if any(s not in (1, -1) for s in signs):
            raise InvalidElementError(f"Signs must be +1 or -1, got {list(signs)}")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "_hash", hash((perm, signs)))

    @classmethod
    def _trusted(cls, perm: Tuple[int, ...], signs: Tuple[int, ...]) -> "SignedPermutation":
        # inputs already known valid (products of valid elements)
        obj = object.__new__(cls)
        object.__setattr__(obj, "perm", perm)
        object.__setattr__(obj, "signs", signs)
        object.__setattr__(obj, "_hash", hash((perm, signs)))
        return obj

    @classmethod
    def from_images(cls, images: Sequence[int], signs: Sequence[int]) -> "SignedPermutation":
        """Build from 1-based images, e.g. from_images([2, 1], [1, -1])."""
        return cls([int(i) - 1 for i in images], signs)

    def __setattr__(self, name, value):
        raise AttributeError("SignedPermutation is immutable")

    # ------------------------------------------------------------------
    # value semantics

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def images(self) -> Tuple[int, ...]:
        """1-based images of the axes."""
        return tuple(p + 1 for p in self.perm)

    def sort_key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Canonical order: lexicographic on (images, signs) with +1 < -1."""
        return (self.perm, tuple(0 if s == 1 else 1 for s in self.signs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self.perm == other.perm and self.signs == other.signs

    def __lt__(self, other: "SignedPermutation") -> bool:
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SignedPermutation({self.to_text()})"

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def is_identity(self) -> bool:
        return all(p == j for j, p in enumerate(self.perm)) and all(s == 1 for s in self.signs)

    # ------------------------------------------------------------------
    # text form

    def to_text(self) -> str:
        imgs = ",".join(str(i) for i in self.images)
        sgns = ",".join("+1" if s == 1 else "-1" for s in self.signs)
        return f"π:[{imgs}];ε:[{sgns}]"

    _TEXT_RE = re.compile(
        r"^\s*(?:π|pi)\s*:\s*\[([^\]]*)\]\s*;\s*(?:ε|eps)\s*:\s*\[([^\]]*)\]\s*$"
    )

    @classmethod
    def from_text(cls, text: str) -> "SignedPermutation":
        """Parse "π:[2,1];ε:[+1,-1]" (ASCII "pi"/"eps" also accepted)."""
        match = cls._TEXT_RE.match(text)
        if not match:
            raise InvalidElementError(f"Cannot parse element {text!r}; expected π:[..];ε:[..]")
        try:
            images = [int(tok) for tok in match.group(1).split(",") if tok.strip()]
            signs = [_parse_sign(tok) for tok in match.group(2).split(",") if tok.strip()]
        except ValueError as e:
            raise InvalidElementError(f"Cannot parse element {text!r}: {e}") from None
        return cls.from_images(images, signs)


def _parse_sign(token: str) -> int:
    token = token.strip()
    if token in ("+", "+1", "1"):
        return 1
    if token in ("-", "-1", "−", "−1"):
        return -1
    raise ValueError(f"bad sign {token!r}")


class SignedMatrix:
    """Monomial matrix over {-1, 0, +1}: one nonzero per row and per column."""

    __slots__ = ("entries",)

    def __init__(self, entries: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise InvalidElementError("Signed matrix must be square and nonempty")
        for row in rows:
            if any(v not in (-1, 0, 1) for v in row) or sum(1 for v in row if v) != 1:
                raise InvalidElementError(f"Row {list(row)} is not a signed unit row")
        for j in range(n):
            if sum(1 for i in range(n) if rows[i][j]) != 1:
                raise InvalidElementError(f"Column {j + 1} does not have exactly one nonzero")
        self.entries = rows

    @property
    def n(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"SignedMatrix({[list(r) for r in self.entries]})"

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.entries]


# ----------------------------------------------------------------------
# operations


def identity(n: int) -> SignedPermutation:
    """Identity of P_n."""
    _check_degree(n)
    return SignedPermutation._trusted(tuple(range(n)), (1,) * n)


def compose(g: SignedPermutation, h: SignedPermutation) -> SignedPermutation:
    """g after h; equals to_matrix(g) @ to_matrix(h)."""
    if g.n != h.n:
        raise DegreeMismatchError(f"Cannot compose degree {g.n} with degree {h.n}")
    gp, gs = g.perm, g.signs
    perm = tuple(gp[k] for k in h.perm)
    signs = tuple(s * gs[k] for s, k in zip(h.signs, h.perm))
    return SignedPermutation._trusted(perm, signs)


def inverse(g: SignedPermutation) -> SignedPermutation:
    """Inverse element: the transpose of the signed matrix."""
    n = g.n
    perm = [0] * n
    signs = [1] * n
    for j, (p, s) in enumerate(zip(g.perm, g.signs)):
        perm[p] = j
        signs[p] = s
    return SignedPermutation._trusted(tuple(perm), tuple(signs))


def to_matrix(g: SignedPermutation) -> SignedMatrix:
    """Matrix with M[perm[j], j] = signs[j]."""
    n = g.n
    rows = [[0] * n for _ in range(n)]
    for j, (p, s) in enumerate(zip(g.perm, g.signs)):
        rows[p][j] = s
    return SignedMatrix(rows)


def from_matrix(m) -> SignedPermutation:
    """Inverse of :func:`to_matrix`; validates the monomial +-1 pattern."""
    matrix = m if isinstance(m, SignedMatrix) else SignedMatrix(m)
    n = matrix.n
    perm = [0] * n
    signs = [1] * n
    for j in range(n):
        for i in range(n):
            v = matrix.entries[i][j]
            if v:
                perm[j] = i
                signs[j] = v
    return SignedPermutation(perm, signs)


def decompose(z: SignedPermutation) -> Tuple[SignedPermutation, SignedPermutation]:
    """Split z = x y into its permutation part x and sign part y."""
    x = SignedPermutation._trusted(z.perm, (1,) * z.n)
    y = SignedPermutation._trusted(tuple(range(z.n)), z.signs)
    return x, y


def parity(z: SignedPermutation, kind) -> int:
    """Value of the Type1/Type2/Type3 parity homomorphism on z."""
    kind = ParityKind.from_value(kind)
    if kind is ParityKind.TYPE1:
        return permutation_sign(z.perm)
    sign_product = 1
    for s in z.signs:
        sign_product *= s
    if kind is ParityKind.TYPE2:
        return sign_product
    return permutation_sign(z.perm) * sign_product


def iter_Pn(n: int) -> Iterator[SignedPermutation]:
    """All 2^n n! elements of P_n in canonical order (no cap applied)."""
    _check_degree(n)
    sign_tuples = list(itertools.product((1, -1), repeat=n))
    for perm in itertools.permutations(range(n)):
        for signs in sign_tuples:
            yield SignedPermutation._trusted(perm, signs)


def embed(small: SignedPermutation, axes: Sequence[int], n: int) -> SignedPermutation:
    """Place ``small`` on the given 0-based ascending axes of degree n, identity elsewhere."""
    if len(axes) != small.n:
        raise DegreeMismatchError(f"{len(axes)} axes for an element of degree {small.n}")
    perm = list(range(n))
    signs = [1] * n
    for t, axis in enumerate(axes):
        perm[axis] = axes[small.perm[t]]
        signs[axis] = small.signs[t]
    return SignedPermutation(perm, signs)
