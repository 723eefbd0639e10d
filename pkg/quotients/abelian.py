"""
Parity homomorphisms on Z^n, the sublattices AZ^n / BZ^n / JZ^n, the finite
quotients Z^n/JZ^n and exact charts of R^n/JZ^n.

"x mod k" always means the canonical residue in [0, k). All arithmetic is
exact (integers and Fractions); nothing here touches floating point.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from config.settings import settings
from config.logging_config import get_logger
from groups.engine import Z2Vector
from groups.errors import CapExceededError, DegreeMismatchError, InvalidElementError
from groups.partition import PartitionSpec

logger = get_logger(__name__)

IntegerVector = Tuple[int, ...]
RationalVector = Tuple[Fraction, ...]
QuotientElement = Z2Vector

Which = Union[str, PartitionSpec]


def integer_vector(values: Sequence) -> IntegerVector:
    out = []
    for v in values:
        if isinstance(v, Fraction):
            if v.denominator != 1:
                raise InvalidElementError(f"{v} is not an integer")
            v = v.numerator
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidElementError(f"{v!r} is not an integer")
        out.append(v)
    return tuple(out)


def rational_vector(values: Sequence) -> RationalVector:
    try:
        return tuple(Fraction(v) for v in values)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InvalidElementError(f"Not a rational vector: {values!r} ({e})") from None


def _check_degree(x: Sequence, partition: PartitionSpec) -> None:
    if len(x) != partition.n:
        raise DegreeMismatchError(f"Vector of length {len(x)} for a partition of {partition.n}")


def int_parity(x: Sequence[int]) -> int:
    """Sum of entries mod 2."""
    return sum(integer_vector(x)) % 2


def membership(x: Sequence[int], which: Which) -> bool:
    """
    Membership in AZ^n (even total sum), BZ^n (all entries even) or JZ^n
    (every block sum even) for a PartitionSpec.
    """
    x = integer_vector(x)
    if isinstance(which, PartitionSpec):
        _check_degree(x, which)
        return all(sum(x[a] for a in block) % 2 == 0 for block in which.blocks)
    key = str(which).upper()
    if key == "A":
        return sum(x) % 2 == 0
    if key == "B":
        return all(v % 2 == 0 for v in x)
    raise InvalidElementError(f"Unknown sublattice {which!r}; use A, B or a partition")


def project_node(x: Sequence[int], partition: PartitionSpec) -> QuotientElement:
    """Image in Z^n/JZ^n = Z2^m: bit i is the parity of the block-i sum."""
    x = integer_vector(x)
    _check_degree(x, partition)
    return Z2Vector([sum(x[a] for a in block) % 2 for block in partition.blocks])


def quotient_image_order(partition: PartitionSpec) -> int:
    """Number of distinct project_node images of the 0/1 representatives of Z^n."""
    images = {project_node(x, partition) for x in itertools.product((0, 1), repeat=partition.n)}
    return len(images)


def quotient_table(partition: PartitionSpec) -> dict:
    """
    Group Z2^m of the quotient: full addition table for m <= 6, otherwise the
    standard generators only.
    """
    m = partition.m
    if m > settings.quotient_max_blocks:
        raise CapExceededError("quotient block count", settings.quotient_max_blocks, m)
    order = 2 ** m

    def bits(v: int) -> str:
        return "".join(str((v >> i) & 1) for i in range(m))

    result = {
        "partition": partition.to_text(),
        "order": order,
        "generators": [bits(1 << i) for i in range(m)],
        "elements": None,
        "table": None,
    }
    if m <= 6:
        result["elements"] = [bits(v) for v in range(order)]
        result["table"] = [[a ^ b for b in range(order)] for a in range(order)]
    return result


# ----------------------------------------------------------------------
# charts of R^n / JZ^n


@dataclass(frozen=True)
class BlockChart:
    """Residues of the block coordinates after the first (mod 1) and the block sum (mod 2)."""
    residues: Tuple[Fraction, ...]
    blocksum: Fraction

    def __post_init__(self):
        if any(not (0 <= r < 1) for r in self.residues):
            raise InvalidElementError(f"Residues {self.residues} outside [0,1)")
        if not (0 <= self.blocksum < 2):
            raise InvalidElementError(f"Block sum {self.blocksum} outside [0,2)")


@dataclass(frozen=True)
class Chart:
    """Per-block sphere-product coordinates of a point of R^n/JZ^n."""
    blocks: Tuple[BlockChart, ...]

    def is_zero(self) -> bool:
        return all(b.blocksum == 0 and all(r == 0 for r in b.residues) for b in self.blocks)

    def to_json(self) -> List[dict]:
        return [
            {"theta": [str(r) for r in b.residues], "phi": str(b.blocksum)}
            for b in self.blocks
        ]


def chart(x: Sequence, partition: PartitionSpec) -> Chart:
    """Exact chart; chart(x) == chart(y) iff x - y lies in JZ^n."""
    x = rational_vector(x)
    _check_degree(x, partition)
    blocks = []
    for block in partition.blocks:
        # first coordinate of a block is its smallest index
        residues = tuple(x[a] % 1 for a in block[1:])
        blocksum = sum((x[a] for a in block), Fraction(0)) % 2
        blocks.append(BlockChart(residues, blocksum))
    return Chart(tuple(blocks))


def chart_add(a: Chart, b: Chart) -> Chart:
    """Componentwise addition, residues mod 1 and block sums mod 2."""
    if len(a.blocks) != len(b.blocks):
        raise DegreeMismatchError("Charts over different partitions")
    blocks = []
    for x, y in zip(a.blocks, b.blocks):
        if len(x.residues) != len(y.residues):
            raise DegreeMismatchError("Charts over different partitions")
        blocks.append(BlockChart(
            tuple((r + s) % 1 for r, s in zip(x.residues, y.residues)),
            (x.blocksum + y.blocksum) % 2,
        ))
    return Chart(tuple(blocks))


@dataclass(frozen=True)
class SphericalAngles:
    """Angles as exact rational multiples of pi: phi in [0, 2), theta_k in [0, 1)."""
    phi: Fraction
    theta: Tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {"theta": [str(t) for t in self.theta], "phi": str(self.phi)}

    def describe(self) -> str:
        def fmt(q: Fraction) -> str:
            if q == 0:
                return "0"
            if q == 1:
                return "π"
            return f"({q})π"
        thetas = ", ".join(fmt(t) for t in self.theta)
        return f"φ={fmt(self.phi)}; θ=[{thetas}]"


def spherical(point_chart: Chart, block: int) -> SphericalAngles:
    """phi = pi * blocksum, theta_k = pi * residue_k for the given 0-based block."""
    if not 0 <= block < len(point_chart.blocks):
        raise InvalidElementError(f"Block index {block + 1} out of range")
    b = point_chart.blocks[block]
    return SphericalAngles(b.blocksum, b.residues)


def chart_equiv(x: Sequence, y: Sequence, partition: PartitionSpec) -> bool:
    """True iff x and y have the same chart."""
    return chart(x, partition) == chart(y, partition)


def difference_in_lattice(x: Sequence, y: Sequence, partition: PartitionSpec) -> bool:
    """Oracle: x - y integral with every block sum even."""
    x, y = rational_vector(x), rational_vector(y)
    _check_degree(x, partition)
    _check_degree(y, partition)
    diff = [a - b for a, b in zip(x, y)]
    if any(d.denominator != 1 for d in diff):
        return False
    return membership([int(d) for d in diff], partition)


# ----------------------------------------------------------------------
# AZ^n is generated by its AZ^2 copies


def integer_echelon(vectors: Sequence[Sequence[int]]) -> List[List[int]]:
    """Row echelon basis of the integer span, by Euclidean row reduction."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    width = len(rows[0])
    basis: List[List[int]] = []
    col = 0
    while rows and col < width:
        pivots = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(pivots) > 1:
            pivots.sort(key=lambda r: abs(r[col]))
            head = pivots[0]
            reduced = [head]
            for r in pivots[1:]:
                q = r[col] // head[col]
                r = [a - q * b for a, b in zip(r, head)]
                if r[col] != 0:
                    reduced.append(r)
                elif any(r):
                    rest.append(r)
            pivots = reduced
        if pivots:
            head = pivots[0]
            if head[col] < 0:
                head = [-a for a in head]
            basis.append(head)
        rows = [r for r in rest if any(r)]
        col += 1
    return basis


def lattice_az_generated(n: int) -> dict:
    """
    The integer span of {e_i + e_j, e_i - e_j} is AZ^n: every generator has
    even sum and the span has index 2 in Z^n.
    """
    if n < 2:
        raise InvalidElementError("AZ^2 copies need n >= 2")
    gens = []
    for i, j in itertools.combinations(range(n), 2):
        for sign in (1, -1):
            v = [0] * n
            v[i] = 1
            v[j] = sign
            gens.append(v)
    basis = integer_echelon(gens)
    full_rank = len(basis) == n
    index: Optional[int] = None
    if full_rank:
        index = 1
        for k, row in enumerate(basis):
            index *= abs(row[k])
    inside = all(sum(v) % 2 == 0 for v in gens)
    return {
        "n": n,
        "generators": len(gens),
        "rank": len(basis),
        "index": index,
        "passed": full_rank and index == 2 and inside,
    }
