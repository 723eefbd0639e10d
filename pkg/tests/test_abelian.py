"""
Tests for lattice parities, the sublattices AZ^n / BZ^n / JZ^n, the finite
quotients Z^n/JZ^n and exact charts of R^n/JZ^n.
"""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from groups.errors import DegreeMismatchError, InvalidElementError
from groups.partition import PartitionSpec, compositions
from quotients.abelian import (
    chart,
    chart_add,
    chart_equiv,
    difference_in_lattice,
    int_parity,
    integer_echelon,
    integer_vector,
    lattice_az_generated,
    membership,
    project_node,
    quotient_image_order,
    quotient_table,
    rational_vector,
    spherical,
)

F = Fraction

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)


@st.composite
def partition_and_points(draw):
    sizes = draw(st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=3))
    partition = PartitionSpec.from_sizes(sizes)
    n = partition.n
    x = draw(st.lists(rationals, min_size=n, max_size=n))
    y = draw(st.lists(rationals, min_size=n, max_size=n))
    k = draw(st.lists(st.integers(min_value=-4, max_value=4), min_size=n, max_size=n))
    # force even block sums
    for block in partition.blocks:
        if sum(k[a] for a in block) % 2:
            k[block[0]] += 1
    return partition, x, y, k


class TestLatticeParity:
    def test_int_parity(self):
        assert int_parity((1, 2, 3)) == 0
        assert int_parity((1, 0)) == 1

    def test_membership_examples(self):
        assert membership((1, 1), "A") is True
        assert membership((1, 1), "B") is False
        assert membership((0, 0, 0, 0), PartitionSpec.from_sizes([2, 2])) is True
        assert membership((1, 1, 1, 0), PartitionSpec.from_sizes([2, 2])) is False

    def test_zero_in_everything(self):
        zero = (0, 0, 0)
        assert membership(zero, "A") and membership(zero, "B")
        assert membership(zero, PartitionSpec.from_sizes([1, 2]))

    def test_unknown_sublattice(self):
        with pytest.raises(InvalidElementError):
            membership((0,), "C")

    def test_non_integer_rejected(self):
        with pytest.raises(InvalidElementError):
            integer_vector([F(1, 2)])

    def test_wrong_length(self):
        with pytest.raises(DegreeMismatchError):
            membership((0, 0), PartitionSpec.from_sizes([3]))

    def test_rational_vector_parses(self):
        assert rational_vector(["1/2", 3, "0.25"]) == (F(1, 2), F(3), F(1, 4))

    def test_rational_vector_rejects(self):
        with pytest.raises(InvalidElementError):
            rational_vector(["x"])


class TestQuotient:
    """Z^n/JZ^n = Z2^m."""

    def test_singletons_four_points(self):
        partition = PartitionSpec.from_sizes([1, 1])
        images = {project_node(x, partition) for x in [(0, 0), (1, 0), (0, 1), (1, 1)]}
        assert len(images) == 4

    def test_single_block_two_points(self):
        partition = PartitionSpec.from_sizes([2])
        assert project_node((0, 0), partition) == project_node((1, 1), partition)
        assert quotient_image_order(partition) == 2

    def test_zero_projects_to_zero(self):
        assert project_node((0, 0, 0), PartitionSpec.from_sizes([2, 1])).bits == (0, 0)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_order_every_partition(self, n):
        for partition in compositions(n):
            assert quotient_image_order(partition) == 2 ** partition.m

    def test_table(self):
        table = quotient_table(PartitionSpec.from_sizes([1, 1]))
        assert table["order"] == 4
        assert table["elements"] == ["00", "10", "01", "11"]
        assert table["table"][1][2] == 3

    def test_large_table_omitted(self):
        table = quotient_table(PartitionSpec.singletons(7))
        assert table["order"] == 128
        assert table["table"] is None
        assert len(table["generators"]) == 7


class TestChart:
    """Exact charts and their kernel."""

    def test_half_half(self):
        c = chart((F(1, 2), F(1, 2)), PartitionSpec.from_sizes([2]))
        assert c.blocks[0].residues == (F(1, 2),)
        assert c.blocks[0].blocksum == 1

    def test_two_blocks(self):
        c = chart((F(3, 4), F(1, 4), 5), PartitionSpec.from_sizes([2, 1]))
        assert c.blocks[0].residues == (F(1, 4),)
        assert c.blocks[0].blocksum == 1
        assert c.blocks[1].residues == ()
        assert c.blocks[1].blocksum == 1

    def test_lattice_point_zero_chart(self):
        assert chart((1, 1, 2), PartitionSpec.from_sizes([2, 1])).is_zero()

    def test_to_json(self):
        c = chart((F(1, 2), F(1, 2)), PartitionSpec.from_sizes([2]))
        assert c.to_json() == [{"theta": ["1/2"], "phi": "1"}]

    def test_equiv_examples(self):
        partition = PartitionSpec.from_sizes([2])
        assert chart_equiv((F(3, 4), F(1, 4)), (F(7, 4), F(5, 4)), partition)
        assert not chart_equiv((0, 0), (1, 0), partition)

    def test_add_mismatched(self):
        a = chart((0, 0), PartitionSpec.from_sizes([2]))
        b = chart((0, 0), PartitionSpec.from_sizes([1, 1]))
        with pytest.raises(DegreeMismatchError):
            chart_add(a, b)

    @given(partition_and_points())
    @hypothesis_settings(max_examples=200)
    def test_kernel_invariance(self, data):
        partition, x, _, k = data
        shifted = [a + b for a, b in zip(x, k)]
        assert chart(shifted, partition) == chart(x, partition)

    @given(partition_and_points())
    @hypothesis_settings(max_examples=200)
    def test_additive(self, data):
        partition, x, y, _ = data
        total = [a + b for a, b in zip(x, y)]
        assert chart(total, partition) == chart_add(chart(x, partition), chart(y, partition))

    @given(partition_and_points())
    @hypothesis_settings(max_examples=200)
    def test_equiv_matches_lattice_oracle(self, data):
        partition, x, y, _ = data
        assert chart_equiv(x, y, partition) == difference_in_lattice(x, y, partition)

    def test_odd_shift_separates(self):
        partition = PartitionSpec.from_sizes([2, 1])
        x = (F(1, 3), F(2, 5), F(7, 2))
        for j in range(3):
            y = tuple(a + (1 if i == j else 0) for i, a in enumerate(x))
            assert not chart_equiv(x, y, partition)
            assert not difference_in_lattice(x, y, partition)

    def test_torus_kernel_is_b_lattice(self):
        singletons = PartitionSpec.singletons(2)
        x = (F(1, 3), F(1, 7))
        for shift in itertools.product(range(-2, 3), repeat=2):
            y = tuple(a + b for a, b in zip(x, shift))
            assert chart_equiv(x, y, singletons) == membership(shift, "B")


class TestSpherical:
    def test_half_half(self):
        angles = spherical(chart((F(1, 2), F(1, 2)), PartitionSpec.from_sizes([2])), 0)
        assert angles.phi == 1
        assert angles.theta == (F(1, 2),)
        assert angles.describe() == "φ=π; θ=[(1/2)π]"

    def test_zero(self):
        angles = spherical(chart((0, 0, 0), PartitionSpec.from_sizes([3])), 0)
        assert angles.phi == 0
        assert angles.theta == (0, 0)

    def test_three_halves(self):
        angles = spherical(chart((0, F(3, 2)), PartitionSpec.from_sizes([2])), 0)
        assert angles.theta == (F(1, 2),)
        assert angles.phi == F(3, 2)

    def test_block_out_of_range(self):
        with pytest.raises(InvalidElementError):
            spherical(chart((0, 0), PartitionSpec.from_sizes([2])), 1)


class TestAZGeneration:
    """AZ^n is the integer span of e_i +- e_j."""

    @pytest.mark.parametrize("n", range(2, 9))
    def test_index_two(self, n):
        result = lattice_az_generated(n)
        assert result["passed"] is True
        assert result["rank"] == n
        assert result["index"] == 2

    def test_needs_two_axes(self):
        with pytest.raises(InvalidElementError):
            lattice_az_generated(1)

    def test_echelon_of_dependent_rows(self):
        basis = integer_echelon([[2, 4], [1, 2], [0, 0]])
        assert basis == [[1, 2]]

    def test_echelon_gcd(self):
        basis = integer_echelon([[4, 0], [6, 0], [0, 3]])
        assert basis == [[2, 0], [0, 3]]
