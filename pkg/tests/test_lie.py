"""
Tests for the 2x2 algebras, exact rational matrices, generator closure of
SO(n_1, ..., n_m) and monomial factorisation.
"""

import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st
from unittest.mock import patch

from groups.errors import CapExceededError, DegreeMismatchError, InvalidElementError
from groups.partition import PartitionSpec, compositions
from groups.signed_perm import SignedPermutation
from lie import (
    EchelonSpan,
    LieBasis,
    RationalMatrix,
    TwoByTwo,
    algebra_det,
    algebra_inverse,
    bracket,
    bracket_closure,
    closure_report,
    det_kernel_member,
    factor_monomial,
    generator_set,
    hyperbolic_point,
    is_bracket_closed,
    one_parameter,
    p_formula,
    pythagorean_point,
    random_monomial,
    rank,
    reconstruct_monomial,
    so11_generator,
    so2_generator,
)

F = Fraction

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def algebra_pairs(draw):
    kind = draw(st.sampled_from(["A", "B", "C"]))
    a = TwoByTwo(kind, draw(small_rationals), draw(small_rationals))
    b = TwoByTwo(kind, draw(small_rationals), draw(small_rationals))
    return a, b


def _p(text: str) -> PartitionSpec:
    return PartitionSpec.from_sizes([int(s) for s in text.split(",")])


class TestAlgebras:
    """A, B and C in (x, y) coordinates."""

    def test_c_has_square_root_of_minus_one(self):
        i = TwoByTwo("C", 0, 1)
        assert i * i == TwoByTwo("C", -1, 0)

    def test_b_unit_squares_to_one(self):
        j = TwoByTwo("B", 0, 1)
        assert j * j == TwoByTwo.one("B")

    def test_a_is_componentwise(self):
        assert TwoByTwo("A", 2, 3) * TwoByTwo("A", 4, 5) == TwoByTwo("A", 8, 15)

    def test_matrix_forms(self):
        assert TwoByTwo("C", 1, 2).matrix() == [[1, 2], [-2, 1]]
        assert TwoByTwo("B", 1, 2).matrix() == [[1, 2], [2, 1]]
        assert TwoByTwo("A", 1, 2).matrix() == [[1, 0], [0, 2]]

    def test_determinants(self):
        assert algebra_det(TwoByTwo("A", 2, 3)) == 6
        assert algebra_det(TwoByTwo("B", 2, 1)) == 3
        assert algebra_det(TwoByTwo("C", 3, 4)) == 25

    def test_inverse(self):
        z = TwoByTwo("C", 3, 4)
        assert z * algebra_inverse(z) == TwoByTwo.one("C")

    def test_singular_inverse(self):
        with pytest.raises(InvalidElementError):
            algebra_inverse(TwoByTwo("B", 1, 1))

    def test_mixed_kinds(self):
        with pytest.raises(DegreeMismatchError):
            TwoByTwo("B", 1, 0) + TwoByTwo("C", 1, 0)

    def test_unknown_kind(self):
        with pytest.raises(InvalidElementError):
            TwoByTwo("D", 1, 0)

    def test_string_entries(self):
        assert TwoByTwo("C", "1/2", "3").x == F(1, 2)

    @given(algebra_pairs())
    @hypothesis_settings(max_examples=100)
    def test_product_is_matrix_product(self, pair):
        a, b = pair
        product = RationalMatrix(a.matrix()) @ RationalMatrix(b.matrix())
        assert RationalMatrix((a * b).matrix()) == product

    @given(algebra_pairs())
    @hypothesis_settings(max_examples=100)
    def test_commutative(self, pair):
        a, b = pair
        assert a * b == b * a

    @given(algebra_pairs())
    @hypothesis_settings(max_examples=100)
    def test_det_multiplicative(self, pair):
        a, b = pair
        assert algebra_det(a * b) == algebra_det(a) * algebra_det(b)

    def test_to_json(self):
        assert TwoByTwo("B", F(1, 2), 0).to_json() == {"kind": "B", "x": "1/2", "y": "0"}


class TestDeterminantOneSubgroups:
    def test_pythagorean_point(self):
        z = pythagorean_point(1, 2)
        assert (z.x, z.y) == (F(3, 5), F(4, 5))
        assert det_kernel_member(z)

    def test_hyperbolic_point(self):
        z = hyperbolic_point(1, 2)
        assert (z.x, z.y) == (F(5, 3), F(4, 3))
        assert det_kernel_member(z)

    def test_hyperbolic_rejects_unit_parameter(self):
        with pytest.raises(InvalidElementError):
            hyperbolic_point(-1, 1)

    def test_kind_a_has_no_kernel(self):
        with pytest.raises(InvalidElementError):
            det_kernel_member(TwoByTwo.one("A"))

    @pytest.mark.parametrize("m,k", [(1, 3), (2, 7), (-5, 4), (0, 1)])
    def test_products_stay_on_curves(self, m, k):
        c = pythagorean_point(m, k) * pythagorean_point(1, 2)
        assert det_kernel_member(c)
        b = hyperbolic_point(m, k) * hyperbolic_point(1, 2)
        assert det_kernel_member(b)

    def test_non_member(self):
        assert not det_kernel_member(TwoByTwo("C", 1, 1))


class TestRationalMatrix:
    def test_identity_neutral(self):
        m = RationalMatrix([[1, 2], [3, F(1, 2)]])
        assert RationalMatrix.identity(2) @ m == m
        assert m @ RationalMatrix.identity(2) == m

    def test_indexing_and_flatten(self):
        m = RationalMatrix([[1, 2], [3, 4]])
        assert m[1, 0] == 3
        assert m.flatten() == [1, 2, 3, 4]
        assert RationalMatrix.from_flat(2, m.flatten()) == m

    def test_from_flat_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            RationalMatrix.from_flat(2, [1, 2, 3])

    def test_not_square(self):
        with pytest.raises(InvalidElementError):
            RationalMatrix([[1, 2]])

    def test_bracket_antisymmetric(self):
        a = so2_generator(1, 2, 3)
        b = so11_generator(2, 3, 3)
        assert bracket(a, b) == -bracket(b, a)

    def test_to_json(self):
        assert RationalMatrix.diagonal([F(1, 2), 1]).to_json() == [["1/2", "0"], ["0", "1"]]


class TestEchelonSpan:
    def test_add_and_contains(self):
        span = EchelonSpan(3)
        assert span.add([1, 1, 0])
        assert span.add([0, 1, 1])
        assert not span.add([1, 2, 1])
        assert span.contains([2, 0, -2])
        assert not span.contains([0, 0, 1])
        assert len(span) == 2

    def test_basis_independent_of_order(self):
        vectors = [[1, 2, 3], [0, 1, 4], [1, 3, 7]]
        forward = EchelonSpan(3)
        backward = EchelonSpan(3)
        for v in vectors:
            forward.add(v)
        for v in reversed(vectors):
            backward.add(v)
        assert forward.basis() == backward.basis()

    def test_rank(self):
        assert rank([[1, 0], [2, 0]]) == 1
        assert rank([]) == 0

    def test_wrong_dimension(self):
        with pytest.raises(DegreeMismatchError):
            EchelonSpan(2).add([1, 2, 3])


class TestGenerators:
    def test_rotation_generator(self):
        g = so2_generator(1, 3, 3)
        assert g[0, 2] == 1 and g[2, 0] == -1
        assert g.is_antisymmetric()

    def test_hyperbolic_generator(self):
        g = so11_generator(1, 2, 2)
        assert g == g.transpose()

    @pytest.mark.parametrize("j,k,n", [(2, 1, 3), (1, 4, 3), (0, 1, 2), (2, 2, 3)])
    def test_bad_pairs(self, j, k, n):
        with pytest.raises(InvalidElementError):
            so2_generator(j, k, n)

    @pytest.mark.parametrize("text,p", [("2,1", 2), ("2,2", 3), ("3", 3), ("1,1,1", 3), ("1", 0)])
    def test_p_formula(self, text, p):
        assert p_formula(_p(text)) == p

    def test_generator_counts(self):
        partition = _p("2,1")
        assert len(generator_set(partition, minimal=True)) == 2
        assert len(generator_set(partition, minimal=False)) == 3

    def test_minimal_count_is_p(self):
        for n in range(1, 6):
            for partition in compositions(n):
                assert len(generator_set(partition, minimal=True)) == p_formula(partition)


class TestClosure:
    """Exact bracket closure."""

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_single_block_is_so_n(self, n):
        lie = bracket_closure(generator_set(PartitionSpec.single_block(n)))
        assert lie.dimension == n * (n - 1) // 2
        assert all(b.is_antisymmetric() for b in lie.basis)

    def test_two_singletons(self):
        assert bracket_closure(generator_set(_p("1,1"))).dimension == 1

    def test_two_plus_one(self):
        lie = bracket_closure(generator_set(_p("2,1")))
        assert lie.dimension == 3
        assert lie.contains(so11_generator(2, 3, 3))

    def test_closed(self):
        for partition in compositions(4):
            gens = generator_set(partition)
            if gens:
                assert is_bracket_closed(bracket_closure(gens))

    def test_order_independent(self):
        gens = generator_set(_p("2,2"))
        assert bracket_closure(gens).basis == bracket_closure(list(reversed(gens))).basis

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_minimal_and_full_spans_agree(self, n):
        for partition in compositions(n):
            assert closure_report(partition)["spans_equal"] is True

    def test_report_fields(self):
        report = closure_report(_p("2,1"))
        assert report["p"] == 2
        assert report["generators_minimal"] == 2
        assert report["dim_minimal"] == report["dim_full"] == 3

    def test_single_axis_report(self):
        report = closure_report(_p("1"))
        assert report["dim_minimal"] == 0
        assert report["spans_equal"] is True

    def test_empty_generators(self):
        with pytest.raises(InvalidElementError):
            bracket_closure([])

    def test_size_cap(self):
        gens = [so2_generator(1, 2, 3)]
        with patch("lie.closure.settings") as mock_settings:
            mock_settings.lie_max_n = 2
            with pytest.raises(CapExceededError):
                bracket_closure(gens)

    def test_basis_json(self):
        data = LieBasis(2, (so2_generator(1, 2, 2),)).to_json()
        assert data["dimension"] == 1
        assert data["basis"] == [[["0", "1"], ["-1", "0"]]]


class TestOneParameter:
    def test_rotation(self):
        q = one_parameter(so2_generator(1, 2, 2), 0.7)
        np.testing.assert_allclose(q.T @ q, np.eye(2), atol=1e-12)
        assert q[0, 0] == pytest.approx(math.cos(0.7))
        assert q[0, 1] == pytest.approx(math.sin(0.7))

    def test_boost_preserves_indefinite_form(self):
        h = one_parameter(so11_generator(1, 2, 2), 1.3)
        j = np.diag([1.0, -1.0])
        np.testing.assert_allclose(h.T @ j @ h, j, atol=1e-12)
        assert h[0, 0] == pytest.approx(math.cosh(1.3))

    def test_two_plus_one_preserves_form(self):
        lie = bracket_closure(generator_set(_p("2,1")))
        j = np.diag([1.0, 1.0, -1.0])
        for b in lie.basis:
            g = one_parameter(b, 0.4)
            np.testing.assert_allclose(g.T @ j @ g, j, atol=1e-12)


class TestMonomial:
    def test_example(self):
        m = RationalMatrix([[0, -2], [3, 0]])
        p, d = factor_monomial(m)
        assert p == SignedPermutation([1, 0], [1, -1])
        assert d == (F(3), F(2))
        assert reconstruct_monomial(p, d) == m

    def test_non_monomial(self):
        with pytest.raises(InvalidElementError):
            factor_monomial(RationalMatrix([[1, 1], [0, 1]]))

    def test_singular(self):
        with pytest.raises(InvalidElementError):
            factor_monomial(RationalMatrix([[1, 0], [0, 0]]))

    @pytest.mark.parametrize("seed", range(5))
    def test_random_round_trip(self, seed):
        rng = random.Random(seed)
        for n in range(1, 6):
            m = random_monomial(n, rng)
            p, d = factor_monomial(m)
            assert all(x > 0 for x in d)
            assert reconstruct_monomial(p, d) == m
