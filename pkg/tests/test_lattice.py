"""
Tests for quotient complexes, based automorphisms, the rotation predicate
and its comparison with the JP action.
"""

import pytest
from unittest.mock import patch

from groups.engine import as_group, kernel
from groups.errors import CapExceededError, InvalidElementError, VerificationFailure
from groups.isomorphism import isomorphic
from groups.jp import jp_compose, jp_enumerate
from groups.partition import PartitionSpec, compositions
from groups.signed_perm import ParityKind
from lattice import (
    BasedAutomorphism,
    Circle,
    CircleKind,
    apply,
    apply_to_node,
    block_determinants,
    build_complex,
    build_full_complex,
    candidate_automorphisms,
    candidate_count,
    check_complex,
    complex_to_json,
    compose_automorphisms,
    full_quotient_automorphisms,
    identity_automorphism,
    is_rotation,
    jp_action,
    preserves_incidence,
    rotation_group,
    verify_prop1,
)
from lattice.automorphisms import as_finite_group


def _p(text: str) -> PartitionSpec:
    return PartitionSpec.from_sizes([int(s) for s in text.split(",")])


class TestComplex:
    """Nodes, circles and incidence."""

    def test_counts_21(self):
        qc = build_complex(_p("2,1"))
        assert len(qc.nodes) == 4
        assert len(qc.circles) == 3 * 2

    def test_single_axis(self):
        qc = build_complex(_p("1"))
        assert qc.nodes == ((0,), (1,))
        assert len(qc.circles) == 1
        assert qc.circle_nodes(qc.circles[0]) == ((0,), (1,))

    def test_endpoints_differ_in_block_bit(self):
        qc = build_complex(_p("1,2"))
        circle = Circle(block=1, axis=2, other_class=(1,))
        assert qc.circle_nodes(circle) == ((1, 0), (1, 1))
        assert qc.is_incident((1, 1), circle)
        assert not qc.is_incident((0, 1), circle)

    def test_node_degree(self):
        qc = build_complex(_p("2,2"))
        assert all(len(qc.node_circles(v)) == 4 for v in qc.nodes)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_well_formed(self, n):
        for partition in compositions(n):
            assert check_complex(build_complex(partition))["passed"] is True

    def test_full_complex(self):
        qc = build_full_complex(3)
        assert qc.nodes == ((),)
        assert all(c.kind is CircleKind.PROJLINE for c in qc.circles)
        assert check_complex(qc)["passed"] is True

    def test_multipliers(self):
        assert CircleKind.CIRCLE2.admissible_multipliers == (1,)
        assert CircleKind.PROJLINE.admissible_multipliers == (1, -1)

    def test_json(self):
        data = complex_to_json(build_complex(_p("2,1")))
        assert data["partition"] == "2,1"
        assert data["nodes"] == ["00", "01", "10", "11"]
        assert data["circles"][0] == {"block": 1, "axis": 1, "other_class": "0", "kind": "Circle2"}
        assert data["incidence"][0] == ["00", "10"]

    def test_cap(self):
        with patch("lattice.complex.settings") as mock_settings:
            mock_settings.complex_max_n = 2
            with pytest.raises(CapExceededError):
                build_complex(_p("2,1"))


class TestAutomorphisms:
    """Based automorphisms and their action."""

    def test_identity(self):
        e = identity_automorphism(3, 2)
        assert e.is_identity()
        assert e.to_text() == "τ:[1,2];π:[1,2,3];ε:[+1,+1,+1]"

    def test_invalid_axis_map(self):
        with pytest.raises(InvalidElementError):
            BasedAutomorphism([0], [0, 0], [1, 1])

    def test_block_swap_moves_node_bits(self):
        a = BasedAutomorphism([1, 0], [1, 0], [1, 1])
        assert apply_to_node(a, (1, 0)) == (0, 1)
        assert apply(a, [1, 0]) == (0, 1)

    def test_circle_image(self):
        a = BasedAutomorphism([1, 0], [1, 0], [1, 1])
        image = apply(a, Circle(block=0, axis=0, other_class=(1,)))
        assert image == Circle(block=1, axis=1, other_class=(1,))

    def test_validate_rejects_cross_block_axis(self):
        a = BasedAutomorphism([0, 1], [2, 1, 0], [1, 1, 1])
        with pytest.raises(InvalidElementError):
            a.validate(_p("2,1"))

    @pytest.mark.parametrize("text,count", [("2,1", 16), ("2,2", 128), ("1,1,1", 48), ("2", 8), ("1", 2)])
    def test_candidate_counts(self, text, count):
        qc = build_complex(_p(text))
        assert candidate_count(_p(text)) == count
        assert len(candidate_automorphisms(qc)) == count

    @pytest.mark.parametrize("text", ["2,1", "1,1", "3", "1,2"])
    def test_candidates_preserve_incidence(self, text):
        qc = build_complex(_p(text))
        assert all(preserves_incidence(a, qc) for a in candidate_automorphisms(qc))

    def test_composition_acts_as_composition(self):
        qc = build_complex(_p("1,1,1"))
        candidates = candidate_automorphisms(qc)
        a, b = candidates[7], candidates[30]
        ab = compose_automorphisms(a, b)
        for v in qc.nodes:
            assert apply_to_node(ab, v) == apply_to_node(a, apply_to_node(b, v))

    def test_candidate_cap(self):
        qc = build_complex(_p("2,2"))
        with patch("lattice.automorphisms.settings") as mock_settings:
            mock_settings.candidate_cap = 10
            with pytest.raises(CapExceededError):
                candidate_automorphisms(qc)

    def test_full_complex_needs_partition(self):
        with pytest.raises(InvalidElementError):
            candidate_automorphisms(build_full_complex(2))


class TestRotations:
    """The rotation predicate."""

    @pytest.mark.parametrize("text,order", [("2,1", 8), ("2,2", 32), ("1,1,1", 24), ("2", 4), ("1,1", 4), ("1", 1)])
    def test_orders(self, text, order):
        assert len(rotation_group(build_complex(_p(text)))) == order

    def test_reflection_of_even_block_rejected(self):
        qc = build_complex(_p("2,1"))
        flip = BasedAutomorphism([0, 1], [0, 1, 2], [-1, 1, 1])
        assert block_determinants(flip, _p("2,1")) == (-1, 1)
        assert not is_rotation(flip, qc)

    def test_odd_blocks_need_even_product(self):
        qc = build_complex(_p("1,1"))
        assert is_rotation(BasedAutomorphism([0, 1], [0, 1], [-1, -1]), qc)
        assert not is_rotation(BasedAutomorphism([0, 1], [0, 1], [-1, 1]), qc)

    def test_square_rotation_group_is_cyclic(self):
        rotations = rotation_group(build_complex(_p("2")))
        group = as_finite_group(rotations, "Rot[2]")
        assert group.order_histogram() == {1: 1, 2: 1, 4: 2}

    def test_single_block_is_cp(self):
        rotations = rotation_group(build_complex(_p("3")))
        cp3 = as_group(kernel(3, ParityKind.TYPE3), "CP3")
        assert isomorphic(as_finite_group(rotations, "Rot[3]"), cp3) is not None

    def test_singletons_are_bp(self):
        rotations = rotation_group(build_complex(_p("1,1,1")))
        bp3 = as_group(kernel(3, ParityKind.TYPE2), "BP3")
        assert isomorphic(as_finite_group(rotations, "Rot[1,1,1]"), bp3) is not None

    def test_line_quotient_trivial(self):
        rotations = rotation_group(build_complex(_p("1")))
        assert len(rotations) == 1 and rotations[0].is_identity()


class TestJPAction:
    """jp_action is a homomorphism onto the rotation group."""

    @pytest.mark.parametrize("text", ["2,1", "1,1", "2"])
    def test_homomorphism(self, text):
        partition = _p(text)
        qc = build_complex(partition)
        elements = jp_enumerate(partition)
        for a in elements:
            for b in elements:
                assert jp_action(jp_compose(a, b), qc) == compose_automorphisms(jp_action(a, qc), jp_action(b, qc))

    def test_image_is_rotations(self):
        partition = _p("2,2")
        qc = build_complex(partition)
        image = {jp_action(e, qc) for e in jp_enumerate(partition)}
        assert image == set(rotation_group(qc))


class TestActionCheck:
    """The packaged comparison."""

    @pytest.mark.parametrize("text,jp,kern,rot", [
        ("2,1", 8, 1, 8),
        ("2,2", 64, 2, 32),
        ("1,1,1", 24, 1, 24),
        ("2", 4, 1, 4),
        ("1", 1, 1, 1),
    ])
    def test_orders(self, text, jp, kern, rot):
        report = verify_prop1(_p(text), seed=1)
        assert report.jp_order == jp
        assert report.kernel_order == kern
        assert report.rotation_order == rot
        assert report.image_order == rot
        assert report.predicate_equals_image is True
        assert report.passed

    def test_kernel_reported_in_equivalence(self):
        report = verify_prop1(_p("2,2"))
        assert report.equivalence == "isomorphic modulo a kernel of order 2"
        assert report.iso_check is True

    def test_isomorphism_skipped_above_cap(self):
        with patch("lattice.action.settings") as mock_settings:
            mock_settings.default_seed = 0
            mock_settings.homomorphism_pair_cap = 100_000
            mock_settings.isomorphism_cap = 4
            report = verify_prop1(_p("2,1"))
        assert report.iso_check is None
        assert report.passed

    @pytest.mark.parametrize("n", range(1, 5))
    def test_all_partitions(self, n):
        for partition in compositions(n):
            assert verify_prop1(partition).passed

    def test_broken_action_raises(self):
        with patch("lattice.action.jp_action", return_value=identity_automorphism(3, 2)) as mock_action:
            with patch("lattice.action.compose_automorphisms", return_value=BasedAutomorphism([0, 1], [1, 0, 2], [1, 1, 1])):
                with pytest.raises(VerificationFailure):
                    verify_prop1(_p("2,1"))
        assert mock_action.called

    @pytest.mark.parametrize("n", range(1, 4))
    def test_full_quotient(self, n):
        report = full_quotient_automorphisms(n)
        assert report.nodes == 1
        assert report.loops == n
        assert report.order == report.expected_order
        assert report.iso_check is True
        assert report.passed
