"""Graded pieces as abelian groups, kernels of multiplication, enumeration."""

import pytest

from genus2chow.graded import (
    InfiniteKernelError,
    enumerate_kernel_elements,
    graded_piece,
    membership_matches_normal_form,
    multiplication_kernel,
)
from genus2chow.groebner import RingSpec



@pytest.fixture
def bg_spec():
    return RingSpec.build(
        (("beta1", 1), ("beta2", 2), ("gamma", 1)),
        ("2*gamma", "gamma^2 + beta1*gamma"),
    )


@pytest.fixture
def delta1_spec():
    return RingSpec.build(
        (("lambda1", 1), ("lambda2", 2), ("gamma", 1)),
        (
            "2*gamma",
            "gamma^2 + lambda1*gamma",
            "24*lambda1^2 - 48*lambda2",
            "24*lambda1*lambda2",
        ),
    )


@pytest.fixture
def open_spec():
    return RingSpec.build(
        (("lambda1", 1), ("lambda2", 2)),
        ("24*lambda1^2 - 48*lambda2", "20*lambda1*lambda2"),
    )


class TestGradedPiece:
    def test_classifying_degree_one(self, bg_spec):
        # Oracle frozen by hand: one relation row (0, 0, 2) against basis
        # (beta1, gamma), Smith form diag(2): free part beta1, torsion Z/2.
        piece = graded_piece(bg_spec, 1)
        assert piece.free_rank == 1
        assert piece.torsion_invariants == (2,)
        assert piece.order() is None
        ring = bg_spec.ring
        assert piece.is_zero(ring.parse("2*gamma"))
        assert not piece.is_zero(ring.var("gamma"))
        assert not piece.is_zero(ring.var("beta1"))

    def test_open_stratum_degree_one_torsion_free(self, open_spec):
        piece = graded_piece(open_spec, 1)
        assert piece.free_rank == 1
        assert piece.torsion_invariants == ()

    def test_degree_zero_fundamental_class(self, bg_spec, delta1_spec, open_spec):
        for spec in (bg_spec, delta1_spec, open_spec):
            piece = graded_piece(spec, 0)
            assert piece.free_rank == 1
            assert piece.torsion_invariants == ()

    def test_residue_detects_vanishing(self, bg_spec):
        ring = bg_spec.ring
        piece = graded_piece(bg_spec, 2)
        assert piece.is_zero(ring.parse("2*beta1*gamma"))
        assert not piece.is_zero(ring.parse("beta1*gamma"))
        assert piece.is_zero(ring.parse("gamma^2 + beta1*gamma"))

    def test_negative_degree_rejected(self, bg_spec):
        with pytest.raises(ValueError):
            graded_piece(bg_spec, -1)

    def test_oracle_agreement(self, bg_spec, delta1_spec, open_spec):
        for spec in (bg_spec, delta1_spec, open_spec):
            for d in range(0, 9):
                assert membership_matches_normal_form(spec, d)


class TestMultiplicationKernel:
    def test_zero_multiplier_keeps_everything(self, open_spec):
        pieces = multiplication_kernel(open_spec, open_spec.ring.zero(), 3)
        piece = pieces[1]
        full = graded_piece(open_spec, 1)
        assert piece.free_rank == full.free_rank
        assert piece.torsion_invariants == full.torsion_invariants

    def test_free_ring_has_no_kernel(self):
        spec = RingSpec.build((("lambda1", 1),), ())
        pieces = multiplication_kernel(spec, spec.ring.var("lambda1"), 4)
        assert all(piece.is_trivial() for piece in pieces)

    def test_lifts_are_killed_by_the_multiplier(self, delta1_spec):
        ring = delta1_spec.ring
        m = ring.parse("gamma - lambda1")
        pieces = multiplication_kernel(delta1_spec, m, 5)
        for piece in pieces:
            for lift in piece.generators:
                assert delta1_spec.contains(lift * m)

    def test_candidate_generation_flag(self, delta1_spec):
        ring = delta1_spec.ring
        m = ring.parse("gamma - lambda1")
        gamma = ring.var("gamma")
        pieces = multiplication_kernel(delta1_spec, m, 5, candidates=(gamma,))
        # gamma itself is in the kernel: (gamma - lambda1)*gamma =
        # gamma^2 - lambda1*gamma = -2*lambda1*gamma = 0.
        assert delta1_spec.contains(m * gamma)
        assert pieces[1].generated_by_candidates is True


class TestEnumeration:
    def test_three_boundary_classes(self, delta1_spec):
        ring = delta1_spec.ring
        gamma, l1, l2 = ring.var("gamma"), ring.var("lambda1"), ring.var("lambda2")
        elements = enumerate_kernel_elements(delta1_spec, gamma - l1, 3)
        expected = {
            delta1_spec.normal_form(gamma * l1 ** 2),
            delta1_spec.normal_form(gamma * l2),
            delta1_spec.normal_form(gamma * (l1 ** 2 + l2)),
        }
        assert len(elements) == 3
        assert set(elements) == expected

    def test_unit_multiplier_empty(self, delta1_spec):
        assert enumerate_kernel_elements(delta1_spec, delta1_spec.ring.one(), 3) == []

    def test_degree_zero_torsion_free(self, delta1_spec):
        m = delta1_spec.parse("gamma - lambda1")
        assert enumerate_kernel_elements(delta1_spec, m, 0) == []

    def test_infinite_kernel_reported(self, open_spec):
        # Multiplication by 20*lambda1*lambda2 = 0 kills the whole ring, and
        # degree-1 contains a free class, so enumeration must refuse.
        m = open_spec.parse("20*lambda1*lambda2")
        with pytest.raises(InfiniteKernelError):
            enumerate_kernel_elements(open_spec, m, 1)
