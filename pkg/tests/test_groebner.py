"""Strong Groebner bases over ZZ: normal forms, membership, ideal equality."""

import random

import pytest

from genus2chow.groebner import (
    Ideal,
    RingSpec,
    ideal_contains,
    ideal_equal,
    strong_groebner,
)
from genus2chow.ring import InhomogeneousError, Ring

from helpers import random_homogeneous


@pytest.fixture
def bg_ring():
    return Ring(("beta1", 1), ("beta2", 2), ("gamma", 1))


@pytest.fixture
def bg_ideal(bg_ring):
    g, b1 = bg_ring.var("gamma"), bg_ring.var("beta1")
    return Ideal(bg_ring, (2 * g, g * g + b1 * g))


class TestIdealValidation:
    def test_inhomogeneous_generator_rejected(self, bg_ring):
        with pytest.raises(InhomogeneousError):
            Ideal(bg_ring, (bg_ring.parse("beta1 + beta2"),))

    def test_constant_generator_allowed(self, bg_ring):
        Ideal(bg_ring, (bg_ring.const(2),))


class TestStrongGroebner:
    def test_torsion_multiple_reduces(self, bg_ideal, bg_ring):
        basis = strong_groebner(bg_ideal)
        assert basis.normal_form(bg_ring.parse("24*beta1*gamma")) == 0

    def test_zero_ideal(self, bg_ring):
        basis = strong_groebner(Ideal(bg_ring, ()))
        assert basis.elements == ()
        p = bg_ring.parse("beta1^2 - 7*beta2")
        assert basis.normal_form(p) == p

    def test_excision_implies_bundle_relation(self):
        ring = Ring(("alpha1", 1), ("alpha2", 2), ("t", 1))
        t, a1 = ring.var("t"), ring.var("alpha1")
        basis = strong_groebner(Ideal(ring, (2 * t - 2 * a1, t * t - a1 * t)))
        relation = ring.parse("(t^2 - 2*alpha1*t + 4*alpha2)*(t - alpha1)")
        assert basis.normal_form(relation) == 0

    def test_gcd_combination_found(self):
        ring = Ring(("x", 1),)
        x = ring.var("x")
        basis = strong_groebner(Ideal(ring, (4 * x, 6 * x)))
        assert basis.normal_form(2 * x) == 0
        assert [str(g) for g in basis.elements] == ["2*x"]

    def test_completed_closure(self, bg_ideal):
        basis = strong_groebner(bg_ideal)
        basis.verify_complete()


class TestNormalForm:
    def test_canonical_representative(self, bg_ideal, bg_ring):
        basis = strong_groebner(bg_ideal)
        g2 = bg_ring.parse("gamma^2")
        b1g = bg_ring.parse("beta1*gamma")
        assert basis.normal_form(g2) == basis.normal_form(b1g)

    def test_zero_ideal_identity(self, bg_ring):
        basis = strong_groebner(Ideal(bg_ring, ()))
        p = bg_ring.parse("5*beta2 + beta1^2")
        assert basis.normal_form(p) == p

    def test_unique_under_generator_shuffles(self, bg_ring):
        rng = random.Random(17)
        gens = [
            bg_ring.parse("2*gamma"),
            bg_ring.parse("gamma^2 + beta1*gamma"),
            bg_ring.parse("24*beta1^2 - 48*beta2"),
            bg_ring.parse("24*beta1*beta2"),
        ]
        probes = [random_homogeneous(bg_ring, d, rng) for d in (2, 3, 4, 5) for _ in range(4)]
        reference = None
        for _ in range(6):
            rng.shuffle(gens)
            basis = strong_groebner(Ideal(bg_ring, tuple(gens)))
            forms = [basis.normal_form(p) for p in probes]
            if reference is None:
                reference = forms
            assert forms == reference

    def test_idempotent(self, bg_ideal, bg_ring):
        basis = strong_groebner(bg_ideal)
        rng = random.Random(23)
        for _ in range(20):
            p = random_homogeneous(bg_ring, rng.randint(1, 5), rng)
            nf = basis.normal_form(p)
            assert basis.normal_form(nf) == nf
            assert basis.normal_form(p - nf) == 0


class TestMembership:
    def test_divisibility_failure(self):
        ring = Ring(("lambda1", 1), ("lambda2", 2))
        ideal = Ideal(ring, (ring.var("lambda2"),))
        assert not ideal_contains(ideal, ring.var("lambda1"))

    def test_membership_via_basis_object(self, bg_ideal, bg_ring):
        basis = strong_groebner(bg_ideal)
        assert ideal_contains(basis, bg_ring.parse("2*gamma*beta2"))


class TestIdealEqual:
    def test_sign_flip(self, bg_ring):
        I = Ideal(bg_ring, (bg_ring.parse("2*gamma"), bg_ring.parse("gamma^2 + beta1*gamma")))
        J = Ideal(bg_ring, (bg_ring.parse("2*gamma"), bg_ring.parse("gamma^2 - beta1*gamma")))
        assert ideal_equal(I, J)

    def test_strict_inclusion(self):
        ring = Ring(("lambda1", 1),)
        l1 = ring.var("lambda1")
        assert not ideal_equal(Ideal(ring, (l1,)), Ideal(ring, (l1 * l1,)))

    def test_reflexive_symmetric_shuffle_invariant(self, bg_ring):
        rng = random.Random(5)
        gens = [
            bg_ring.parse("2*gamma"),
            bg_ring.parse("gamma^2 + beta1*gamma"),
            bg_ring.parse("24*beta1^2 - 48*beta2"),
        ]
        I = Ideal(bg_ring, tuple(gens))
        assert ideal_equal(I, I)
        shuffled = list(gens)
        rng.shuffle(shuffled)
        J = Ideal(bg_ring, tuple(shuffled))
        assert ideal_equal(I, J) and ideal_equal(J, I)

    def test_invariant_under_adding_combination(self, bg_ring):
        gens = (
            bg_ring.parse("2*gamma"),
            bg_ring.parse("gamma^2 + beta1*gamma"),
        )
        I = Ideal(bg_ring, gens)
        combo = bg_ring.parse("beta1") * gens[0] + 3 * gens[1]
        assert ideal_equal(I, Ideal(bg_ring, gens + (combo,)))


class TestGuards:
    def test_coefficient_explosion_aborts_cleanly(self, monkeypatch):
        # Mixed-weight ideals with coprime-ish leading coefficients can blow
        # up over ZZ; with a tightened bound the engine must fail loudly
        # instead of grinding.
        import genus2chow.groebner as gb

        monkeypatch.setattr(gb, "_MAX_COEFF_BITS", 64)
        ring = Ring(("v0", 1), ("v1", 2), ("v2", 1))
        gens = (
            ring.parse("-27*v0*v1 + 5*v1*v2 - 25*v0*v2^2 - 32*v2^3"),
            ring.parse("57*v0^4 - 30*v0^2*v2^2 - 16*v1*v2^2 - 33*v2^4"),
            ring.parse("4*v0^3 + 33*v0*v2^2 + 19*v2^3"),
        )
        with pytest.raises(RuntimeError, match="coefficient growth"):
            strong_groebner(Ideal(ring, gens))


class TestRandomIdeals:
    def test_random_homogeneous_ideals_reduce_their_members(self):
        ring = Ring(("x", 1), ("y", 1), ("z", 2))
        rng = random.Random(99)
        for _ in range(20):
            gens = [
                random_homogeneous(ring, rng.randint(1, 3), rng, coeff_bound=20)
                for _ in range(rng.randint(2, 3))
            ]
            gens = [g for g in gens if g]
            if not gens:
                continue
            basis = strong_groebner(Ideal(ring, tuple(gens)))
            basis.verify_complete()
            for _ in range(8):
                member = ring.zero()
                for g in gens:
                    d = rng.randint(0, 2)
                    member = member + random_homogeneous(
                        ring, d, rng, coeff_bound=9
                    ) * g
                assert basis.normal_form(member) == 0

    def test_random_ideals_agree_with_lattice_membership(self):
        from genus2chow.graded import membership_matches_normal_form

        ring = Ring(("x", 1), ("y", 1))
        rng = random.Random(7)
        for _ in range(10):
            gens = tuple(
                random_homogeneous(ring, rng.randint(1, 3), rng, coeff_bound=12)
                for _ in range(2)
            )
            spec = RingSpec(ring, Ideal(ring, tuple(g for g in gens if g)))
            for d in range(0, 6):
                assert membership_matches_normal_form(spec, d)


class TestRingSpec:
    def test_build_and_normal_form(self):
        spec = RingSpec.build(
            (("beta1", 1), ("beta2", 2), ("gamma", 1)),
            ("2*gamma", "gamma^2 + beta1*gamma"),
        )
        assert spec.contains(spec.parse("24*beta1*gamma"))
        assert not spec.contains(spec.parse("gamma"))

    def test_same_ideal(self):
        a = RingSpec.build((("x", 1),), ("2*x",))
        b = RingSpec.build((("x", 1),), ("2*x", "4*x"))
        assert a.same_ideal(b)
