import random
from fractions import Fraction
from math import factorial

import pytest

from qdp.bundles import builtin
from qdp.errors import InputError
from qdp.hopf import antipode, counit, multiply, normal_form
from qdp.pairing import (PairingSeed, orthogonal_membership, pair,
                         pairing_axioms_check)
from qdp.drinfeld import prime_membership, prime_presentation
from qdp.series import HSeries


@pytest.fixture(scope="module")
def borel2_bundle():
    b = builtin("borel2", 8, 8)
    if not b.pairing_seed.validated:
        pairing_axioms_check(b.pairing_seed, 3)
    return b


@pytest.fixture(scope="module")
def abelian1_bundle():
    b = builtin("abelian1", 8, 8)
    if not b.pairing_seed.validated:
        pairing_axioms_check(b.pairing_seed, 3)
    return b


class TestEvaluation:
    def test_left_unit_rule(self, borel2_bundle):
        seed = borel2_bundle.pairing_seed
        L, R = seed.left, seed.right
        for g in R.generators:
            v = pair(L.unit(), R.gen(g), seed)
            assert v == counit(R.gen(g), R)
        b = R.unit(5) + R.gen("x")
        assert pair(L.unit(), b, seed) == HSeries.const(5, 8)

    def test_right_unit_rule(self, borel2_bundle):
        seed = borel2_bundle.pairing_seed
        L, R = seed.left, seed.right
        a = L.unit(2) + L.gen("y")
        assert pair(a, R.unit(), seed) == HSeries.const(2, 8)

    def test_dual_basis_values(self, abelian1_bundle):
        seed = abelian1_bundle.pairing_seed
        L, R = seed.left, seed.right
        memo = {}
        for m in range(6):
            for n in range(6):
                xm = normal_form((0,) * m, L)
                yn = normal_form((0,) * n, R).scaled(
                    Fraction(1, factorial(n)))
                got = pair(xm, yn, seed, memo)
                want = HSeries.one(8) if m == n else HSeries.zero(8)
                assert got == want, (m, n, got)

    def test_antipode_identity_on_monomials(self, borel2_bundle):
        seed = borel2_bundle.pairing_seed
        L, R = seed.left, seed.right
        rng = random.Random(17)
        lmonos = L.monomials_up_to(3)
        rmonos = R.monomials_up_to(3)
        memo = {}
        from qdp.freealg import Element
        for _ in range(25):
            u = Element.from_monomial(L.name,
                                      lmonos[rng.randrange(len(lmonos))],
                                      HSeries.one(8))
            v = Element.from_monomial(R.name,
                                      rmonos[rng.randrange(len(rmonos))],
                                      HSeries.one(8))
            lhs = pair(antipode(u, L), v, seed, memo).truncate(5)
            rhs = pair(u, antipode(v, R), seed, memo).truncate(5)
            assert lhs == rhs


class TestAxioms:
    def test_abelian1_passes(self, abelian1_bundle):
        rep = pairing_axioms_check(abelian1_bundle.pairing_seed, 3)
        assert rep.passed
        assert abelian1_bundle.pairing_seed.validated

    def test_borel2_passes(self, borel2_bundle):
        rep = pairing_axioms_check(borel2_bundle.pairing_seed, 3)
        assert rep.passed

    def test_broken_seed_detected(self):
        # a cross value <x, Y> = 1 is incompatible with the relation
        b = builtin("borel2", 6, 6)
        L = b.quea
        R = prime_presentation(L, 6)
        seed = PairingSeed(L, R, {(0, 0): HSeries.one(6),
                                  (1, 1): HSeries.one(6),
                                  (0, 1): HSeries.one(6)})
        rep = pairing_axioms_check(seed, 2)
        assert not rep.passed
        assert not seed.validated


class TestOrthogonalMembership:
    def test_requires_validation(self):
        b = builtin("borel2", 6, 6)
        seed = PairingSeed(b.quea, prime_presentation(b.quea, 6),
                           {(0, 0): HSeries.one(6), (1, 1): HSeries.one(6)})
        with pytest.raises(InputError):
            orthogonal_membership(b.quea.gen("x"), seed)

    def test_examples(self, borel2_bundle):
        seed = borel2_bundle.pairing_seed
        P = seed.left
        h = HSeries.h_power(1, 8)
        assert orthogonal_membership(P.gen("x").scaled(h), seed).is_member
        assert not orthogonal_membership(P.gen("y"), seed).is_member
        assert orthogonal_membership(P.unit(), seed).is_member

    def test_agreement_with_deviation_route(self, borel2_bundle):
        seed = borel2_bundle.pairing_seed
        P = seed.left
        h = HSeries.h_power(1, 8)
        batch = [P.gen("x"), P.gen("y"), P.gen("x").scaled(h),
                 P.gen("y").scaled(h), P.unit(),
                 multiply(P.gen("x"), P.gen("y"), P),
                 multiply(P.gen("x"), P.gen("y"), P).scaled(h).scaled(h),
                 P.gen("x") + P.gen("y").scaled(h)]
        for a in batch:
            assert (prime_membership(a, P).is_member
                    == orthogonal_membership(a, seed).is_member)
