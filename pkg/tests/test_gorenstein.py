"""Catalecticants, Hilbert functions, Hessians, Lefschetz certificates."""

import random
from fractions import Fraction

import pytest

from gorlef.apolar import (LinearFormR, LinearFormS, Poly, RING_R,
                           monomials_of_degree, power_of_linear)
from gorlef.errors import (DegreeOutOfRangeError, HessianRankMismatchError,
                           ZeroGeneratorError)
from gorlef.gorenstein import (GorensteinAlgebra, basis, catalecticant,
                               check_slp, check_wlp, hessian_at, hessian_det,
                               hilbert_function, multiplication_rank,
                               sample_linear_form)
from gorlef.linalg import rank

from oracles import gauss_rank


def rmono(n, exp, c=1):
    return Poly.monomial(n, RING_R, exp).scale(Fraction(c))


X0X1X2 = rmono(3, (1, 1, 1))


class TestCatalecticant:
    def test_hand_case(self):
        # F = X0 X1: Cat^1 over rows (x0, x1), cols (x0, x1)
        f = rmono(2, (1, 1))
        m = catalecticant(f, 1)
        assert m.rows == 2 and m.cols == 2
        assert [[int(v) for v in row] for row in m.entries] == [[0, 1], [1, 0]]

    def test_factorial_normalization(self):
        # F = X0^2: (x0 * x0) o F = 2, recorded with 2! not 1
        f = rmono(2, (2, 0))
        m = catalecticant(f, 1)
        assert m.entries[0][0] == 2

    def test_rank_symmetry(self):
        f = X0X1X2
        for j in range(4):
            assert rank(catalecticant(f, j)) == rank(catalecticant(f, 3 - j))

    def test_degree_out_of_range(self):
        with pytest.raises(DegreeOutOfRangeError):
            catalecticant(X0X1X2, 5)

    def test_matches_gauss_oracle(self):
        rng = random.Random(60)
        for _ in range(15):
            f = _random_form(rng, 3, 4)
            for j in range(3):
                m = catalecticant(f, j)
                assert rank(m) == gauss_rank(m.entries)


def _random_form(rng, n, d):
    p = Poly.zero(n, RING_R)
    for mexp in monomials_of_degree(n, d):
        c = rng.randint(-3, 3)
        if c:
            p = p + rmono(n, mexp, c)
    if p.is_zero():
        p = rmono(n, monomials_of_degree(n, d)[0])
    return p


class TestHilbertFunction:
    def test_frozen_cases(self):
        assert tuple(hilbert_function(rmono(1, (3,)))) == (1, 1, 1, 1)
        assert tuple(hilbert_function(X0X1X2)) == (1, 3, 3, 1)
        f = rmono(2, (2, 0)) + rmono(2, (0, 2))
        assert tuple(hilbert_function(f)) == (1, 2, 1)

    def test_zero_rejected(self):
        with pytest.raises(ZeroGeneratorError):
            hilbert_function(Poly.zero(2, RING_R))

    def test_symmetric_always(self):
        rng = random.Random(61)
        for _ in range(20):
            h = tuple(hilbert_function(_random_form(rng, rng.randint(1, 3),
                                                    rng.randint(1, 5))))
            assert h == h[::-1]


class TestBasis:
    def test_basis_size_is_hilbert_value(self):
        f = X0X1X2
        h = hilbert_function(f)
        for j in range(4):
            assert len(basis(f, j)) == h[j]

    def test_basis_of_monomial_algebra(self):
        # F = X0^3: only powers of x0 survive
        f = rmono(2, (3, 0))
        assert basis(f, 1) == [(1, 0)]
        assert basis(f, 2) == [(2, 0)]


class TestHessian:
    def test_monomial_product_hand_case(self):
        ell = LinearFormS([1, 1, 1])
        assert hessian_det(X0X1X2, 1, ell) == 2

    def test_degenerate_direction(self):
        ell = LinearFormS([1, 0, 0])
        assert hessian_det(X0X1X2, 1, ell) == 0

    def test_hess0_is_evaluation(self):
        ell = LinearFormS([2, 1, 1])
        m = hessian_at(X0X1X2, 0, ell)
        assert m.entries == [[X0X1X2.evaluate(ell.point())]]

    def test_symmetric_matrix(self):
        rng = random.Random(62)
        f = _random_form(rng, 3, 4)
        ell = sample_linear_form(3, rng)
        m = hessian_at(f, 2, ell)
        assert m == m.transpose()

    def test_rank_one_for_pure_power(self):
        # Hess^j(L^d) has rank one wherever it is nonzero
        L = LinearFormR([Fraction(1), Fraction(2), Fraction(3)])
        f = power_of_linear(L, 4)
        ell = LinearFormS([1, 1, 1])
        frame = monomials_of_degree(3, 1)
        m = hessian_at(f, 1, ell, frame, 4)
        assert rank(m) == 1


class TestMultiplicationRank:
    def test_full_rank_for_separating_form(self):
        ell = LinearFormS([1, 1, 1])
        h = hilbert_function(X0X1X2)
        for i in range(3):
            assert multiplication_rank(X0X1X2, i, 1, ell) == min(h[i], h[i + 1])

    def test_annihilating_power(self):
        # x0^2 o X0 X1 X2 = 0, so ell = x0 gives rank 0 beyond one step
        ell = LinearFormS([1, 0, 0])
        assert multiplication_rank(X0X1X2, 0, 2, ell) == 0

    def test_k_zero_is_identity_rank(self):
        ell = LinearFormS([1, 2, 3])
        h = hilbert_function(X0X1X2)
        for i in range(4):
            assert multiplication_rank(X0X1X2, i, 0, ell) == h[i]

    def test_out_of_range(self):
        ell = LinearFormS([1, 1, 1])
        with pytest.raises(DegreeOutOfRangeError):
            multiplication_rank(X0X1X2, 2, 5, ell)


class TestLefschetzChecks:
    def test_slp_for_monomial_complete_intersections(self):
        rng = random.Random(63)
        for f in (rmono(1, (4,)), X0X1X2, rmono(2, (2, 1))):
            cert = check_slp(f, rng)
            assert cert.verdict
            assert cert.ell is not None
            for rec in cert.per_degree:
                assert rec.ok()

    def test_wlp_follows_slp_here(self):
        rng = random.Random(64)
        cert = check_wlp(X0X1X2, rng)
        assert cert.verdict
        assert [r.required for r in cert.per_degree] == [1, 3, 1]

    def test_certificate_json_shape(self):
        rng = random.Random(65)
        cert = check_slp(X0X1X2, rng)
        doc = cert.to_json_dict()
        assert doc["kind"] == "slp" and doc["verdict"] is True
        assert isinstance(doc["ell"], list)
        assert {"j", "method", "det", "rank", "required"} <= set(doc["degrees"][0])

    def test_det_and_rank_routes_agree(self):
        # the MW equivalence is enforced internally; a run over random
        # forms must never raise the mismatch error
        rng = random.Random(66)
        for _ in range(10):
            f = _random_form(rng, 3, rng.choice([2, 3, 4]))
            try:
                check_slp(f, rng, attempts=5)
            except HessianRankMismatchError as exc:  # pragma: no cover
                pytest.fail(f"routes disagree: {exc}")

    def test_verdict_false_without_witness_is_not_an_error(self):
        # an algebra that genuinely fails WLP in characteristic 0 is hard
        # to produce here; instead check exhaustion semantics with a tiny
        # box that forces ell = 0 rejection paths to still terminate
        rng = random.Random(67)
        cert = check_slp(X0X1X2, rng, attempts=1, box=1)
        assert cert.attempts == 1
        assert isinstance(cert.verdict, bool)


class TestAlgebraContainer:
    def test_eager_hilbert_and_codim(self):
        a = GorensteinAlgebra(X0X1X2)
        assert tuple(a.hilbert) == (1, 3, 3, 1)
        assert a.codimension() == 3
        assert a.d == 3

    def test_inhomogeneous_rejected(self):
        f = X0X1X2 + rmono(3, (1, 0, 0))
        with pytest.raises(ZeroGeneratorError):
            GorensteinAlgebra(f)
