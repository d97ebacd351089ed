"""Tests for the elliptic kernel, checked against scipy and quadrature."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad
from scipy.special import ellipj, ellipk

from lanemden.elliptic import (
    as_modulus,
    complete_K,
    jacobi_cd,
    jacobi_cs,
    jacobi_dc,
    jacobi_sc,
    jacobi_sncndn,
    weierstrass_p,
    weierstrass_p_prime,
    weierstrass_real_period,
    weierstrass_roots,
    weierstrass_signed_reciprocal,
)
from lanemden.errors import DegenerateLatticeError, DomainError, PoleError
from lanemden.helpers import richardson_derivative
from lanemden.models import Modulus, WeierstrassInvariants

moduli = st.floats(min_value=0.0, max_value=0.999)
arguments = st.floats(min_value=-50.0, max_value=50.0)

# Three real roots (C = 1) and one real root (C = 3)
INVARIANTS = [WeierstrassInvariants.from_constant(1.0), WeierstrassInvariants.from_constant(3.0)]


class TestModulus:
    def test_rejects_one(self) -> None:
        with pytest.raises(DomainError):
            as_modulus(1.0)

    def test_rejects_negative(self) -> None:
        with pytest.raises(DomainError):
            as_modulus(-0.1)

    def test_rejects_nan(self) -> None:
        with pytest.raises(DomainError):
            as_modulus(math.nan)

    def test_keeps_explicit_complement(self) -> None:
        mod = as_modulus(Modulus(k=0.6, kc=0.8))
        assert mod.kc == 0.8


class TestCompleteK:
    def test_golden_value(self) -> None:
        assert complete_K(0.5) == pytest.approx(1.685750354812596, rel=1e-14)

    def test_circular_limit(self) -> None:
        assert complete_K(0.0) == pytest.approx(math.pi / 2, rel=1e-15)

    @pytest.mark.parametrize("k", [0.1, 0.3, 0.7, 0.9, 0.99, 0.999])
    def test_matches_scipy(self, k: float) -> None:
        assert complete_K(k) == pytest.approx(ellipk(k * k), rel=1e-13)

    def test_matches_quadrature(self) -> None:
        k = 0.8
        expected, _ = quad(
            lambda t: 1.0 / math.sqrt(1.0 - (k * math.sin(t)) ** 2),
            0.0, math.pi / 2, epsabs=1e-14, epsrel=1e-13,
        )
        assert complete_K(k) == pytest.approx(expected, rel=1e-12)

    def test_near_unit_modulus_matches_quadrature(self) -> None:
        k = 0.999999
        kc = math.sqrt((1.0 - k) * (1.0 + k))
        # 1 − k²sin²t written as cos²t + k'²sin²t
        expected, _ = quad(
            lambda t: 1.0 / math.hypot(math.cos(t), kc * math.sin(t)),
            0.0, math.pi / 2, epsabs=0.0, epsrel=1e-13, limit=500,
        )
        K = complete_K(k)
        assert math.isfinite(K)
        assert K == pytest.approx(expected, rel=1e-10)


class TestJacobi:
    @pytest.mark.parametrize("k", [0.0, 0.2, 0.5, 0.8, 0.95])
    @pytest.mark.parametrize("u", [-7.3, -1.0, 0.0, 0.4, 1.2, 3.9, 12.5])
    def test_matches_scipy(self, u: float, k: float) -> None:
        sn, cn, dn, _ = ellipj(u, k * k)
        t = jacobi_sncndn(u, k)
        assert t.sn == pytest.approx(sn, abs=1e-12)
        assert t.cn == pytest.approx(cn, abs=1e-12)
        assert t.dn == pytest.approx(dn, abs=1e-12)

    def test_circular_case(self) -> None:
        t = jacobi_sncndn(0.7, 0.0)
        assert t.sn == pytest.approx(math.sin(0.7), abs=1e-15)
        assert t.cn == pytest.approx(math.cos(0.7), abs=1e-15)
        assert t.dn == 1.0

    @given(u=arguments, k=moduli)
    @settings(max_examples=200, deadline=None)
    def test_pythagorean_identities(self, u: float, k: float) -> None:
        t = jacobi_sncndn(u, k)
        assert t.sn ** 2 + t.cn ** 2 == pytest.approx(1.0, abs=1e-13)
        assert t.dn ** 2 + (k * t.sn) ** 2 == pytest.approx(1.0, abs=1e-13)

    @given(u=st.floats(min_value=-5.0, max_value=5.0), k=moduli)
    @settings(max_examples=100, deadline=None)
    def test_half_period_shift(self, u: float, k: float) -> None:
        # sn(u + 2K) = −sn(u)
        K = complete_K(k)
        assert jacobi_sncndn(u + 2.0 * K, k).sn == pytest.approx(-jacobi_sncndn(u, k).sn, abs=1e-11)

    def test_sn_derivative_is_cn_dn(self) -> None:
        k, u = 0.7, 0.9
        t = jacobi_sncndn(u, k)
        fd = richardson_derivative(lambda x: jacobi_sncndn(x, k).sn, u)
        assert fd == pytest.approx(t.cn * t.dn, rel=1e-9)

    def test_dc_pole_raises(self) -> None:
        k = 0.6
        with pytest.raises(PoleError):
            jacobi_dc(complete_K(k), k)

    def test_cd_is_finite_at_dc_pole(self) -> None:
        k = 0.6
        assert jacobi_cd(complete_K(k), k) == pytest.approx(0.0, abs=1e-14)

    def test_sc_pole_raises(self) -> None:
        k = 0.3
        with pytest.raises(PoleError):
            jacobi_sc(-complete_K(k), k)

    def test_cs_pole_raises(self) -> None:
        with pytest.raises(PoleError):
            jacobi_cs(0.0, 0.4)

    def test_dc_and_cd_are_reciprocal(self) -> None:
        assert jacobi_dc(0.3, 0.5) * jacobi_cd(0.3, 0.5) == pytest.approx(1.0, rel=1e-15)

    def test_sc_value(self) -> None:
        sn, cn, _, _ = ellipj(0.8, 0.25)
        assert jacobi_sc(0.8, 0.5) == pytest.approx(sn / cn, rel=1e-12)

    def test_non_finite_argument(self) -> None:
        with pytest.raises(DomainError):
            jacobi_sncndn(math.inf, 0.5)


class TestWeierstrassRoots:
    @pytest.mark.parametrize("inv", INVARIANTS)
    def test_roots_solve_cubic(self, inv: WeierstrassInvariants) -> None:
        for e in weierstrass_roots(inv):
            assert 4 * e ** 3 - inv.g2 * e - inv.g3 == pytest.approx(0.0, abs=1e-12)

    def test_three_real_roots_sum_to_zero(self) -> None:
        roots = weierstrass_roots(INVARIANTS[0])
        assert len(roots) == 3
        assert roots[0] > roots[1] > roots[2]
        assert sum(roots) == pytest.approx(0.0, abs=1e-13)

    def test_single_real_root_for_negative_discriminant(self) -> None:
        assert INVARIANTS[1].discriminant < 0
        assert len(weierstrass_roots(INVARIANTS[1])) == 1

    def test_zero_invariants(self) -> None:
        assert weierstrass_roots(WeierstrassInvariants(0.0, 0.0)) == (0.0, 0.0, 0.0)


class TestWeierstrassP:
    @pytest.mark.parametrize("inv", INVARIANTS)
    @pytest.mark.parametrize("x", [0.05, 0.3, 0.7, 1.1, -0.4])
    def test_differential_equation(self, inv: WeierstrassInvariants, x: float) -> None:
        p = weierstrass_p(x, inv)
        dp = weierstrass_p_prime(x, inv)
        rhs = 4 * p ** 3 - inv.g2 * p - inv.g3
        assert dp * dp == pytest.approx(rhs, rel=1e-10)

    @pytest.mark.parametrize("inv", INVARIANTS)
    @pytest.mark.parametrize("x", [0.2, 0.5, 0.9])
    def test_derivative_matches_differences(self, inv: WeierstrassInvariants, x: float) -> None:
        fd = richardson_derivative(lambda t: weierstrass_p(t, inv), x)
        assert weierstrass_p_prime(x, inv) == pytest.approx(fd, rel=1e-8)

    @pytest.mark.parametrize("lam", [2.0, 1.0 / 3.0, math.sqrt(3.0)])
    @pytest.mark.parametrize("inv", INVARIANTS)
    def test_homogeneity(self, inv: WeierstrassInvariants, lam: float) -> None:
        for x in (0.15, 0.45, 0.8):
            lhs = weierstrass_p(lam * x, inv.scaled(lam))
            assert lhs == pytest.approx(weierstrass_p(x, inv) / lam ** 2, rel=1e-11)

    @pytest.mark.parametrize("inv", INVARIANTS)
    def test_inverts_elliptic_integral(self, inv: WeierstrassInvariants) -> None:
        x = 0.3
        p = weierstrass_p(x, inv)
        back, _ = quad(
            lambda s: 1.0 / math.sqrt(4 * s ** 3 - inv.g2 * s - inv.g3),
            p, math.inf, epsabs=1e-14, epsrel=1e-12,
        )
        assert back == pytest.approx(x, rel=1e-9)

    def test_pole_at_origin(self) -> None:
        with pytest.raises(PoleError):
            weierstrass_p(0.0, INVARIANTS[0])

    def test_zero_invariants_give_inverse_square(self) -> None:
        assert weierstrass_p(0.5, WeierstrassInvariants(0.0, 0.0)) == 4.0

    def test_stays_above_largest_root(self) -> None:
        inv = INVARIANTS[1]
        e1 = weierstrass_roots(inv)[0]
        period = weierstrass_real_period(inv)
        for i in range(1, 20):
            assert weierstrass_p(i * period / 20.0, inv) >= e1 - 1e-12


class TestRealPeriod:
    @pytest.mark.parametrize("inv", INVARIANTS)
    def test_matches_quadrature(self, inv: WeierstrassInvariants) -> None:
        # s = e1 + t² removes the endpoint singularity:
        # 4s³ − g2·s − g3 = (s − e1)·(4s² + 4e1·s + 4e1² − g2)
        e1 = weierstrass_roots(inv)[0]

        def integrand(t: float) -> float:
            s = e1 + t * t
            return 2.0 / math.sqrt(4 * s * s + 4 * e1 * s + 4 * e1 * e1 - inv.g2)

        half, _ = quad(integrand, 0.0, math.inf, epsabs=1e-14, epsrel=1e-13)
        assert weierstrass_real_period(inv) == pytest.approx(2.0 * half, rel=1e-10)

    @pytest.mark.parametrize("inv", INVARIANTS)
    def test_periodicity(self, inv: WeierstrassInvariants) -> None:
        period = weierstrass_real_period(inv)
        assert weierstrass_p(0.4 + period, inv) == pytest.approx(weierstrass_p(0.4, inv), rel=1e-10)

    def test_degenerate_discriminant(self) -> None:
        with pytest.raises(DegenerateLatticeError):
            weierstrass_real_period(WeierstrassInvariants.from_constant(2.0))


class TestSignedReciprocal:
    @pytest.mark.parametrize("inv", INVARIANTS)
    def test_square_is_reciprocal(self, inv: WeierstrassInvariants) -> None:
        for x in (0.2, 0.6, 1.0):
            Z, _ = weierstrass_signed_reciprocal(x, inv, shift=1.0)
            assert Z * Z == pytest.approx(1.0 / (weierstrass_p(x, inv) - 1.0), rel=1e-11)

    @pytest.mark.parametrize("inv", INVARIANTS)
    def test_sign_alternates_between_cells(self, inv: WeierstrassInvariants) -> None:
        period = weierstrass_real_period(inv)
        first, _ = weierstrass_signed_reciprocal(0.5 * period, inv, shift=1.0)
        second, _ = weierstrass_signed_reciprocal(1.5 * period, inv, shift=1.0)
        assert first > 0.0
        assert second == pytest.approx(-first, rel=1e-10)

    @pytest.mark.parametrize("inv", INVARIANTS)
    def test_vanishes_on_lattice(self, inv: WeierstrassInvariants) -> None:
        Z, dZ = weierstrass_signed_reciprocal(0.0, inv, shift=1.0)
        assert Z == 0.0
        assert dZ > 0.0

    @pytest.mark.parametrize("inv", INVARIANTS)
    def test_derivative_matches_differences(self, inv: WeierstrassInvariants) -> None:
        for x in (0.1, 0.7):
            _, dZ = weierstrass_signed_reciprocal(x, inv, shift=1.0)
            fd = richardson_derivative(lambda t: weierstrass_signed_reciprocal(t, inv, 1.0)[0], x)
            assert dZ == pytest.approx(fd, rel=1e-8, abs=1e-12)

    def test_shift_must_stay_below_e1(self) -> None:
        with pytest.raises(DomainError):
            weierstrass_signed_reciprocal(0.3, INVARIANTS[0], shift=10.0)
