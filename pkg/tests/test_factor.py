"""Tests for regime classification and the sextic factorization."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lanemden.errors import DegenerateModulusError, DomainError, RegimeError
from lanemden.factor import (
    band,
    cardano_roots,
    classify,
    factored_eval,
    modulus_k,
    positive_root_f,
    sextic_eval,
    solution_regime,
)
from lanemden.models import Regime


class TestClassify:
    @pytest.mark.parametrize(
        ("C", "regime"),
        [
            (-5.0, Regime.NO_REAL_SOLUTION),
            (-2.0, Regime.SINGULAR_FIXED_POINT),
            (-1.0, Regime.DC_FAMILY),
            (0.0, Regime.SCHUSTER),
            (1.0, Regime.SC_FAMILY),
            (2.0, Regime.SRIVASTAVA),
            (3.0, Regime.WEIERSTRASS_FAMILY),
        ],
    )
    def test_regimes(self, C: float, regime: Regime) -> None:
        assert classify(C) is regime

    @pytest.mark.parametrize(
        ("boundary", "regime"),
        [
            (-2.0, Regime.SINGULAR_FIXED_POINT),
            (0.0, Regime.SCHUSTER),
            (2.0, Regime.SRIVASTAVA),
        ],
    )
    def test_boundaries_snap(self, boundary: float, regime: Regime) -> None:
        assert classify(boundary + 1e-13) is regime
        assert classify(boundary - 1e-13) is regime

    def test_just_outside_snap_window(self) -> None:
        assert classify(-2.0 - 1e-9) is Regime.NO_REAL_SOLUTION
        assert classify(2.0 + 1e-9) is Regime.WEIERSTRASS_FAMILY

    def test_rejects_nan(self) -> None:
        with pytest.raises(DomainError):
            classify(math.nan)

    def test_schuster_band(self) -> None:
        assert classify(1e-11) is Regime.SC_FAMILY
        assert solution_regime(1e-11) is Regime.SCHUSTER
        assert solution_regime(-1e-11) is Regime.SCHUSTER
        assert solution_regime(1e-9) is Regime.SC_FAMILY


class TestCardanoRoots:
    def test_golden_values(self) -> None:
        r = cardano_roots(-1.0)
        assert (r.a, r.b, r.c) == pytest.approx((0.347296, 1.532089, 1.879385), abs=1e-6)

    @pytest.mark.parametrize("C", [-1.9, -1.5, -1.0, -0.5, -1e-3])
    def test_dc_factorization_roots(self, C: float) -> None:
        r = cardano_roots(C)
        assert 0 < r.a < r.b
        # w(u) = (u − a)(b − u)(u + c): a and b are roots, −c is the third
        for u in (r.a, r.b, -r.c):
            assert -u ** 3 + 3 * u + C == pytest.approx(0.0, abs=1e-13)

    @pytest.mark.parametrize("C", [1e-3, 0.5, 1.0, 1.5, 1.9])
    def test_sc_factorization_roots(self, C: float) -> None:
        r = cardano_roots(C)
        for u in (-r.a, -r.b, r.c):
            assert -u ** 3 + 3 * u + C == pytest.approx(0.0, abs=1e-13)

    @settings(max_examples=400, deadline=None)
    @given(m=st.floats(min_value=1e-6, max_value=2.0 - 1e-6), sign=st.sampled_from([-1.0, 1.0]))
    def test_root_system_identities(self, m: float, sign: float) -> None:
        r = cardano_roots(sign * m)
        assert 0.0 < r.a < 1.0 < r.b < math.sqrt(3.0) < r.c < 2.0
        assert r.c == pytest.approx(r.a + r.b, abs=1e-12)
        assert r.c ** 2 - r.a * r.b == pytest.approx(3.0, abs=1e-12)
        assert r.a * r.b * r.c == pytest.approx(m, abs=1e-12)

    def test_matches_numpy_roots(self) -> None:
        C = -0.7
        expected = sorted(np.roots([-1.0, 0.0, 3.0, C]).real)
        r = cardano_roots(C)
        assert sorted([r.a, r.b, -r.c]) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("C", [0.0, 2.0, -2.5, 3.0])
    def test_out_of_regime(self, C: float) -> None:
        with pytest.raises(RegimeError):
            cardano_roots(C)


class TestPositiveRoot:
    @pytest.mark.parametrize("C", [2.0, 2.5, 3.0, 10.0, 1e6])
    def test_solves_depressed_cubic(self, C: float) -> None:
        f = positive_root_f(C).f
        assert f ** 3 - 3 * f - C == pytest.approx(0.0, abs=1e-12 * max(1.0, C))

    @settings(max_examples=100, deadline=None)
    @given(C=st.floats(min_value=2.0, max_value=100.0))
    def test_depressed_root_identities(self, C: float) -> None:
        d = positive_root_f(C)
        assert 0.0 < d.A <= 1.0
        assert d.f == d.A + 1.0 / d.A
        assert d.f ** 3 - 3 * d.f == pytest.approx(C, abs=1e-12 * C)

    def test_srivastava_value(self) -> None:
        assert positive_root_f(2.0).f == 2.0

    @pytest.mark.parametrize("C", [3.0, 5.0, 10.0])
    def test_largest_weierstrass_root(self, C: float) -> None:
        # e1 = 1 + C/f is the real root of 4s³ − 12s − 4(C² − 2)
        e1 = 1.0 + C / positive_root_f(C).f
        assert 4 * e1 ** 3 - 12 * e1 - 4 * (C * C - 2) == pytest.approx(0.0, abs=1e-10 * C * C)

    def test_out_of_regime(self) -> None:
        with pytest.raises(RegimeError):
            positive_root_f(1.5)


class TestModulus:
    @pytest.mark.parametrize("C", [-1.9, -1.0, -0.1, 0.1, 1.0, 1.9])
    def test_complement(self, C: float) -> None:
        mod = modulus_k(cardano_roots(C))
        assert 0.0 < mod.k < 1.0
        assert mod.k ** 2 + mod.kc ** 2 == pytest.approx(1.0, abs=1e-14)

    def test_same_modulus_for_plus_and_minus_C(self) -> None:
        assert modulus_k(cardano_roots(-0.8)).k == modulus_k(cardano_roots(0.8)).k

    def test_degenerate_near_zero(self) -> None:
        with pytest.raises(DegenerateModulusError):
            modulus_k(cardano_roots(1e-20))

    def test_small_near_singular(self) -> None:
        assert modulus_k(cardano_roots(-2.0 + 1e-8)).k < 0.02


class TestSextic:
    @pytest.mark.parametrize("C", [-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.9, 2.0, 3.0, 10.0])
    def test_factorization_matches_expansion(self, C: float) -> None:
        for z in np.linspace(-1.8, 1.8, 37):
            assert factored_eval(float(z), C) == pytest.approx(sextic_eval(float(z), C), abs=1e-11)

    def test_no_factorization_below_minus_two(self) -> None:
        with pytest.raises(RegimeError):
            factored_eval(0.5, -3.0)

    def test_sextic_values(self) -> None:
        assert sextic_eval(1.0, -2.0) == 0.0
        assert sextic_eval(math.sqrt(2.0), 2.0) == pytest.approx(0.0, abs=1e-14)


class TestBand:
    def test_dc_band(self) -> None:
        r = cardano_roots(-1.0)
        assert band(-1.0) == (r.a, r.b)

    def test_sc_band(self) -> None:
        assert band(1.0) == (0.0, cardano_roots(1.0).c)

    def test_weierstrass_band(self) -> None:
        assert band(3.0) == (0.0, positive_root_f(3.0).f)

    def test_closed_forms(self) -> None:
        assert band(-2.0) == (1.0, 1.0)
        assert band(0.0) == (0.0, math.sqrt(3.0))
        assert band(2.0) == (0.0, 2.0)

    def test_no_solutions(self) -> None:
        with pytest.raises(RegimeError):
            band(-3.0)
