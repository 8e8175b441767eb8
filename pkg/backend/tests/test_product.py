"""
Тесты для раздутия произведения X × Y в точке (0, 0).

Проверяют:
- Внешнюю сумму χ_1 ⊠ 1 + 1 ⊠ χ_2 и её кондуктор на R_3
- Разложение форм по dlog x, dlog y
"""

import random

import pytest
from app.core.algebra import INFINITY, LaurentPoly, MultiLaurentPoly
from app.core.exceptions import DomainError
from app.core.swan import char_from_witt, dlog_form
from app.core.sympow import (
    ProductChart,
    blprod_swan,
    dprod_decompose,
    external_sum,
    v_product,
)
from app.core.witt import WittVector, get_context
from app.services.sampling import random_product_poly, random_reduced_alpha
from hypothesis import given, settings
from hypothesis import strategies as st

VARS = ("x", "y")


def chi(p: int, m: int, *components: dict):
    ctx = get_context(p, m)
    return char_from_witt(WittVector(ctx, [LaurentPoly(p, c) for c in components]))


def poly(p: int, terms: dict) -> MultiLaurentPoly:
    return MultiLaurentPoly(p, VARS, terms)


# ==================== External sum ====================


class TestBlprod:
    """Тесты для кондуктора внешней суммы."""

    def test_v_product(self):
        assert v_product(poly(5, {(-3, 0): 1, (0, -2): 1})) == -3
        assert v_product(poly(5, {})) == INFINITY

    def test_external_sum_length_one(self):
        """α_1(x) ⊞ α_2(y) = x^{-3} + y^{-2} при m = 0."""
        joint = external_sum(chi(5, 0, {-3: 1}), chi(5, 0, {-2: 1}))
        assert joint.components[0] == poly(5, {(-3, 0): 1, (0, -2): 1})

    def test_conductor_is_max(self):
        """Sw(3) и Sw(2) дают 3 на R_3."""
        cert = blprod_swan(chi(5, 0, {-3: 1}), chi(5, 0, {-2: 1}))
        assert (cert.first.n, cert.second.n) == (3, 2)
        assert (cert.joint.n, cert.joint.certified) == (3, True)
        assert cert.expected == 3
        assert cert.to_dict()["certified"] is True

    def test_unramified_pair(self):
        cert = blprod_swan(chi(3, 0, {1: 1}), chi(3, 0, {0: 2}))
        assert cert.joint.n == 0

    def test_length_two(self):
        """p = 2, m = 1: (x^{-1}, 0) и (0, y^{-3}) дают max(2, 3) = 3."""
        cert = blprod_swan(chi(2, 1, {-1: 1}, {}), chi(2, 1, {}, {-3: 1}))
        assert (cert.first.n, cert.second.n, cert.joint.n) == (2, 3, 3)
        assert cert.joint.certified

    @settings(max_examples=30, deadline=None)
    @given(
        st.sampled_from([(2, 0), (3, 0), (5, 0), (2, 1), (3, 1)]),
        st.integers(0, 5),
        st.integers(0, 5),
        st.integers(0, 10**6),
    )
    def test_random_pairs(self, pm, n1, n2, seed):
        p, m = pm
        ctx = get_context(p, m)
        rng = random.Random(seed)
        a1, a2 = random_reduced_alpha(ctx, n1, rng), random_reduced_alpha(ctx, n2, rng)
        if a1 is None or a2 is None:
            return
        cert = blprod_swan(char_from_witt(a1), char_from_witt(a2))
        assert cert.joint.certified
        assert cert.joint.n == max(n1, n2)


# ==================== Decomposition ====================


class TestDprod:
    """Тесты для разложения форм на R_3."""

    def test_levels(self):
        """x^{-2}·dlog x + y^{-1}·dlog y: уровни 2 и 1, общий 2."""
        chart = ProductChart(3)
        omega = chart.form(poly(3, {(-2, 0): 1}), poly(3, {(0, -1): 1}))
        dec = dprod_decompose(omega)
        assert (dec.level_x, dec.level_y, dec.joint_level) == (2, 1, 2)
        assert dec.recombine() == omega

    def test_zero_form(self):
        chart = ProductChart(2)
        dec = dprod_decompose(chart.form(poly(2, {}), poly(2, {})))
        assert dec.joint_level == -INFINITY
        assert dec.to_dict()["joint_level"] == "-inf"

    def test_dx(self):
        """dx = x·dlog x: уровень −1."""
        chart = ProductChart(2)
        dec = dprod_decompose(chart.form(poly(2, {(1, 0): 1}), poly(2, {})))
        assert (dec.level_x, dec.level_y, dec.joint_level) == (-1, -INFINITY, -1)

    def test_wrong_basis(self):
        with pytest.raises(DomainError):
            dprod_decompose(dlog_form(LaurentPoly(2, {-1: 1})))

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from([2, 3, 5]), st.integers(0, 10**6))
    def test_recombine_random(self, p, seed):
        rng = random.Random(seed)
        chart = ProductChart(p)
        omega = chart.form(random_product_poly(p, rng), random_product_poly(p, rng))
        dec = dprod_decompose(omega)
        assert dec.recombine() == omega
        assert dec.joint_level == max(-v_product(c) for c in omega.coeffs)
