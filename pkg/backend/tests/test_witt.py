"""
Тесты для векторов Витта.

Проверяют:
- Универсальные многочлены S_n, P_n, N_n (гост-тождества)
- Кольцевые операции над F_p[t, 1/t], F и V
- Нормирование v_witt и фильтрацию fil_n
- Файловый кэш: запись, контрольная сумма, очистка
"""

import hashlib

import pytest
from app.core.algebra import INFINITY, LaurentPoly
from app.core.exceptions import CacheCorruptError, ContextMismatchError, DomainError
from app.core.witt import (
    WittVector,
    build_cache,
    clear_cache,
    frobenius_witt,
    get_context,
    ghost,
    ghost_components,
    in_fil,
    inspect_cache,
    teichmuller,
    v_witt,
    verschiebung,
    verschiebung_shift,
    witt_universal_polys,
)
from app.core.witt.cache import (
    cache_path,
    load_context,
    parse_context,
    reset_registry,
    serialize_context,
)
from app.core.witt.universal import spot_check
from hypothesis import given, settings
from hypothesis import strategies as st


def lp(p: int, terms: dict) -> LaurentPoly:
    return LaurentPoly(p, terms)


# ==================== Universal polynomials ====================


class TestUniversalPolys:
    """Тесты для универсальных многочленов."""

    def test_s1_for_p2(self):
        """S_1 = X1 + Y1 − X0·Y0 при p = 2."""
        ctx = get_context(2, 1)
        assert ctx.sum_polys[1].pretty(ctx.variables) == "X1 + Y1 - X0*Y0"

    def test_s0_is_plain_sum(self):
        ctx = get_context(3, 1)
        assert ctx.sum_polys[0].pretty(ctx.variables) == "X0 + Y0"
        assert ctx.prod_polys[0].pretty(ctx.variables) == "X0*Y0"

    def test_ghost(self):
        """w_1(a_0, a_1) = a_0^p + p·a_1."""
        assert ghost(3, [2, 5]) == (2, 8 + 15)

    @pytest.mark.parametrize("p,m", [(2, 0), (2, 2), (3, 1), (5, 1)])
    def test_spot_check(self, p, m):
        assert spot_check(get_context(p, m))

    def test_length_cap(self):
        """m+1 сверх max_witt_length отвергается."""
        with pytest.raises(DomainError):
            witt_universal_polys(2, 10)

    @settings(max_examples=60, deadline=None)
    @given(
        st.sampled_from([(2, 1), (2, 2), (3, 1), (3, 2)]),
        st.data(),
    )
    def test_ghost_is_ring_homomorphism(self, pm, data):
        """Гост-компоненты суммы, произведения и −a на целых векторах."""
        p, m = pm
        ctx = get_context(p, m)
        component = st.integers(-6, 6)
        x = data.draw(st.lists(component, min_size=m + 1, max_size=m + 1))
        y = data.draw(st.lists(component, min_size=m + 1, max_size=m + 1))
        a, b = WittVector(ctx, x), WittVector(ctx, y)
        ga, gb = ghost_components(a), ghost_components(b)
        assert ghost_components(a + b) == tuple(u + v for u, v in zip(ga, gb))
        assert ghost_components(a * b) == tuple(u * v for u, v in zip(ga, gb))
        assert ghost_components(-a) == tuple(-u for u in ga)


# ==================== Vectors over F_p[t, 1/t] ====================


class TestWittVector:
    """Тесты для векторов с компонентами-многочленами Лорана."""

    def test_length_checked(self):
        ctx = get_context(2, 1)
        with pytest.raises(DomainError):
            WittVector(ctx, [lp(2, {-1: 1})])

    def test_context_mismatch(self):
        a = WittVector(get_context(2, 0), [lp(2, {-1: 1})])
        b = WittVector(get_context(2, 1), [lp(2, {-1: 1}), lp(2, {})])
        with pytest.raises(ContextMismatchError):
            a + b

    def test_length_one_is_field_addition(self):
        """W_1 — само кольцо."""
        ctx = get_context(3, 0)
        a = WittVector(ctx, [lp(3, {-2: 1, 0: 2})])
        b = WittVector(ctx, [lp(3, {-2: 2, 1: 1})])
        assert (a + b).components[0] == lp(3, {0: 2, 1: 1})

    def test_doubling_is_vf_for_p2(self):
        """В характеристике 2: a + a = V(F(a))."""
        ctx = get_context(2, 1)
        a = WittVector(ctx, [lp(2, {-3: 1, 0: 1}), lp(2, {-1: 1})])
        assert a + a == verschiebung(frobenius_witt(a))

    def test_tripling_is_vf_for_p3(self):
        ctx = get_context(3, 1)
        a = WittVector(ctx, [lp(3, {-1: 2}), lp(3, {1: 1})])
        assert a + a + a == verschiebung(frobenius_witt(a))

    def test_sub_inverts_add(self):
        ctx = get_context(2, 2)
        a = WittVector(ctx, [lp(2, {-1: 1}), lp(2, {-3: 1}), lp(2, {0: 1})])
        b = WittVector(ctx, [lp(2, {-2: 1, 1: 1}), lp(2, {}), lp(2, {-1: 1})])
        assert (a + b) - b == a

    def test_frobenius_is_additive(self):
        ctx = get_context(3, 1)
        a = WittVector(ctx, [lp(3, {-1: 1}), lp(3, {-2: 2})])
        b = WittVector(ctx, [lp(3, {1: 1}), lp(3, {-1: 1})])
        assert frobenius_witt(a + b) == frobenius_witt(a) + frobenius_witt(b)

    def test_shift_fills_one_slot(self):
        """(a, 0) + (0, b) = (a, b): сумма не переносит ничего из нулевой компоненты."""
        ctx = get_context(3, 1)
        a, b = lp(3, {-2: 1}), lp(3, {-1: 2})
        head = WittVector(ctx, [a, lp(3, {})])
        assert head + verschiebung_shift(b, 1, ctx) == WittVector(ctx, [a, b])
        with pytest.raises(DomainError):
            verschiebung_shift(b, 2, ctx)

    def test_frobenius_needs_characteristic_p(self):
        ctx = get_context(2, 1)
        with pytest.raises(DomainError):
            frobenius_witt(WittVector(ctx, [1, 2]))

    def test_teichmuller_multiplicative(self):
        """[x]·[y] = [xy]."""
        ctx = get_context(2, 1)
        x, y = lp(2, {-1: 1, 0: 1}), lp(2, {2: 1})
        assert teichmuller(x, ctx) * teichmuller(y, ctx) == teichmuller(x * y, ctx)


# ==================== Valuation and filtration ====================


class TestVWitt:
    """Тесты для v_witt и fil_n."""

    def test_weights(self):
        """v_witt(t^{-1}, 0) = −2 при p = 2, m = 1."""
        ctx = get_context(2, 1)
        a = WittVector(ctx, [lp(2, {-1: 1}), lp(2, {})])
        assert v_witt(a) == -2

    def test_last_slot_unweighted(self):
        ctx = get_context(3, 1)
        a = WittVector(ctx, [lp(3, {}), lp(3, {-5: 1})])
        assert v_witt(a) == -5

    def test_zero_vector(self):
        ctx = get_context(3, 1)
        assert v_witt(WittVector(ctx, [lp(3, {}), lp(3, {})])) == INFINITY

    def test_in_fil(self):
        ctx = get_context(2, 1)
        a = WittVector(ctx, [lp(2, {-1: 1}), lp(2, {-1: 1})])
        assert in_fil(a, 2)
        assert not in_fil(a, 1)


# ==================== Cache ====================


class TestCache:
    """Тесты для файлового кэша универсальных многочленов."""

    def test_build_writes_file(self, fresh_cache):
        path = build_cache(2, 1, fresh_cache)
        assert path == cache_path(2, 1, fresh_cache)
        header = path.read_text(encoding="utf-8").splitlines()[0]
        assert header.startswith("wittlab-universal v1 p=2 m=1 sha256=")

    def test_round_trip_through_file(self, fresh_cache):
        built = build_cache(3, 1, fresh_cache)
        reset_registry()
        loaded = load_context(3, 1, fresh_cache)
        assert built.exists()
        assert loaded.sum_polys == witt_universal_polys(3, 1).sum_polys

    def test_get_context_writes_on_miss(self, fresh_cache):
        get_context(5, 0, cache_dir=fresh_cache)
        assert cache_path(5, 0, fresh_cache).exists()

    def test_checksum_mismatch(self, fresh_cache):
        """Изменённое тело файла даёт CacheCorruptError с подсказкой."""
        path = build_cache(2, 1, fresh_cache)
        lines = path.read_text(encoding="utf-8").splitlines()
        lines[1] = lines[1].replace(",1]", ",3]", 1)
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        reset_registry()
        with pytest.raises(CacheCorruptError, match="cache clear"):
            get_context(2, 1, cache_dir=fresh_cache)

    def test_bad_header(self, fresh_cache):
        path = cache_path(2, 0, fresh_cache)
        path.write_text("not a cache\n", encoding="utf-8")
        with pytest.raises(CacheCorruptError):
            load_context(2, 0, fresh_cache)

    def test_non_numeric_slot_is_corrupt(self):
        """Номер многочлена не число: CacheCorruptError даже при верной сумме."""
        header, *body = serialize_context(witt_universal_polys(2, 1)).splitlines()
        body[0] = body[0].replace("S 0 ", "S x ", 1)
        digest = hashlib.sha256("\n".join(body).encode("utf-8")).hexdigest()
        header = header.rsplit("=", 1)[0] + "=" + digest
        with pytest.raises(CacheCorruptError, match="line 2"):
            parse_context("\n".join([header, *body]))

    def test_inspect_missing(self, fresh_cache):
        summary = inspect_cache(2, 1, fresh_cache)
        assert summary["exists"] is False
        assert summary["polys"] == []

    def test_inspect(self, fresh_cache):
        build_cache(2, 1, fresh_cache)
        summary = inspect_cache(2, 1, fresh_cache)
        rows = {(r["kind"], r["n"]): r for r in summary["polys"]}
        assert rows[("S", 1)]["poly"] == "X1 + Y1 - X0*Y0"
        assert rows[("S", 1)]["terms"] == 3
        assert rows[("S", 1)]["degree"] == 2

    def test_clear(self, fresh_cache):
        build_cache(2, 0, fresh_cache)
        build_cache(3, 0, fresh_cache)
        (fresh_cache / "notes.txt").write_text("keep", encoding="utf-8")
        assert clear_cache(fresh_cache) == 2
        assert (fresh_cache / "notes.txt").exists()
        assert not cache_path(2, 0, fresh_cache).exists()
