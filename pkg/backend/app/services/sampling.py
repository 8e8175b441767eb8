"""
Случайные представители для прогонов verify и тестов.

Все генераторы принимают random.Random, поэтому результат определяется
строкой seed и не зависит от порядка исполнения.
"""

from __future__ import annotations

import random
from typing import Optional

from app.core.algebra import LaurentPoly, MultiLaurentPoly
from app.core.swan.differential import LogDifferential, dlog_form
from app.core.witt.universal import WittContext
from app.core.witt.vector import WittVector


def p_adic_valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("v_p(0) is infinite")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def conductor_achievable(n: int, p: int, m: int) -> bool:
    """Есть ли приведённый α ∈ W_{m+1} с v_witt(α) = −n: n = 0 или v_p(n) <= m."""
    return n == 0 or p_adic_valuation(n, p) <= m


def minimal_length(n: int, p: int) -> int:
    """Наименьшее m, при котором уровень n достижим."""
    return 0 if n == 0 else p_adic_valuation(n, p)


def random_laurent(
    p: int, rng: random.Random, low: int, high: int, density: float = 0.5
) -> LaurentPoly:
    """Случайный многочлен с показателями в [low, high]."""
    terms = {e: rng.randrange(1, p) for e in range(low, high + 1) if rng.random() < density}
    return LaurentPoly(p, terms)


def random_witt(ctx: WittContext, rng: random.Random, low: int = -3, high: int = 2) -> WittVector:
    """Произвольный (не обязательно приведённый) вектор над F_p[t, 1/t]."""
    return WittVector(ctx, (random_laurent(ctx.p, rng, low, high, 0.4) for _ in range(ctx.length)))


def random_integer_witt(ctx: WittContext, rng: random.Random, bound: int = 6) -> WittVector:
    return WittVector(ctx, (rng.randint(-bound, bound) for _ in range(ctx.length)))


def _prime_to_p_poles(p: int, limit: int) -> list[int]:
    """Положительные e < limit, не делящиеся на p."""
    return [e for e in range(1, limit) if e % p]


def random_reduced_alpha(
    ctx: WittContext, n: int, rng: random.Random, extra_poles: bool = True
) -> Optional[WittVector]:
    """
    Случайный приведённый α с v_witt(α) = −n или None, если уровень недостижим.

    Ведущий полюс c·t^{-e*} стоит в слоте i* = m − v_p(n), e* = n / p^{v_p(n)};
    остальные полюса имеют показатели, взаимно простые с p, и строго меньший
    вес p^{m−i}·e. Регулярная часть — только константы.
    """
    p, m = ctx.p, ctx.m
    if not conductor_achievable(n, p, m):
        return None
    components = []
    lead_slot = None
    lead_exp = 0
    if n:
        k = p_adic_valuation(n, p)
        lead_slot = m - k
        lead_exp = n // p**k
    for i in range(ctx.length):
        terms: dict[int, int] = {}
        if rng.random() < 0.5:
            terms[0] = rng.randrange(1, p)
        weight = p ** (m - i)
        if i == lead_slot:
            terms[-lead_exp] = rng.randrange(1, p)
        if extra_poles and n:
            # Полюса строго меньшего веса, чем n
            candidates = [e for e in _prime_to_p_poles(p, n + 1) if weight * e < n]
            if candidates and rng.random() < 0.6:
                terms[-rng.choice(candidates)] = rng.randrange(1, p)
        components.append(LaurentPoly(p, terms))
    return WittVector(ctx, components)


def random_form_with_level(p: int, e: int, rng: random.Random, tail: int = 3) -> LogDifferential:
    """c·dlog t с v^log = −e: ведущий член t^{-e} и случайный хвост выше."""
    terms = {-e: rng.randrange(1, p)}
    for k in range(-e + 1, -e + 1 + tail):
        if rng.random() < 0.5:
            terms[k] = rng.randrange(1, p)
    return dlog_form(LaurentPoly(p, terms))


def random_product_poly(
    p: int, rng: random.Random, low: int = -4, high: int = 3
) -> MultiLaurentPoly:
    """Случайный многочлен Лорана от x, y с мономиальными знаменателями."""
    terms = {}
    for _ in range(rng.randint(0, 4)):
        terms[(rng.randint(low, high), rng.randint(low, high))] = rng.randrange(1, p)
    return MultiLaurentPoly(p, ("x", "y"), terms)
