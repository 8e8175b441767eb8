"""
Универсальные многочлены Витта.

S_n, P_n, N_n определяются рекурсивно из гост-уравнений
    w_n(S) = w_n(X) + w_n(Y),  w_n(P) = w_n(X)·w_n(Y),  w_n(N) = −w_n(X),
где w_n(x) = Σ_{i<=n} p^i x_i^{p^{n-i}}. Решение строится в кольце sympy
Z[X_0..X_m, Y_0..Y_m]; каждое деление на p^n проверяется на точность.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from app.core.algebra import check_prime
from app.core.exceptions import DomainError, InternalConsistencyError
from app.core.logging import get_logger
from app.core.settings import settings
from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

logger = get_logger(__name__)

Exponents = tuple[int, ...]
KINDS = ("S", "P", "N")


def witt_variable_names(m: int) -> tuple[str, ...]:
    return tuple(f"X{i}" for i in range(m + 1)) + tuple(f"Y{i}" for i in range(m + 1))


def ghost(p: int, components: Sequence[int]) -> tuple[int, ...]:
    """Гост-компоненты целочисленного вектора: w_n = Σ p^i a_i^{p^{n-i}}."""
    return tuple(
        sum(p**i * components[i] ** (p ** (n - i)) for i in range(n + 1))
        for n in range(len(components))
    )


@dataclass(frozen=True)
class UniversalPoly:
    """
    Многочлен с целыми коэффициентами от X_0..X_m, Y_0..Y_m.

    terms отсортированы по показателям; это и есть формат кэша.
    """

    terms: tuple[tuple[Exponents, int], ...]
    nvars: int

    @classmethod
    def from_sympy(cls, poly, nvars: int) -> "UniversalPoly":
        return cls(tuple(sorted((tuple(e), int(c)) for e, c in poly.items())), nvars)

    def to_pairs(self) -> list[list]:
        return [[list(e), c] for e, c in self.terms]

    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    def evaluate(self, values: Sequence[Any]) -> Any:
        """
        Подставить значения из любого коммутативного кольца.

        Если у значений есть характеристика p, коэффициенты берутся по модулю p,
        а слагаемые с нулевыми множителями пропускаются.
        """
        if len(values) != self.nvars:
            raise DomainError(f"Expected {self.nvars} values, got {len(values)}")
        sample = values[0]
        zero = sample * 0
        char = getattr(sample, "characteristic", 0)
        is_zero = [not v for v in values]
        powers: list[dict[int, Any]] = [{} for _ in values]

        def power(i: int, k: int) -> Any:
            cache = powers[i]
            if k not in cache:
                cache[k] = values[i] ** k
            return cache[k]

        acc = zero
        for exps, c in self.terms:
            if char:
                c %= char
                if not c:
                    continue
            if any(k and is_zero[i] for i, k in enumerate(exps)):
                continue
            term = None
            for i, k in enumerate(exps):
                if k:
                    term = power(i, k) if term is None else term * power(i, k)
            acc = acc + (zero + c if term is None else term * c)
        return acc

    def pretty(self, variables: Sequence[str]) -> str:
        """Многочлен в виде "X1 + Y1 - X0*Y0": по степени, затем показатели по убыванию."""
        ordered = sorted(self.terms, key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))
        chunks: list[str] = []
        for exps, c in ordered:
            factors = [
                name if k == 1 else f"{name}^{k}" for name, k in zip(variables, exps) if k
            ]
            mono = "*".join(factors)
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            if not chunks:
                chunks.append(f"-{body}" if c < 0 else body)
            else:
                chunks.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(chunks) if chunks else "0"


@dataclass(frozen=True)
class WittContext:
    """
    Универсальные многочлены W_{m+1} для простого p.

    После построения объект неизменяем и разделяется между потоками.
    """

    p: int
    m: int
    sum_polys: tuple[UniversalPoly, ...]
    prod_polys: tuple[UniversalPoly, ...]
    neg_polys: tuple[UniversalPoly, ...]
    variables: tuple[str, ...] = field(default=())

    @property
    def length(self) -> int:
        return self.m + 1

    def polys(self, kind: str) -> tuple[UniversalPoly, ...]:
        return {"S": self.sum_polys, "P": self.prod_polys, "N": self.neg_polys}[kind]

    def key(self) -> tuple[int, int]:
        return (self.p, self.m)


def check_witt_length(m: int) -> None:
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m}", details={"m": m})
    if m + 1 > settings.max_witt_length:
        raise DomainError(
            f"Witt length m+1={m + 1} exceeds the configured cap {settings.max_witt_length}",
            details={"m": m, "max_witt_length": settings.max_witt_length},
        )


def _solve(p: int, m: int, targets: list, label: str) -> list:
    """Z_n = (G_n − Σ_{i<n} p^i Z_i^{p^{n-i}}) / p^n с проверкой точности."""
    solved: list = []
    for n in range(m + 1):
        rest = targets[n]
        for i in range(n):
            rest = rest - solved[i] ** (p ** (n - i)) * (p**i)
        modulus = p**n
        bad = [c for c in rest.coeffs() if c % modulus]
        if bad:
            raise InternalConsistencyError(
                f"Ghost equation for {label}_{n} is not divisible by p^{n}",
                details={"p": p, "m": m, "kind": label, "n": n},
            )
        solved.append(rest.quo_ground(modulus))
    return solved


def witt_universal_polys(p: int, m: int) -> WittContext:
    """
    Построить S_n, P_n, N_n для W_{m+1}.

    Raises:
        DomainError: p не поддерживается или m+1 больше допустимого
        InternalConsistencyError: неточное деление в гост-уравнениях
    """
    check_prime(p)
    check_witt_length(m)
    names = witt_variable_names(m)
    R, *gens = ring(",".join(names), ZZ)
    xs, ys = gens[: m + 1], gens[m + 1 :]

    def ghost_poly(vs: list, n: int):
        return sum((vs[i] ** (p ** (n - i)) * (p**i) for i in range(n + 1)), R.zero)

    gx = [ghost_poly(xs, n) for n in range(m + 1)]
    gy = [ghost_poly(ys, n) for n in range(m + 1)]

    sums = _solve(p, m, [a + b for a, b in zip(gx, gy)], "S")
    prods = _solve(p, m, [a * b for a, b in zip(gx, gy)], "P")
    negs = _solve(p, m, [-a for a in gx], "N")

    nvars = len(names)
    ctx = WittContext(
        p=p,
        m=m,
        sum_polys=tuple(UniversalPoly.from_sympy(f, nvars) for f in sums),
        prod_polys=tuple(UniversalPoly.from_sympy(f, nvars) for f in prods),
        neg_polys=tuple(UniversalPoly.from_sympy(f, nvars) for f in negs),
        variables=names,
    )
    logger.debug(
        "witt_context_built",
        p=p,
        m=m,
        terms={k: [len(f.terms) for f in ctx.polys(k)] for k in KINDS},
    )
    return ctx


def spot_check(ctx: WittContext, samples: int = 8, seed: int = 0) -> bool:
    """Проверить гост-тождества на фиксированных целых векторах."""
    rng = random.Random(f"spot:{ctx.p}:{ctx.m}:{seed}")
    n = ctx.length
    zeros = [0] * n
    checks: list[tuple[str, Callable[[int, int], int]]] = [
        ("S", lambda a, b: a + b),
        ("P", lambda a, b: a * b),
    ]
    for _ in range(samples):
        x = [rng.randint(-3, 3) for _ in range(n)]
        y = [rng.randint(-3, 3) for _ in range(n)]
        gx, gy = ghost(ctx.p, x), ghost(ctx.p, y)
        for kind, op in checks:
            out = [f.evaluate(x + y) for f in ctx.polys(kind)]
            if list(ghost(ctx.p, out)) != [op(a, b) for a, b in zip(gx, gy)]:
                return False
        neg = [f.evaluate(x + zeros) for f in ctx.neg_polys]
        if list(ghost(ctx.p, neg)) != [-a for a in gx]:
            return False
    return True
