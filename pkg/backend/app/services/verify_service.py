"""
Verify Service — наборы проверок команды verify.

Каждый набор — сетка независимых случаев. Случай получает собственный
random.Random, засеянный строкой "<seed>:<suite>:<ключ>", поэтому результат
не зависит ни от порядка исполнения, ни от числа потоков. Строки отчёта
собираются в порядке ключей.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import ceil
from pathlib import Path
from typing import Any, Callable, Optional

from app.core.algebra.valuation import INFINITY, valuation_to_json
from app.core.exceptions import InternalConsistencyError, WittLabException
from app.core.logging import get_logger
from app.core.settings import settings
from app.core.swan import (
    char_from_witt,
    fmd,
    in_fil_form,
    reduce_representative,
    replay,
    swan_conductor,
    v_log,
    v_log_local,
)
from app.core.swan.conductor import SwanCertificate
from app.core.sympow import (
    ProductChart,
    SymmetricChart,
    anbasis_check,
    blprod_swan,
    dprod_decompose,
    lambda_pushforward,
    mu_fil_check,
    mu_pushforward,
    sympow_swan,
    v_log_exceptional,
    v_witt_exceptional,
)
from app.core.witt import (
    WittVector,
    frobenius_witt,
    get_context,
    ghost_components,
    in_fil,
    v_witt,
    witt_add,
    witt_mul,
    witt_sub,
)
from app.schemas.contracts.report import (
    ReportHeader,
    ReportRow,
    ReportSummary,
    VerificationReport,
    summarize,
)
from app.schemas.enums import CaseStatus, Suite
from app.schemas.run_config import RunConfig

from .sampling import (
    conductor_achievable,
    minimal_length,
    random_form_with_level,
    random_integer_witt,
    random_product_poly,
    random_reduced_alpha,
    random_witt,
)

logger = get_logger(__name__)

GHOST_PAIRS = 200
FMD_PAIRS = 100
PERTURBATIONS = 20
COR_WITT2_MIN_CHARACTERS = 50
COR_WITT2_MAX_N = 7
COR_WITT2_MIN_RATIO = 0.9
BLPROD_MAX_N = 5
MU_FORMS_PER_LEVEL = 5
DPROD_SAMPLES = 10
ANBASIS_J = range(-2, 3)

CaseFn = Callable[[random.Random], list[ReportRow]]


# ==================== Случаи ====================


@dataclass(frozen=True)
class Case:
    """Один независимый случай набора."""

    suite: Suite
    key: tuple
    run: CaseFn

    @property
    def label(self) -> str:
        return " ".join(str(k) for k in self.key)

    def rng(self, seed: int) -> random.Random:
        return random.Random(f"{seed}:{self.suite.value}:{':'.join(map(str, self.key))}")


def _row(
    suite: Suite,
    case: str,
    expected: Any,
    computed: Any,
    ok: bool,
    certified: Optional[bool] = None,
) -> ReportRow:
    return ReportRow(
        suite=suite.value,
        case=case,
        expected=expected,
        computed=computed,
        certified=certified,
        status=CaseStatus.PASS if ok else CaseStatus.FAIL,
    )


def _certified_row(
    suite: Suite, case: str, expected: int, cert: SwanCertificate, upstream_ok: bool = True
) -> ReportRow:
    """
    Строка для значения с сертификатом.

    Подтверждённое значение обязано совпасть с ожидаемым; неподтверждённое
    даёт UNCERTIFIED, если ожидаемое лежит в границах, и FAIL иначе.
    """
    certified = cert.certified and upstream_ok
    if certified:
        status = CaseStatus.PASS if cert.n == expected else CaseStatus.FAIL
    else:
        lower, upper = cert.bounds
        status = CaseStatus.UNCERTIFIED if lower <= expected <= upper else CaseStatus.FAIL
    return ReportRow(
        suite=suite.value,
        case=case,
        expected=expected,
        computed=cert.n if cert.certified else list(cert.bounds),
        certified=certified,
        status=status,
    )


def _lengths(config: RunConfig, cap: Optional[int] = None) -> range:
    top = config.m if cap is None else min(config.m, cap)
    return range(top + 1)


# ==================== witt-ring ====================


def _ghost_case(p: int, m: int, cache_dir: Optional[Path]) -> CaseFn:
    def run(rng: random.Random) -> list[ReportRow]:
        ctx = get_context(p, m, cache_dir=cache_dir)
        good = 0
        for _ in range(GHOST_PAIRS):
            a, b = random_integer_witt(ctx, rng), random_integer_witt(ctx, rng)
            ga, gb = ghost_components(a), ghost_components(b)
            if (
                ghost_components(witt_add(a, b)) == tuple(x + y for x, y in zip(ga, gb))
                and ghost_components(witt_mul(a, b)) == tuple(x * y for x, y in zip(ga, gb))
                and ghost_components(-a) == tuple(-x for x in ga)
            ):
                good += 1
        return [_row(Suite.WITT_RING, f"ghost p={p} m={m}", GHOST_PAIRS, good, good == GHOST_PAIRS)]

    return run


def _ring_axioms_case(p: int, m: int, cache_dir: Optional[Path]) -> CaseFn:
    samples = 10 if m < 2 else 4

    def run(rng: random.Random) -> list[ReportRow]:
        ctx = get_context(p, m, cache_dir=cache_dir)
        ring_ok = frob_ok = 0
        for _ in range(samples):
            a, b, c = (random_witt(ctx, rng, -2, 1) for _ in range(3))
            zero = WittVector.zero_like(ctx, a.components[0])
            if (
                a + b == b + a
                and a * b == b * a
                and (a + b) + c == a + (b + c)
                and (a * b) * c == a * (b * c)
                and a * (b + c) == a * b + a * c
                and witt_sub(a, a) == zero
            ):
                ring_ok += 1
            fa, fb = frobenius_witt(a), frobenius_witt(b)
            if frobenius_witt(a + b) == fa + fb and frobenius_witt(a * b) == fa * fb:
                frob_ok += 1
        return [
            _row(Suite.WITT_RING, f"axioms p={p} m={m}", samples, ring_ok, ring_ok == samples),
            _row(Suite.WITT_RING, f"frobenius p={p} m={m}", samples, frob_ok, frob_ok == samples),
        ]

    return run


def _witt_ring_cases(config: RunConfig) -> list[Case]:
    cases = []
    for p in config.p_list:
        for m in _lengths(config):
            ghost = _ghost_case(p, m, config.cache_dir)
            ring = _ring_axioms_case(p, m, config.cache_dir)
            cases.append(Case(Suite.WITT_RING, (p, m, "ghost"), ghost))
            cases.append(Case(Suite.WITT_RING, (p, m, "ring"), ring))
    return cases


# ==================== fmd-hom ====================


def _fmd_case(p: int, m: int, cache_dir: Optional[Path]) -> CaseFn:
    def run(rng: random.Random) -> list[ReportRow]:
        ctx = get_context(p, m, cache_dir=cache_dir)
        additive = filtered = 0
        for _ in range(FMD_PAIRS):
            a, b = random_witt(ctx, rng), random_witt(ctx, rng)
            if fmd(witt_add(a, b)) == fmd(a) + fmd(b):
                additive += 1
            if all(v_witt(x) <= v_log_local(fmd(x)) for x in (a, b)):
                filtered += 1
        return [
            _row(
                Suite.FMD_HOM, f"additive p={p} m={m}", FMD_PAIRS, additive, additive == FMD_PAIRS
            ),
            _row(
                Suite.FMD_HOM, f"filtration p={p} m={m}", FMD_PAIRS, filtered, filtered == FMD_PAIRS
            ),
        ]

    return run


def _perturbation_case(p: int, m: int, cache_dir: Optional[Path]) -> CaseFn:
    """Кондуктор не меняется при α ↦ α ⊞ (F−1)β; приведение воспроизводимо."""

    def run(rng: random.Random) -> list[ReportRow]:
        ctx = get_context(p, m, cache_dir=cache_dir)
        agree = replayed = monotone = 0
        all_certified = True
        for _ in range(PERTURBATIONS):
            alpha, beta = random_witt(ctx, rng), random_witt(ctx, rng, -2, 1)
            moved = witt_add(alpha, witt_sub(frobenius_witt(beta), beta))
            first = swan_conductor(char_from_witt(alpha))
            second = swan_conductor(char_from_witt(moved))
            all_certified = all_certified and first.certified and second.certified
            if first.n == second.n:
                agree += 1
            reduced, history = reduce_representative(moved)
            if replay(reduced, history) == moved:
                replayed += 1
            n = first.n
            if not first.certified or (
                in_fil(first.reduced, n) and (n == 0 or not in_fil(first.reduced, n - 1))
            ):
                monotone += 1
        status = CaseStatus.PASS
        if agree != PERTURBATIONS:
            status = CaseStatus.UNCERTIFIED if not all_certified else CaseStatus.FAIL
        return [
            ReportRow(
                suite=Suite.FMD_HOM.value,
                case=f"well-defined p={p} m={m}",
                expected=PERTURBATIONS,
                computed=agree,
                certified=all_certified,
                status=status,
            ),
            _row(
                Suite.FMD_HOM,
                f"replay p={p} m={m}",
                PERTURBATIONS,
                replayed,
                replayed == PERTURBATIONS,
            ),
            _row(
                Suite.FMD_HOM,
                f"monotone p={p} m={m}",
                PERTURBATIONS,
                monotone,
                monotone == PERTURBATIONS,
            ),
        ]

    return run


def _fmd_hom_cases(config: RunConfig) -> list[Case]:
    cases = []
    for p in config.p_list:
        for m in _lengths(config):
            perturb = _perturbation_case(p, m, config.cache_dir)
            cases.append(Case(Suite.FMD_HOM, (p, m, "fmd"), _fmd_case(p, m, config.cache_dir)))
            cases.append(Case(Suite.FMD_HOM, (p, m, "perturb"), perturb))
    return cases


# ==================== thm-witt ====================


def _lambda_case(
    p: int, d: int, m: int, max_sw: int, cache_dir: Optional[Path]
) -> CaseFn:
    """v_{R'}(λα) >= −⌊n/d⌋ на приведённых α с v_witt = −n; аддитивность λ."""
    samples = 100 if m == 0 else 20
    levels = [n for n in range(1, max_sw + 1) if conductor_achievable(n, p, m)]

    def run(rng: random.Random) -> list[ReportRow]:
        ctx = get_context(p, m, cache_dir=cache_dir)
        chart = SymmetricChart(p, m, d)
        case = f"lambda p={p} d={d} m={m}"
        if not levels:
            return [_row(Suite.THM_WITT, case, 0, 0, True)]
        violations = 0
        for _ in range(samples):
            n = rng.choice(levels)
            alpha = random_reduced_alpha(ctx, n, rng)
            if v_witt_exceptional(lambda_pushforward(alpha, chart)) < -(n // d):
                violations += 1
        additive = 0
        for _ in range(3):
            a = random_reduced_alpha(ctx, rng.choice(levels), rng)
            b = random_reduced_alpha(ctx, rng.choice(levels), rng)
            lam_ab = lambda_pushforward(witt_add(a, b), chart)
            if lam_ab == witt_add(lambda_pushforward(a, chart), lambda_pushforward(b, chart)):
                additive += 1
        return [
            _row(Suite.THM_WITT, case, 0, violations, violations == 0),
            _row(Suite.THM_WITT, f"lambda-additive p={p} d={d} m={m}", 3, additive, additive == 3),
        ]

    return run


def _mu_case(p: int, d: int, e: int) -> CaseFn:
    """
    Форма уровня e: при jd < e < (j+1)d уровень μω равен −j; при d | e строка
    только наблюдается. Вложение fil_e в fil_{⌊e/d⌋} проверяется для всех e.
    """

    def run(rng: random.Random) -> list[ReportRow]:
        chart = SymmetricChart(p, 0, d)
        expected = -(e // d)
        computed, fil_ok = [], 0
        for _ in range(MU_FORMS_PER_LEVEL):
            omega = random_form_with_level(p, e, rng)
            computed.append(valuation_to_json(v_log_exceptional(mu_pushforward(omega, chart))))
            ok, _ = mu_fil_check(omega, chart)
            fil_ok += ok
        level_row = _row(
            Suite.THM_WITT,
            f"mu-level p={p} d={d} e={e}",
            expected,
            computed,
            all(v == expected for v in computed),
        )
        if e % d == 0:
            level_row.status = CaseStatus.OBSERVED
        fil_row = _row(
            Suite.THM_WITT,
            f"mu-fil p={p} d={d} e={e}",
            MU_FORMS_PER_LEVEL,
            fil_ok,
            fil_ok == MU_FORMS_PER_LEVEL,
        )
        return [level_row, fil_row]

    return run


def _thm_witt_cases(config: RunConfig) -> list[Case]:
    cases = []
    for p in config.p_list:
        for d in config.d_list:
            for m in _lengths(config):
                run = _lambda_case(p, d, m, config.max_sw, config.cache_dir)
                cases.append(Case(Suite.THM_WITT, (p, d, m, "lambda"), run))
            for e in range(1, config.max_sw + 1):
                cases.append(Case(Suite.THM_WITT, (p, d, e, "mu"), _mu_case(p, d, e)))
    return cases


# ==================== cor-witt2 ====================


def _sympow_case(
    p: int, d: int, n: int, s: int, cache_dir: Optional[Path]
) -> CaseFn:
    m = minimal_length(n, p)

    def run(rng: random.Random) -> list[ReportRow]:
        ctx = get_context(p, m, cache_dir=cache_dir)
        chart = SymmetricChart(p, m, d)
        alpha = random_reduced_alpha(ctx, n, rng)
        cert = sympow_swan(char_from_witt(alpha), chart)
        upstream_ok = cert.upstairs.certified and cert.upstairs.n == n
        return [
            _certified_row(
                Suite.COR_WITT2,
                f"p={p} d={d} n={n} m={m} #{s}",
                n // d,
                cert.exceptional,
                upstream_ok,
            )
        ]

    return run


def _cor_witt2_cases(config: RunConfig) -> list[Case]:
    grid = [
        (p, d, n)
        for p in config.p_list
        for d in config.d_list
        for n in range(min(COR_WITT2_MAX_N, config.max_sw) + 1)
        if minimal_length(n, p) + 1 <= settings.max_witt_length
    ]
    per_case = max(1, ceil(COR_WITT2_MIN_CHARACTERS / max(1, len(grid))))
    return [
        Case(Suite.COR_WITT2, (p, d, n, s), _sympow_case(p, d, n, s, config.cache_dir))
        for p, d, n in grid
        for s in range(per_case)
    ]


def _cor_witt2_summary(summary: ReportSummary, rows: list[ReportRow]) -> None:
    """Доля сертифицированных случаев не ниже порога."""
    ratio = sum(1 for r in rows if r.certified) / len(rows) if rows else 1.0
    summary.extra["certified_ratio"] = round(ratio, 4)
    if ratio < COR_WITT2_MIN_RATIO:
        summary.status = CaseStatus.FAIL


# ==================== anbasis ====================


def _anbasis_case(p: int, d: int, j: int) -> CaseFn:
    def run(rng: random.Random) -> list[ReportRow]:
        report = anbasis_check(SymmetricChart(p, 0, d), j)
        data = report.to_dict()
        return [
            _row(
                Suite.ANBASIS,
                f"p={p} d={d} j={j}",
                {"status": "PASS", "det_valuation": 0},
                {"status": data["status"], "det_valuation": data["det_valuation"]},
                report.passed,
            )
        ]

    return run


def _anbasis_cases(config: RunConfig) -> list[Case]:
    return [
        Case(Suite.ANBASIS, (p, d, j), _anbasis_case(p, d, j))
        for p in config.p_list
        for d in config.d_list
        for j in ANBASIS_J
    ]


# ==================== blprod ====================


def _blprod_case(
    p: int, m: int, n1: int, n2: int, cache_dir: Optional[Path]
) -> CaseFn:
    def run(rng: random.Random) -> list[ReportRow]:
        ctx = get_context(p, m, cache_dir=cache_dir)
        chi1 = char_from_witt(random_reduced_alpha(ctx, n1, rng))
        chi2 = char_from_witt(random_reduced_alpha(ctx, n2, rng))
        cert = blprod_swan(chi1, chi2)
        upstream_ok = (
            cert.first.certified
            and cert.second.certified
            and (cert.first.n, cert.second.n) == (n1, n2)
        )
        return [
            _certified_row(
                Suite.BLPROD, f"p={p} m={m} n1={n1} n2={n2}", max(n1, n2), cert.joint, upstream_ok
            )
        ]

    return run


def _blprod_cases(config: RunConfig) -> list[Case]:
    top = min(BLPROD_MAX_N, config.max_sw)
    cases = []
    for p in config.p_list:
        for m in _lengths(config, cap=1):
            for n1 in range(top + 1):
                for n2 in range(top + 1):
                    if conductor_achievable(n1, p, m) and conductor_achievable(n2, p, m):
                        run = _blprod_case(p, m, n1, n2, config.cache_dir)
                        cases.append(Case(Suite.BLPROD, (p, m, n1, n2), run))
    return cases


# ==================== dprod ====================


def _dprod_case(p: int, s: int) -> CaseFn:
    def run(rng: random.Random) -> list[ReportRow]:
        chart = ProductChart(p)
        omega = chart.form(random_product_poly(p, rng), random_product_poly(p, rng))
        parts = dprod_decompose(omega)
        v = v_log(omega)
        expected = -INFINITY if v == INFINITY else -v
        ok = parts.recombine() == omega and parts.joint_level == expected
        if expected != -INFINITY:
            ok = ok and in_fil_form(omega, int(expected))
        return [
            _row(
                Suite.DPROD,
                f"p={p} #{s}",
                valuation_to_json(expected),
                valuation_to_json(parts.joint_level),
                ok,
            )
        ]

    return run


def _dprod_cases(config: RunConfig) -> list[Case]:
    return [
        Case(Suite.DPROD, (p, s), _dprod_case(p, s))
        for p in config.p_list
        for s in range(DPROD_SAMPLES)
    ]


# ==================== Запуск ====================

SUITES: dict[Suite, Callable[[RunConfig], list[Case]]] = {
    Suite.WITT_RING: _witt_ring_cases,
    Suite.FMD_HOM: _fmd_hom_cases,
    Suite.THM_WITT: _thm_witt_cases,
    Suite.COR_WITT2: _cor_witt2_cases,
    Suite.ANBASIS: _anbasis_cases,
    Suite.BLPROD: _blprod_cases,
    Suite.DPROD: _dprod_cases,
}


def _execute(case: Case, seed: int) -> list[ReportRow]:
    try:
        return case.run(case.rng(seed))
    except WittLabException as exc:
        if isinstance(exc, InternalConsistencyError):
            logger.exception("case_self_check_failed", suite=case.suite.value, case=case.label)
        else:
            logger.warning(
                "case_failed", suite=case.suite.value, case=case.label, error=exc.message
            )
        return [
            ReportRow(
                suite=case.suite.value,
                case=case.label,
                computed=f"error: {exc.message}",
                status=CaseStatus.FAIL,
            )
        ]


def run_cases(cases: list[Case], seed: int, workers: Optional[int] = None) -> list[ReportRow]:
    """Выполнить случаи (возможно параллельно); строки возвращаются в порядке случаев."""
    workers = workers or settings.verify_workers
    if workers <= 1:
        results = [_execute(c, seed) for c in cases]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: _execute(c, seed), cases))
    return [row for rows in results for row in rows]


def run_suite(suite: Suite, config: RunConfig) -> tuple[list[ReportRow], ReportSummary]:
    started = time.perf_counter()
    cases = sorted(SUITES[suite](config), key=lambda c: c.key)
    rows = run_cases(cases, config.seed)
    summary = summarize(suite.value, rows, strict=config.strict)
    if suite is Suite.COR_WITT2:
        _cor_witt2_summary(summary, rows)
    logger.info(
        "suite_completed",
        suite=suite.value,
        cases=len(cases),
        passed=summary.passed,
        failed=summary.failed,
        uncertified=summary.uncertified,
        elapsed_s=round(time.perf_counter() - started, 3),
    )
    return rows, summary


def verify(suite: Suite, config: RunConfig) -> VerificationReport:
    """
    Прогнать набор (или все наборы) и собрать отчёт.

    Для all итог каждого набора идёт отдельной записью, затем общий итог.
    """
    suites = list(SUITES) if suite is Suite.ALL else [suite]
    header = ReportHeader(suite=suite.value, **config.header())
    report = VerificationReport(header=header)
    for s in suites:
        rows, summary = run_suite(s, config)
        report.rows.extend(rows)
        report.summaries.append(summary)
    if suite is Suite.ALL:
        overall = summarize(Suite.ALL.value, report.rows, strict=config.strict)
        if any(s.status == CaseStatus.FAIL for s in report.summaries):
            overall.status = CaseStatus.FAIL
        report.summaries.append(overall)
    return report
