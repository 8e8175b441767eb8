"""
Тесты для контрактов данных CLI.

Проверяют:
- Разбор полиномиальных аргументов и позиции ошибок
- Проверку RunConfig
- Записи отчёта verify и итоги
"""

import json

import pytest
from app.core.algebra import LaurentPoly, MultiLaurentPoly
from app.core.exceptions import InvalidInput, PayloadParseError
from app.core.settings import settings
from app.core.witt import get_context
from app.schemas import CaseStatus, OutputFormat, RunConfig
from app.schemas.contracts import (
    ReportHeader,
    ReportRow,
    VerificationReport,
    parse_multi_poly,
    parse_poly,
    parse_witt,
    summarize,
)

# ==================== Payload ====================


class TestPayload:
    """Тесты для разбора многочленов и векторов Витта."""

    def test_parse_poly(self):
        assert parse_poly("[[-3,1],[2,4]]", 5) == LaurentPoly(5, {-3: 1, 2: 4})

    def test_parse_poly_reduces_mod_p(self):
        assert parse_poly("[[0,3],[1,2],[1,1]]", 3).is_zero()

    def test_parse_empty_poly(self):
        assert parse_poly("[]", 2).is_zero()

    def test_malformed_json_position(self):
        with pytest.raises(PayloadParseError) as info:
            parse_poly("[[-3,1],", 2)
        assert info.value.position is not None

    def test_wrong_structure_path(self):
        """Строка вместо числа: путь к элементу."""
        with pytest.raises(PayloadParseError) as info:
            parse_poly('[[-3,1],[2,"x"]]', 2)
        assert info.value.path == "[1][1]"

    def test_float_rejected(self):
        with pytest.raises(PayloadParseError):
            parse_poly("[[1.5,1]]", 2)

    def test_parse_multi_poly(self):
        f = parse_multi_poly("[[[1,1],2],[[0,-1],1]]", 3, ("x", "y"))
        assert f == MultiLaurentPoly(3, ("x", "y"), {(1, 1): 2, (0, -1): 1})

    def test_multi_exponent_length(self):
        with pytest.raises(PayloadParseError) as info:
            parse_multi_poly("[[[1,1,1],2]]", 3, ("x", "y"))
        assert info.value.path == "[0][0]"

    def test_parse_witt(self):
        ctx = get_context(2, 1)
        alpha = parse_witt("[[[-3,1]],[]]", ctx)
        assert alpha.components == (LaurentPoly(2, {-3: 1}), LaurentPoly(2, {}))

    def test_witt_component_count(self):
        ctx = get_context(2, 1)
        with pytest.raises(PayloadParseError, match="Expected 2 components"):
            parse_witt("[[[-3,1]]]", ctx)

    def test_payload_error_is_input_error(self):
        """PayloadParseError завершает команду кодом 1."""
        assert issubclass(PayloadParseError, InvalidInput)
        assert PayloadParseError("x").exit_code == 1


# ==================== RunConfig ====================


class TestRunConfig:
    """Тесты для параметров запуска."""

    def test_defaults(self):
        config = RunConfig.build()
        assert config.p_list == [2, 3]
        assert config.d_list == [2, 3]
        assert config.m == 0
        assert config.seed == settings.default_seed
        assert config.format == OutputFormat.JSON
        assert config.cache_dir == settings.cache_dir

    def test_comma_lists(self):
        config = RunConfig.build(p_list="5,2,5", d_list="3")
        assert config.p_list == [2, 5]
        assert config.p == 2
        assert config.d == 3

    def test_none_values_ignored(self):
        config = RunConfig.build(m=None, seed=7)
        assert config.m == 0
        assert config.seed == 7

    @pytest.mark.parametrize(
        "values",
        [
            {"p_list": "4"},
            {"p_list": "2,x"},
            {"d_list": "1"},
            {"d_list": "9"},
            {"m": -1},
            {"m": 10},
            {"max_sw": -2},
        ],
    )
    def test_invalid(self, values):
        with pytest.raises(InvalidInput):
            RunConfig.build(**values)

    def test_error_names_field(self):
        with pytest.raises(InvalidInput) as info:
            RunConfig.build(p_list="4")
        assert info.value.details["field"] == "p_list"

    def test_frozen(self):
        config = RunConfig.build()
        with pytest.raises(Exception):
            config.m = 2

    def test_header(self):
        header = RunConfig.build(p_list="3", d_list="2", seed=11, max_sw=5).header()
        assert header == {"seed": 11, "p": [3], "m": 0, "d": [2], "max_sw": 5, "strict": False}


# ==================== Report ====================


def _row(case: str, status: CaseStatus) -> ReportRow:
    return ReportRow(suite="anbasis", case=case, expected=0, computed=0, status=status)


class TestReport:
    """Тесты для записей отчёта."""

    def test_summarize_counts(self):
        rows = [
            _row("a", CaseStatus.PASS),
            _row("b", CaseStatus.UNCERTIFIED),
            _row("c", CaseStatus.OBSERVED),
        ]
        summary = summarize("anbasis", rows)
        assert (summary.total, summary.passed, summary.uncertified, summary.observed) == (
            3,
            1,
            1,
            1,
        )
        assert summary.status == CaseStatus.PASS

    def test_strict_fails_uncertified(self):
        rows = [_row("a", CaseStatus.UNCERTIFIED)]
        assert summarize("anbasis", rows, strict=True).status == CaseStatus.FAIL

    def test_fail_row_fails_summary(self):
        rows = [_row("a", CaseStatus.PASS), _row("b", CaseStatus.FAIL)]
        assert summarize("anbasis", rows).status == CaseStatus.FAIL

    def test_render_json_lines(self):
        header = ReportHeader(suite="anbasis", seed=1, p=[2], m=0, d=[2], max_sw=8)
        rows = [_row("p=2:d=2:j=0", CaseStatus.PASS)]
        summaries = [summarize("anbasis", rows)]
        report = VerificationReport(header=header, rows=rows, summaries=summaries)
        records = [json.loads(line) for line in report.render_json().splitlines()]
        assert [r["record"] for r in records] == ["header", "case", "summary"]
        assert records[1]["status"] == "PASS"
        assert report.passed

    def test_render_table(self):
        header = ReportHeader(suite="anbasis", seed=1, p=[2], m=0, d=[2], max_sw=8)
        rows = [_row("p=2:d=2:j=0", CaseStatus.PASS)]
        summaries = [summarize("anbasis", rows)]
        report = VerificationReport(header=header, rows=rows, summaries=summaries)
        lines = report.render(OutputFormat.TABLE).splitlines()
        assert lines[0].startswith("suite=anbasis seed=1 p=2")
        assert lines[1].split() == ["SUITE", "CASE", "EXPECTED", "COMPUTED", "CERT", "STATUS"]
        assert lines[-1].startswith("anbasis: PASS total=1")
