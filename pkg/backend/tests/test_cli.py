"""
Тесты для командной строки wittlab.

Проверяют:
- Вычислительные команды и их JSON-вывод
- Коды выхода: 0 — успех, 1 — ошибка ввода, 2 — провал проверки
- verify: воспроизводимость и форматы
- Команды кэша
"""

import json

import pytest
from app.commands import cli
from app.core.algebra import MultiLaurentPoly, SFraction, s_names
from app.main import main
from click.testing import CliRunner


@pytest.fixture()
def runner() -> CliRunner:
    return CliRunner()


def run_json(runner: CliRunner, *args: str) -> dict:
    result = runner.invoke(cli, list(args))
    assert result.exit_code == 0, result.stderr
    return json.loads(result.stdout)


# ==================== Compute ====================


class TestComputeCommands:
    """Тесты для swan, rsw, lambda, sympow-swan, blprod-swan, omega-basis, min-degree."""

    def test_swan(self, runner):
        data = run_json(runner, "swan", "--p", "2", "--m", "0", "--alpha", "[[[-2,1]]]")
        assert data["swan"] == 1
        assert data["certified"] is True
        assert data["bounds"] == [1, 1]

    def test_swan_length_two(self, runner):
        data = run_json(runner, "swan", "--p", "2", "--m", "1", "--alpha", "[[[-1,1]],[]]")
        assert data["swan"] == 2

    def test_rsw(self, runner):
        data = run_json(runner, "rsw", "--p", "2", "--alpha", "[[[-3,1]]]")
        assert data["n"] == 3
        assert data["witness_valuation"] == -3
        assert data["injective_levels"] == [1, 3]

    def test_lambda_pinned_instance(self, runner):
        data = run_json(runner, "lambda", "--p", "2", "--d", "2", "--alpha", "[[[-3,1]]]")
        numerator = MultiLaurentPoly(2, s_names(2), {(3, 0): 1, (1, 1): 1})
        assert data["lambda"] == [str(SFraction(numerator, 3))]
        assert data["valuation"] == -1

    def test_sympow_swan_pinned_instance(self, runner):
        data = run_json(runner, "sympow-swan", "--p", "2", "--d", "2", "--alpha", "[[[-3,1]]]")
        assert (data["upstairs"], data["exceptional"], data["certified"]) == (3, 1, True)

    def test_blprod_swan(self, runner):
        data = run_json(
            runner, "blprod-swan", "--p", "5", "--alpha", "[[[-3,1]]]", "--beta", "[[[-2,1]]]"
        )
        assert (data["first"], data["second"], data["joint"]) == (3, 2, 3)

    def test_omega_basis(self, runner):
        data = run_json(runner, "omega-basis", "--p", "3", "--d", "2")
        assert [f["i"] for f in data["forms"]] == [1, 2]
        assert data["forms"][0]["coeffs"] == ["0", "1"]
        assert data["forms"][1]["coeffs"] == ["2", "S1/S2"]

    def test_omega_basis_indices(self, runner):
        data = run_json(runner, "omega-basis", "--p", "2", "--d", "2", "--i", "3,5")
        assert [f["valuation"] for f in data["forms"]] == [-1, -2]

    @pytest.mark.parametrize(
        "genus,deg_mod,expected", [("0", "2", 2), ("1", "1", 2), ("0", "0", 0)]
    )
    def test_min_degree(self, runner, genus, deg_mod, expected):
        result = runner.invoke(cli, ["min-degree", "--genus", genus, "--deg-mod", deg_mod])
        assert result.exit_code == 0
        assert result.stdout.strip() == str(expected)

    def test_table_format(self, runner):
        result = runner.invoke(
            cli, ["swan", "--p", "3", "--alpha", "[[[-2,1]]]", "--format", "table"]
        )
        assert result.exit_code == 0
        assert result.stdout.splitlines()[0].split() == ["swan", "2"]

    def test_strict_certified_is_ok(self, runner):
        result = runner.invoke(cli, ["swan", "--p", "2", "--alpha", "[[[-3,1]]]", "--strict"])
        assert result.exit_code == 0


class TestDefaultArity:
    """Команды без --d берут d = 2 и не спотыкаются о список d по умолчанию."""

    @pytest.mark.parametrize(
        "args,key,expected",
        [
            (["swan", "--p", "2", "--m", "0", "--alpha", "[[[-2,1]]]"], "swan", 1),
            (["rsw", "--p", "3", "--alpha", "[[[-2,1]]]"], "n", 2),
            (["lambda", "--p", "2", "--alpha", "[[[-3,1]]]"], "valuation", -1),
            (["sympow-swan", "--p", "2", "--m", "0", "--alpha", "[[[-3,1]]]"], "exceptional", 1),
            (
                ["blprod-swan", "--p", "5", "--alpha", "[[[-3,1]]]", "--beta", "[[[-2,1]]]"],
                "joint",
                3,
            ),
            (["omega-basis", "--p", "2", "--i", "1,2,3"], "d", 2),
        ],
    )
    def test_without_d_flag(self, runner, args, key, expected):
        assert run_json(runner, *args)[key] == expected

    def test_documented_swan_example(self, runner):
        result = runner.invoke(cli, ["swan", "--p", "2", "--m", "0", "--alpha", "[[[-2,1]]]"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert (data["swan"], data["certified"]) == (1, True)

    def test_explicit_d_list_rejected(self, runner):
        result = runner.invoke(
            cli, ["sympow-swan", "--p", "2", "--d", "2,3", "--alpha", "[[[-3,1]]]"]
        )
        assert result.exit_code == 1
        assert "single d" in result.stderr
        assert result.stdout == ""


# ==================== Exit codes ====================


class TestExitCodes:
    """Тесты для кодов выхода."""

    @pytest.mark.parametrize(
        "args",
        [
            ["swan", "--p", "2", "--alpha", "[[[-2,1]]"],
            ["swan", "--p", "2", "--alpha", '[[["a",1]]]'],
            ["swan", "--p", "4", "--alpha", "[[[-1,1]]]"],
            ["swan", "--p", "2,3", "--alpha", "[[[-1,1]]]"],
            ["swan", "--p", "2", "--m", "1", "--alpha", "[[[-1,1]]]"],
            ["lambda", "--p", "2", "--d", "7", "--alpha", "[[[-1,1]]]"],
            ["min-degree", "--genus", "-1", "--deg-mod", "2"],
            ["verify", "no-such-suite"],
            ["no-such-command"],
        ],
    )
    def test_input_errors(self, runner, args):
        result = runner.invoke(cli, args)
        assert result.exit_code == 1
        assert result.stdout == ""

    def test_error_message_on_stderr(self, runner):
        result = runner.invoke(cli, ["swan", "--p", "2", "--alpha", "[[[-2,1]]"])
        assert "Error:" in result.stderr

    def test_main_returns_codes(self, capsys):
        assert main(["min-degree", "--genus", "1", "--deg-mod", "1"]) == 0
        assert capsys.readouterr().out.strip() == "2"
        assert main(["swan", "--p", "4", "--alpha", "[[[-1,1]]]"]) == 1
        assert main(["verify", "no-such-suite"]) == 1

    def test_version(self, runner):
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert "0.1.0" in result.stdout


# ==================== Verify ====================


class TestVerifyCommand:
    """Тесты для команды verify."""

    ARGS = ["verify", "anbasis", "--p", "2", "--d", "2"]

    def test_report_records(self, runner):
        result = runner.invoke(cli, self.ARGS)
        assert result.exit_code == 0
        records = [json.loads(line) for line in result.stdout.splitlines()]
        assert records[0]["record"] == "header"
        assert records[0]["p"] == [2]
        assert records[-1]["record"] == "summary"
        assert records[-1]["status"] == "PASS"
        assert sum(r["record"] == "case" for r in records) == 5

    def test_deterministic(self, runner):
        first = runner.invoke(cli, self.ARGS + ["--seed", "3"])
        second = runner.invoke(cli, self.ARGS + ["--seed", "3"])
        assert first.stdout == second.stdout

    def test_table(self, runner):
        result = runner.invoke(cli, self.ARGS + ["--format", "table"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0].startswith("suite=anbasis")
        assert lines[-1].startswith("anbasis: PASS")

    def test_failed_suite_exits_2(self, runner, monkeypatch):
        from app.schemas import CaseStatus
        from app.schemas.contracts import ReportRow
        from app.services import verify_service

        def failing(config):
            row = ReportRow(suite="dprod", case="x", status=CaseStatus.FAIL)
            return [verify_service.Case(verify_service.Suite.DPROD, (0,), lambda rng: [row])]

        monkeypatch.setitem(verify_service.SUITES, verify_service.Suite.DPROD, failing)
        result = runner.invoke(cli, ["verify", "dprod", "--p", "2"])
        assert result.exit_code == 2
        assert json.loads(result.stdout.splitlines()[-1])["status"] == "FAIL"


# ==================== Cache ====================


class TestCacheCommands:
    """Тесты для cache build | inspect | clear."""

    def test_build_inspect_clear(self, runner, fresh_cache):
        cache_dir = str(fresh_cache)
        built = runner.invoke(
            cli, ["cache", "build", "--p", "2", "--m", "1", "--cache-dir", cache_dir]
        )
        assert built.exit_code == 0
        assert built.stdout.startswith("written ")

        inspected = runner.invoke(
            cli, ["cache", "inspect", "--p", "2", "--m", "1", "--cache-dir", cache_dir]
        )
        summary = json.loads(inspected.stdout)
        assert summary["exists"] is True
        assert any(r["poly"] == "X1 + Y1 - X0*Y0" for r in summary["polys"])

        table = runner.invoke(
            cli,
            [
                "cache",
                "inspect",
                "--p",
                "2",
                "--m",
                "1",
                "--cache-dir",
                cache_dir,
                "--format",
                "table",
            ],
        )
        assert "S_1 = X1 + Y1 - X0*Y0  [terms=3 degree=2]" in table.stdout

        cleared = runner.invoke(cli, ["cache", "clear", "--cache-dir", cache_dir])
        assert cleared.exit_code == 0
        assert cleared.stdout.startswith("removed 1 file(s)")

    def test_corrupt_cache_is_input_error(self, runner, fresh_cache):
        cache_dir = str(fresh_cache)
        runner.invoke(cli, ["cache", "build", "--p", "3", "--m", "0", "--cache-dir", cache_dir])
        path = fresh_cache / "witt_p3_m0.txt"
        path.write_text(path.read_text(encoding="utf-8") + "S 9 []\n", encoding="utf-8")
        from app.core.witt.cache import reset_registry

        reset_registry()
        result = runner.invoke(
            cli, ["swan", "--p", "3", "--alpha", "[[[-1,1]]]", "--cache-dir", cache_dir]
        )
        assert result.exit_code == 1
        assert "cache clear" in result.stderr
