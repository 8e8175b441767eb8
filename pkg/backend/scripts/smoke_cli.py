import json
import os
import subprocess
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional

BACKEND_DIR = Path(__file__).resolve().parent.parent


@dataclass
class SmokeResult:
    name: str
    status: int
    ok: bool
    detail: str = ""


def _run(args: list[str], cache_dir: Path) -> tuple[int, str, str]:
    cmd = [sys.executable, "-m", "app.main", *args]
    env = {**os.environ, "WITTLAB_CACHE_DIR": str(cache_dir)}
    try:
        proc = subprocess.run(
            cmd, cwd=BACKEND_DIR, env=env, capture_output=True, text=True, timeout=600
        )
    except Exception as exc:  # noqa: BLE001
        return -1, "", str(exc)
    return proc.returncode, proc.stdout, proc.stderr


def _parse_json(body: str) -> Any:
    try:
        return json.loads(body)
    except Exception:
        return None


def _print_results(checks: list[SmokeResult]) -> int:
    failures = [c for c in checks if not c.ok]
    for check in checks:
        status_str = "OK" if check.ok else "FAIL"
        print(f"[{status_str}] {check.name} -> {check.status} {check.detail}")

    if failures:
        print(f"FAIL ({len(failures)}/{len(checks)}) smoke checks failed")
        return 1

    print(f"PASS ({len(checks)}) smoke checks passed")
    return 0


def run_smoke(cache_dir: Optional[Path] = None) -> int:
    checks: list[SmokeResult] = []
    workdir = cache_dir or Path(tempfile.mkdtemp(prefix="wittlab-smoke-"))

    def check(
        name: str,
        args: list[str],
        expect_code: int,
        predicate: Optional[Callable[[Any], bool]] = None,
    ) -> None:
        code, out, err = _run(args, workdir)
        ok = code == expect_code
        detail = out.strip()[:120] or err.strip()[:120]
        if ok and predicate is not None:
            ok = predicate(_parse_json(out))
        checks.append(SmokeResult(name=name, status=code, ok=ok, detail=detail))

    check("cache build p=2 m=1", ["cache", "build", "--p", "2", "--m", "1"], 0)
    check(
        "swan t^-2 (p=2)",
        ["swan", "--p", "2", "--m", "0", "--alpha", "[[[-2,1]]]"],
        0,
        lambda data: data["swan"] == 1 and data["certified"],
    )
    check(
        "lambda t^-3 (p=2, d=2)",
        ["lambda", "--p", "2", "--d", "2", "--alpha", "[[[-3,1]]]"],
        0,
        lambda data: data["valuation"] == -1,
    )
    check(
        "sympow-swan t^-3 (p=2, d=2)",
        ["sympow-swan", "--p", "2", "--d", "2", "--alpha", "[[[-3,1]]]"],
        0,
        lambda data: (data["upstairs"], data["exceptional"]) == (3, 1),
    )
    check(
        "blprod-swan (3, 2) (p=5)",
        ["blprod-swan", "--p", "5", "--alpha", "[[[-3,1]]]", "--beta", "[[[-2,1]]]"],
        0,
        lambda data: data["joint"] == 3,
    )
    check(
        "min-degree g=0 deg=2",
        ["min-degree", "--genus", "0", "--deg-mod", "2"],
        0,
        lambda value: value == 2,
    )
    check("verify anbasis", ["verify", "anbasis", "--p", "2", "--d", "2"], 0)
    check("malformed alpha", ["swan", "--p", "2", "--alpha", "[[[-2,1]]"], 1)
    check("unsupported prime", ["swan", "--p", "4", "--alpha", "[[[-1,1]]]"], 1)

    return _print_results(checks)


if __name__ == "__main__":
    sys.exit(run_smoke(Path(sys.argv[1]) if len(sys.argv) > 1 else None))
