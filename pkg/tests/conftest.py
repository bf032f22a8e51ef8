import json
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


def golden(module: str, fixture_id: str, name: str = "expected.json"):
    return json.loads((FIXTURES / module / fixture_id / name).read_text(encoding="utf-8"))


@pytest.fixture
def fixtures_root() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, dt, detail in test_acceptance.RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {label} [{dt:.2f}s]: {detail}")
