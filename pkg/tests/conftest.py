import json
from pathlib import Path

import pytest

from hypertorsion.planar import trinity_from_json_file

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "hypertorsion" / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"
CORPUS = ["running_example", "four_cycle", "theta", "six_cycle"]

# filled by test_acceptance, echoed after the run
ACCEPTANCE_LINES = []


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


def load_raw(name: str) -> dict:
    return json.loads(fixture_path(name).read_text())


@pytest.fixture(scope="session")
def running():
    return trinity_from_json_file(fixture_path("running_example"))


@pytest.fixture(scope="session")
def corpus():
    return {name: trinity_from_json_file(fixture_path(name)) for name in CORPUS}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
