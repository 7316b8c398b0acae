from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from sdc.genfile import read_code_file

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = Path(__file__).parent / "data"

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def real36():
    """Two inequivalent self-dual [36,18,8] codes (circulant constructions)."""
    return {p.stem: read_code_file(p).code for p in sorted(DATA.glob("*.gen"))}
