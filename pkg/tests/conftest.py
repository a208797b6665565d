import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(autouse=True)
def _offline_oeis(monkeypatch, tmp_path):
    # never touch oeis.org from the test suite; every test gets a fresh cache
    monkeypatch.setenv("OEIS_OFFLINE", "1")
    monkeypatch.setenv("OEIS_CACHE_DIR", str(tmp_path / "oeis-cache"))
    monkeypatch.delenv("OEIS_BASE_URL", raising=False)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
