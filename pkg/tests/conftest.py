from __future__ import annotations

import functools

import pytest
from hypothesis import HealthCheck, settings

from dmcurves.ff import make_field
from dmcurves.search import genus2_dm_search

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# filled by test_acceptance; echoed at the end of the run
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@functools.lru_cache(maxsize=None)
def search_hits(p: int, n: int = 1):
    return genus2_dm_search(make_field(p, n))


@pytest.fixture(scope="session")
def hits():
    return search_hits


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
