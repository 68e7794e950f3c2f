from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings

# Property suites: at least 200 cases each, derandomized so every run sees
# the same examples.  Pass --hypothesis-seed=N to explore other draws.
settings.register_profile(
    "forbconf",
    max_examples=200,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("forbconf")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=0, help="seed for random test instances (default 0)")


@pytest.fixture
def rng(request) -> random.Random:
    return random.Random(request.config.getoption("--seed"))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
