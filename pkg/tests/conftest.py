import random

import pytest

from helpers import random_config
from kummercover import catalog_lookup


@pytest.fixture(scope="session")
def random_configs():
    rng = random.Random(20161)
    return [random_config(rng) for _ in range(1000)]


@pytest.fixture
def hesse():
    return catalog_lookup("hesse-conics")


@pytest.fixture
def dual_hesse():
    return catalog_lookup("dual-hesse")


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    if report.when == "call" or report.outcome == "failed":
        name = report.nodeid.split("::")[-1]
        _acceptance[name] = "PASS" if report.outcome == "passed" and _acceptance.get(name) != "FAIL" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(_acceptance.items()):
        terminalreporter.write_line(f"{status}  {name}")
