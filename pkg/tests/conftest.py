import numpy as np
import pytest

from conicfoci.core import GeneralConic

WORKED = (4.0, 2.0, 6.0, -6.0, 10.0, -1.0)


@pytest.fixture
def worked():
    return GeneralConic(*WORKED)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)
