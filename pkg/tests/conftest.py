import re
import sys
from pathlib import Path

import pytest
from hypothesis import settings

from gridplan import _kernels

sys.path.insert(0, str(Path(__file__).parent))

# JIT compilation must never land inside a timed or time-bounded test.
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    _kernels.warm()


@pytest.fixture()
def data_dir() -> Path:
    return DATA_DIR


# ---------------------------------------------------------------------------
# Acceptance reporting: one line per criterion at the end of the run.

_CRITERION_RE = re.compile(r"test_acceptance.*::test_criterion_(\d+)")
_CRITERION_NAMES = {
    1: "golden weight matrix on the worked 4x4 field",
    2: "all-pairs distances match the single-source oracle (200 fields)",
    3: "distance matrix metric properties (triangle, symmetry, bounds)",
    4: "route reconstruction validity and no-route handling",
    5: "cubic growth of solve time vs cell count",
    6: "solve time invariant to obstacle count",
    7: "one solve per dispatch; time invariant to source count",
    8: "corner-grazing decisions exact, perturbations flip as expected",
}
_results = {}


def pytest_runtest_logreport(report):
    m = _CRITERION_RE.search(report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    if report.when == "call":
        outcome = "PASS" if report.passed else "FAIL"
        if report.skipped:
            outcome = "SKIP"
        _results[num] = outcome
    elif report.when == "setup" and (report.failed or report.skipped):
        _results[num] = "SKIP" if report.skipped else "FAIL"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        name = _CRITERION_NAMES.get(num, "")
        terminalreporter.write_line(f"criterion {num}: {_results[num]} - {name}")
