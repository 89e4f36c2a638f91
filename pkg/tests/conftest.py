import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pentaform import corpus  # noqa: E402

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def q_dot():
    return corpus.alex()


@pytest.fixture
def q_ddot():
    return corpus.horse()


@pytest.fixture
def q_tdot():
    return corpus.horse_named()


# -- acceptance summary ------------------------------------------------------

_verdicts: dict = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        name = report.nodeid.split("::")[-1][len("test_criterion_"):]
        _verdicts[name] = (report.passed, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    tr = terminalreporter
    tr.section("acceptance")
    groups: dict = {}
    for name, verdict in _verdicts.items():
        groups.setdefault(name.split("_")[0], []).append((name, verdict))
    for number in sorted(groups, key=int):
        entries = groups[number]
        ok = all(passed for _, (passed, _) in entries)
        secs = sum(d for _, (_, d) in entries)
        title = " ".join(entries[0][0].split("_")[1:]) if len(entries) == 1 else "property suites"
        tr.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title} ({secs:.2f}s)")
        if len(entries) > 1:
            for name, (passed, d) in entries:
                tr.write_line(f"    {name}: {'PASS' if passed else 'FAIL'} ({d:.2f}s)")
