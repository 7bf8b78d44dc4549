import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import re
from collections import defaultdict

_CRITERIA = defaultdict(list)
_NAME = re.compile(r"test_criterion_(\d+)")


def pytest_runtest_logreport(report):
    m = _NAME.search(report.nodeid)
    if m and (report.when == "call" or report.outcome != "passed"):
        _CRITERIA[int(m.group(1))].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        ok = all(o == "passed" for o in _CRITERIA[n])
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}")
