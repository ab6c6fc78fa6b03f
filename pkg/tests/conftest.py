import re

import pytest

_LINES_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES_KEY] = []


class Criterion:
    def __init__(self, number, lines):
        self.number = number
        self.lines = lines
        self.done = False

    def report(self, title, ok, detail=""):
        line = f"criterion {self.number:2d} {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  ({detail})"
        self.lines.append((self.number, line))
        self.done = True
        print(line)
        return ok


@pytest.fixture
def criterion(request):
    """Reporter for acceptance tests named ``test_cNN_...``."""
    number = int(re.match(r"test_c(\d+)_", request.node.name).group(1))
    c = Criterion(number, request.config.stash[_LINES_KEY])
    yield c
    if not c.done:
        c.lines.append((number, f"criterion {number:2d} FAIL  {request.node.name} did not finish"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_LINES_KEY, [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(lines):
        terminalreporter.write_line(line)
