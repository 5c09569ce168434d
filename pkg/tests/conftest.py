import pytest

ACCEPTANCE = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(label, passed, detail)``."""
    lines = request.config.stash[ACCEPTANCE]

    def record(label, passed, detail):
        lines.append(f"{'PASS' if passed else 'FAIL'}  criterion {label:<4} {detail}")
        return passed
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: _order(s.split()[2])):
            terminalreporter.write_line(line)


def _order(label):
    digits = "".join(ch for ch in label if ch.isdigit())
    return (int(digits) if digits else 99), label
