import pytest

from diverse_opt._backend import AVAILABLE


@pytest.fixture(params=sorted(AVAILABLE))
def backend(request):
    return request.param


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
