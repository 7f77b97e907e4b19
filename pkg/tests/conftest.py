import pytest

from dompoly import kernels

BACKENDS = sorted(kernels.BACKENDS)


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


ACCEPTANCE: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(f"{ACCEPTANCE[key]:4s}  criterion {key}")
