from __future__ import annotations

import pytest

from rcbpoly.kernels import available_backends

BACKENDS = available_backends()

# criterion number -> (status, description); filled by test_acceptance.py
ACCEPTANCE: dict = {}


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return BACKENDS[request.param]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {text}")
