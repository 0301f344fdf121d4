from decimal import Decimal, getcontext

import pytest

getcontext().prec = 80
SQRT5 = Decimal(5).sqrt()
PHI_DEC = (1 + SQRT5) / 2


def dec(x):
    """High-precision decimal value of a PhiInt or QuadRat, as an independent oracle."""
    if hasattr(x, "a"):
        return x.a * PHI_DEC + x.b
    return Decimal(x.p.numerator) / x.p.denominator + Decimal(x.q.numerator) / x.q.denominator * SQRT5


@pytest.fixture
def oracle_dec():
    return dec


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
