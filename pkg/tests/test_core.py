import threading
from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import PHI_DEC, SQRT5, dec
from phinary.core import PHI, PSI, FibCache, PhiInt, QuadRat, fib, parse_phi, phi_pow, sign, to_decimal
from phinary.errors import DivisionByZero, DomainError

ints = st.integers(-10 ** 6, 10 ** 6)
phiints = st.builds(PhiInt, ints, ints)
fracs = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)
quads = st.builds(QuadRat, fracs, fracs)


def test_text_forms():
    assert str(PhiInt(3, 2)) == "3φ+2"
    assert str(PhiInt(1, 0)) == "φ"
    assert str(PhiInt(-1, 0)) == "-φ"
    assert str(PSI) == "φ-1"
    assert str(PhiInt(0, -4)) == "-4"
    for text in ("3φ+2", "3*phi+2", "3phi+2", "-φ-1", "phi", "7", "-7"):
        assert parse_phi(str(parse_phi(text))) == parse_phi(text)
    assert parse_phi("3*phi+2") == PhiInt(3, 2)
    with pytest.raises(DomainError):
        parse_phi("3x+2")


def test_psi_is_inverse_of_phi():
    assert PHI * PSI == PhiInt(0, 1)
    assert PHI * PHI == PHI + 1


@given(phiints)
def test_sign_matches_decimal_oracle(x):
    d = dec(x)
    assert sign(x) == (d > 0) - (d < 0)


@given(phiints, phiints, phiints)
def test_order_is_total_and_transitive(x, y, z):
    assert sum([x < y, x == y, x > y]) == 1
    if x < y and y < z:
        assert x < z


@given(phiints, phiints)
def test_ring_ops_match_decimal(x, y):
    assert abs(dec(x * y) - dec(x) * dec(y)) < Decimal_eps()
    assert abs(dec(x + y) - dec(x) - dec(y)) < Decimal_eps()


def Decimal_eps():
    return Decimal(10) ** -40


@given(phiints, phiints)
def test_exact_div_round_trip(x, y):
    if y:
        assert (x * y).exact_div(y) == x
    else:
        with pytest.raises(DivisionByZero):
            x.exact_div(y)


@given(phiints)
def test_norm_is_product_with_conjugate(x):
    assert x * x.conjugate() == PhiInt(0, x.norm())


def test_phi_power_recurrence_and_quadrat_embedding():
    q = QuadRat(1)
    phi = QuadRat(PHI)
    for n in range(0, 65):
        assert phi_pow(n + 1) == phi_pow(n) + phi_pow(n - 1)
        assert QuadRat(phi_pow(n)) == q
        q = q * phi
    for n in range(-30, 0):
        assert phi_pow(n) * phi_pow(-n) == PhiInt(0, 1)


def test_binet():
    phi = QuadRat(PHI)
    for n in range(41):
        val = (phi ** n - (-phi) ** (-n)) / QuadRat.sqrt5()
        assert val == QuadRat(fib(n))


def test_fib_cache_is_thread_safe():
    cache = FibCache()
    out = []
    ts = [threading.Thread(target=lambda k=k: out.append((k, cache(300 + k)))) for k in range(8)]
    for t in ts:
        t.start()
    for t in ts:
        t.join()
    for k, v in out:
        assert v == fib(300 + k)
    assert fib(10) == 55 and fib(0) == 0 and fib(1) == 1


@given(quads, quads)
def test_quadrat_field_ops(x, y):
    assert abs(dec(x * y) - dec(x) * dec(y)) < Decimal_eps()
    if y:
        assert (x / y) * y == x


@given(quads)
def test_quadrat_floor_matches_decimal(x):
    assert x.floor() == int(dec(x).to_integral_value(rounding="ROUND_FLOOR"))


@given(quads)
def test_quadrat_sqrt_of_square(x):
    assert (x * x).sqrt() == abs(x)


def test_quadrat_text_and_decimal():
    phi = QuadRat(PHI)
    assert phi == QuadRat(Fraction(1, 2), Fraction(1, 2))
    assert to_decimal(phi, 10) == "1.6180339887"
    assert str(PHI_DEC)[:12] == to_decimal(phi, 10)[:12]
    assert QuadRat.sqrt5() * QuadRat.sqrt5() == QuadRat(5)
    assert to_decimal(QuadRat.sqrt5(), 6) == "2.236068"
    assert str(SQRT5).startswith("2.2360679")
    with pytest.raises(DomainError):
        QuadRat(2).sqrt()
