from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from phinary.codec import (
    FRACTION_CAP,
    PhiDigits,
    RawDigits,
    decode,
    decode_quadrat,
    encode_natural,
    encode_standard,
    is_phinary,
    normalize,
)
from phinary.core import PhiInt, QuadRat
from phinary.errors import MalformedDigits, NegativeInput, NotPhinary
from phinary.ordinal import is_phinary as is_phinary_fast, unrank


def test_standard_forms():
    assert str(encode_standard(PhiInt(3, 2))) == "10000"
    assert str(encode_standard(PhiInt(0, 0))) == "0"
    assert decode("101") == PhiInt(1, 2)
    assert decode("1010") == PhiInt(3, 1)


def test_natural_forms_decode_to_the_integer():
    for n in range(0, 1001):
        d = encode_natural(n)
        assert decode_quadrat(d) == QuadRat(n)
    assert str(encode_natural(2)) == "10.01"
    assert str(encode_natural(4)) == "101.01"
    # the greedy expansion of 5 is φ³ + φ^-1 + φ^-4
    assert str(encode_natural(5)) == "1000.1001"


def test_normalize_examples():
    assert str(normalize(RawDigits.from_string("1100"))) == "10000"
    assert str(normalize(RawDigits.from_string("1011"))) == "10000"
    assert str(normalize(RawDigits.from_string("0"))) == "0"
    assert str(normalize(RawDigits.from_string("2"))) == "10.01"


def test_round_trip_first_ten_thousand():
    for r in range(10000):
        p = unrank(r)
        s = str(encode_standard(p))
        assert "11" not in s
        assert decode(s) == p


def test_uniqueness_and_order_by_enumeration():
    # every standard string of length <= 16 decodes to a distinct value,
    # and padded lexicographic order is value order
    seen = {}
    for bits in product("01", repeat=16):
        s = "".join(bits)
        if "11" in s:
            continue
        v = decode(s.lstrip("0") or "0")
        assert v not in seen
        seen[v] = s
    values = sorted(seen, key=lambda v: seen[v])
    assert all(a < b for a, b in zip(values, values[1:]))
    assert values[:9] == [unrank(r) for r in range(9)]


digit_maps = st.dictionaries(st.integers(-8, 16), st.integers(0, 3), max_size=12)


@settings(max_examples=200, deadline=None)
@given(digit_maps)
def test_normalize_preserves_value(digits):
    raw = RawDigits(digits)
    out = normalize(raw)
    assert decode_quadrat(out) == raw.value()
    assert "11" not in str(out).replace(".", "")


def test_malformed_inputs():
    for bad in ("", "12", "0110", "1.", "1.10", "01"):
        with pytest.raises(MalformedDigits):
            PhiDigits.parse(bad)
    with pytest.raises(NegativeInput):
        encode_standard(PhiInt(-1, 0))
    with pytest.raises(NotPhinary):
        encode_standard(PhiInt(0, 2))


@given(st.integers(-300, 300), st.integers(-300, 300))
def test_two_membership_tests_agree(a, b):
    x = PhiInt(a, b)
    assert is_phinary(x) == is_phinary_fast(x)


def test_fraction_cap_is_generous():
    assert FRACTION_CAP >= 2 * max(len(encode_natural(n).frac_digits) for n in range(1001))
