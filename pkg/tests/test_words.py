
import pytest
from hypothesis import given, strategies as st

from conftest import PHI_DEC
from phinary.core import PHI, QuadRat, fib
from phinary.errors import DomainError
from phinary.ordinal import unrank
from phinary.words import (
    beatty,
    cutting_sequence,
    fib_word,
    floor_phi_multiple,
    infinite_letter,
    infinite_prefix,
    is_fibonacci_factor,
    letter_counts,
    substitute,
    to_count_alphabet,
    truncate_palindrome,
    word_value,
)

PHI_Q = QuadRat(PHI)
SQRT5 = QuadRat.sqrt5()


def test_words_and_substitution():
    assert fib_word(1) == "A"
    assert fib_word(4) == "ABAAB"
    assert fib_word(6) == "ABAABABAABAAB"
    assert substitute("A") == "AB" and substitute("AB") == "ABA" and substitute("") == ""
    for n in range(1, 21):
        assert substitute(fib_word(n)) == fib_word(n + 1)
    for n in range(1, 26):
        w = fib_word(n)
        assert "BB" not in w and "AAA" not in w
        assert len(w) == fib(n + 1)


@given(st.integers(-10 ** 12, 10 ** 12))
def test_floor_phi_multiple_matches_decimal(k):
    assert floor_phi_multiple(k) == int((k * PHI_DEC).to_integral_value(rounding="ROUND_FLOOR"))


def test_nth_letter_formula():
    for n in range(1, 21):
        w = fib_word(n)
        assert all(infinite_letter(k) == w[k - 1] for k in range(1, len(w) + 1))
    assert [infinite_letter(k) for k in (1, 2, 5)] == ["A", "B", "B"]
    with pytest.raises(DomainError):
        infinite_letter(0)


def test_cutting_sequence():
    assert cutting_sequence(1) == "A"
    assert cutting_sequence(5) == "ABAAB"
    assert cutting_sequence(13) == fib_word(6)
    assert cutting_sequence(2000) == infinite_prefix(2000)


def test_truncated_palindromes():
    assert truncate_palindrome(3) == "A"
    assert truncate_palindrome(4) == "ABA"
    for n in range(3, 20):
        w = truncate_palindrome(n)
        assert w == w[::-1] and len(w) == fib(n + 1) - 2
    assert len(truncate_palindrome(7)) == 19
    with pytest.raises(DomainError):
        truncate_palindrome(2)


def test_letter_counts():
    assert letter_counts(1) == (1, 0)
    assert letter_counts(2) == (1, 1)
    assert letter_counts(4) == (3, 2)
    for n in range(1, 20):
        w = fib_word(n)
        assert letter_counts(n) == (w.count("A"), w.count("B"))


def test_word_values_are_the_phinary_numbers():
    w = infinite_prefix(200)
    for n in range(1, 201):
        assert word_value(w[:n]) == unrank(n)
    assert to_count_alphabet("ABA") == "1ψ1"
    assert is_fibonacci_factor("ABAAB") and not is_fibonacci_factor("ABBA")


def test_beatty_examples_and_partition():
    alpha = SQRT5 / PHI_Q
    beta = PHI_Q * SQRT5
    assert beatty(alpha, 12) == [1, 2, 4, 5, 6, 8, 9, 11, 12, 13, 15, 16]
    assert beatty(beta, 11) == [3, 7, 10, 14, 18, 21, 25, 28, 32, 36, 39]
    assert beatty(PHI_Q * PHI_Q, 4) == [2, 5, 7, 10]
    # complementary: 1/α + 1/β = 1
    assert QuadRat(1) / alpha + QuadRat(1) / beta == QuadRat(1)
    n = 200
    sa = [x for x in beatty(alpha, n) if x <= n]
    sb = [x for x in beatty(beta, n) if x <= n]
    assert sorted(sa + sb) == list(range(1, n + 1))
    da = "".join({1: "A", 2: "B"}[y - x] for x, y in zip(sa, sa[1:]))
    db = "".join({4: "A", 3: "B"}[y - x] for x, y in zip(sb, sb[1:]))
    assert is_fibonacci_factor(da) and is_fibonacci_factor(db)
    assert da[:100] in infinite_prefix(400)
    assert db in infinite_prefix(400)
    with pytest.raises(DomainError):
        beatty(QuadRat(2), 3)
