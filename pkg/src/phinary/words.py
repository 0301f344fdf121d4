"""Fibonacci words over {A, B}, cutting sequences and Beatty sequences.

Letters carry the values A = 1 and B = ψ = 1/φ when read as successor increments.
"""
from __future__ import annotations

from math import isqrt

from .core import ONE, PSI, PhiInt, QuadRat, fib
from .errors import DomainError

LETTER_VALUE = {"A": ONE, "B": PSI}
COUNT_ALPHABET = {"A": "1", "B": "ψ"}


def floor_phi_multiple(k: int) -> int:
    """⌊kφ⌋ for any integer k, computed with integer square roots."""
    if k >= 0:
        return (k + isqrt(5 * k * k)) // 2
    return -floor_phi_multiple(-k) - 1


def fib_word(n: int) -> str:
    if n < 1:
        raise DomainError("Fibonacci words are indexed from 1")
    prev, cur = "A", "AB"
    if n == 1:
        return prev
    for _ in range(n - 2):
        prev, cur = cur, cur + prev
    return cur


def substitute(word: str) -> str:
    return "".join("AB" if c == "A" else "A" for c in word)


def infinite_letter(n: int) -> str:
    """n-th letter (1-based) of the infinite word: A exactly when ⌊(n+1)φ⌋ - ⌊nφ⌋ - 1 = 1."""
    if n < 1:
        raise DomainError("letters are indexed from 1")
    return "A" if floor_phi_multiple(n + 1) - floor_phi_multiple(n) - 1 == 1 else "B"


def infinite_prefix(length: int) -> str:
    return "".join(infinite_letter(i) for i in range(1, length + 1))


def cutting_sequence(steps: int) -> str:
    """Crossings of y = x/φ with the unit grid, x > 0.

    Vertical lines x = k are met at x = k, horizontal lines y = j at x = jφ.
    A vertical crossing is written A and a horizontal one B.
    """
    out = []
    k, j = 1, 1
    phi = QuadRat(PhiInt(1, 0))
    while len(out) < steps:
        # the two lattice streams never coincide since φ is irrational
        if QuadRat(k) < phi * j:
            out.append("A")
            k += 1
        else:
            out.append("B")
            j += 1
    return "".join(out)


def truncate_palindrome(n: int) -> str:
    if n <= 2:
        raise DomainError("truncation needs n >= 3")
    return fib_word(n)[:-2]


def letter_counts(n: int) -> tuple[int, int]:
    """(#A, #B) in the n-th Fibonacci word."""
    if n < 1:
        raise DomainError("Fibonacci words are indexed from 1")
    return fib(n), fib(n - 1)


def to_count_alphabet(word: str) -> str:
    return "".join(COUNT_ALPHABET[c] for c in word)


def word_value(word: str) -> PhiInt:
    total = PhiInt(0, 0)
    for c in word:
        total = total + LETTER_VALUE[c]
    return total


def is_fibonacci_factor(word: str) -> bool:
    """Cheap necessary test: no BB and no AAA."""
    return set(word) <= {"A", "B"} and "BB" not in word and "AAA" not in word


def beatty(alpha, count: int) -> list[int]:
    """⌊k·alpha⌋ for k = 1..count; alpha must be an irrational QuadRat above 1."""
    alpha = QuadRat.coerce(alpha)
    if alpha.is_rational():
        raise DomainError("Beatty generator must be irrational")
    if alpha <= 1:
        raise DomainError("Beatty generator must exceed 1")
    return [(alpha * k).floor() for k in range(1, count + 1)]
