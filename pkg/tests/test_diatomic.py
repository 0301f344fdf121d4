from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given, strategies as st

from phinary.core import PHI, PhiInt, fib
from phinary.diatomic import (
    fib_diatomic_nat,
    fib_diatomic_nat_reps,
    fib_diatomic_phi,
    fib_mult,
    hyperbinary,
    hyperbinary_reps,
    hyperbinary_table,
    hyperphinary_reps,
    phi_circ,
    primary_occurrences,
    totient,
    zeckendorf,
)
from phinary.errors import DomainError, InconclusiveBound, NotPhinary, OracleBoundExceeded
from phinary.ordinal import PHI2, dagger, unrank


def test_hyperbinary_small_values():
    assert [hyperbinary(n) for n in range(9)] == [1, 1, 2, 1, 3, 2, 3, 1, 4]
    assert hyperbinary_reps(3).parts == ((1, 0),)
    assert set(hyperbinary_reps(5).parts) == {(2, 0), (1, 1, 0)}
    assert hyperbinary_table(2049) == [hyperbinary(n) for n in range(2049)]
    with pytest.raises(OracleBoundExceeded):
        hyperbinary_reps(5000)
    with pytest.raises(DomainError):
        hyperbinary(-1)


def test_hyperbinary_oracle_and_rules():
    for n in range(2049):
        reps = hyperbinary_reps(n).parts
        assert hyperbinary(n) == len(reps)
        assert all(sum(2 ** e for e in r) == n for r in reps)
        assert hyperbinary(2 * n + 1) == hyperbinary(n)
    for p in range(1, 64, 2):
        for k in range(1, 9):
            assert hyperbinary(p * 2 ** k - 1) == hyperbinary(p - 1)


def test_fibonacci_diatomic_table_values():
    # enumeration decides the count column: F(5) = F(6) = 2
    assert [fib_diatomic_nat(n) for n in range(9)] == [1, 1, 1, 2, 1, 2, 2, 1, 3]
    assert set(fib_diatomic_nat_reps(5).parts) == {(5,), (4, 3)}
    assert [fib_diatomic_phi(unrank(r)) for r in range(9)] == [1, 1, 1, 2, 1, 2, 2, 1, 3]
    assert set(hyperphinary_reps(PhiInt(2, 1)).parts) == {(3,), (2, 1)}
    assert set(hyperphinary_reps(PhiInt(3, 2)).parts) == {(4,), (3, 2), (3, 1, 0)}


def test_three_way_equivalence():
    for n in range(1001):
        p = unrank(n)
        reps = hyperphinary_reps(p).parts
        assert fib_diatomic_phi(p) == len(reps) == fib_diatomic_nat(n) == len(fib_diatomic_nat_reps(n))


def test_reoccurrences():
    F = fib_diatomic_phi
    for r in range(500):
        q = unrank(r)
        e, o = PHI2 * q, PHI2 * q + 1
        c = PHI * o
        assert F(PHI2 * (PHI * q) + 1) == F(e)
        assert F(PHI2 * o + 1) == F(c)
        assert F(c) == F(o)
        s = dagger(q, 1)
        assert F(PHI2 * s) == F(q) + F(s)


def test_errors():
    with pytest.raises(NotPhinary):
        fib_diatomic_phi(PhiInt(0, 2))
    with pytest.raises(NotPhinary):
        hyperphinary_reps(PhiInt(-1, 0))
    with pytest.raises(OracleBoundExceeded):
        hyperphinary_reps(unrank(5000))


@given(st.integers(0, 10 ** 6))
def test_zeckendorf(n):
    ks = zeckendorf(n)
    assert sum(fib(k) for k in ks) == n
    assert all(a - b >= 2 for a, b in zip(ks, ks[1:]))
    assert all(k >= 2 for k in ks)


def test_circle_product():
    assert fib_mult(4, 7) == 65
    r = range(1, 13)
    for a in r:
        for b in r:
            assert fib_mult(a, b) == fib_mult(b, a)
            for c in r:
                assert fib_mult(fib_mult(a, b), c) == fib_mult(a, fib_mult(b, c))
    assert phi_circ(PhiInt(1, 2), PhiInt(3, 1)) == PhiInt(10, 5)


@given(st.integers(0, 3000), st.integers(0, 3000))
def test_phi_circ_is_ring_product(i, j):
    assert phi_circ(unrank(i), unrank(j)) == unrank(i) * unrank(j)


def test_primary_occurrences_match_totient():
    for v in range(1, 9):
        rep = primary_occurrences(v)
        assert rep.count == rep.totient == totient(v)
    with pytest.raises(InconclusiveBound):
        primary_occurrences(4, bound=20)


def test_memo_is_consistent_across_threads():
    ranks = list(range(3000, 0, -1))
    with ThreadPoolExecutor(8) as ex:
        got = list(ex.map(lambda r: fib_diatomic_phi(unrank(r)), ranks))
    assert got == [fib_diatomic_nat(r) for r in ranks]
