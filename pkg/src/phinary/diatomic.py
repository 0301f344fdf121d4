"""Hyperbinary and hyperphinary counts, with brute-force enumerators as oracles.

H(n) counts ways to write n as a sum of powers of 2, each used at most twice.
The Fibonacci diatomic count of n is the number of ways to write n as a sum of
distinct Fibonacci numbers F_k (k >= 2); indexed by phinary numbers instead, it
counts sums of distinct powers of φ.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .codec import encode_standard
from .core import ONE, PHI, PhiInt, fib, phi_pow
from .errors import DomainError, InconclusiveBound, NotPhinary, OracleBoundExceeded
from .ordinal import PHI2, Parity, is_phinary, parity_decompose, predecessor, rank, unrank

HYPERBINARY_ORACLE_BOUND = 4096
HYPERPHINARY_ORACLE_BOUND = 2000


@dataclass(frozen=True)
class PartitionSet:
    target: object
    parts: tuple[tuple, ...]

    def __len__(self):
        return len(self.parts)


@lru_cache(maxsize=None)
def _hyperbinary(n: int) -> int:
    if n == 0:
        return 1
    if n % 2:
        return _hyperbinary(n // 2)
    m = n // 2 - 1
    return _hyperbinary(m) + _hyperbinary(m + 1)


def hyperbinary(n: int) -> int:
    """H(0) = 1, H(2n+1) = H(n), H(2n+2) = H(n) + H(n+1)."""
    if n < 0:
        raise DomainError("hyperbinary index must be non-negative")
    return _hyperbinary(n)


def hyperbinary_table(count: int) -> list[int]:
    h = [1] * max(count, 1)
    for n in range(1, count):
        h[n] = h[(n - 1) // 2] if n % 2 else h[n // 2 - 1] + h[n // 2]
    return h[:count]


def hyperbinary_reps(n: int, bound: int = HYPERBINARY_ORACLE_BOUND) -> PartitionSet:
    """All multisets of powers of 2 (multiplicity <= 2) summing to n, as exponent tuples."""
    if n < 0:
        raise DomainError("index must be non-negative")
    if n > bound:
        raise OracleBoundExceeded(f"{n} exceeds the enumeration bound {bound}")
    top = max(n.bit_length() - 1, 0)
    out = []

    def walk(k, rest, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        if k < 0 or rest > 2 * ((1 << (k + 1)) - 1):
            return
        for m in (2, 1, 0):
            if m * (1 << k) <= rest:
                walk(k - 1, rest - m * (1 << k), acc + [k] * m)

    walk(top, n, [])
    return PartitionSet(n, tuple(out))


def zeckendorf(n: int) -> list[int]:
    """Indices k >= 2 of the greedy Fibonacci representation, largest first."""
    if n < 0:
        raise DomainError("zeckendorf needs n >= 0")
    k = 2
    while fib(k + 1) <= n:
        k += 1
    out = []
    while n:
        while fib(k) > n:
            k -= 1
        out.append(k)
        n -= fib(k)
        k -= 2
    return out


@lru_cache(maxsize=None)
def _fib_subsets(n: int, k: int) -> int:
    # subsets of {F_2, ..., F_k} summing to n; F_2 + ... + F_k = F_{k+2} - 2
    if n == 0:
        return 1
    if k < 2 or n > fib(k + 2) - 2:
        return 0
    total = _fib_subsets(n, k - 1)
    if fib(k) <= n:
        total += _fib_subsets(n - fib(k), k - 1)
    return total


def fib_diatomic_nat(n: int) -> int:
    if n < 0:
        raise DomainError("index must be non-negative")
    k = 2
    while fib(k + 1) <= n:
        k += 1
    return _fib_subsets(n, k)


def fib_diatomic_nat_reps(n: int) -> PartitionSet:
    """Sets of Fibonacci indices k >= 2 (distinct F_k) summing to n."""
    if n < 0:
        raise DomainError("index must be non-negative")
    k = 2
    while fib(k + 1) <= n:
        k += 1
    out = []

    def walk(k, rest, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        if k < 2 or rest > fib(k + 2) - 2:
            return
        if fib(k) <= rest:
            walk(k - 1, rest - fib(k), acc + [k])
        walk(k - 1, rest, acc)

    walk(k, n, [])
    return PartitionSet(n, tuple(out))


def hyperphinary_reps(p, bound: int = HYPERPHINARY_ORACLE_BOUND) -> PartitionSet:
    """Sets of exponents k >= 0 with distinct φ^k summing exactly to p."""
    p = PhiInt.coerce(p)
    r = rank(p)
    if r < 0:
        raise NotPhinary(f"{p} is negative")
    if r > bound:
        raise OracleBoundExceeded(f"rank {r} exceeds the enumeration bound {bound}")
    k = 0
    while phi_pow(k + 1) <= p:
        k += 1
    out = []

    def walk(k, rest, acc):
        if not rest:
            out.append(tuple(acc))
            return
        # φ^0 + ... + φ^k = φ^(k+2) - φ
        if k < 0 or rest.sign() < 0 or rest > phi_pow(k + 2) - PHI:
            return
        if phi_pow(k) <= rest:
            walk(k - 1, rest - phi_pow(k), acc + [k])
        walk(k - 1, rest, acc)

    walk(k, p, [])
    return PartitionSet(p, tuple(out))


@lru_cache(maxsize=None)
def _diatomic_rank(r: int) -> int:
    if r == 0:
        return 1
    cls, q = parity_decompose(unrank(r))
    if cls is Parity.ODD:
        # F(φ²q + 1) = F(φq)
        return _diatomic_rank(rank(PHI * q))
    if cls is Parity.CURIOUS:
        # F(φ³q + φ) = F(φ²q + 1)
        return _diatomic_rank(rank(PHI2 * q + ONE))
    # p = φ²s with s = p' † 1:  F(φ²(p' † 1)) = F(p') + F(p' † 1)
    return _diatomic_rank(rank(predecessor(q))) + _diatomic_rank(rank(q))


def fib_diatomic_phi(p) -> int:
    """Hyperphinary count of a phinary number by the parity recurrence."""
    p = PhiInt.coerce(p)
    if not is_phinary(p):
        raise NotPhinary(f"{p} is not a non-negative phinary number")
    return _diatomic_rank(rank(p))


def fib_mult(a: int, b: int) -> int:
    """Knuth's circle product: Σ F_{c+d} over Zeckendorf indices c of a and d of b."""
    if a < 0 or b < 0:
        raise DomainError("circle product needs non-negative operands")
    return sum(fib(c + d) for c in zeckendorf(a) for d in zeckendorf(b))


def phi_circ(p, q) -> PhiInt:
    """Σ φ^(c+d) over the standard-form exponents of p and q."""
    cs = encode_standard(p).positions()
    ds = encode_standard(q).positions()
    total = PhiInt(0, 0)
    for c in cs:
        for d in ds:
            total = total + phi_pow(c + d)
    return total


def totient(n: int) -> int:
    result, m, d = n, n, 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


@dataclass(frozen=True)
class OccurrenceReport:
    value: int
    bound: int
    indices: tuple[int, ...]
    count: int
    totient: int


def primary_occurrences(v: int, bound: int = 1 << 16) -> OccurrenceReport:
    """Even indices m <= bound with H(m) = v.

    Odd indices only repeat values already seen at smaller indices, so the
    even ones are the primary occurrences. The scan is declared inconclusive
    when an occurrence lands in the upper half of the window.
    """
    if v < 1:
        raise DomainError("values of H are positive")
    h = hyperbinary_table(bound + 1)
    idx = tuple(m for m in range(0, bound + 1, 2) if h[m] == v)
    if any(m > bound // 2 for m in idx):
        raise InconclusiveBound(f"bound {bound} too small for value {v}")
    return OccurrenceReport(v, bound, idx, len(idx), totient(v))
