"""Phinary integers as an ordered set: rank/unrank, successor, hyperoperations, parity.

The phinary numbers are the non-negative elements of Z[φ] whose base-φ expansion
has no fractional digits, together with their negatives. Listed in increasing
order they are 0, 1, φ, φ+1, φ+2, 2φ+1, ... and the rank of aφ+b in that list is
simply 2a + b.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .codec import encode_standard
from .core import ONE, PHI, ZERO, PhiInt, phi_pow
from .errors import DomainError, ExceptionalPair, InverseUndefined, NotPhinary
from .words import LETTER_VALUE, floor_phi_multiple

PHI_INV2 = phi_pow(-2)
PHI_INV3 = phi_pow(-3)
PHI2 = phi_pow(2)
PHI3 = phi_pow(3)

# results of ordinary hyperoperations are refused beyond this many bits
MAX_BITS = 1 << 20


def unrank(n: int) -> PhiInt:
    """The n-th phinary number; negative n gives the mirror image."""
    if n < 0:
        return -unrank(-n)
    m = n + 1
    # a = ⌊m/φ²⌋ = ⌊(3m - m√5)/2⌋, exact because m√5 is irrational
    a = (3 * m - isqrt(5 * m * m) - 1) // 2
    return PhiInt(a, n - 2 * a)


def is_phinary(x) -> bool:
    """Non-negative and listed; agrees with codec.is_phinary."""
    x = PhiInt.coerce(x)
    r = 2 * x.a + x.b
    return r >= 0 and unrank(r) == x


def is_phinary_integer(x) -> bool:
    """True for phinary numbers and their negatives."""
    x = PhiInt.coerce(x)
    return unrank(2 * x.a + x.b) == x


def rank(p) -> int:
    p = PhiInt.coerce(p)
    r = 2 * p.a + p.b
    if unrank(r) != p:
        raise NotPhinary(f"{p} is not a phinary integer")
    return r


@dataclass(frozen=True)
class PhinaryOrdinal:
    value: PhiInt
    rank: int

    @classmethod
    def from_value(cls, p) -> PhinaryOrdinal:
        p = PhiInt.coerce(p)
        return cls(p, rank(p))

    @classmethod
    def from_rank(cls, n: int) -> PhinaryOrdinal:
        return cls(unrank(n), n)

    def __str__(self):
        return str(self.value)


def mirror(p) -> PhiInt:
    rank(p)
    return -PhiInt.coerce(p)


def successor(p) -> PhiInt:
    return unrank(rank(p) + 1)


def predecessor(p) -> PhiInt:
    return unrank(rank(p) - 1)


def step_letter(i: int) -> str:
    """Letter of the i-th successor step (the step from rank i-1 to rank i), i >= 1."""
    return "A" if floor_phi_multiple(i + 1) - floor_phi_multiple(i) - 1 == 1 else "B"


def successor_tally(p) -> PhiInt:
    """Successor from the floor formula (1-ψ)(⌊(n+1)φ⌋ - ⌊nφ⌋ - 1) + ψ, without unrank.

    For p < 0 the mirror identity S(p) = -P(-p) fixes the step index.
    """
    r = rank(p)
    p = PhiInt.coerce(p)
    i = r + 1 if r >= 0 else -r
    return p + LETTER_VALUE[step_letter(i)]


def predecessor_tally(p) -> PhiInt:
    r = rank(p)
    p = PhiInt.coerce(p)
    i = r if r > 0 else 1 - r
    return p - LETTER_VALUE[step_letter(i)]


# --- ordinary hyperoperations on Z ------------------------------------------

def _guard(bits: int):
    if bits > MAX_BITS:
        raise DomainError("hyperoperation result too large to represent")


def ordinary_hyperop(level: int, a: int, b: int) -> int:
    if level == 0:
        return b + 1
    if level == 1:
        return a + b
    if level == 2:
        return a * b
    if level == 3:
        if b < 0:
            if a in (1, -1):
                return a ** (-b)
            raise InverseUndefined(f"{a}^{b} is not an integer")
        if abs(a) > 1:
            _guard(b * abs(a).bit_length())
        return a ** b
    if level >= 4:
        if b < 0:
            raise InverseUndefined("negative height")
        result = 1
        for _ in range(b):
            result = ordinary_hyperop(level - 1, a, result)
        return result
    if level == -1:
        return a - b
    if level == -2:
        if b == 0 or a % b:
            raise InverseUndefined(f"{a} is not a multiple of {b}")
        return a // b
    if level == -3:
        if b <= 0:
            raise InverseUndefined("root index must be positive")
        if a < 0 and b % 2 == 0:
            raise InverseUndefined("even root of a negative number")
        r = _iroot(abs(a), b)
        if r ** b != abs(a):
            raise InverseUndefined(f"{a} is not a perfect {b}-th power")
        return -r if a < 0 else r
    raise DomainError(f"unsupported level {level}")


def _iroot(x: int, k: int) -> int:
    if x < 2:
        return x
    if k == 1:
        return x
    if k == 2:
        return isqrt(x)
    r = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def hyperop(level: int, p, q) -> PhiInt:
    """Phinary hyperoperation: unrank of the ordinary one applied to the ranks."""
    return unrank(ordinary_hyperop(level, rank(p), rank(q)))


def dagger(p, q):
    return hyperop(1, p, q)


def star(p, q):
    return hyperop(2, p, q)


def bar_exp(p, q):
    return hyperop(3, p, q)


def hook(p, q):
    return hyperop(-1, p, q)


def stripe(p, q):
    return hyperop(-2, p, q)


def bar_root(p, q):
    return hyperop(-3, p, q)


def hyperop_recursive(level: int, p, q) -> PhiInt:
    """Evaluate by the successor recursion a ⊗n b = a ⊗(n-1) (a ⊗n P(b)); rank(q) >= 0."""
    p, q = PhiInt.coerce(p), PhiInt.coerce(q)
    if level < 0:
        raise DomainError("the recursion defines non-negative levels only")
    if rank(q) < 0:
        raise DomainError("the recursion needs a non-negative second operand")
    return _recursive(level, p, q)


@lru_cache(maxsize=None)
def _recursive(level: int, a: PhiInt, b: PhiInt) -> PhiInt:
    if level == 0:
        return successor_tally(b)
    if not b:
        return {1: a, 2: ZERO}.get(level, ONE)
    inner = _recursive(level, a, predecessor_tally(b))
    if level == 1:
        return successor_tally(inner)
    return _apply_left(level - 1, a, inner)


def _apply_left(level: int, a: PhiInt, x: PhiInt) -> PhiInt:
    # a ⊗level x for a possibly long x; level 1 walks x down and a up in lockstep
    if level == 1:
        if x.sign() < 0:
            raise DomainError("the recursion needs a non-negative second operand")
        acc = a
        while x:
            x = predecessor_tally(x)
            acc = successor_tally(acc)
        return acc
    return _recursive(level, a, x)


def dagger_power_sum(p, k: int) -> PhiInt:
    """p † φ^k, which equals the ordinary sum p + φ^k when 0 <= p <= φ^k."""
    p = PhiInt.coerce(p)
    if k < 0:
        raise DomainError("k must be non-negative")
    pk = phi_pow(k)
    if not is_phinary(p) or p > pk:
        raise DomainError(f"need a phinary p with p <= φ^{k}")
    if (k == 0 and p == ONE) or (k == 1 and p == PHI):
        raise ExceptionalPair(f"{p} † φ^{k} is not the ordinary sum")
    result = dagger(p, pk)
    assert result == p + pk
    return result


# --- parity -------------------------------------------------------------------

class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"
    CURIOUS = "curious"


def parity_decompose(p) -> tuple[Parity, PhiInt]:
    """Return the class of p and the phinary q with p = φ²q, φ²q+1 or φ³q+φ."""
    p = PhiInt.coerce(p)
    if not is_phinary(p):
        raise NotPhinary(f"{p} is not phinary")
    found = []
    for cls, q in (
        (Parity.EVEN, p * PHI_INV2),
        (Parity.ODD, (p - 1) * PHI_INV2),
        (Parity.CURIOUS, (p - PHI) * PHI_INV3),
    ):
        if is_phinary(q):
            found.append((cls, q))
    assert len(found) == 1, f"parity of {p} is not unique: {found}"
    return found[0]


def parity(p) -> Parity:
    return parity_decompose(p)[0]


def parity_by_suffix(p) -> Parity:
    s = str(encode_standard(p))
    if s == "0" or s.endswith("00"):
        return Parity.EVEN
    if s.endswith("1"):
        return Parity.ODD
    return Parity.CURIOUS
