"""Base-φ digit strings: greedy encoding, decoding and Bergman-style normalization."""
from __future__ import annotations

from dataclasses import dataclass

from .core import ONE, PhiInt, QuadRat, phi_pow
from .errors import MalformedDigits, NegativeInput, NonTerminating, NotPhinary

FRACTION_CAP = 64


@dataclass(frozen=True)
class PhiDigits:
    """A standard-form expansion: digits in {0,1}, no two adjacent ones.

    int_digits is most-significant first; frac_digits[i] is the digit at φ^-(i+1).
    """

    int_digits: tuple[int, ...]
    frac_digits: tuple[int, ...] = ()

    def __post_init__(self):
        digits = self.int_digits + self.frac_digits
        if not self.int_digits:
            raise MalformedDigits("empty integer part")
        if any(d not in (0, 1) for d in digits):
            raise MalformedDigits("digits must be 0 or 1")
        if len(self.int_digits) > 1 and self.int_digits[0] == 0:
            raise MalformedDigits("leading zero")
        if self.frac_digits and self.frac_digits[-1] == 0:
            raise MalformedDigits("trailing fractional zero")
        if any(x == y == 1 for x, y in zip(digits, digits[1:])):
            raise MalformedDigits("adjacent ones")

    @classmethod
    def parse(cls, text: str) -> PhiDigits:
        text = text.strip()
        head, _, tail = text.partition(".")
        if not head or not set(head + tail) <= {"0", "1"} or ("." in text and not tail):
            raise MalformedDigits(f"not a base-φ digit string: {text!r}")
        return cls(tuple(map(int, head)), tuple(map(int, tail)))

    def __str__(self):
        s = "".join(map(str, self.int_digits))
        if self.frac_digits:
            s += "." + "".join(map(str, self.frac_digits))
        return s

    def positions(self) -> list[int]:
        """Exponents k with digit 1, highest first."""
        n = len(self.int_digits)
        out = [n - 1 - i for i, d in enumerate(self.int_digits) if d]
        out += [-(i + 1) for i, d in enumerate(self.frac_digits) if d]
        return out


class RawDigits:
    """Arbitrary non-negative digits keyed by position (φ^k for key k)."""

    def __init__(self, digits: dict[int, int] | None = None):
        self.digits = {k: v for k, v in (digits or {}).items() if v}
        if any(v < 0 for v in self.digits.values()):
            raise MalformedDigits("negative digit")

    @classmethod
    def from_string(cls, text: str) -> RawDigits:
        head, _, tail = text.strip().partition(".")
        if not head or not (head + tail).isdigit():
            raise MalformedDigits(f"not a digit string: {text!r}")
        d = {len(head) - 1 - i: int(c) for i, c in enumerate(head)}
        d.update({-(i + 1): int(c) for i, c in enumerate(tail)})
        return cls(d)

    def value(self) -> QuadRat:
        total = QuadRat(0)
        for k, v in self.digits.items():
            total = total + QuadRat.phi_pow(k) * v
        return total

    def __repr__(self):
        return f"RawDigits({dict(sorted(self.digits.items(), reverse=True))})"


def _from_positions(pos) -> PhiDigits:
    pos = set(pos)
    if not pos:
        return PhiDigits((0,))
    hi, lo = max(pos), min(pos)
    top = max(hi, 0)
    ints = tuple(int(k in pos) for k in range(top, -1, -1))
    fracs = tuple(int(k in pos) for k in range(-1, lo - 1, -1)) if lo < 0 else ()
    return PhiDigits(ints, fracs)


def encode_standard(x) -> PhiDigits:
    """Greedy expansion of a phinary number: repeatedly take the largest φ^k ≤ remainder."""
    x = PhiInt.coerce(x)
    if x.sign() < 0:
        raise NegativeInput(f"{x} is negative")
    if not x:
        return PhiDigits((0,))
    k = 0
    while phi_pow(k + 1) <= x:
        k += 1
    chosen = []
    rem = x
    while rem:
        if rem < ONE:
            raise NotPhinary(f"{x} has a fractional base-φ expansion")
        while phi_pow(k) > rem:
            k -= 1
        chosen.append(k)
        rem = rem - phi_pow(k)
        k -= 2
    return _from_positions(chosen)


def decode(d) -> PhiInt:
    if isinstance(d, str):
        d = PhiDigits.parse(d)
    if d.frac_digits:
        raise MalformedDigits("fractional digits present; use decode_quadrat")
    total = PhiInt(0, 0)
    for k in d.positions():
        total = total + phi_pow(k)
    return total


def decode_quadrat(d) -> QuadRat:
    if isinstance(d, str):
        d = PhiDigits.parse(d)
    total = QuadRat(0)
    for k in d.positions():
        total = total + QuadRat.phi_pow(k)
    return total


def _potential(digits: dict[int, int]) -> int:
    # Σ d_k 2^k grows under both rewrites (2 > φ); its negation strictly decreases.
    return -sum(v << (k + FRACTION_CAP + 2) for k, v in digits.items())


def normalize(raw: RawDigits, cap: int = FRACTION_CAP) -> PhiDigits:
    """Rewrite to standard form with 011 → 100 and 0200 → 1001 until fixpoint."""
    d = dict(raw.digits)
    pot = _potential(d)
    while True:
        # carries first: they shrink the digit sum and keep the expansion shallow
        pairs = [k for k in d if d[k] and d.get(k - 1, 0)]
        if pairs:
            k = max(pairs)
            m = min(d[k], d[k - 1])
            d[k] -= m
            d[k - 1] -= m
            d[k + 1] = d.get(k + 1, 0) + m
        else:
            big = [k for k, v in d.items() if v >= 2]
            if not big:
                break
            k = max(big)
            m = d[k] // 2
            d[k] -= 2 * m
            d[k + 1] = d.get(k + 1, 0) + m
            d[k - 2] = d.get(k - 2, 0) + m
        d = {k: v for k, v in d.items() if v}
        if d and min(d) < -cap:
            raise NonTerminating(f"expansion needs more than {cap} fractional digits")
        new = _potential(d)
        assert new < pot, "normalization potential failed to decrease"
        pot = new
    return _from_positions(d)


def encode_natural(n: int) -> PhiDigits:
    if n < 0:
        raise NegativeInput(f"{n} is negative")
    return normalize(RawDigits({0: n}))


def is_phinary(x) -> bool:
    x = PhiInt.coerce(x)
    if x.sign() < 0:
        return False
    try:
        encode_standard(x)
    except NotPhinary:
        return False
    return True
