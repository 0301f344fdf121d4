"""Exact arithmetic in Z[φ] and Q(√5).

PhiInt(a, b) is the integer aφ + b. QuadRat(p, q) is the real p + q√5 with
rational p, q. No floating point is used anywhere in comparisons.
"""
from __future__ import annotations

import re
import threading
from fractions import Fraction
from math import isqrt

from .errors import DivisionByZero, DomainError


def _sign_surd(p, q) -> int:
    """Sign of p + q√5 for rational (or integer) p, q."""
    if p >= 0 and q >= 0:
        return 0 if p == 0 and q == 0 else 1
    if p <= 0 and q <= 0:
        return -1
    d = p * p - 5 * q * q
    # d is never zero here since √5 is irrational and p, q are both nonzero
    if p > 0:
        return 1 if d > 0 else -1
    return 1 if d < 0 else -1


class FibCache:
    """Thread-safe growable table of Fibonacci numbers, F0 = 0, F1 = 1."""

    def __init__(self):
        self._table = [0, 1]
        self._lock = threading.Lock()

    def __call__(self, n: int) -> int:
        if n < 0:
            raise DomainError(f"fib index must be non-negative, got {n}")
        table = self._table
        if n < len(table):
            return table[n]
        with self._lock:
            while len(table) <= n:
                table.append(table[-1] + table[-2])
        return table[n]


fib = FibCache()


class PhiInt:
    """The element aφ + b of Z[φ]."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))

    def __setattr__(self, name, value):
        raise AttributeError("PhiInt is immutable")

    @classmethod
    def coerce(cls, x) -> PhiInt:
        if isinstance(x, PhiInt):
            return x
        if isinstance(x, int):
            return cls(0, x)
        raise TypeError(f"cannot interpret {x!r} as PhiInt")

    @classmethod
    def parse(cls, text: str) -> PhiInt:
        return parse_phi(text)

    def __repr__(self):
        return f"PhiInt({self.a}, {self.b})"

    def __str__(self):
        a, b = self.a, self.b
        if a == 0:
            return str(b)
        head = {1: "φ", -1: "-φ"}.get(a, f"{a}φ")
        if b == 0:
            return head
        return f"{head}{b:+d}"

    def __eq__(self, other):
        if isinstance(other, PhiInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.a == 0 and self.b == other
        return NotImplemented

    def __hash__(self):
        return hash(self.b) if self.a == 0 else hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __add__(self, other):
        if isinstance(other, int):
            return PhiInt(self.a, self.b + other)
        if isinstance(other, PhiInt):
            return PhiInt(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return PhiInt(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, int):
            return PhiInt(self.a, self.b - other)
        if isinstance(other, PhiInt):
            return PhiInt(self.a - other.a, self.b - other.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return PhiInt(-self.a, other - self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return PhiInt(self.a * other, self.b * other)
        if isinstance(other, PhiInt):
            a, b, c, d = self.a, self.b, other.a, other.b
            # φ² = φ + 1
            return PhiInt(a * c + a * d + b * c, a * c + b * d)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> PhiInt:
        # φ ↦ 1 - φ
        return PhiInt(-self.a, self.a + self.b)

    def norm(self) -> int:
        a, b = self.a, self.b
        return b * b + a * b - a * a

    def exact_div(self, other) -> PhiInt:
        other = PhiInt.coerce(other)
        n = other.norm()
        if n == 0:
            raise DivisionByZero("division by zero in Z[φ]")
        t = self * other.conjugate()
        if t.a % n or t.b % n:
            raise DomainError(f"{self} is not divisible by {other} in Z[φ]")
        return PhiInt(t.a // n, t.b // n)

    def sign(self) -> int:
        # 2(aφ + b) = (2b + a) + a√5
        return _sign_surd(2 * self.b + self.a, self.a)

    def __lt__(self, other):
        other = PhiInt.coerce(other)
        return (self - other).sign() < 0

    def __le__(self, other):
        other = PhiInt.coerce(other)
        return (self - other).sign() <= 0

    def __gt__(self, other):
        other = PhiInt.coerce(other)
        return (self - other).sign() > 0

    def __ge__(self, other):
        other = PhiInt.coerce(other)
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def to_quadrat(self) -> QuadRat:
        return QuadRat(Fraction(2 * self.b + self.a, 2), Fraction(self.a, 2))


ZERO = PhiInt(0, 0)
ONE = PhiInt(0, 1)
PHI = PhiInt(1, 0)
PSI = PhiInt(1, -1)  # 1/φ = φ - 1


def sign(x) -> int:
    if isinstance(x, int):
        return (x > 0) - (x < 0)
    return x.sign()


def phi_pow(n: int) -> PhiInt:
    """φ^n = F_n φ + F_{n-1}; negative n handled by the unit φ^-1 = φ - 1."""
    if n >= 1:
        return PhiInt(fib(n), fib(n - 1))
    if n == 0:
        return ONE
    m = -n
    # φ^-m = (-1)^m (F_{m+1} - F_m φ)
    s = -1 if m % 2 else 1
    return PhiInt(-s * fib(m), s * fib(m + 1))


_PHI_TOKEN = re.compile(r"\*?\s*(phi|φ)", re.IGNORECASE)
_PHI_FORM = re.compile(r"^([+-]?)(\d*)φ(?:([+-])(\d+))?$")
_INT_FORM = re.compile(r"^[+-]?\d+$")


def parse_phi(text: str) -> PhiInt:
    s = _PHI_TOKEN.sub("φ", text.strip()).replace(" ", "")
    if _INT_FORM.match(s):
        return PhiInt(0, int(s))
    m = _PHI_FORM.match(s)
    if not m:
        raise DomainError(f"cannot parse {text!r} as aφ+b")
    sgn, coef, bsgn, bval = m.groups()
    a = int(coef) if coef else 1
    if sgn == "-":
        a = -a
    b = int(bval) if bval else 0
    if bsgn == "-":
        b = -b
    return PhiInt(a, b)


class QuadRat:
    """The real number p + q√5 with p, q rational."""

    __slots__ = ("p", "q")

    def __init__(self, p=0, q=0):
        if isinstance(p, PhiInt):
            p, q = Fraction(2 * p.b + p.a, 2), Fraction(p.a, 2)
        object.__setattr__(self, "p", Fraction(p))
        object.__setattr__(self, "q", Fraction(q))

    def __setattr__(self, name, value):
        raise AttributeError("QuadRat is immutable")

    @classmethod
    def coerce(cls, x) -> QuadRat:
        if isinstance(x, QuadRat):
            return x
        if isinstance(x, PhiInt):
            return x.to_quadrat()
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot interpret {x!r} as QuadRat")

    @classmethod
    def sqrt5(cls) -> QuadRat:
        return cls(0, 1)

    @classmethod
    def phi_pow(cls, n: int) -> QuadRat:
        return phi_pow(n).to_quadrat()

    def __repr__(self):
        return f"QuadRat({self.p}, {self.q})"

    def __str__(self):
        return f"{self.p} + {self.q}√5"

    def exact_str(self) -> str:
        """Compact wire form 'p/q+r/s√5' used by the JSON dumps."""
        q = self.q
        return f"{self.p}{'+' if q >= 0 else '-'}{abs(q)}√5"

    def __eq__(self, other):
        if isinstance(other, (QuadRat, PhiInt, int, Fraction)):
            other = QuadRat.coerce(other)
            return self.p == other.p and self.q == other.q
        return NotImplemented

    def __bool__(self):
        return bool(self.p or self.q)

    def __hash__(self):
        return hash(self.p) if self.q == 0 else hash((self.p, self.q))

    def _wrap(self, other):
        if isinstance(other, (QuadRat, PhiInt, int, Fraction)):
            return QuadRat.coerce(other)
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __neg__(self):
        return QuadRat(-self.p, -self.q)

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.p - o.p, self.q - o.q)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return QuadRat(self.p * o.p + 5 * self.q * o.q, self.p * o.q + self.q * o.p)

    __rmul__ = __mul__

    def conjugate(self) -> QuadRat:
        return QuadRat(self.p, -self.q)

    def norm(self) -> Fraction:
        return self.p * self.p - 5 * self.q * self.q

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise DivisionByZero("division by zero in Q(√5)")
        t = self * o.conjugate()
        return QuadRat(t.p / n, t.q / n)

    def __rtruediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return QuadRat(1) / (self ** -n)
        result, base = QuadRat(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sign(self) -> int:
        return _sign_surd(self.p, self.q)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def is_rational(self) -> bool:
        return self.q == 0

    def floor(self) -> int:
        if self.q == 0:
            return self.p.numerator // self.p.denominator
        d = self.p.denominator * self.q.denominator
        A = self.p.numerator * (d // self.p.denominator)
        B = self.q.numerator * (d // self.q.denominator)
        s = isqrt(5 * B * B)
        k = (A + s) // d if B > 0 else (A - s - 1) // d
        while QuadRat(k) > self:
            k -= 1
        while QuadRat(k + 1) <= self:
            k += 1
        return k

    def sqrt(self) -> QuadRat:
        """Exact square root inside Q(√5); DomainError when it does not exist."""
        if self.sign() < 0:
            raise DomainError("square root of a negative number")
        if self.sign() == 0:
            return QuadRat(0)
        # (x + y√5)² = p + q√5  ⇒  x² = (p ± √(p² - 5q²)) / 2
        r = _frac_sqrt(self.norm())
        if r is not None:
            for x2 in ((self.p + r) / 2, (self.p - r) / 2):
                x = _frac_sqrt(x2)
                if x is None:
                    continue
                if x == 0:
                    y2 = self.p / 5
                    y = _frac_sqrt(y2)
                    if y is not None and self.q == 0:
                        return QuadRat(0, y)
                    continue
                cand = QuadRat(x, self.q / (2 * x))
                if cand * cand == self:
                    return abs(cand)
        raise DomainError(f"{self} has no square root in Q(√5)")


def _frac_sqrt(f: Fraction):
    f = Fraction(f)
    if f < 0:
        return None
    n, d = f.numerator, f.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def to_decimal(x, digits: int) -> str:
    """Correctly rounded decimal rendering of x with the given digits after the point."""
    if digits < 0:
        raise DomainError("digits must be non-negative")
    x = QuadRat.coerce(x)
    neg = x.sign() < 0
    scaled = abs(x) * (10 ** digits)
    n = (scaled + Fraction(1, 2)).floor()
    if n == 0:
        neg = False
    text = str(n).rjust(digits + 1, "0")
    if digits:
        text = text[:-digits] + "." + text[-digits:]
    return ("-" if neg else "") + text
