"""Rational trees built from diatomic sequences.

Fractions are kept unreduced as (numerator, denominator) pairs so that the
raw sequence values stay visible; call reduced() to compare as rationals.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .core import ONE, phi_pow
from .diatomic import fib_diatomic_phi, hyperbinary
from .errors import DepthLimit, DomainError
from .ordinal import PHI2, dagger, hook, rank, unrank
from .words import fib_word

DEFAULT_DEPTH_LIMIT = 16
KINDS = ("cw", "sb", "prt", "pert")


def depth_limit() -> int:
    env = os.environ.get("PHINARY_DEPTH_LIMIT")
    return int(env) if env else DEFAULT_DEPTH_LIMIT


def _check_depth(n: int):
    if n < 0:
        raise DomainError("row index must be non-negative")
    if n > depth_limit():
        raise DepthLimit(f"row {n} exceeds the depth limit {depth_limit()}")


@dataclass(frozen=True)
class Frac:
    num: int
    den: int

    def __str__(self):
        return f"{self.num}/{self.den}"

    def reduced(self) -> Fraction | None:
        return None if self.den == 0 else Fraction(self.num, self.den)

    def is_reduced(self) -> bool:
        return gcd(self.num, self.den) == 1


def calkin_wilf_row(n: int) -> list[Frac]:
    _check_depth(n)
    return [Frac(hyperbinary(2 ** n + k), hyperbinary(2 ** (n + 1) - (k + 1))) for k in range(2 ** n)]


def stern_brocot_row(n: int) -> list[Frac]:
    _check_depth(n)
    return [Frac(hyperbinary(2 * k), hyperbinary(2 ** (n + 1) - 2 * (k + 1))) for k in range(2 ** n)]


def prt_row(n: int) -> list[Frac]:
    """Row n: F(φ^n † p) / F(φ^(n+1) ⇀ (p † 1)) over phinary 0 <= p < φ^n."""
    _check_depth(n)
    top, nxt = phi_pow(n), phi_pow(n + 1)
    row = []
    for r in range(rank(top)):
        p = unrank(r)
        row.append(Frac(fib_diatomic_phi(dagger(top, p)), fib_diatomic_phi(hook(nxt, dagger(p, ONE)))))
    return row


def pert_row(n: int) -> list[Frac]:
    """Row n: F(φ²p) / F(φ^(n+1) ⇀ φ²(p † 1)) over phinary 0 <= p < φ^n.

    A hook with negative rank leaves the tree; its denominator is written 0.
    The root row is 1/1.
    """
    _check_depth(n)
    if n == 0:
        return [Frac(1, 1)]
    top, nxt = phi_pow(n), phi_pow(n + 1)
    row = []
    for r in range(rank(top)):
        p = unrank(r)
        h = hook(nxt, PHI2 * dagger(p, ONE))
        den = fib_diatomic_phi(h) if rank(h) >= 0 else 0
        row.append(Frac(fib_diatomic_phi(PHI2 * p), den))
    return row


ROW_BUILDERS = {"cw": calkin_wilf_row, "sb": stern_brocot_row, "prt": prt_row, "pert": pert_row}


def tree_row(kind: str, n: int) -> list[Frac]:
    try:
        return ROW_BUILDERS[kind](n)
    except KeyError:
        raise DomainError(f"unknown tree {kind!r}") from None


def children(kind: str, n: int, k: int) -> list[int]:
    """Positions in row n+1 of the children of node k in row n.

    Binary trees double the position. In the phinary trees row n is labelled by
    the Fibonacci word w_(n+1); an A node has two children and a B node one, so
    the labels of row n+1 are the substituted word w_(n+2).
    """
    if kind in ("cw", "sb"):
        return [2 * k, 2 * k + 1]
    word = fib_word(n + 1)
    start = sum(2 if c == "A" else 1 for c in word[:k])
    return [start, start + 1] if word[k] == "A" else [start]


def to_dot(kind: str, rows: int) -> str:
    if rows > 8:
        raise DomainError("DOT export is limited to 8 rows")
    lines = [f"digraph {kind} {{", "  node [shape=plaintext];"]
    data = [tree_row(kind, n) for n in range(rows + 1)]
    for n, row in enumerate(data):
        for k, f in enumerate(row):
            lines.append(f'  "{n}_{k}" [label="{f}"];')
    for n in range(rows):
        for k in range(len(data[n])):
            for c in children(kind, n, k):
                lines.append(f'  "{n}_{k}" -> "{n + 1}_{c}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def find_in_prt(f, depth: int | None = None):
    """First (row, position) whose entry equals f as a rational number."""
    target = Fraction(f.num, f.den) if isinstance(f, Frac) else Fraction(f)
    depth = depth_limit() if depth is None else depth
    for n in range(depth + 1):
        for k, g in enumerate(prt_row(n)):
            if g.den and Fraction(g.num, g.den) == target:
                return n, k
    return None


@dataclass(frozen=True)
class CoverageReport:
    kind: str
    depth: int
    bound: int
    expected: int
    found: int
    missing: tuple
    duplicates: tuple

    @property
    def ok(self) -> bool:
        return not self.missing and not self.duplicates and self.found == self.expected


def verify_coverage(kind: str, depth: int, bound: int = 6) -> CoverageReport:
    """Each reduced u/v with u, v <= bound should appear exactly once in rows 0..depth."""
    want = {Fraction(u, v) for u in range(1, bound + 1) for v in range(1, bound + 1) if gcd(u, v) == 1}
    seen: dict[Fraction, int] = {}
    for n in range(depth + 1):
        for f in tree_row(kind, n):
            q = f.reduced()
            if q is not None and q.numerator <= bound and q.denominator <= bound:
                seen[q] = seen.get(q, 0) + 1
    missing = tuple(sorted(want - set(seen)))
    dups = tuple(sorted(q for q, c in seen.items() if c > 1))
    return CoverageReport(kind, depth, bound, len(want), len(set(seen) & want), missing, dups)


def stern_brocot_inorder(depth: int) -> list[Fraction]:
    """Nodes of rows 0..depth in in-order (node k of row n sits at (2k+1)·2^(depth-n))."""
    slots = {}
    for n in range(depth + 1):
        for k, f in enumerate(stern_brocot_row(n)):
            slots[(2 * k + 1) << (depth - n)] = Fraction(f.num, f.den)
    return [slots[i] for i in sorted(slots)]
