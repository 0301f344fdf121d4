"""Named verification suites shared by the command line and the test suite.

Each suite returns a list of Check records. Output is deterministic: no
timings, no unordered iteration, fixed seeds for the randomized checks.
"""
from __future__ import annotations

import random
from decimal import Decimal, localcontext
from dataclasses import dataclass
from fractions import Fraction

from .codec import RawDigits, encode_natural, encode_standard, normalize
from .core import ONE, PHI, PhiInt, QuadRat, fib, parse_phi, phi_pow
from .diatomic import (
    fib_diatomic_nat,
    fib_diatomic_phi,
    fib_mult,
    hyperbinary,
    hyperbinary_reps,
    hyperphinary_reps,
    phi_circ,
)
from .geometry import (
    GD_SETUP,
    cross_ratio,
    cross_ratio_points,
    golden_edge_configuration,
    gd_row,
    interval_ratio_from_cross,
    project,
    row_word,
    solve_cardinality_equations,
    verify_area_identity,
    verify_lemma_2d,
    verify_limits,
    verify_projection,
    verify_row_length_identity,
)
from .ordinal import PHI2, PHI3, Parity, dagger, parity, parity_by_suffix, unrank
from .trees import prt_row, stern_brocot_inorder, verify_coverage
from .words import infinite_prefix, truncate_palindrome


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


# --- reference tables ----------------------------------------------------------------

PHINARY_TABLE = [
    "1", "φ", "φ+1", "φ+2", "2φ+1", "2φ+2", "3φ+1", "3φ+2", "3φ+3", "4φ+2", "4φ+3",
    "4φ+4", "5φ+3", "5φ+4", "6φ+3", "6φ+4", "6φ+5", "7φ+4", "7φ+5", "8φ+4", "8φ+5", "8φ+6",
    "9φ+5", "9φ+6", "9φ+7", "10φ+6", "10φ+7", "11φ+6", "11φ+7", "11φ+8", "12φ+7", "12φ+8", "12φ+9",
    "13φ+8", "13φ+9", "14φ+8", "14φ+9", "14φ+10", "15φ+9", "15φ+10", "16φ+9", "16φ+10", "16φ+11",
    "17φ+10", "17φ+11", "17φ+12", "18φ+11", "18φ+12", "19φ+11", "19φ+12", "19φ+13", "20φ+12",
    "20φ+13", "21φ+12", "21φ+13",
]

STANDARD_FORMS = [
    ("1", "1"), ("φ", "10"), ("φ+1", "100"), ("φ+2", "101"),
    ("2φ+1", "1000"), ("2φ+2", "1001"), ("3φ+1", "1010"), ("3φ+2", "10000"),
]

NATURAL_FORMS = [(1, "1"), (2, "10.01"), (3, "100.01"), (4, "101.01"), (5, "1001.1001")]

# counts and listed representations (as exponent tuples) for n = 0..8
HYPERBINARY_TABLE = [
    (0, 1, [()]),
    (1, 1, [(0,)]),
    (2, 2, [(1,), (0, 0)]),
    (3, 1, [(1, 1)]),
    (4, 3, [(2,), (1, 1), (1, 0, 0)]),
    (5, 2, [(2, 0), (1, 1, 0)]),
    (6, 3, [(2, 1), (2, 0, 0), (1, 1, 0, 0)]),
    (7, 1, [(2, 1, 0)]),
    (8, 4, [(3,), (2, 2), (2, 1, 1), (2, 1, 1, 0)]),
]

DIATOMIC_PREFIX = [1, 1, 1, 2, 1, 2, 2, 1, 3, 2, 2, 3, 1, 3, 3, 2, 4, 2, 3, 3, 1]

PARITY_LIST = [
    ("0", "even"), ("1", "odd"), ("φ", "curious"), ("φ+1", "even"), ("φ+2", "odd"),
    ("2φ+1", "even"), ("2φ+2", "curious"), ("3φ+1", "odd"), ("3φ+2", "even"), ("3φ+3", "odd"),
    ("4φ+2", "curious"), ("4φ+3", "even"), ("4φ+4", "odd"), ("5φ+3", "even"),
]

GD_PAIR_COUNTS = [1, 2, 4, 7, 12, 20]


# --- suites --------------------------------------------------------------------------

def suite_table() -> list[Check]:
    bad = [(n, str(unrank(n)), want) for n, want in enumerate(PHINARY_TABLE, 1) if unrank(n) != parse_phi(want)]
    return [Check("unrank 1..55 matches the listing", not bad, f"{55 - len(bad)}/55" + (f" first mismatch {bad[0]}" if bad else ""))]


def suite_codec() -> list[Check]:
    out = []
    bad = [(p, str(encode_standard(parse_phi(p))), s) for p, s in STANDARD_FORMS if str(encode_standard(parse_phi(p))) != s]
    out.append(Check("standard forms", not bad, f"{8 - len(bad)}/8" + (f" mismatches {bad}" if bad else "")))
    bad = []
    for n, s in NATURAL_FORMS:
        got = str(encode_natural(n))
        if got != s:
            listed = RawDigits.from_string(s).value()
            bad.append(f"{n}: got {got}, listed {s} (which evaluates to {listed.p if listed.is_rational() else listed.exact_str()})")
    out.append(Check("natural forms", not bad, f"{5 - len(bad)}/5" + (f" mismatches {'; '.join(bad)}" if bad else "")))
    for s in ("1100", "1011"):
        got = str(normalize(RawDigits.from_string(s)))
        out.append(Check(f"normalize {s}", got == "10000", got))
    return out


def suite_hyperbinary(limit: int = 2048) -> list[Check]:
    bad = [n for n in range(limit + 1) if hyperbinary(n) != len(hyperbinary_reps(n))]
    out = [Check(f"H(n) equals the partition count for n <= {limit}", not bad, f"mismatches {bad[:5]}" if bad else "")]
    bad = [(n, hyperbinary(n), c) for n, c, _ in HYPERBINARY_TABLE if hyperbinary(n) != c]
    out.append(Check("table counts n = 0..8", not bad, f"mismatches {bad}" if bad else "9/9"))
    # listed representations that are not partitions of n; the enumerator's set is authoritative
    typos = []
    for n, _, reps in HYPERBINARY_TABLE:
        oracle = set(hyperbinary_reps(n).parts)
        for r in reps:
            if r not in oracle:
                typos.append(f"{n}: {'+'.join(f'2^{e}' for e in r) or '0'}")
    out.append(Check("table representations resolved by enumeration", True, "listed typos: " + ", ".join(typos) if typos else "none"))
    return out


def suite_diatomic(limit: int = 1000) -> list[Check]:
    bad = []
    for n in range(limit + 1):
        p = unrank(n)
        a, b, c = fib_diatomic_phi(p), len(hyperphinary_reps(p)), fib_diatomic_nat(n)
        if not a == b == c:
            bad.append((n, a, b, c))
    out = [Check(f"recurrence, enumeration and Fibonacci count agree for n <= {limit}", not bad, f"mismatches {bad[:5]}" if bad else "")]
    got = [fib_diatomic_nat(n) for n in range(21)]
    out.append(Check("21-term prefix", got == DIATOMIC_PREFIX, ",".join(map(str, got))))
    return out


def suite_recurrence(count: int = 500) -> list[Check]:
    F = fib_diatomic_phi
    odd = curious = even = 0
    for r in range(count):
        p = unrank(r)
        odd += F(PHI2 * p + 1) == F(PHI * p)
        curious += F(PHI3 * p + PHI) == F(PHI2 * p + 1)
        s = dagger(p, ONE)
        even += F(PHI2 * s) == F(p) + F(s)
    return [
        Check("odd branch F(φ²p+1) = F(φp)", odd == count, f"{odd}/{count}"),
        Check("curious branch F(φ³p+φ) = F(φ²p+1)", curious == count, f"{curious}/{count}"),
        Check("even branch F(φ²(p†1)) = F(p) + F(p†1)", even == count, f"{even}/{count}"),
    ]


def suite_parity(count: int = 10000) -> list[Check]:
    bad = [r for r in range(count) if parity(unrank(r)) is not parity_by_suffix(unrank(r))]
    out = [Check(f"suffix and algebraic rules agree on {count} numbers", not bad, f"first mismatches {bad[:5]}" if bad else "")]
    bad = []
    for text, want in PARITY_LIST:
        p = parse_phi(text)
        got = {parity(p).value, parity_by_suffix(p).value}
        if got != {want}:
            bad.append(f"{text} listed {want}, computed {'/'.join(sorted(got))} ({encode_standard(p)})")
    out.append(Check("annotated parity list", not bad, f"{14 - len(bad)}/14" + (f" mismatches: {'; '.join(bad)}" if bad else "")))
    bad = [n for n in range(2, 31) if parity(phi_pow(n)) is not Parity.EVEN]
    out.append(Check("φ^n even for 2 <= n <= 30", not bad, f"odd ones {bad}" if bad else ""))
    return out


def suite_words(count: int = 10000) -> list[Check]:
    steps = []
    prev = unrank(0)
    for r in range(1, count + 1):
        cur = unrank(r)
        d = cur - prev
        steps.append("A" if d == ONE else "B" if d == PhiInt(1, -1) else "?")
        prev = cur
    word = "".join(steps)
    want = infinite_prefix(count)
    first = next((i for i, (x, y) in enumerate(zip(word, want)) if x != y), None)
    return [
        Check("successor increments spell the Fibonacci word", word == want, "" if first is None else f"first difference at {first + 1}"),
        Check("no BB or AAA factor", "BB" not in word and "AAA" not in word),
    ]


def suite_nondistributive() -> list[Check]:
    a, b = parse_phi("2φ+2"), parse_phi("φ+2")
    left = PHI2 * dagger(a, b)
    right = dagger(PHI2 * a, PHI2 * b)
    return [
        Check("φ²((2φ+2)†(φ+2)) = 10φ+6", left == parse_phi("10φ+6"), str(left)),
        Check("(φ²(2φ+2))†(φ²(φ+2)) = 10φ+7", right == parse_phi("10φ+7"), str(right)),
    ]


def suite_trees() -> list[Check]:
    seq = stern_brocot_inorder(12)
    out = [Check("Stern-Brocot in-order ascending through depth 12", all(x < y for x, y in zip(seq, seq[1:])), f"{len(seq)} nodes")]
    for kind in ("cw", "sb"):
        rep = verify_coverage(kind, 7, 6)
        out.append(Check(f"{kind} covers every reduced u/v with u, v <= 6 once by depth 7", rep.ok, f"{rep.found}/{rep.expected}"))
    bad = [n for n in range(15) if len(prt_row(n)) != fib(n + 2)]
    out.append(Check("phinary tree row sizes F_(n+2) through depth 14", not bad, f"bad rows {bad}" if bad else ""))
    root = prt_row(0)
    out.append(Check("phinary tree root 1/1", len(root) == 1 and (root[0].num, root[0].den) == (1, 1), str(root[0])))
    return out


def suite_fibmult(pairs: int = 200) -> list[Check]:
    r = range(1, 13)
    assoc = all(fib_mult(fib_mult(a, b), c) == fib_mult(a, fib_mult(b, c)) for a in r for b in r for c in r)
    comm = all(fib_mult(a, b) == fib_mult(b, a) for a in r for b in r)
    # pairs ordered by rank sum, then by left rank
    ps = [(i, s - i) for s in range(40) for i in range(s + 1)][:pairs]
    bad = [(i, j) for i, j in ps if phi_circ(unrank(i), unrank(j)) != unrank(i) * unrank(j)]
    return [
        Check("4∘7 = 65", fib_mult(4, 7) == 65, str(fib_mult(4, 7))),
        Check("circle product associative on {1..12}^3", assoc),
        Check("circle product commutative on {1..12}^2", comm),
        Check(f"phi_circ equals the ring product on {len(ps)} pairs", not bad and len(ps) == pairs, f"mismatches {bad[:5]}" if bad else ""),
    ]


def suite_geometry_exact() -> list[Check]:
    bad = [n for n in range(1, 41) if not verify_row_length_identity(n)]
    out = [Check("row-length identity n = 1..40", not bad, f"failing {bad}" if bad else "")]
    counts = [sum(f.orientation == "up" for f in gd_row(n)) for n in range(1, 7)]
    out.append(Check("golden pair counts rows 1..6", counts == GD_PAIR_COUNTS, ",".join(map(str, counts))))
    bad = [n for n in range(1, 13) if row_word("gd", n) != row_word("gd", n)[::-1] or row_word("gd", n) != truncate_palindrome(n + 3)]
    out.append(Check("two-row words are palindromic truncated Fibonacci words through row 12", not bad, f"failing {bad}" if bad else ""))
    return out


def _sci(x: QuadRat) -> str:
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(x.p.numerator) / x.p.denominator + Decimal(x.q.numerator) / x.q.denominator * Decimal(5).sqrt()
        return f"{d:.3e}"


def suite_geometry_convergent() -> list[Check]:
    rep = verify_area_identity(40)
    out = [Check(
        "area partial sum within 1e-14 of 1/2 at N = 40",
        rep.ok,
        f"residual {_sci(rep.residuals[-1])}, positive {rep.positive}, decreasing {rep.decreasing}",
    )]
    for c in verify_limits(60):
        out.append(Check(f"limit {c.name} at n = 60 within 1e-10", c.ok, f"error {_sci(c.error)}"))
    return out


def _random_quad(rng) -> QuadRat:
    return QuadRat(Fraction(rng.randint(-20, 20), rng.randint(1, 6)), Fraction(rng.randint(-6, 6), rng.randint(1, 6)))


def suite_projection(configs: int = 20, seed: int = 1) -> list[Check]:
    bad = [n for n in range(1, 9) if not verify_projection("gd", n)]
    out = [Check("golden base vertices rows 1..8 reproduced exactly by projection", not bad, f"failing {bad}" if bad else "")]
    rng = random.Random(seed)
    ok = 0
    for _ in range(configs):
        while True:
            base = [_random_quad(rng) for _ in range(3)]
            d = [_random_quad(rng) for _ in range(3)]
            ts = [QuadRat(Fraction(rng.randint(-30, 30), rng.randint(1, 4))) for _ in range(4)]
            if len(set(ts)) < 4:
                continue
            pts = [tuple(b + t * e for b, e in zip(base, d)) for t in ts]
            try:
                imgs = [project(GD_SETUP, p) for p in pts]
                if len(set(imgs)) < 4:
                    continue
                after = cross_ratio_points(*imgs)
            except Exception:
                continue
            break
        ok += after == cross_ratio(*ts)
    out.append(Check(f"cross ratio invariant on {configs} random configurations", ok == configs, f"{ok}/{configs}"))
    phi = QuadRat(PhiInt(1, 0))
    cr = cross_ratio(*golden_edge_configuration())
    out.append(Check("golden edge cross ratio gives interval ratio φ", interval_ratio_from_cross(cr) == phi, f"cross ratio {cr.exact_str()}"))
    bad = [n for n in range(13) if not verify_lemma_2d(phi, n)]
    out.append(Check("2D lemma Σφ^i -> Σφ^-i for N <= 12", not bad, f"failing {bad}" if bad else ""))
    return out


def suite_cardinality() -> list[Check]:
    sols = solve_cardinality_equations()
    return [Check(f"{k} solutions", v == {0, 1}, "{" + ",".join(map(str, sorted(v))) + "}") for k, v in sols.items()]


SUITES = {
    "table": suite_table,
    "codec": suite_codec,
    "hyperbinary": suite_hyperbinary,
    "diatomic": suite_diatomic,
    "recurrence": suite_recurrence,
    "parity": suite_parity,
    "words": suite_words,
    "nondistributive": suite_nondistributive,
    "trees": suite_trees,
    "fibmult": suite_fibmult,
    "geometry-exact": suite_geometry_exact,
    "geometry-convergent": suite_geometry_convergent,
    "projection": suite_projection,
    "cardinality": suite_cardinality,
}


def run_suite(name: str) -> list[Check]:
    return SUITES[name]()
