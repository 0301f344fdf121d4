"""Self-similar triangle figures, their row words, and the perspective view that produces them.

Coordinates live in a "facet frame" (x, y): x is horizontal, measured so that a
facet of side s has a base of length s, and y is vertical, measured so that the
same facet is s tall. The equilateral picture is (x, y·√3/2); the right-isosceles
picture used for perspective checks is (2x, y). Every coordinate is an exact
QuadRat.

GD: the golden figure. Outer triangle points down with apex O = (0, 0) and top
edge at y = φ. Row n holds pairs of facets of side φ^-n: an up-facet standing on
the line y = φ - φ^(1-n) and a down-facet hanging from the same edge.
GT: the trapezoid variant; row k carries the pairs of GD row k-2 plus one more.
ND: the binary analogue with side 2^-n and top edge at y = 1.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import PhiInt, QuadRat, fib, phi_pow
from .errors import DegenerateConfiguration, DepthLimit, DomainError, PointAtInfinity
from .ordinal import hook
from .words import fib_word, truncate_palindrome

DEFAULT_DEPTH_LIMIT = 20
KINDS = ("gd", "gt", "nd")

PHI_Q = QuadRat(PhiInt(1, 0))
HALF = Fraction(1, 2)


def depth_limit() -> int:
    env = os.environ.get("PHINARY_DEPTH_LIMIT")
    return int(env) if env else DEFAULT_DEPTH_LIMIT


def _check_row(n: int, lowest: int = 1):
    if n < lowest:
        raise DomainError(f"rows start at {lowest}")
    if n > depth_limit():
        raise DepthLimit(f"row {n} exceeds the depth limit {depth_limit()}")


def phi_q(k: int) -> QuadRat:
    return QuadRat.phi_pow(k)


@dataclass(frozen=True)
class Facet:
    kind: str
    row: int
    index: int
    side: QuadRat
    base_left: tuple[QuadRat, QuadRat]
    orientation: str  # "up" or "down"; both members of a pair share the same base edge

    def vertices(self) -> tuple[tuple[QuadRat, QuadRat], ...]:
        x, y = self.base_left
        s = self.side
        tip = (x + s * HALF, y + s) if self.orientation == "up" else (x + s * HALF, y - s)
        return (x, y), (x + s, y), tip

    def to_json(self) -> dict:
        x, y = self.base_left
        return {
            "kind": self.kind,
            "row": self.row,
            "index": self.index,
            "orientation": self.orientation,
            "side": self.side.exact_str(),
            "base_left": [x.exact_str(), y.exact_str()],
        }


def _pairs(kind, row, side, lefts, y):
    out = []
    for i, x in enumerate(lefts):
        for o in ("up", "down"):
            out.append(Facet(kind, row, i, side, (x, y), o))
    return out


# --- golden diamond -------------------------------------------------------------

def gd_base_line(n: int) -> QuadRat:
    """y of the shared edges in GD row n, also the row length: Σ_{i=1..n} φ^-i."""
    return PHI_Q - phi_q(1 - n)


@lru_cache(maxsize=None)
def _gd_lefts(n: int) -> tuple[QuadRat, ...]:
    """Base-left x of each up-facet in GD row n, left to right.

    Row 1 is a single facet centred on the axis. Every up-facet carries two
    copies smaller by φ on its shoulders, the points on its slanted sides at
    distance φ^-(n+1) from the base; copies shared by two parents merge.
    """
    if n == 1:
        return (-phi_q(-1) * HALF,)
    s = phi_q(-(n - 1))
    t = phi_q(-n)
    out: list[QuadRat] = []
    for x in _gd_lefts(n - 1):
        for child in (x - t * HALF, x + s - t * HALF):
            if out and out[-1] == child:
                continue
            out.append(child)
    return tuple(out)


def gd_row(n: int) -> list[Facet]:
    _check_row(n)
    return _pairs("gd", n, phi_q(-n), _gd_lefts(n), gd_base_line(n))


# --- golden trapezoid -------------------------------------------------------------

def gt_row(k: int) -> list[Facet]:
    """GT row k: the pairs of GD row k-2 and one extra pair at the right end.

    The extra pair follows the row directly when k is even and after a gap of
    φ^-(k-1) when k is odd.
    """
    _check_row(k)
    m = k - 2
    s = phi_q(-m)
    y = gd_base_line(m)
    lefts = list(_gd_lefts(m)) if m >= 1 else []
    end = y * HALF  # the GD row spans [-L/2, L/2] with L = y
    if k == 1:
        extra = -end
    elif k % 2 == 0:
        extra = end
    else:
        extra = end + phi_q(-(m + 1))
    lefts.append(extra)
    return _pairs("gt", k, s, lefts, y)


# --- natural diamond ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _nd_regions(n: int) -> tuple[Fraction, ...]:
    """Top-left x of the down-pointing regions (side 2^(1-n), top edge y = 1) that row n fills."""
    if n == 1:
        return (Fraction(-1, 2),)
    s = Fraction(1, 2 ** (n - 2))
    out = []
    for x in _nd_regions(n - 1):
        out += [x, x + s / 2]
    return tuple(out)


def nd_row(n: int) -> list[Facet]:
    """Each region of side S gets a pair of side S/2 standing on its lower vertex."""
    _check_row(n)
    S = Fraction(1, 2 ** (n - 1))
    y = 1 - S / 2
    lefts = [QuadRat(x + S / 4) for x in _nd_regions(n)]
    return _pairs("nd", n, QuadRat(S / 2), lefts, QuadRat(y))


ROW_BUILDERS = {"gd": gd_row, "gt": gt_row, "nd": nd_row}


def row(kind: str, n: int) -> list[Facet]:
    try:
        build = ROW_BUILDERS[kind]
    except KeyError:
        raise DomainError(f"unknown figure {kind!r}") from None
    return build(n)


def outer_triangle(kind: str):
    if kind == "gd":
        h = PHI_Q
    elif kind == "nd":
        h = QuadRat(1)
    else:
        raise DomainError(f"{kind!r} has no outer triangle")
    return (QuadRat(0), QuadRat(0)), (-h * HALF, h), (h * HALF, h)


# --- row words --------------------------------------------------------------------

def _cross_section(f: Facet, y: QuadRat):
    """The interval an up-facet cuts from the horizontal line at y, or None."""
    x0, y0 = f.base_left
    width = f.side - (y - y0)
    if width.sign() <= 0 or (y - y0).sign() < 0:
        return None
    mid = x0 + f.side * HALF
    return mid - width * HALF, mid + width * HALF


def read_row(kind: str, n: int) -> str:
    """Walk the shared-edge line of row n: its pairs read A, the tips of
    earlier rows poking through read B. The pieces must tile the line exactly."""
    facets = [f for f in row(kind, n) if f.orientation == "up"]
    y = facets[0].base_left[1]
    pieces = [(f.base_left[0], f.base_left[0] + f.side, "A") for f in facets]
    for m in range(max(1, n - 2) if kind != "nd" else 1, n):
        for f in row(kind, m):
            if f.orientation == "up":
                cut = _cross_section(f, y)
                if cut is not None:
                    pieces.append((cut[0], cut[1], "B"))
    pieces.sort(key=lambda p: p[0])
    word = []
    for (l0, r0, c), (l1, _, _) in zip(pieces, pieces[1:]):
        if r0 != l1:
            raise AssertionError(f"{kind} row {n} is not tiled at x = {r0}")
        word.append(c)
    word.append(pieces[-1][2])
    return "".join(word)


def row_word(kind: str, n: int) -> str:
    """Word of rows n and n+1 together, read along row n+1."""
    if kind not in ROW_BUILDERS:
        raise DomainError(f"unknown figure {kind!r}")
    return read_row(kind, n + 1)


def expected_row_word(kind: str, n: int) -> str:
    if kind == "gd":
        return truncate_palindrome(n + 3)
    if kind == "gt":
        return fib_word(n + 1)
    return "AB" * (2 ** n - 1) + "A"


# --- exactness checks ---------------------------------------------------------------

def _span(f: Facet):
    vs = f.vertices()
    # projections onto the three edge normals shared by every facet
    axes = ([v[1] for v in vs], [2 * v[0] - v[1] for v in vs], [2 * v[0] + v[1] for v in vs])
    return [(min(a), max(a)) for a in axes]


def verify_disjoint(facets: list[Facet]) -> list[tuple[Facet, Facet]]:
    """Pairs of facets whose interiors overlap (empty when the figure is valid)."""
    spans = sorted(((_span(f), f) for f in facets), key=lambda t: t[0][0][0])
    bad = []
    for i, (si, fi) in enumerate(spans):
        for sj, fj in spans[i + 1:]:
            if sj[0][0] >= si[0][1]:
                break
            if all(a[0] < b[1] and b[0] < a[1] for a, b in zip(si, sj)):
                bad.append((fi, fj))
    return bad


def verify_contained(facets: list[Facet], kind: str) -> bool:
    _, _, (xn, h) = outer_triangle(kind)
    for f in facets:
        for x, y in f.vertices():
            if y > h or (y + 2 * x).sign() < 0 or (y - 2 * x).sign() < 0:
                return False
    return True


def row_length(n: int) -> QuadRat:
    total = QuadRat(0)
    for i in range(1, n + 1):
        total = total + phi_q(-i)
    return total


def verify_row_length_identity(n: int) -> bool:
    """(F_{n+2} - 1)/φ^n + (F_{n+1} - 1)/φ^(n+1) = Σ_{i=1..n} φ^-i, exactly."""
    lhs = phi_q(-n) * (fib(n + 2) - 1) + phi_q(-(n + 1)) * (fib(n + 1) - 1)
    return lhs == row_length(n)


@dataclass(frozen=True)
class AreaReport:
    n: int
    residuals: tuple[QuadRat, ...]
    tolerance: Fraction

    @property
    def positive(self) -> bool:
        return all(r.sign() > 0 for r in self.residuals)

    @property
    def decreasing(self) -> bool:
        return all(b < a for a, b in zip(self.residuals, self.residuals[1:]))

    @property
    def within(self) -> bool:
        return self.residuals[-1] < self.tolerance

    @property
    def ok(self) -> bool:
        return self.positive and self.decreasing and self.within


def area_partial_sum(n: int) -> QuadRat:
    total = QuadRat(0)
    for k in range(1, n + 1):
        total = total + phi_q(-(2 * k + 2)) * (fib(k + 2) - 1)
    return total


def verify_area_identity(n: int = 40, tolerance=Fraction(1, 10 ** 14)) -> AreaReport:
    """Residuals 1/2 - Σ_{k=1..m} (F_{k+2} - 1)/φ^(2k+2) for m = 1..n."""
    res = []
    total = QuadRat(0)
    for k in range(1, n + 1):
        total = total + phi_q(-(2 * k + 2)) * (fib(k + 2) - 1)
        res.append(QuadRat(HALF) - total)
    return AreaReport(n, tuple(res), Fraction(tolerance))


@dataclass(frozen=True)
class LimitCheck:
    name: str
    value: QuadRat
    limit: QuadRat
    error: QuadRat
    ok: bool


def verify_limits(n: int = 60, tolerance=Fraction(1, 10 ** 10)) -> list[LimitCheck]:
    sqrt5 = QuadRat.sqrt5()
    cases = [
        ("F_n/φ^(n-1)", phi_q(1 - n) * fib(n), PHI_Q / sqrt5),
        ("F_(n-1)/φ^n", phi_q(-n) * fib(n - 1), QuadRat(1) / (PHI_Q * sqrt5)),
        ("half row sum", phi_q(-n) * (fib(n + 2) - 1), PHI_Q * PHI_Q / sqrt5),
        ("gap sum", phi_q(-(n + 1)) * (fib(n + 1) - 1), QuadRat(1) / sqrt5),
    ]
    tol = QuadRat(Fraction(tolerance))
    out = []
    for name, value, limit in cases:
        err = abs(value - limit)
        out.append(LimitCheck(name, value, limit, err, err < tol))
    return out


# --- projective tools ----------------------------------------------------------------

def cross_ratio(a, b, c, d) -> QuadRat:
    """(AC·BD)/(BC·AD) for four distinct points given by a coordinate on their line."""
    a, b, c, d = (QuadRat.coerce(t) for t in (a, b, c, d))
    pts = [a, b, c, d]
    if len(set(pts)) < 4:
        raise DegenerateConfiguration("cross ratio needs four distinct points")
    return ((c - a) * (d - b)) / ((c - b) * (d - a))


def cross_ratio_points(pa, pb, pc, pd) -> QuadRat:
    """Cross ratio of four collinear 2D points."""
    pts = [tuple(QuadRat.coerce(t) for t in p) for p in (pa, pb, pc, pd)]
    (x0, y0), (x1, y1) = pts[0], pts[1]
    for x, y in pts[2:]:
        if (x1 - x0) * (y - y0) != (y1 - y0) * (x - x0):
            raise DegenerateConfiguration("points are not collinear")
    axis = 0 if len({p[0] for p in pts}) == 4 else 1
    return cross_ratio(*(p[axis] for p in pts))


def interval_ratio_from_cross(cr) -> QuadRat:
    """For points A', B', C', D' with A'B' = C'D' = x and B'C' = y, solve x/y from the cross ratio.

    (x + y)² / (y(2x + y)) = cr gives ρ = (cr - 1) + √(cr(cr - 1)).
    """
    cr = QuadRat.coerce(cr)
    if cr <= 1:
        raise DomainError("cross ratio of a symmetric configuration exceeds 1")
    t = cr - 1
    return t + (cr * t).sqrt()


def golden_edge_configuration():
    """Points A, B, C, D on a GD edge: AB = ψ, BC = CD = ψ²/2."""
    psi = phi_q(-1)
    a = QuadRat(0)
    b = a + psi
    c = b + psi * psi * HALF
    d = c + psi * psi * HALF
    return a, b, c, d


@dataclass(frozen=True)
class ProjectionSetup:
    """Focal point (fx, fy, fz) and the image plane x + y = 0.

    Heights are stored multiplied by √2 so the golden setups stay inside Q(√5).
    """

    fx: QuadRat
    fy: QuadRat
    fz: QuadRat


GD_SETUP = ProjectionSetup(-PHI_Q * HALF, -PHI_Q * HALF, PHI_Q)
ND_SETUP = ProjectionSetup(QuadRat(-HALF), QuadRat(-HALF), QuadRat(1))


def project(setup: ProjectionSetup, point) -> tuple[QuadRat, QuadRat]:
    """Central projection of (u, v, z√2-scaled) onto the plane x + y = 0.

    Works in the cross-section spanned by the t = x + y direction and z; the
    result (W, Z) is √2 times the in-plane coordinates, W along the plane's
    horizontal (x - y)/√2 direction. With these units the golden image is the
    right-isosceles triangle (0,0), (-φ,φ), (φ,φ).
    """
    u, v, z = (QuadRat.coerce(c) for c in point)
    tf = setup.fx + setup.fy
    tp = u + v
    if tp == tf:
        raise PointAtInfinity("point lies in the plane through the focus parallel to the image")
    k = -tf / (tp - tf)
    W = (setup.fx - setup.fy) + k * ((u - v) - (setup.fx - setup.fy))
    Z = setup.fz + k * (z - setup.fz)
    return W, Z


def to_facet_frame(W: QuadRat, Z: QuadRat) -> tuple[QuadRat, QuadRat]:
    return W * HALF, Z


def project_2d(r, x) -> QuadRat:
    """Project (x, 0) to the y-axis through the focus (-1/(r-1), r/(r-1))."""
    r, x = QuadRat.coerce(r), QuadRat.coerce(x)
    if r <= 1:
        raise DomainError("ratio must exceed 1")
    d = QuadRat(1) / (r - 1)
    h = r / (r - 1)
    if x + d == 0:
        raise PointAtInfinity("point below the focus")
    return h * x / (x + d)


def verify_lemma_2d(r, n: int) -> bool:
    """Σ_{i=0..n} r^i maps to Σ_{i=0..n} r^-i."""
    r = QuadRat.coerce(r)
    x = sum((r ** i for i in range(n + 1)), QuadRat(0))
    y = sum((r ** -i for i in range(n + 1)), QuadRat(0))
    return project_2d(r, x) == y


def domain_triangles(kind: str, n: int):
    """Base (u, v) pairs of the standing unit triangles on the domain diagonal for row n.

    Golden: u + v = Σ_{i=0..n-1} φ^i and bases span consecutive phinary grid
    lines a unit apart. Natural: u + v = 2^n - 1 with bases on even u.
    """
    from .ordinal import is_phinary, rank, unrank

    if kind == "gd":
        sigma = PhiInt(0, 0)
        for i in range(n):
            sigma = sigma + phi_pow(i)
        out = []
        for r in range(rank(sigma)):
            u = unrank(r)
            if unrank(r + 1) == u + 1 and is_phinary(sigma - u - 1):
                out.append((QuadRat(u), QuadRat(sigma - u)))
        return out
    if kind == "nd":
        sigma = 2 ** n - 1
        return [(QuadRat(u), QuadRat(sigma - u)) for u in range(0, sigma, 2)]
    raise DomainError(f"no domain model for {kind!r}")


def verify_projection(kind: str, n: int) -> bool:
    """Projected domain bases and apexes coincide exactly with the row's up-facets."""
    setup = GD_SETUP if kind == "gd" else ND_SETUP
    expected = []
    for f in row(kind, n):
        if f.orientation == "up":
            expected.append(f.vertices())
    got = []
    for u, v in domain_triangles(kind, n):
        a = to_facet_frame(*project(setup, (u, v, 0)))
        b = to_facet_frame(*project(setup, (u + 1, v - 1, 0)))
        # apex of a standing right triangle: height 1/√2, stored as 1
        c = to_facet_frame(*project(setup, (u + HALF, v - HALF, 1)))
        got.append((a, b, c))
    return sorted(map(_key, got)) == sorted(map(_key, expected))


def _key(tri):
    return tuple((p[0].p, p[0].q, p[1].p, p[1].q) for p in tri)


# --- counting ------------------------------------------------------------------------

@dataclass(frozen=True)
class CuttingCount:
    kind: str
    n: int
    count: int
    phinary: PhiInt | None


def cutting_points(kind: str, n: int) -> CuttingCount:
    """Points cut on row n by the perspective lines: the letters read along the row."""
    if kind == "gd":
        count = fib(n + 3) - 2
        ph = hook(phi_pow(n + 1), PhiInt(1, 0))
    elif kind == "nd":
        count = 2 ** n - 1
        ph = None
    else:
        raise DomainError(f"no cutting count for {kind!r}")
    if n >= 1:
        assert len(read_row(kind, n)) == count
    return CuttingCount(kind, n, count, ph)


def solve_fixed_points(f, lo: int = 0, hi: int = 64) -> set[int]:
    return {x for x in range(lo, hi + 1) if f(x) == x}


def solve_cardinality_equations(lo: int = 0, hi: int = 64) -> dict[str, set[int]]:
    return {
        "x=2^x-1": solve_fixed_points(lambda x: 2 ** x - 1, lo, hi),
        "x=F(x+3)-2": solve_fixed_points(lambda x: fib(x + 3) - 2, lo, hi),
    }
