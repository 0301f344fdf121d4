from fractions import Fraction

import pytest

from phinary.core import fib, phi_pow
from phinary.diatomic import fib_diatomic_phi, hyperbinary_reps, hyperphinary_reps
from phinary.errors import DepthLimit, DomainError
from phinary.trees import (
    Frac,
    calkin_wilf_row,
    children,
    find_in_prt,
    pert_row,
    prt_row,
    stern_brocot_inorder,
    stern_brocot_row,
    to_dot,
    tree_row,
    verify_coverage,
)


def strs(row):
    return [str(f) for f in row]


def mediant_sb_rows(depth):
    """Stern-Brocot rows by mediants of neighbouring ancestors (oracle)."""
    seq = [Fraction(0), None]  # None stands for 1/0
    rows = []
    for _ in range(depth + 1):
        new, row = [seq[0]], []
        for a, b in zip(seq, seq[1:]):
            an, ad = (a.numerator, a.denominator)
            bn, bd = (1, 0) if b is None else (b.numerator, b.denominator)
            m = Fraction(an + bn, ad + bd)
            row.append(m)
            new += [m, b]
        rows.append(row)
        seq = new
    return rows


def test_small_rows():
    assert strs(calkin_wilf_row(0)) == ["1/1"]
    assert strs(calkin_wilf_row(1)) == ["2/1", "1/2"]
    assert strs(calkin_wilf_row(2)) == ["3/1", "2/3", "3/2", "1/3"]
    assert strs(stern_brocot_row(1)) == ["1/2", "2/1"]
    assert strs(stern_brocot_row(2)) == ["1/3", "2/3", "3/2", "3/1"]
    assert strs(prt_row(0)) == ["1/1"]
    assert strs(prt_row(1)) == ["1/1", "2/1"]
    assert strs(prt_row(2)) == ["2/1", "1/2", "2/1"]
    assert strs(pert_row(0)) == ["1/1"]
    assert pert_row(1)[1].num == 2


def test_stern_brocot_matches_mediants():
    for n, row in enumerate(mediant_sb_rows(10)):
        assert [f.reduced() for f in stern_brocot_row(n)] == row
    seq = stern_brocot_inorder(12)
    assert all(a < b for a, b in zip(seq, seq[1:]))


def test_calkin_wilf_telescoping_and_oracle():
    for n in range(11):
        row = calkin_wilf_row(n)
        # the closed form lists the row right to left, so numerators telescope into denominators
        assert all(row[k].num == row[k + 1].den for k in range(len(row) - 1))
        assert all(f.is_reduced() for f in row)
        for k, f in enumerate(row):
            assert f.num == len(hyperbinary_reps(2 ** n + k).parts)
        sb = stern_brocot_row(n)
        assert {f.reduced() for f in row} == {f.reduced() for f in sb}


def test_coverage():
    for kind in ("cw", "sb"):
        rep = verify_coverage(kind, 7, 6)
        assert rep.ok and rep.expected == 23


def test_phinary_tree_rows():
    for n in range(15):
        row = prt_row(n)
        assert len(row) == fib(n + 2)
        if n <= 12:
            assert row[0].num == len(hyperphinary_reps(phi_pow(n)).parts) == fib_diatomic_phi(phi_pow(n))
    assert find_in_prt(Frac(1, 1), 4) == (0, 0)
    assert find_in_prt(Frac(2, 1), 4) is not None
    assert find_in_prt(Frac(3, 5), 8) == (6, 9)


def test_even_tree_boundary():
    assert strs(pert_row(1)) == ["1/1", "2/0"]
    assert strs(pert_row(2)) == ["1/1", "2/1", "2/0"]
    assert strs(pert_row(3)) == ["1/2", "2/2", "2/1", "3/0", "3/0"]


def test_children_structure():
    for n in range(8):
        row, nxt = prt_row(n), prt_row(n + 1)
        kids = [c for k in range(len(row)) for c in children("prt", n, k)]
        assert kids == list(range(len(nxt)))
    assert children("cw", 3, 5) == [10, 11]
    dot = to_dot("prt", 3)
    assert dot.startswith("digraph prt {") and dot.count("->") == sum(fib(n + 2) for n in range(1, 4))
    with pytest.raises(DomainError):
        to_dot("cw", 9)


def test_limits(monkeypatch):
    monkeypatch.setenv("PHINARY_DEPTH_LIMIT", "5")
    with pytest.raises(DepthLimit):
        prt_row(6)
    with pytest.raises(DomainError):
        tree_row("xx", 1)
    with pytest.raises(DomainError):
        calkin_wilf_row(-1)
