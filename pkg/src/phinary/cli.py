"""Command line: conversions, sequences, trees, parity, verification and rendering.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import codec, diatomic, geometry, ordinal, svg, trees, verify
from .core import parse_phi
from .errors import NegativeInput, PhinaryError

OPS = {
    "dagger": ordinal.dagger,
    "hook": ordinal.hook,
    "star": ordinal.star,
    "stripe": ordinal.stripe,
    "bar-exp": ordinal.bar_exp,
    "bar-root": ordinal.bar_root,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="phinary", description="Exact arithmetic on the phinary numbers.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("convert", help="phinary number <-> base-φ digits <-> index")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--to-basephi", metavar="P")
    g.add_argument("--from-basephi", metavar="DIGITS")
    g.add_argument("--to-index", metavar="P")
    g.add_argument("--from-index", metavar="N", type=int)
    g.add_argument("--natural", metavar="N", type=int, help="base-φ expansion of an ordinary integer")

    for name, text in (("succ", "successor"), ("pred", "predecessor"), ("rank", "index in the ordered list")):
        s = sub.add_parser(name, help=text)
        s.add_argument("value")

    o = sub.add_parser("op", help="phinary hyperoperation")
    o.add_argument("name", choices=sorted(OPS) + ["level"])
    o.add_argument("operands", nargs="+", help="P Q, or LEVEL P Q for 'level'")

    s = sub.add_parser("parity", help="even, odd or curious")
    s.add_argument("value")

    s = sub.add_parser("seq", help="sequence dump as index<TAB>value")
    s.add_argument("kind", choices=["hyperbinary", "diatomic", "hyperphinary"])
    s.add_argument("--count", type=int, default=20)
    s.add_argument("--start", type=int, default=0)
    s.add_argument("--phinary", action="store_true", help="index by phinary numbers")
    s.add_argument("--oracle", action="store_true", help="cross-check against brute-force enumeration")

    t = sub.add_parser("tree", help="rows of a rational tree")
    t.add_argument("kind", choices=list(trees.KINDS))
    t.add_argument("--rows", type=int, default=3, help="last row to print")
    t.add_argument("--start", type=int, default=0)
    t.add_argument("--dot", action="store_true", help="Graphviz output")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("names", nargs="*")
    v.add_argument("--all", action="store_true")
    v.add_argument("--fail-fast", action="store_true")
    v.add_argument("--list", action="store_true")

    r = sub.add_parser("render", help="SVG figure")
    r.add_argument("scene", choices=list(svg.SCENES))
    r.add_argument("--depth", type=int, default=5)
    r.add_argument("--out")
    r.add_argument("--perspective", action="store_true")

    sub.add_parser("cardinality", help="solve x = 2^x - 1 and x = F(x+3) - 2 over small integers")
    return p


def _emit(out, args, text: str, data):
    if args.json:
        out.write(json.dumps(data, ensure_ascii=False) + "\n")
    else:
        out.write(text + "\n")


def _convert(args, out):
    if args.to_basephi is not None:
        p = parse_phi(args.to_basephi)
        d = codec.encode_standard(p)
        _emit(out, args, str(d), {"value": str(p), "basephi": str(d)})
    elif args.from_basephi is not None:
        d = codec.PhiDigits.parse(args.from_basephi)
        v = str(codec.decode(d)) if not d.frac_digits else codec.decode_quadrat(d).exact_str()
        _emit(out, args, v, {"basephi": str(d), "value": v})
    elif args.to_index is not None:
        p = parse_phi(args.to_index)
        r = ordinal.rank(p)
        _emit(out, args, str(r), {"value": str(p), "index": r})
    elif args.from_index is not None:
        p = ordinal.unrank(args.from_index)
        _emit(out, args, str(p), {"index": args.from_index, "value": str(p)})
    else:
        if args.natural < 0:
            raise NegativeInput("natural conversion needs n >= 0")
        d = codec.encode_natural(args.natural)
        _emit(out, args, str(d), {"natural": args.natural, "basephi": str(d)})
    return 0


def _step(args, out):
    p = parse_phi(args.value)
    if args.command == "rank":
        r = ordinal.rank(p)
        _emit(out, args, str(r), {"value": str(p), "index": r})
        return 0
    q = ordinal.successor(p) if args.command == "succ" else ordinal.predecessor(p)
    _emit(out, args, str(q), {"value": str(p), args.command: str(q)})
    return 0


def _op(args, out):
    xs = args.operands
    if args.name == "level":
        if len(xs) != 3:
            raise UsageError("op level needs LEVEL P Q")
        try:
            level = int(xs[0])
        except ValueError:
            raise UsageError(f"bad level {xs[0]!r}") from None
        p, q = parse_phi(xs[1]), parse_phi(xs[2])
        r = ordinal.hyperop(level, p, q)
    else:
        if len(xs) != 2:
            raise UsageError(f"op {args.name} needs P Q")
        level = None
        p, q = parse_phi(xs[0]), parse_phi(xs[1])
        r = OPS[args.name](p, q)
    _emit(out, args, str(r), {"op": args.name, "level": level, "p": str(p), "q": str(q), "result": str(r)})
    return 0


def _parity(args, out):
    p = parse_phi(args.value)
    a, b = ordinal.parity(p), ordinal.parity_by_suffix(p)
    if a is not b:
        raise AssertionError(f"parity rules disagree on {p}")
    _emit(out, args, a.value, {"value": str(p), "parity": a.value, "basephi": str(codec.encode_standard(p))})
    return 0


def _seq(args, out):
    if args.count < 0 or args.start < 0:
        raise UsageError("--count and --start must be non-negative")
    phinary = args.phinary or args.kind == "hyperphinary"
    if args.kind == "hyperbinary" and args.phinary:
        raise UsageError("the hyperbinary sequence has integer indices")
    rows, bad = [], []
    for n in range(args.start, args.start + args.count):
        if args.kind == "hyperbinary":
            idx, val = n, diatomic.hyperbinary(n)
            oracle = (lambda: len(diatomic.hyperbinary_reps(n))) if args.oracle else None
        elif phinary:
            p = ordinal.unrank(n)
            idx, val = p, diatomic.fib_diatomic_phi(p)
            oracle = (lambda: len(diatomic.hyperphinary_reps(p))) if args.oracle else None
        else:
            idx, val = n, diatomic.fib_diatomic_nat(n)
            oracle = (lambda: len(diatomic.fib_diatomic_nat_reps(n))) if args.oracle else None
        if oracle is not None and oracle() != val:
            bad.append(str(idx))
        rows.append((str(idx), val))
    if args.json:
        _emit(out, args, "", {"kind": args.kind, "phinary": phinary, "values": [[i, v] for i, v in rows], "oracle_mismatches": bad})
    else:
        for i, v in rows:
            out.write(f"{i}\t{v}\n")
    if bad:
        sys.stderr.write(f"oracle mismatch at {', '.join(bad)}\n")
        return 3
    return 0


def _tree(args, out):
    if args.dot:
        out.write(trees.to_dot(args.kind, args.rows))
        return 0
    data = [(n, trees.tree_row(args.kind, n)) for n in range(args.start, args.rows + 1)]
    if args.json:
        _emit(out, args, "", {"kind": args.kind, "rows": {str(n): [str(f) for f in r] for n, r in data}})
    else:
        for n, r in data:
            out.write(f"{n}\t{' '.join(map(str, r))}\n")
    return 0


def _verify(args, out):
    if args.list:
        out.write("\n".join(verify.SUITES) + "\n")
        return 0
    names = list(verify.SUITES) if args.all or not args.names else args.names
    unknown = [n for n in names if n not in verify.SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s): {', '.join(unknown)}; try 'verify --list'")
    failed = False
    results = []
    for name in names:
        for c in verify.run_suite(name):
            results.append({"suite": name, "check": c.name, "ok": c.ok, "detail": c.detail})
            if not args.json:
                out.write(f"[{name}] {c.line()}\n")
            failed |= not c.ok
        if failed and args.fail_fast:
            break
    if args.json:
        _emit(out, args, "", {"ok": not failed, "checks": results})
    else:
        out.write(f"{'FAILED' if failed else 'OK'}: {sum(r['ok'] for r in results)}/{len(results)} checks passed\n")
    return 3 if failed else 0


def _render(args, out):
    text = svg.render_svg(args.scene, args.depth, args.perspective)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        _emit(out, args, args.out, {"scene": args.scene, "depth": args.depth, "out": args.out})
    else:
        out.write(text)
    return 0


def _cardinality(args, out):
    sols = geometry.solve_cardinality_equations()
    text = "; ".join(f"{k}: {{{','.join(map(str, sorted(v)))}}}" for k, v in sols.items())
    _emit(out, args, text, {k: sorted(v) for k, v in sols.items()})
    return 0


HANDLERS = {
    "convert": _convert,
    "succ": _step,
    "pred": _step,
    "rank": _step,
    "op": _op,
    "parity": _parity,
    "seq": _seq,
    "tree": _tree,
    "verify": _verify,
    "render": _render,
    "cardinality": _cardinality,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        return HANDLERS[args.command](args, out)
    except UsageError as e:
        err.write(f"{e}\n")
        return 2
    except PhinaryError as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return 1
    except SystemExit as e:
        # --help
        return 0 if e.code in (0, None) else 2


def main():
    sys.exit(run())
