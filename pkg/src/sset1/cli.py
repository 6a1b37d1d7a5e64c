"""Command-line interface.

Exit codes: 0 success, 1 a checked property fails (a witness is printed),
2 usage, parse or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path
from typing import Sequence

from . import __version__
from .core import SSetError, is_one_reduced
from .corpus import write_corpus
from .fileio import (
    load_map,
    load_presentation,
    load_square,
    serialize_map,
    serialize_presentation,
)
from .functors import coskeleton1, eilenberg1, reduce1, skeleton1
from .homology import (
    PrimeSet,
    abelianization,
    euler_characteristic,
    homology_Z,
    homology_localized,
    is_local_weq_one_reduced,
    pi1_presentation,
)
from .lifting import is_kan_up_to, rlp_witness, solve_lifting
from .localization import inclusion_degree, stage_inclusion_is_local_iso, telescope_stage
from .verify import run_all


def _primes(args) -> PrimeSet:
    if getattr(args, "rational", False):
        return PrimeSet.rational()
    if getattr(args, "invert", None):
        return PrimeSet.parse(args.invert)
    return PrimeSet()


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    X = load_presentation(args.file)
    print(f"{X.name}: valid")
    return 0


def cmd_info(args) -> int:
    X = load_presentation(args.file)
    print(f"name: {X.name}")
    print(f"counts: {' '.join(str(c) for c in X.counts())}")
    print(f"euler: {euler_characteristic(X)}")
    print(f"pointed: {'yes (' + X.basepoint + ')' if X.pointed else 'no'}")
    print(f"1-reduced: {'yes' if is_one_reduced(X) else 'no'}")
    return 0


def cmd_homology(args) -> int:
    X = load_presentation(args.file)
    P = _primes(args)
    if P.everything:
        ranks = [G.rank for G in homology_localized(X, P)]
        print("rational ranks: (" + ", ".join(str(r) for r in ranks) + ")")
        return 0
    groups = homology_localized(X, P) if P.primes else homology_Z(X)
    label = "H" if not P.primes else f"H (inverting {P})"
    for n, G in enumerate(groups):
        print(f"{label}_{n} = {G}")
    return 0


def cmd_pi1(args) -> int:
    X = load_presentation(args.file)
    G = pi1_presentation(X, args.base)
    print(f"presentation: {G}")
    print(f"abelianization: {abelianization(G)}")
    return 0


def cmd_skeleton1(args) -> int:
    _emit(serialize_presentation(skeleton1(load_presentation(args.file)).space), args.output)
    return 0


def cmd_coskeleton1(args) -> int:
    _emit(serialize_presentation(coskeleton1(load_presentation(args.file), args.max_dim).space), args.output)
    return 0


def cmd_reduce1(args) -> int:
    _emit(serialize_presentation(reduce1(load_presentation(args.file)).space), args.output)
    return 0


def cmd_eilenberg1(args) -> int:
    _emit(serialize_presentation(eilenberg1(load_presentation(args.file)).space), args.output)
    return 0


def cmd_kan(args) -> int:
    X = load_presentation(args.file)
    v = is_kan_up_to(X, args.max_dim, all_failures=args.all)
    if v.ok:
        print(f"{X.name}: {v.describe()}")
        return 0
    print(f"{X.name}: not Kan: {v.describe()}")
    if args.all:
        print("failing horns: " + ", ".join(f"horn({n},{k})" for n, k in v.failures))
    return 1


def cmd_lift(args) -> int:
    sq = load_square(args.square)
    h = solve_lifting(sq)
    if h is None:
        print("no lift exists")
        return 1
    sys.stdout.write(serialize_map(h))
    return 0


def cmd_rlp(args) -> int:
    p, i = load_map(args.p), load_map(args.i)
    w = rlp_witness(p, i)
    if w is None:
        print(f"{p.source.name} -> {p.target.name} has the RLP against {i.source.name} -> {i.target.name}")
        return 0
    print("no lift for the square with")
    print(f"  top: {w.top!r}")
    print(f"  bottom: {w.bottom!r}")
    return 1


def cmd_weq(args) -> int:
    if (args.map is None) == (args.p1 is None):
        raise SSetError("give exactly one map file (positional or --p1)")
    f = load_map(args.map or args.p1)
    P = _primes(args)
    rep = is_local_weq_one_reduced(f, P)
    print(rep.describe())
    for n, G in sorted(rep.cone.items()):
        print(f"  cone H_{n} = {G}")
    return 0 if rep.ok else 1


def cmd_telescope(args) -> int:
    ms = [int(t) for t in args.m.split(",")] if args.m else []
    st = telescope_stage(args.n, ms, args.k)
    H = st.homology()
    for d in sorted(H):
        print(f"H_{d} = {H[d]}")
    print(f"inclusion degree: {inclusion_degree(st)}")
    if args.invert is not None or args.rational:
        P = _primes(args)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            rep = stage_inclusion_is_local_iso(st, P)
        for w in caught:
            print(f"warning: {w.message}")
        print(rep.describe())
        return 0 if rep.ok else 1
    return 0


def cmd_verify(args) -> int:
    results = run_all(args.max_dim, set(args.only) if args.only else None)
    ok = all(r.ok for r in results)
    if args.format == "json":
        doc = {"ok": ok, "max_dim": args.max_dim, "seed": args.seed, "checks": [r.as_dict() for r in results]}
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        width = max(len(r.id) for r in results) if results else 4
        for r in results:
            print(f"{r.id:<{width}}  {'PASS' if r.ok else 'FAIL'}  {r.statement}")
            print(f"{'':<{width}}        {r.detail}")
        print(f"{sum(r.ok for r in results)}/{len(results)} checks passed (bounded, exhaustive)")
    return 0 if ok else 1


def cmd_corpus(args) -> int:
    paths = write_corpus(args.write)
    print(f"wrote {len(paths)} files to {args.write}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sset1", description="Finite simplicial sets, 1-reduction and local homology.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        return p

    def primes(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--invert", metavar="P1,P2", help="invert the primes dividing these integers")
        g.add_argument("--rational", action="store_true", help="invert every prime")

    add("validate", cmd_validate, "check a presentation file").add_argument("file")
    add("info", cmd_info, "counts, Euler characteristic, 1-reduced flag").add_argument("file")
    p = add("homology", cmd_homology, "integral or localized homology")
    p.add_argument("file")
    primes(p)
    p = add("pi1", cmd_pi1, "edge-path presentation of the fundamental group")
    p.add_argument("file")
    p.add_argument("--base", help="base vertex (default: basepoint or first vertex)")
    for name, fn in (("skeleton1", cmd_skeleton1), ("reduce1", cmd_reduce1), ("eilenberg1", cmd_eilenberg1)):
        p = add(name, fn, f"write the {name} of a presentation")
        p.add_argument("file")
        p.add_argument("-o", "--output")
    p = add("coskeleton1", cmd_coskeleton1, "write the 1-coskeleton up to --max-dim")
    p.add_argument("file")
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("-o", "--output")
    p = add("kan", cmd_kan, "bounded Kan condition")
    p.add_argument("file")
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--all", action="store_true", help="list every failing horn")
    add("lift", cmd_lift, "solve a lifting square").add_argument("square")
    p = add("rlp", cmd_rlp, "right lifting property of p against i")
    p.add_argument("--p", required=True, metavar="MAPFILE")
    p.add_argument("--i", required=True, metavar="MAPFILE")
    p = add("weq", cmd_weq, "local weak equivalence of 1-reduced sets (homology criterion)")
    p.add_argument("map", nargs="?", metavar="MAPFILE")
    p.add_argument("--p1", metavar="MAPFILE", help="same as the positional MAPFILE")
    primes(p)
    p = add("telescope", cmd_telescope, "finite stage of a localized sphere telescope")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-m", default="", metavar="M1,M2,...")
    p.add_argument("-k", type=int, default=None)
    primes(p)
    p = add("verify-paper", cmd_verify, "replay the finitely checkable statements")
    p.add_argument("--max-dim", type=int, default=4)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0, help="recorded in the report; all checks are exhaustive")
    p.add_argument("--only", nargs="*", metavar="ID")
    p = add("corpus", cmd_corpus, "write the bundled corpus")
    p.add_argument("--write", required=True, metavar="DIR")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SSetError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
