"""Replays of the finitely checkable statements about 1-reduced simplicial sets.

Each check is exhaustive at the stated bounded scale and returns a
``CheckResult``; ``run_all`` collects them in a fixed order.
"""

from __future__ import annotations

import itertools
import time
import warnings
from dataclasses import asdict, dataclass
from typing import Callable

from . import corpus
from .constructors import (
    boundary_complex,
    horn_complex,
    simplicial_sphere,
    standard_simplex,
)
from .core import (
    SimplicialMap,
    compose,
    disjoint_basepoint,
    face,
    is_mono,
    is_one_reduced,
    smash,
)
from .functors import (
    eilenberg1,
    factor_through_eilenberg,
    factor_through_reduction,
    reduce1,
    reduce1_map,
    skeleton1,
)
from .homology import (
    PrimeSet,
    abelianization,
    homology_localized,
    is_local_homology_iso,
    pi1_presentation,
)
from .lifting import (
    MAX_GENERATORS,
    enumerate_homs,
    find_isomorphism,
    has_rlp,
    is_kan_fibration_up_to,
    is_kan_up_to,
    rlp_against_reduced_horns,
    search,
    terminal_map,
)
from .localization import inclusion_degree, stage_map, stage_inclusion_is_local_iso, telescope_stage


# adjunction checks enumerate both hom-sets in full; pairs larger than this
# (total generators) are outside the bounded scale
PAIR_GUARD = 25


@dataclass(frozen=True)
class CheckResult:
    id: str
    statement: str
    ok: bool
    detail: str
    seconds: float = 0.0

    def as_dict(self) -> dict:
        return asdict(self)


def _is_basepoint_inclusion(f: SimplicialMap) -> bool:
    (v,) = f.source.refs()
    return (
        find_isomorphism(f.target, simplicial_sphere(2)) is not None
        and f(v) == f.target.base_ref()
    )


def check_reduction_of_horns(max_dim: int) -> tuple[bool, str]:
    notes = []
    ok = True
    for k in (0, 1):
        r = reduce1_map(horn_complex(1, k).map)
        good = r.source.counts() == (1,) and r.target.counts() == (1,)
        ok &= good
        notes.append(f"reduced horn(1,{k}) is the identity of the point: {good}")
    for k in (0, 1, 2):
        good = _is_basepoint_inclusion(reduce1_map(horn_complex(2, k).map))
        ok &= good
        notes.append(f"reduced horn(2,{k}) is the basepoint of S2: {good}")
    for n in range(3, max(3, max_dim) + 1):
        for k in range(n + 1):
            rep = is_local_homology_iso(reduce1_map(horn_complex(n, k).map), PrimeSet())
            ok &= rep.ok
        notes.append(f"reduced horn({n},k) inclusions are integral homology isos for all k")
    return ok, "; ".join(notes)


def check_reduction_preserves_monos() -> tuple[bool, str]:
    monos = [s for s, f in corpus.maps().items() if is_mono(f)]
    bad = [s for s in monos if not is_mono(reduce1_map(corpus.corpus_map(s)))]
    return not bad, f"{len(monos)} corpus monomorphisms, failures: {bad or 'none'}"


def _one_reduced_maps() -> dict[str, SimplicialMap]:
    return {
        s: f
        for s, f in corpus.maps().items()
        if is_one_reduced(f.source) and is_one_reduced(f.target)
    }


def check_boundary_rlp_equivalence(max_dim: int) -> tuple[bool, str]:
    """RLP against a boundary inclusion agrees with RLP against its 1-reduction, for 1-reduced maps."""
    bad, n_checks = [], 0
    for s, f in _one_reduced_maps().items():
        for n in range(0, max_dim + 1):
            i = boundary_complex(n).map
            if has_rlp(f, i) != has_rlp(f, reduce1_map(i)):
                bad.append((s, n))
            n_checks += 1
    return not bad, f"{n_checks} (map, n) pairs, disagreements: {bad or 'none'}"


def check_reduced_horns_detect_kan(max_dim: int) -> tuple[bool, str]:
    bad, seen = [], []
    for s, X in corpus.spaces().items():
        if not is_one_reduced(X):
            continue
        kan = is_kan_up_to(X, max_dim, all_failures=True)
        red = rlp_against_reduced_horns(terminal_map(X), max_dim)
        low = [f for f in kan.failures if f[0] < 3]
        if low or tuple(f for f in kan.failures if f[0] >= 3) != red.failures:
            bad.append(s)
        seen.append(f"{s}:{'kan' if kan.ok else 'not kan'}")
    return not bad, f"up to dim {max_dim}: {', '.join(seen)}; mismatches: {bad or 'none'}"


def check_sphere_endomorphisms() -> tuple[bool, str]:
    counts = {n: len(enumerate_homs(simplicial_sphere(n), simplicial_sphere(n), pointed=True)) for n in (2, 3, 4)}
    return all(c == 2 for c in counts.values()), ", ".join(f"|End*(S{n})| = {c}" for n, c in counts.items())


def check_horn_rlp_equivalence(max_dim: int) -> tuple[bool, str]:
    """RLP against a horn inclusion agrees with RLP against its 1-reduction, for 1-reduced maps."""
    bad, n_checks = [], 0
    for s, f in _one_reduced_maps().items():
        for n in range(1, max_dim + 1):
            for k in range(n + 1):
                j = horn_complex(n, k).map
                if has_rlp(f, j) != has_rlp(f, reduce1_map(j)):
                    bad.append((s, n, k))
                n_checks += 1
    return not bad, f"{n_checks} (map, n, k) triples, disagreements: {bad or 'none'}"


def check_constant_maps_to_s2() -> tuple[bool, str]:
    S2 = simplicial_sphere(2)
    eps = S2.gens(2)[0]
    bad, total = [], 0
    for s, B in corpus.spaces().items():
        if not is_one_reduced(B) or B.n_generators() > MAX_GENERATORS:
            continue
        for a in search(B, S2):
            total += 1
            constant = all(v.base == 0 for v in a.values())
            hits = any(a[(2, t)].target == eps and not a[(2, t)].degenerate for t in B.gens(2))
            if constant == hits:
                bad.append(s)
    return not bad, f"{total} maps B -> S2 from 1-reduced corpus B, failures: {sorted(set(bad)) or 'none'}"


def check_reduced_j2_fibration() -> tuple[bool, str]:
    notes, ok = [], True
    for k in range(3):
        r = reduce1_map(horn_complex(2, k).map)
        self_rlp = has_rlp(r, r)
        others = all(
            has_rlp(r, reduce1_map(horn_complex(n, t).map)) for n in (1, 3, 4) for t in range(n + 1)
        )
        kan = is_kan_fibration_up_to(r, 2)
        ok &= (not self_rlp) and others and not kan.ok
        notes.append(f"k={k}: RLP vs itself {self_rlp}, vs reduced horns of dim 1,3,4 {others}, Kan fibration up to 2 {kan.ok}")
    return ok, "; ".join(notes)


def check_degenerate_faces(max_dim: int = 5) -> tuple[bool, str]:
    bad, total = [], 0
    for s, X in corpus.spaces().items():
        for n in range(1, max_dim + 1):
            for x in X.simplices(n):
                if not x.degenerate:
                    continue
                total += 1
                nd = sum(not face(X, x, i).degenerate for i in range(n + 1))
                # s_k y has exactly two non-degenerate faces when y is non-degenerate
                expected = 2 if len(x.word) == 1 else 0
                if nd > 2 or nd != expected:
                    bad.append((s, str(x)))
    return not bad, f"{total} degenerate simplices up to dim {max_dim}, violations: {bad[:3] or 'none'}"


def check_spheres_not_kan() -> tuple[bool, str]:
    notes, ok = [], True
    for n in (2, 3):
        S = simplicial_sphere(n)
        v = is_kan_up_to(S, n + 1)
        top = S.gens(n)[0]
        good = (
            not v.ok
            and v.n == n + 1
            and all(f.target == top and not f.degenerate for f in v.horn_faces())
        )
        ok &= good
        notes.append(f"S{n}: {v.describe()}")
    return ok, "; ".join(notes)


def check_reduction_adjunction() -> tuple[bool, str]:
    """|Hom(X, Y)| = |Hom(reduce1 X, Y)| for 1-reduced Y, with explicit mutually inverse bijections."""
    total, bad = 0, []
    targets = {s: Y for s, Y in corpus.spaces().items() if is_one_reduced(Y)}
    for sx, X in corpus.spaces().items():
        RX, q = reduce1(X)
        for sy, Y in targets.items():
            if X.n_generators() + Y.n_generators() > PAIR_GUARD:
                continue
            left = [SimplicialMap(X, Y, a) for a in search(X, Y)]
            right = {SimplicialMap(RX, Y, a) for a in search(RX, Y)}
            img = {factor_through_reduction(f) for f in left}
            lset = set(left)
            back = all(compose(g, q) in lset for g in right)
            if len(left) != len(right) or img != right or not back:
                bad.append((sx, sy))
            total += 1
    return not bad, f"{total} pairs, failures: {bad or 'none'}"


def check_eilenberg_adjunction() -> tuple[bool, str]:
    """Pointed maps X -> Y match maps X -> eilenberg1(Y) for 1-reduced X, with explicit mutually inverse bijections."""
    total, bad = 0, []
    sources = {s: X for s, X in corpus.spaces().items() if is_one_reduced(X)}
    for sy, Y in corpus.spaces().items():
        if not Y.pointed:
            Y = Y.with_basepoint(Y.gens(0)[0])
        E, inc = eilenberg1(Y)
        for sx, X in sources.items():
            if X.n_generators() + Y.n_generators() > PAIR_GUARD:
                continue
            fixed = {(0, X.gens(0)[0]): Y.base_ref()}
            left = [SimplicialMap(X, Y, a) for a in search(X, Y, fixed)]
            right = [SimplicialMap(X, E, a) for a in search(X, E)]
            img = {tuple(sorted(factor_through_eilenberg(f).assignment.items())) for f in left}
            rset = {tuple(sorted(g.assignment.items())) for g in right}
            back = {tuple(sorted(compose(inc, g).assignment.items())) for g in right} == {
                tuple(sorted(f.assignment.items())) for f in left
            }
            if len(left) != len(right) or img != rset or not back:
                bad.append((sx, sy))
            total += 1
    return not bad, f"{total} pairs, failures: {bad or 'none'}"


def check_two_simplices() -> tuple[bool, str]:
    """For 1-reduced X, maps D[2] -> X correspond to maps S2 -> X."""
    D2, S2 = standard_simplex(2), simplicial_sphere(2)
    bad = []
    for s, X in corpus.spaces().items():
        if is_one_reduced(X) and len(enumerate_homs(D2, X)) != len(enumerate_homs(S2, X)):
            bad.append(s)
    return not bad, f"failures: {bad or 'none'}"


def check_smash_one_reduced() -> tuple[bool, str]:
    bad, total = [], 0
    pointed = [Z for Z in corpus.spaces().values() if Z.pointed]
    pointed += [disjoint_basepoint(standard_simplex(n)) for n in (0, 1, 2)]
    for X in corpus.spaces().values():
        if not is_one_reduced(X) or X.n_generators() > 6:
            continue
        if not X.pointed:
            X = X.with_basepoint(X.gens(0)[0])
        for Z in pointed:
            if Z.n_generators() > 6:
                continue
            total += 1
            if not is_one_reduced(smash(X, Z).space):
                bad.append((X.name, Z.name))
    return not bad, f"{total} smash products, failures: {bad or 'none'}"


def check_reduction_example() -> tuple[bool, str]:
    D2 = standard_simplex(2)
    a = find_isomorphism(reduce1(D2).space, simplicial_sphere(2)) is not None
    b = skeleton1(D2).space == boundary_complex(2).space
    return a and b, f"reduce1(D2) = S2: {a}; skeleton1(D2) = dD2: {b}"


def check_rational_separation() -> tuple[bool, str]:
    rp2 = corpus.space("rp2")
    f = corpus.corpus_map("rp2_to_point")
    rat = is_local_homology_iso(f, PrimeSet.rational())
    ranks = tuple(G.rank for G in homology_localized(rp2, PrimeSet.rational()))
    ab = abelianization(pi1_presentation(rp2))
    ok = rat.ok and ranks == (1, 0, 0) and str(ab) == "Z/2"
    return ok, f"rational homology iso {rat.ok}, rational Betti {ranks}, pi1 abelianized {ab}"


def check_telescope_laws() -> tuple[bool, str]:
    bad, total = [], 0
    for n in (2, 3):
        for k in range(5):
            for ms in itertools.product((2, 3, 5), repeat=k):
                st = telescope_stage(n, ms, k)
                H = st.homology()
                prod = 1
                for m in ms:
                    prod *= m
                ok = (
                    H[n].rank == 1 and not H[n].torsion
                    and H[n + 1].is_trivial()
                    and all(H[d].is_trivial() for d in H if d not in (0, n))
                    and inclusion_degree(st) == prod
                )
                primes = sorted({p for m in ms for p in (2, 3, 5) if m % p == 0})
                full = stage_inclusion_is_local_iso(st, PrimeSet.of(primes)).ok
                if not ok or not full:
                    bad.append((n, ms))
                if k:
                    with warnings.catch_warnings():
                        warnings.simplefilter("ignore")
                        partial = stage_inclusion_is_local_iso(st, PrimeSet.of(primes[1:])).ok
                    if partial:
                        bad.append((n, ms, "partial"))
                    prev = telescope_stage(n, ms, k - 1)
                    if not stage_map(prev, st).commutes() or inclusion_degree(st) != inclusion_degree(prev) * ms[-1]:
                        bad.append((n, ms, "monotone"))
                total += 1
    return not bad, f"{total} stages, failures: {bad or 'none'}"


CHECKS: list[tuple[str, str, Callable[[int], tuple[bool, str]]]] = [
    ("reduced-horns", "1-reduction of horns: identity, basepoint of S2, homology isos", check_reduction_of_horns),
    ("reduction-monos", "1-reduction preserves monomorphisms", lambda d: check_reduction_preserves_monos()),
    ("boundary-rlp", "RLP against boundary inclusions iff against their 1-reductions", lambda d: check_boundary_rlp_equivalence(min(d, 3))),
    ("reduced-horns-kan", "Kan iff RLP against reduced horns, 1-reduced corpus", check_reduced_horns_detect_kan),
    ("sphere-endos", "only constant and identity self-maps of spheres", lambda d: check_sphere_endomorphisms()),
    ("horn-rlp", "RLP against horn inclusions iff against their 1-reductions", lambda d: check_horn_rlp_equivalence(min(d, 3))),
    ("maps-to-s2", "h: B -> S2 constant iff no 2-simplex hits the top simplex", lambda d: check_constant_maps_to_s2()),
    ("reduced-j2", "reduced 2-horn inclusions: lifting behaviour at bounded scale", lambda d: check_reduced_j2_fibration()),
    ("degenerate-faces", "degenerate simplices have at most two non-degenerate faces", lambda d: check_degenerate_faces()),
    ("spheres-not-kan", "spheres fail Kan at dimension n+1 with the top-simplex horn", lambda d: check_spheres_not_kan()),
    ("reduction-adjunction", "maps X -> Y correspond to maps reduce1(X) -> Y", lambda d: check_reduction_adjunction()),
    ("two-simplices", "maps D2 -> X correspond to maps S2 -> X", lambda d: check_two_simplices()),
    ("eilenberg-adjunction", "pointed maps X -> Y correspond to maps X -> eilenberg1(Y)", lambda d: check_eilenberg_adjunction()),
    ("smash-reduced", "smash of a 1-reduced set with a pointed set is 1-reduced", lambda d: check_smash_one_reduced()),
    ("reduction-example", "reduce1(D2) = S2 and skeleton1(D2) = dD2", lambda d: check_reduction_example()),
    ("rational-separation", "RP2 -> pt: rational homology iso, pi1 abelianization Z/2", lambda d: check_rational_separation()),
    ("telescope", "telescope stages: homology, inclusion degree, local isos", lambda d: check_telescope_laws()),
]


def run_all(max_dim: int = 4, only: set[str] | None = None) -> list[CheckResult]:
    out = []
    for cid, statement, fn in CHECKS:
        if only and cid not in only:
            continue
        t = time.perf_counter()
        ok, detail = fn(max_dim)
        out.append(CheckResult(cid, statement, bool(ok), detail, round(time.perf_counter() - t, 3)))
    return out
