"""Normalized chains, integral and localized homology, mapping cones, and
edge-path presentations of the fundamental group."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import (
    NotOneReduced,
    SimplicialMap,
    SSet,
    SSetError,
    compose,
    ensure_map,
    ensure_valid,
    face,
    gen,
    is_one_reduced,
)
from .linalg import IntMatrix, factor, smith_normal_form


# -- prime sets and abelian groups -------------------------------------------


@dataclass(frozen=True)
class PrimeSet:
    """The primes inverted in a localization of the integers.

    ``everything=True`` stands for inverting every prime (the rationals).
    """

    primes: frozenset[int] = frozenset()
    everything: bool = False

    def __post_init__(self):
        for p in self.primes:
            if p < 2 or factor(p) != {p: 1}:
                raise ValueError(f"{p} is not a prime")

    @classmethod
    def rational(cls) -> "PrimeSet":
        return cls(frozenset(), True)

    @classmethod
    def of(cls, primes: Iterable[int]) -> "PrimeSet":
        return cls(frozenset(primes))

    @classmethod
    def from_multiplicative(cls, generators: Iterable[int]) -> "PrimeSet":
        """Primes dividing some generator of a multiplicative set."""
        ps: set[int] = set()
        for g in generators:
            if g == 0:
                raise ValueError("0 cannot lie in a multiplicative set being inverted")
            ps.update(factor(g))
        return cls(frozenset(ps))

    @classmethod
    def parse(cls, text: str) -> "PrimeSet":
        text = text.strip()
        if text.lower() in ("all", "q", "rational"):
            return cls.rational()
        if not text:
            return cls()
        return cls.from_multiplicative(int(t) for t in text.split(","))

    def inverts(self, p: int) -> bool:
        return self.everything or p in self.primes

    def is_unit(self, n: int) -> bool:
        return n != 0 and all(self.inverts(p) for p in factor(n))

    def __str__(self) -> str:
        if self.everything:
            return "all"
        return "{" + ",".join(str(p) for p in sorted(self.primes)) + "}"


@dataclass(frozen=True)
class FGAbGroup:
    """``Z^rank`` plus cyclic groups of the listed prime-power orders."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(sorted(self.torsion)))
        for q in self.torsion:
            f = factor(q)
            if q < 2 or len(f) != 1:
                raise ValueError(f"torsion order {q} is not a prime power")

    @classmethod
    def from_invariants(cls, rank: int, factors: Iterable[int]) -> "FGAbGroup":
        tors = []
        for d in factors:
            for p, e in factor(d).items():
                tors.append(p**e)
        return cls(rank, tuple(tors))

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def order(self) -> int | None:
        if self.rank:
            return None
        out = 1
        for q in self.torsion:
            out *= q
        return out

    def localize(self, P: PrimeSet) -> "FGAbGroup":
        return FGAbGroup(self.rank, tuple(q for q in self.torsion if not P.inverts(_prime_of(q))))

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{q}" for q in self.torsion]
        return " + ".join(parts) if parts else "0"


def _prime_of(q: int) -> int:
    return next(iter(factor(q)))


def localize(G: FGAbGroup, P: PrimeSet) -> FGAbGroup:
    return G.localize(P)


# -- chain complexes ----------------------------------------------------------


@dataclass
class ChainComplexZ:
    """Free chain complex: ``basis[n]`` labels, ``boundary[n] : C_n -> C_{n-1}``.

    Degrees run from ``low`` to ``high``; missing boundaries are zero.
    """

    basis: dict[int, list] = field(default_factory=dict)
    boundary: dict[int, IntMatrix] = field(default_factory=dict)

    @property
    def low(self) -> int:
        return min(self.basis) if self.basis else 0

    @property
    def high(self) -> int:
        return max(self.basis) if self.basis else -1

    def rank(self, n: int) -> int:
        return len(self.basis.get(n, ()))

    def d(self, n: int) -> IntMatrix:
        if n in self.boundary:
            return self.boundary[n]
        return IntMatrix.zeros(self.rank(n - 1), self.rank(n))

    def square_violations(self) -> list[int]:
        return [n for n in range(self.low + 2, self.high + 1) if not (self.d(n - 1) @ self.d(n)).is_zero()]

    def check(self) -> "ChainComplexZ":
        for n, m in self.boundary.items():
            if (m.rows, m.cols) != (self.rank(n - 1), self.rank(n)):
                raise SSetError(f"boundary in degree {n} has the wrong shape")
        bad = self.square_violations()
        if bad:
            raise SSetError(f"boundary does not square to zero in degree {bad[0]}")
        return self


def chain_complex(X: SSet) -> ChainComplexZ:
    ensure_valid(X)
    top = X.top_dim
    basis = {n: list(X.gens(n)) for n in range(top + 1)}
    index = {n: {g: t for t, g in enumerate(basis[n])} for n in basis}
    boundary = {}
    for n in range(1, top + 1):
        ent: dict[tuple[int, int], int] = {}
        for c, g in enumerate(basis[n]):
            for i, fc in enumerate(X.faces[(n, g)]):
                if fc.degenerate:
                    continue
                r = index[n - 1][fc.target]
                ent[(r, c)] = ent.get((r, c), 0) + (-1) ** i
        boundary[n] = IntMatrix(len(basis[n - 1]), len(basis[n]), ent)
    return ChainComplexZ(basis, boundary).check()


def _ranks_and_factors(C: ChainComplexZ) -> dict[int, list[int]]:
    return {n: smith_normal_form(C.d(n), transforms=False).invariant_factors
            for n in range(C.low, C.high + 2)}


def complex_homology(C: ChainComplexZ) -> dict[int, FGAbGroup]:
    inv = _ranks_and_factors(C)
    out = {}
    for n in range(C.low, C.high + 1):
        free = C.rank(n) - len(inv[n]) - len(inv[n + 1])
        out[n] = FGAbGroup.from_invariants(free, [d for d in inv[n + 1] if d > 1])
    return out


def complex_homology_localized(C: ChainComplexZ, P: PrimeSet) -> dict[int, FGAbGroup]:
    """Homology over the localized integers straight from invariant factors.

    Over the localized ring an invariant factor becomes a unit exactly when
    all its primes are inverted; otherwise only its non-inverted part remains.
    """
    inv = _ranks_and_factors(C)
    out = {}
    for n in range(C.low, C.high + 1):
        free = C.rank(n) - len(inv[n]) - len(inv[n + 1])
        tors = []
        for d in inv[n + 1]:
            for p, e in factor(d).items():
                if not P.inverts(p):
                    tors.append(p**e)
        out[n] = FGAbGroup(free, tuple(tors))
    return out


def homology_Z(X: SSet) -> list[FGAbGroup]:
    H = complex_homology(chain_complex(X))
    return [H[n] for n in range(X.top_dim + 1)]


def homology_localized(X: SSet, P: PrimeSet) -> list[FGAbGroup]:
    return [G.localize(P) for G in homology_Z(X)]


def homology_localized_direct(X: SSet, P: PrimeSet) -> list[FGAbGroup]:
    H = complex_homology_localized(chain_complex(X), P)
    return [H[n] for n in range(X.top_dim + 1)]


def betti_numbers(X: SSet) -> list[int]:
    return [G.rank for G in homology_Z(X)]


def euler_characteristic(X: SSet) -> int:
    return X.euler()


# -- chain maps and cones -----------------------------------------------------


@dataclass
class ChainMap:
    source: ChainComplexZ
    target: ChainComplexZ
    matrices: dict[int, IntMatrix]

    def at(self, n: int) -> IntMatrix:
        if n in self.matrices:
            return self.matrices[n]
        return IntMatrix.zeros(self.target.rank(n), self.source.rank(n))

    def degrees(self) -> range:
        return range(min(self.source.low, self.target.low), max(self.source.high, self.target.high) + 1)

    def commutes(self) -> bool:
        return all(
            self.target.d(n) @ self.at(n) == self.at(n - 1) @ self.source.d(n)
            for n in self.degrees()
        )


def induced_map(f: SimplicialMap) -> ChainMap:
    ensure_map(f)
    C, D = chain_complex(f.source), chain_complex(f.target)
    index = {n: {g: t for t, g in enumerate(D.basis[n])} for n in D.basis}
    mats = {}
    for n, gens in C.basis.items():
        ent = {}
        for c, g in enumerate(gens):
            img = f(gen(g, n))
            if not img.degenerate:
                ent[(index[n][img.target], c)] = 1
        mats[n] = IntMatrix(D.rank(n), C.rank(n), ent)
    F = ChainMap(C, D, mats)
    if not F.commutes():
        raise SSetError("induced map does not commute with boundaries")
    return F


def compose_chain_maps(g: ChainMap, f: ChainMap) -> ChainMap:
    degs = set(f.matrices) | set(g.matrices)
    return ChainMap(f.source, g.target, {n: g.at(n) @ f.at(n) for n in degs})


def mapping_cone(F: ChainMap) -> ChainComplexZ:
    """``cone_n = C_n + D_{n+1}`` with ``d(c, y) = (-dc, F(c) + dy)``.

    This is the usual cone shifted down one degree, so ``F`` is a homology
    isomorphism iff the cone is acyclic and ``H_n(cone) = H_{n+1}(D, C)``.
    """
    C, D = F.source, F.target
    low = min(C.low, D.low - 1)
    high = max(C.high, D.high - 1)
    basis = {n: [("c", b) for b in C.basis.get(n, ())] + [("d", b) for b in D.basis.get(n + 1, ())]
             for n in range(low, high + 1)}
    boundary = {}
    for n in range(low + 1, high + 1):
        rc, rd = C.rank(n - 1), D.rank(n)
        ent = {}
        for (r, c), v in C.d(n).entries.items():
            ent[(r, c)] = -v
        for (r, c), v in F.at(n).entries.items():
            ent[(rc + r, c)] = v
        for (r, c), v in D.d(n + 1).entries.items():
            ent[(rc + r, C.rank(n) + c)] = v
        boundary[n] = IntMatrix(rc + rd, C.rank(n) + D.rank(n + 1), ent)
    return ChainComplexZ(basis, boundary).check()


@dataclass(frozen=True)
class LocalIsoReport:
    ok: bool
    primes: PrimeSet
    cone: dict[int, FGAbGroup]
    localized: dict[int, FGAbGroup]

    def __bool__(self) -> bool:
        return self.ok

    def witnesses(self) -> list[tuple[int, FGAbGroup]]:
        return [(n, G) for n, G in sorted(self.localized.items()) if not G.is_trivial()]

    def describe(self) -> str:
        if self.ok:
            return f"local homology isomorphism at {self.primes}"
        n, G = self.witnesses()[0]
        return f"not a local homology isomorphism at {self.primes}: cone homology {G} in degree {n}"


def cone_report(F: ChainMap, P: PrimeSet) -> LocalIsoReport:
    H = complex_homology(mapping_cone(F))
    L = {n: G.localize(P) for n, G in H.items()}
    return LocalIsoReport(all(G.is_trivial() for G in L.values()), P, H, L)


def is_local_homology_iso(f: SimplicialMap, P: PrimeSet) -> LocalIsoReport:
    return cone_report(induced_map(f), P)


def is_local_weq_one_reduced(f: SimplicialMap, P: PrimeSet) -> LocalIsoReport:
    """Weak-equivalence decision for maps of 1-reduced sets (homology criterion)."""
    for X in (f.source, f.target):
        if not is_one_reduced(X):
            raise NotOneReduced(f"{X.name} is not 1-reduced")
    return is_local_homology_iso(f, P)


# -- fundamental group --------------------------------------------------------

Letter = tuple[str, int]


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[tuple[Letter, ...], ...]

    def __post_init__(self):
        gs = set(self.generators)
        for r in self.relators:
            for g, e in r:
                if g not in gs or e not in (1, -1):
                    raise ValueError(f"bad letter {(g, e)}")

    def __str__(self) -> str:
        def word(r):
            return " ".join(g if e == 1 else f"{g}^-1" for g, e in r) or "1"

        gens = ", ".join(self.generators)
        rels = ", ".join(word(r) for r in self.relators)
        return f"< {gens} | {rels} >"


def free_reduce(word: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g, e in word:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def _cyclic_reduce(word: tuple[Letter, ...]) -> tuple[Letter, ...]:
    w = list(word)
    while len(w) >= 2 and w[0] == (w[-1][0], -w[-1][1]):
        w = w[1:-1]
    return tuple(w)


def _simplify(gens: list[str], rels: list[tuple[Letter, ...]]) -> GroupPresentation:
    """Drop trivial relators and generators killed by one-letter relators."""
    rels = [_cyclic_reduce(free_reduce(r)) for r in rels]
    while True:
        rels = [r for r in rels if r]
        killed = next((r[0][0] for r in rels if len(r) == 1), None)
        if killed is None:
            break
        gens = [g for g in gens if g != killed]
        rels = [_cyclic_reduce(free_reduce(l for l in r if l[0] != killed)) for r in rels]
    uniq = list(dict.fromkeys(rels))
    return GroupPresentation(tuple(gens), tuple(uniq))


def pi1_presentation(X: SSet, base: str | None = None) -> GroupPresentation:
    ensure_valid(X)
    verts = X.gens(0)
    if not verts:
        raise SSetError("empty simplicial set")
    base = base or X.basepoint or verts[0]
    if not X.has(0, base):
        raise SSetError(f"no vertex {base!r}")
    ends = {e: (face(X, gen(e, 1), 1).target, face(X, gen(e, 1), 0).target) for e in X.gens(1)}
    incident: dict[str, list[str]] = {v: [] for v in verts}
    for e, (a, b) in ends.items():
        incident[a].append(e)
        incident[b].append(e)
    seen, tree = {base}, set()
    queue = deque([base])
    while queue:
        v = queue.popleft()
        for e in sorted(incident[v]):
            a, b = ends[e]
            w = b if a == v else a
            if w not in seen:
                seen.add(w)
                tree.add(e)
                queue.append(w)
    if len(seen) != len(verts):
        raise SSetError(f"{X.name} is not connected")

    def letter(r, sign):
        if r.degenerate or r.target in tree:
            return []
        return [(r.target, sign)]

    gens = [e for e in X.gens(1) if e not in tree]
    rels = []
    for t in X.gens(2):
        d0, d1, d2 = X.faces[(2, t)]
        rels.append(tuple(letter(d2, 1) + letter(d0, 1) + letter(d1, -1)))
    return _simplify(gens, rels)


def abelianization(G: GroupPresentation) -> FGAbGroup:
    col = {g: j for j, g in enumerate(G.generators)}
    ent: dict[tuple[int, int], int] = {}
    for i, r in enumerate(G.relators):
        for g, e in r:
            ent[(i, col[g])] = ent.get((i, col[g]), 0) + e
    A = IntMatrix(len(G.relators), len(G.generators), ent)
    inv = smith_normal_form(A, transforms=False).invariant_factors
    return FGAbGroup.from_invariants(len(G.generators) - len(inv), [d for d in inv if d > 1])


def check_functoriality(g: SimplicialMap, f: SimplicialMap) -> bool:
    lhs = induced_map(compose(g, f))
    rhs = compose_chain_maps(induced_map(g), induced_map(f))
    return all(lhs.at(n) == rhs.at(n) for n in set(lhs.matrices) | set(rhs.matrices))


def shape(groups: Sequence[FGAbGroup]) -> str:
    return "(" + ", ".join(str(G) for G in groups) + ")"
