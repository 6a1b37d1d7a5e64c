"""Enumeration of simplicial maps, lifting problems and bounded Kan tests.

Everything here is exhaustive backtracking over generator images.  Source
generators are visited in a face-closed order (each generator right after the
faces it needs), so when a generator of dimension n is reached the images of
all its faces are already fixed; the admissible images are then read off an
index of the target's n-simplices by their face tuples.  Results are deterministic: candidates are tried in
``SimplexRef.sort_key`` order (non-degenerate simplices first).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Sequence

from .constructors import horn_complex, point, standard_simplex
from .core import (
    InvalidMap,
    Key,
    SimplexRef,
    SimplicialMap,
    SSet,
    SSetError,
    Smash,
    codegeneracy,
    coface,
    compose,
    constant_map,
    disjoint_basepoint,
    ensure_map,
    ensure_valid,
    face,
    gen,
    normalize,
    pair_ref,
    smash,
)
from .functors import reduce1_map

MAX_GENERATORS = 40


class TooLarge(SSetError):
    pass


def _guard(*spaces: SSet, limit: int | None) -> None:
    limit = MAX_GENERATORS if limit is None else limit
    for X in spaces:
        if X.n_generators() > limit:
            raise TooLarge(f"{X.name} has {X.n_generators()} generators (limit {limit})")


def _face_index(Y: SSet, n: int) -> dict[tuple, list[SimplexRef]]:
    cache = Y._cache.setdefault("face_index", {})
    if n not in cache:
        idx: dict[tuple, list[SimplexRef]] = {}
        for y in Y.simplices(n):
            fs = tuple(face(Y, y, i) for i in range(n + 1))
            idx.setdefault(fs, []).append(y)
        cache[n] = idx
    return cache[n]


Check = Callable[[Key, SimplexRef, dict], bool]


def search_order(X: SSet) -> list[Key]:
    """Generators with every simplex placed right after the last of its faces.

    Top-dimensional generators are taken in (dimension, id) order from the
    highest dimension down, each preceded by its not yet placed faces, so a
    simplex is constrained as soon as its boundary is fixed.
    """
    cache = X._cache.get("search_order")
    if cache is not None:
        return cache
    order: list[Key] = []
    placed: set[Key] = set()

    def visit(k: Key) -> None:
        if k in placed:
            return
        for f in X.faces.get(k, ()):
            visit(f.key)
        placed.add(k)
        order.append(k)

    for k in sorted(X.keys(), key=lambda k: (-k[0], k[1])):
        visit(k)
    X._cache["search_order"] = order
    return order


def search(
    X: SSet,
    Y: SSet,
    fixed: Mapping[Key, SimplexRef] | None = None,
    check: Check | None = None,
) -> Iterator[dict[Key, SimplexRef]]:
    """Yield every map ``X -> Y`` (as an assignment) satisfying the constraints.

    ``fixed`` pins images of some generators; ``check(key, image, partial)``
    may veto a candidate given the assignment built so far.
    """
    ensure_valid(X)
    ensure_valid(Y)
    keys = search_order(X)
    fixed = fixed or {}
    assignment: dict[Key, SimplexRef] = {}

    def candidates(k: Key) -> list[SimplexRef]:
        d, i = k
        if d == 0:
            cands = [gen(v, 0) for v in Y.gens(0)]
        else:
            req = []
            for fc in X.faces[k]:
                req.append(normalize(fc.word, assignment[fc.key]))
            cands = _face_index(Y, d).get(tuple(req), [])
        if k in fixed:
            cands = [c for c in cands if c == fixed[k]]
        return cands

    def rec(t: int) -> Iterator[dict[Key, SimplexRef]]:
        if t == len(keys):
            yield dict(assignment)
            return
        k = keys[t]
        for c in candidates(k):
            if check is not None and not check(k, c, assignment):
                continue
            assignment[k] = c
            yield from rec(t + 1)
            del assignment[k]

    yield from rec(0)


def enumerate_homs(X: SSet, Y: SSet, pointed: bool = False) -> list[SimplicialMap]:
    fixed = {}
    if pointed:
        fixed[(0, X.base_ref().target)] = Y.base_ref()
    maps = [SimplicialMap(X, Y, a) for a in search(X, Y, fixed)]
    return sorted(maps, key=lambda f: [v.sort_key() for v in f.signature()])


def count_homs(X: SSet, Y: SSet, pointed: bool = False) -> int:
    fixed = {(0, X.base_ref().target): Y.base_ref()} if pointed else {}
    return sum(1 for _ in search(X, Y, fixed))


# -- lifting problems ---------------------------------------------------------


@dataclass(frozen=True)
class LiftingSquare:
    """``top: A -> X``, ``i: A -> B``, ``p: X -> Y``, ``bottom: B -> Y``."""

    i: SimplicialMap
    p: SimplicialMap
    top: SimplicialMap
    bottom: SimplicialMap

    def commutes(self) -> bool:
        return compose(self.p, self.top).assignment == compose(self.bottom, self.i).assignment

    def check(self) -> "LiftingSquare":
        if self.i.source != self.top.source or self.i.target != self.bottom.source:
            raise InvalidMap("square sources do not match")
        if self.p.source != self.top.target or self.p.target != self.bottom.target:
            raise InvalidMap("square targets do not match")
        for f in (self.i, self.p, self.top, self.bottom):
            ensure_map(f)
        if not self.commutes():
            raise InvalidMap("square does not commute")
        return self


def _lifts(sq: LiftingSquare) -> Iterator[SimplicialMap]:
    i, p, top, bottom = sq.i, sq.p, sq.top, sq.bottom
    B, X = i.target, p.source
    # h(i(a)) = top(a) becomes a condition on the generator underlying i(a)
    conditions: dict[Key, list[tuple[tuple[int, ...], SimplexRef]]] = {}
    for k, v in i.assignment.items():
        conditions.setdefault(v.key, []).append((v.word, top.assignment[k]))

    def check(k: Key, c: SimplexRef, partial) -> bool:
        if p(c) != bottom.assignment[k]:
            return False
        return all(normalize(w, c) == want for w, want in conditions.get(k, ()))

    for a in search(B, X, check=check):
        yield SimplicialMap(B, X, a)


def solve_lifting(sq: LiftingSquare) -> SimplicialMap | None:
    sq.check()
    for h in _lifts(sq):
        if compose(h, sq.i).assignment != sq.top.assignment:
            raise AssertionError("lift violates the upper triangle")
        if compose(sq.p, h).assignment != sq.bottom.assignment:
            raise AssertionError("lift violates the lower triangle")
        return h
    return None


def all_lifts(sq: LiftingSquare) -> list[SimplicialMap]:
    sq.check()
    return list(_lifts(sq))


def commuting_squares(p: SimplicialMap, i: SimplicialMap, limit: int | None = None) -> Iterator[LiftingSquare]:
    A, B = i.source, i.target
    X, Y = p.source, p.target
    _guard(A, B, X, Y, limit=limit)
    by_key: dict[tuple, list[SimplicialMap]] = {}
    for a in search(B, Y):
        bottom = SimplicialMap(B, Y, a)
        by_key.setdefault(compose(bottom, i).signature(), []).append(bottom)
    for a in search(A, X):
        top = SimplicialMap(A, X, a)
        for bottom in by_key.get(compose(p, top).signature(), ()):
            yield LiftingSquare(i, p, top, bottom)


def rlp_witness(p: SimplicialMap, i: SimplicialMap, limit: int | None = None) -> LiftingSquare | None:
    """First commuting square without a lift, or None if p has the RLP against i."""
    for sq in commuting_squares(p, i, limit):
        if next(_lifts(sq), None) is None:
            return sq
    return None


def has_rlp(p: SimplicialMap, i: SimplicialMap, limit: int | None = None) -> bool:
    return rlp_witness(p, i, limit) is None


# -- Kan conditions -----------------------------------------------------------


def terminal_map(X: SSet) -> SimplicialMap:
    return constant_map(X, point(), "0")


@dataclass(frozen=True)
class KanVerdict:
    """Bounded verdict: ``ok`` means every checked horn/square has a filler."""

    ok: bool
    max_dim: int
    n: int | None = None
    k: int | None = None
    square: LiftingSquare | None = None
    failures: tuple[tuple[int, int], ...] = ()

    def horn_faces(self) -> tuple[SimplexRef, ...]:
        """Images of the horn's faces ``d_i`` (``i != k``) in the failing square."""
        if self.square is None:
            return ()
        n, k = self.n, self.k
        top = self.square.top
        ids = [
            "".join(str(v) for v in range(n + 1) if v != i) for i in range(n + 1) if i != k
        ]
        return tuple(top.assignment[(n - 1, s)] for s in ids)

    def describe(self) -> str:
        if self.ok:
            return f"no failure up to dimension {self.max_dim} (bounded check)"
        faces = ", ".join(str(f) for f in self.horn_faces())
        return f"horn({self.n},{self.k}) with faces ({faces}) has no filler"


def is_kan_fibration_up_to(p: SimplicialMap, max_dim: int, limit: int | None = None,
                           all_failures: bool = False) -> KanVerdict:
    if max_dim < 1:
        raise SSetError("max_dim must be >= 1")
    first = None
    failures = []
    for n in range(1, max_dim + 1):
        for k in range(n + 1):
            j = horn_complex(n, k).map
            w = rlp_witness(p, j, limit)
            if w is not None:
                failures.append((n, k))
                if first is None:
                    first = (n, k, w)
                if not all_failures:
                    return KanVerdict(False, max_dim, n, k, w, tuple(failures))
    if first is None:
        return KanVerdict(True, max_dim)
    return KanVerdict(False, max_dim, first[0], first[1], first[2], tuple(failures))


def is_kan_up_to(X: SSet, max_dim: int, limit: int | None = None, all_failures: bool = False) -> KanVerdict:
    return is_kan_fibration_up_to(terminal_map(X), max_dim, limit, all_failures)


@dataclass(frozen=True)
class RLPVerdict:
    ok: bool
    failures: tuple[tuple[int, int], ...]


def rlp_against_reduced_horns(p: SimplicialMap, max_dim: int, limit: int | None = None) -> RLPVerdict:
    """RLP against the reduced horn inclusions ``reduce1_map(horn(n, k))`` for ``3 <= n <= max_dim`` (bounded, exhaustive)."""
    if max_dim < 3:
        raise SSetError("reduced horns start in dimension 3")
    failures = []
    for n in range(3, max_dim + 1):
        for k in range(n + 1):
            if not has_rlp(p, reduce1_map(horn_complex(n, k).map), limit):
                failures.append((n, k))
    return RLPVerdict(not failures, tuple(failures))


# -- isomorphisms and functoriality helpers ----------------------------------


def find_isomorphism(X: SSet, Y: SSet) -> SimplicialMap | None:
    if X.counts() != Y.counts() or X.pointed != Y.pointed:
        return None
    fixed = {(0, X.basepoint): Y.base_ref()} if X.pointed else {}

    def check(k, c, partial) -> bool:
        return not c.degenerate and c not in partial.values()

    for a in search(X, Y, fixed, check):
        return SimplicialMap(X, Y, a)
    return None


def is_isomorphic(X: SSet, Y: SSet) -> bool:
    return find_isomorphism(X, Y) is not None


def simplex_map(theta: Sequence[int], m: int, n: int) -> SimplicialMap:
    """``D[m] -> D[n]`` induced by a monotone ``theta : [m] -> [n]``."""
    from .constructors import simplex_ref

    Dm, Dn = standard_simplex(m), standard_simplex(n)
    assignment = {}
    for d, ident in Dm.keys():
        verts = [theta[int(c)] for c in ident]
        assignment[(d, ident)] = simplex_ref(verts)
    return ensure_map(SimplicialMap(Dm, Dn, assignment))


def plus_map(f: SimplicialMap, source: SSet, target: SSet) -> SimplicialMap:
    """``f_+ : Z_+ -> W_+`` given the two pointed sets."""
    a = dict(f.assignment)
    a[(0, source.basepoint)] = target.base_ref()
    return ensure_map(SimplicialMap(source, target, a))


def smash_map(f: SimplicialMap, g: SimplicialMap, S1: Smash, S2: Smash) -> SimplicialMap:
    """``f ^ g : S1 -> S2`` for pointed maps f, g between the smash factors."""
    assignment = {}
    for k in S1.space.keys():
        if k == (0, S1.space.basepoint):
            assignment[k] = S2.space.base_ref()
            continue
        x, z = S1.product.pairs[k]
        assignment[k] = S2.map(pair_ref(f(x), g(z)))
    return ensure_map(SimplicialMap(S1.space, S2.space, assignment))


# -- function complexes -------------------------------------------------------


@dataclass
class FiniteMapSpace:
    """``Map_*(X, Y)`` through dimension ``max_dim``.

    ``simplices[n]`` lists the pointed maps ``X ^ D[n]_+ -> Y``;
    ``faces[n][t][i]`` and ``degeneracies[n][t][i]`` are indices into the
    neighbouring dimension.
    """

    source: SSet
    target: SSet
    max_dim: int
    simplices: dict[int, list[SimplicialMap]] = field(default_factory=dict)
    faces: dict[int, list[tuple[int, ...]]] = field(default_factory=dict)
    degeneracies: dict[int, list[tuple[int, ...]]] = field(default_factory=dict)

    def counts(self) -> tuple[int, ...]:
        return tuple(len(self.simplices[n]) for n in range(self.max_dim + 1))

    def identity_violations(self) -> list[str]:
        out = []
        F, S = self.faces, self.degeneracies
        for n in range(2, self.max_dim + 1):
            for t in range(len(self.simplices[n])):
                for j in range(1, n + 1):
                    for i in range(j):
                        if F[n - 1][F[n][t][j]][i] != F[n - 1][F[n][t][i]][j - 1]:
                            out.append(f"d{i}d{j} on {n}-simplex {t}")
        for n in range(0, self.max_dim):
            for t in range(len(self.simplices[n])):
                for i in range(n + 1):
                    u = S[n][t][i]
                    if F[n + 1][u][i] != t or F[n + 1][u][i + 1] != t:
                        out.append(f"d s{i} on {n}-simplex {t}")
        return out


def _tensor(X: SSet, n: int) -> Smash:
    D = disjoint_basepoint(standard_simplex(n))
    return smash(X, D, f"{X.name}^D{n}+")


def mapping_space(X: SSet, Y: SSet, max_dim: int) -> FiniteMapSpace:
    if max_dim < 0:
        raise SSetError("max_dim must be >= 0")
    M = FiniteMapSpace(X, Y, max_dim)
    tensors = {n: _tensor(X, n) for n in range(max_dim + 1)}
    index: dict[int, dict[tuple, int]] = {}
    for n in range(max_dim + 1):
        maps = enumerate_homs(tensors[n].space, Y, pointed=True)
        M.simplices[n] = maps
        index[n] = {m.signature(): t for t, m in enumerate(maps)}
    idX = SimplicialMap(X, X, {k: gen(k[1], k[0]) for k in X.keys()})

    def induced(theta, m, n):
        Dm = disjoint_basepoint(standard_simplex(m))
        Dn = disjoint_basepoint(standard_simplex(n))
        th = plus_map(simplex_map(theta, m, n), Dm, Dn)
        return smash_map(idX, th, tensors[m], tensors[n])

    for n in range(1, max_dim + 1):
        cof = [induced(coface(n, i), n - 1, n) for i in range(n + 1)]
        M.faces[n] = [
            tuple(index[n - 1][compose(f, c).signature()] for c in cof) for f in M.simplices[n]
        ]
    for n in range(0, max_dim):
        cod = [induced(codegeneracy(n, i), n + 1, n) for i in range(n + 1)]
        M.degeneracies[n] = [
            tuple(index[n + 1][compose(f, c).signature()] for c in cod) for f in M.simplices[n]
        ]
    return M
