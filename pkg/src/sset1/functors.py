"""Truncation, 1-skeleton, 1-coskeleton, 1-reduction and the 1st Eilenberg subcomplex."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Mapping, NamedTuple

from .core import (
    InvalidMap,
    NotOneReduced,
    NotPointed,
    SimplexRef,
    SimplicialMap,
    SSet,
    SSetError,
    compose,
    ensure_map,
    ensure_valid,
    gen,
    inclusion,
    is_one_reduced,
    pull,
    quotient,
    total_degeneracy,
    word_of_surjection,
)


@dataclass(frozen=True)
class TruncatedData:
    """The 0- and 1-simplices of a simplicial set with d_0, d_1 and s_0."""

    vertices: tuple[str, ...]
    edges: tuple[SimplexRef, ...]
    d0: Mapping[SimplexRef, str]
    d1: Mapping[SimplexRef, str]
    s0: Mapping[str, SimplexRef]


def truncate1(X: SSet) -> TruncatedData:
    ensure_valid(X)
    edges = tuple(X.simplices(1))
    d0 = {e: pull(X, (1,), e).target for e in edges}
    d1 = {e: pull(X, (0,), e).target for e in edges}
    s0 = {v: total_degeneracy(v, 1) for v in X.gens(0)}
    return TruncatedData(X.gens(0), edges, d0, d1, s0)


class Sub(NamedTuple):
    space: SSet
    map: SimplicialMap


def skeleton1(X: SSet) -> Sub:
    ensure_valid(X)
    S = X.subcomplex([k for k in X.keys() if k[0] <= 1], f"sk1({X.name})")
    return Sub(S, inclusion(S, X))


# -- coskeleton ---------------------------------------------------------------


def _trace(X: SSet, x: SimplexRef) -> tuple[tuple[str, ...], tuple[SimplexRef, ...]]:
    n = x.dim
    verts = tuple(pull(X, (i,), x).target for i in range(n + 1))
    edges = tuple(pull(X, (i, j), x) for i in range(n + 1) for j in range(i + 1, n + 1))
    return verts, edges


def _edge_index(n: int) -> dict[tuple[int, int], int]:
    pairs = [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]
    return {p: t for t, p in enumerate(pairs)}


def _labeling_id(verts, edges) -> str:
    return "<%s|%s>" % (",".join(verts), ",".join(str(e) for e in edges))


def _degenerate_positions(verts, edges) -> list[int]:
    n = len(verts) - 1
    ix = _edge_index(n)
    out = []
    for k in range(n):
        if verts[k] != verts[k + 1] or edges[ix[(k, k + 1)]] != total_degeneracy(verts[k], 1):
            continue
        if any(edges[ix[(i, k)]] != edges[ix[(i, k + 1)]] for i in range(k)):
            continue
        if any(edges[ix[(k, j)]] != edges[ix[(k + 1, j)]] for j in range(k + 2, n + 1)):
            continue
        out.append(k)
    return out


def _labeling_ref(verts, edges) -> SimplexRef:
    n = len(verts) - 1
    J = set(_degenerate_positions(verts, edges))
    reps = [t for t in range(n + 1) if t == 0 or (t - 1) not in J]
    rho, v = [], 0
    for t in range(n + 1):
        if t > 0 and (t - 1) not in J:
            v += 1
        rho.append(v)
    word = word_of_surjection(rho)
    m = len(reps) - 1
    if m == 0:
        return SimplexRef(word, verts[0], 0)
    ix = _edge_index(n)
    sub_edges = tuple(edges[ix[(reps[a], reps[b])]] for a in range(m + 1) for b in range(a + 1, m + 1))
    if m == 1:
        e = sub_edges[0]
        return SimplexRef(word, e.target, 1)
    sub_verts = tuple(verts[t] for t in reps)
    return SimplexRef(word, _labeling_id(sub_verts, sub_edges), m)


class Coskeleton(NamedTuple):
    space: SSet
    unit: SimplicialMap  # sk_d(X) -> cosk1(X) truncated at d


def coskeleton1(X: SSet, max_dim: int) -> Coskeleton:
    """cosk_1(X) through dimension ``max_dim``.

    An n-simplex is a compatible labelling of the vertices and edges of
    ``D[n]`` by vertices and (possibly degenerate) edges of X; degenerate
    labellings are recognised from the labelling itself.
    """
    if max_dim < 1:
        raise SSetError("coskeleton needs max_dim >= 1")
    ensure_valid(X)
    T = truncate1(X)
    by_ends: dict[tuple[str, str], list[SimplexRef]] = {}
    for e in T.edges:
        by_ends.setdefault((T.d1[e], T.d0[e]), []).append(e)
    gens: dict[int, list[str]] = {0: list(X.gens(0)), 1: list(X.gens(1))}
    faces = {k: v for k, v in X.faces.items() if k[0] == 1}
    for n in range(2, max_dim + 1):
        pairs = list(_edge_index(n))
        for verts in cartesian(X.gens(0), repeat=n + 1):
            options = [by_ends.get((verts[i], verts[j]), []) for i, j in pairs]
            if any(not o for o in options):
                continue
            for edges in cartesian(*options):
                if _degenerate_positions(verts, edges):
                    continue
                ident = _labeling_id(verts, edges)
                gens.setdefault(n, []).append(ident)
                fs = []
                for i in range(n + 1):
                    keep = [t for t in range(n + 1) if t != i]
                    fv = tuple(verts[t] for t in keep)
                    ix = _edge_index(n)
                    fe = tuple(
                        edges[ix[(keep[a], keep[b])]]
                        for a in range(n)
                        for b in range(a + 1, n)
                    )
                    fs.append(_labeling_ref(fv, fe))
                faces[(n, ident)] = tuple(fs)
    C = SSet.build(f"cosk1({X.name})<={max_dim}", gens, faces, X.basepoint)
    low = X.subcomplex([k for k in X.keys() if k[0] <= max_dim], f"sk{max_dim}({X.name})")
    unit = {}
    for k in low.keys():
        x = gen(k[1], k[0])
        unit[k] = x if k[0] <= 1 else _labeling_ref(*_trace(X, x))
    return Coskeleton(C, ensure_map(SimplicialMap(low, C, unit)))


# -- 1-reduction --------------------------------------------------------------


class Reduction(NamedTuple):
    space: SSet
    map: SimplicialMap  # X -> reduce1(X)


def reduce1(X: SSet) -> Reduction:
    ensure_valid(X)
    q = quotient(X, [k for k in X.keys() if k[0] <= 1], f"reduce1({X.name})")
    return Reduction(q.space, q.map)


def reduce1_map(f: SimplicialMap) -> SimplicialMap:
    ensure_map(f)
    RX, qX = reduce1(f.source)
    RY, qY = reduce1(f.target)
    assignment = {}
    for k in RX.keys():
        if k[0] == 0:
            assignment[k] = RY.base_ref()
        else:
            assignment[k] = qY(f(gen(k[1], k[0])))
    return ensure_map(SimplicialMap(RX, RY, assignment))


def factor_through_reduction(f: SimplicialMap) -> SimplicialMap:
    """The unique ``reduce1(X) -> Y`` whose composite with ``X -> reduce1(X)`` is f."""
    ensure_map(f)
    Y = f.target
    if not is_one_reduced(Y):
        raise NotOneReduced(f"{Y.name} is not 1-reduced")
    RX, q = reduce1(f.source)
    y0 = Y.gens(0)[0]
    assignment = {
        k: total_degeneracy(y0, 0) if k[0] == 0 else f(gen(k[1], k[0])) for k in RX.keys()
    }
    g = ensure_map(SimplicialMap(RX, Y, assignment))
    if compose(g, q) != f:
        raise InvalidMap("factorization does not recover f")
    return g


# -- Eilenberg subcomplex -----------------------------------------------------


def _in_eilenberg(X: SSet, x: SimplexRef) -> bool:
    base = X.basepoint
    n = x.dim
    if any(pull(X, (i,), x).target != base for i in range(n + 1)):
        return False
    deg = total_degeneracy(base, 1)
    return all(
        pull(X, (i, j), x) == deg for i in range(n + 1) for j in range(i + 1, n + 1)
    )


def eilenberg1(X: SSet) -> Sub:
    """Simplices all of whose vertices are the basepoint and edges its degeneracy."""
    if X.basepoint is None:
        raise NotPointed(f"{X.name} has no basepoint")
    ensure_valid(X)
    keys = [k for k in X.keys() if _in_eilenberg(X, gen(k[1], k[0]))]
    E = X.subcomplex(keys, f"eilenberg1({X.name})")
    return Sub(E, inclusion(E, X))


def factor_through_eilenberg(f: SimplicialMap) -> SimplicialMap:
    """Corestriction of a pointed map out of a 1-reduced set to ``eilenberg1(Y)``."""
    ensure_map(f)
    X, Y = f.source, f.target
    if not is_one_reduced(X):
        raise NotOneReduced(f"{X.name} is not 1-reduced")
    if Y.basepoint is None:
        raise NotPointed(f"{Y.name} has no basepoint")
    if f(gen(X.gens(0)[0], 0)) != Y.base_ref():
        raise InvalidMap("map is not pointed")
    E, inc = eilenberg1(Y)
    X1 = X if X.pointed else X.with_basepoint(X.gens(0)[0])
    g = ensure_map(SimplicialMap(X1, E, dict(f.assignment)))
    if compose(inc, g).assignment != f.assignment:
        raise InvalidMap("corestriction does not recover f")
    return g
