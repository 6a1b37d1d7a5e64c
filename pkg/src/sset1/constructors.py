"""Standard small simplicial sets: simplices, boundaries, horns, spheres, RP^2."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .core import (
    SimplexRef,
    SimplicialMap,
    SSet,
    SSetError,
    ensure_valid,
    gen,
    inclusion,
    quotient,
)

# The 6-vertex minimal triangulation of the real projective plane.
RP2_TRIANGLES = (
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
)


def _label(vertices: Sequence, sep: str) -> str:
    return sep.join(str(v) for v in vertices)


def simplex_ref(vertices: Sequence[int], sep: str = "") -> SimplexRef:
    """A simplex of an ordered complex from a weakly increasing vertex list."""
    distinct = sorted(set(vertices))
    sigma = [distinct.index(v) for v in vertices]
    word = tuple(j for j in range(len(sigma) - 2, -1, -1) if sigma[j] == sigma[j + 1])
    return SimplexRef(word, _label(distinct, sep), len(distinct) - 1)


def ordered_complex(name: str, facets: Iterable[Sequence[int]], basepoint=None) -> SSet:
    """The simplicial set of an ordered simplicial complex given by its facets.

    Vertices are ordered by their integer labels; an n-simplex ``v0 < ... < vn``
    has faces obtained by deleting one vertex.
    """
    simplices = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            simplices.update(combinations(f, k))
    sep = "" if all(0 <= v < 10 for s in simplices for v in s) else ","
    gens: dict[int, list[str]] = {}
    faces = {}
    for s in simplices:
        d = len(s) - 1
        gens.setdefault(d, []).append(_label(s, sep))
        if d:
            faces[(d, _label(s, sep))] = tuple(
                gen(_label(s[:i] + s[i + 1:], sep), d - 1) for i in range(d + 1)
            )
    bp = None if basepoint is None else str(basepoint)
    return SSet.build(name, gens, faces, bp)


def _check_n(n: int, low: int = 0) -> None:
    if n < low:
        raise SSetError(f"dimension {n} < {low}")
    if n > 9:
        raise SSetError("standard simplices are provided up to dimension 9")


def standard_simplex(n: int) -> SSet:
    _check_n(n)
    return ordered_complex(f"D{n}", [range(n + 1)])


class Inclusion(NamedTuple):
    space: SSet
    map: SimplicialMap


def _sub_of_simplex(n: int, keep, name: str) -> Inclusion:
    D = standard_simplex(n)
    keys = [k for k in D.keys() if keep(k)]
    A = D.subcomplex(keys, name)
    return Inclusion(A, inclusion(A, D))


def boundary_complex(n: int) -> Inclusion:
    """``i_n : dD[n] -> D[n]``."""
    _check_n(n)
    return _sub_of_simplex(n, lambda k: k[0] < n, f"dD{n}")


def horn_complex(n: int, k: int) -> Inclusion:
    """The horn inclusion ``horn(n, k) -> D[n]``."""
    _check_n(n, 1)
    if not 0 <= k <= n:
        raise SSetError(f"horn index {k} out of range for n = {n}")
    missing = _label([v for v in range(n + 1) if v != k], "")
    return _sub_of_simplex(n, lambda key: key[0] < n and key != (n - 1, missing), f"L{n},{k}")


def simplicial_sphere(n: int) -> SSet:
    """``D[n] / dD[n]``: one vertex ``*`` and one non-degenerate n-simplex."""
    _check_n(n, 1)
    D = standard_simplex(n)
    return quotient(D, [k for k in D.keys() if k[0] < n], f"S{n}").space


def rp2_model() -> SSet:
    return ensure_valid(ordered_complex("RP2", RP2_TRIANGLES))


def point() -> SSet:
    return standard_simplex(0)


def pointed_simplex(n: int, vertex: int = 0) -> SSet:
    return standard_simplex(n).with_basepoint(str(vertex), f"D{n}@{vertex}")
