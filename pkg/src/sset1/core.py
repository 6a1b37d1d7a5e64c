"""Finite presented simplicial sets.

A simplicial set is stored by its non-degenerate simplices ("generators") and
the faces of each generator.  Every simplex, degenerate or not, is named by a
:class:`SimplexRef`: an admissible degeneracy word applied to a generator.  By
the Eilenberg-Zilber lemma this name is unique, so equality of simplices is a
syntactic comparison once everything is normalized.

Internally a degeneracy word is handled as the surjection ``[dim] -> [base]``
it encodes, and any simplicial operator as a monotone map ``[m] -> [n]`` given
by its tuple of values.  Pulling a simplex back along such a map factors it as
surjection-after-injection; the injection part is resolved by reading the
stored faces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

Key = tuple[int, str]


class SSetError(ValueError):
    """Base class for errors raised by this package."""


class InvalidPresentation(SSetError):
    pass


class InvalidMap(SSetError):
    pass


class NotOneReduced(SSetError):
    pass


class NotPointed(SSetError):
    pass


class SimplexRef(NamedTuple):
    """``s_{i1} ... s_{ik} (target)`` with ``i1 > ... > ik``."""

    word: tuple[int, ...]
    target: str
    base: int

    @property
    def dim(self) -> int:
        return self.base + len(self.word)

    @property
    def key(self) -> Key:
        return (self.base, self.target)

    @property
    def degenerate(self) -> bool:
        return bool(self.word)

    def sort_key(self):
        return (self.dim, len(self.word), self.word, self.base, self.target)

    def __str__(self) -> str:
        if not self.word:
            return self.target
        return "s%s(%s)" % (".".join(map(str, self.word)), self.target)


def gen(target: str, dim: int) -> SimplexRef:
    return SimplexRef((), target, dim)


# -- operators on [n] ---------------------------------------------------------


def coface(n: int, i: int) -> tuple[int, ...]:
    """d^i : [n-1] -> [n]."""
    return tuple(x if x < i else x + 1 for x in range(n))


def codegeneracy(n: int, i: int) -> tuple[int, ...]:
    """s^i : [n+1] -> [n]."""
    return tuple(x if x <= i else x - 1 for x in range(n + 2))


def surjection_of_word(word: Sequence[int], base: int) -> tuple[int, ...]:
    """Surjection ``[base + len(word)] -> [base]`` of ``s_{w0} ... s_{wk}``.

    The word is read as operators applied right to left; any (not necessarily
    admissible) word is accepted as long as each index is in range.
    """
    sigma = tuple(range(base + 1))
    for a in reversed(word):
        cur = len(sigma) - 1
        if not 0 <= a <= cur:
            raise SSetError(f"degeneracy s_{a} out of range on a {cur}-simplex")
        sigma = tuple(sigma[x if x <= a else x - 1] for x in range(cur + 2))
    return sigma


def word_of_surjection(sigma: Sequence[int]) -> tuple[int, ...]:
    return tuple(j for j in range(len(sigma) - 2, -1, -1) if sigma[j] == sigma[j + 1])


def surjections(n: int, p: int) -> Iterator[tuple[int, ...]]:
    """All surjective monotone maps ``[n] -> [p]``."""
    for steps in combinations(range(1, n + 1), p):
        sigma, v = [], 0
        stepset = set(steps)
        for x in range(n + 1):
            if x in stepset:
                v += 1
            sigma.append(v)
        yield tuple(sigma)


def is_admissible(word: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(word, word[1:])) and all(i >= 0 for i in word)


def normalize(word: Sequence[int], simplex: SimplexRef) -> SimplexRef:
    """Apply ``s_{w0} ... s_{wk}`` to ``simplex`` and return the admissible form."""
    total = tuple(word) + tuple(simplex.word)
    if not total:
        return simplex
    sigma = surjection_of_word(total, simplex.base)
    return SimplexRef(word_of_surjection(sigma), simplex.target, simplex.base)


def total_degeneracy(vertex: str, dim: int) -> SimplexRef:
    return SimplexRef(tuple(range(dim - 1, -1, -1)), vertex, 0)


# -- presentations ------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SSet:
    """A finite simplicial set presented by generators and their faces.

    ``generators`` maps a dimension to the sorted ids of the non-degenerate
    simplices in that dimension; ``faces`` maps ``(dim, id)`` of every
    generator of positive dimension to its faces ``d_0 ... d_dim``.
    """

    name: str
    generators: Mapping[int, tuple[str, ...]]
    faces: Mapping[Key, tuple[SimplexRef, ...]]
    basepoint: str | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @classmethod
    def build(
        cls,
        name: str,
        generators: Mapping[int, Iterable[str]],
        faces: Mapping[Key, Sequence[SimplexRef]],
        basepoint: str | None = None,
    ) -> "SSet":
        gens = {d: tuple(sorted(set(ids))) for d, ids in sorted(generators.items()) if ids}
        return cls(name, gens, {k: tuple(v) for k, v in faces.items()}, basepoint)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SSet):
            return NotImplemented
        return (
            self.generators == other.generators
            and self.faces == other.faces
            and self.basepoint == other.basepoint
        )

    def __hash__(self) -> int:
        return hash(self._canonical())

    def _canonical(self):
        c = self._cache.get("canonical")
        if c is None:
            c = (
                tuple(sorted(self.generators.items())),
                tuple(sorted(self.faces.items())),
                self.basepoint,
            )
            self._cache["canonical"] = c
        return c

    def __repr__(self) -> str:
        return f"SSet({self.name!r}, counts={self.counts()}, basepoint={self.basepoint!r})"

    @property
    def top_dim(self) -> int:
        return max(self.generators, default=-1)

    def gens(self, n: int) -> tuple[str, ...]:
        return self.generators.get(n, ())

    def has(self, dim: int, ident: str) -> bool:
        return ident in self._idsets().get(dim, ())

    def _idsets(self) -> dict[int, frozenset]:
        s = self._cache.get("idsets")
        if s is None:
            s = {d: frozenset(ids) for d, ids in self.generators.items()}
            self._cache["idsets"] = s
        return s

    def keys(self) -> list[Key]:
        return [(d, i) for d in sorted(self.generators) for i in self.generators[d]]

    def refs(self) -> list[SimplexRef]:
        return [gen(i, d) for d, i in self.keys()]

    def n_generators(self) -> int:
        return sum(len(v) for v in self.generators.values())

    def counts(self) -> tuple[int, ...]:
        return tuple(len(self.gens(n)) for n in range(self.top_dim + 1))

    def euler(self) -> int:
        return sum((-1) ** n * c for n, c in enumerate(self.counts()))

    @property
    def pointed(self) -> bool:
        return self.basepoint is not None

    def base_ref(self, dim: int = 0) -> SimplexRef:
        if self.basepoint is None:
            raise NotPointed(f"{self.name} has no basepoint")
        return total_degeneracy(self.basepoint, dim)

    def with_basepoint(self, vertex: str | None, name: str | None = None) -> "SSet":
        if vertex is not None and not self.has(0, vertex):
            raise InvalidPresentation(f"basepoint {vertex!r} is not a vertex of {self.name}")
        return SSet(name or self.name, self.generators, self.faces, vertex)

    def renamed(self, name: str) -> "SSet":
        return SSet(name, self.generators, self.faces, self.basepoint)

    def simplices(self, n: int) -> list[SimplexRef]:
        """Every n-simplex, degenerate or not, in canonical order."""
        cache = self._cache.setdefault("simplices", {})
        if n not in cache:
            out = []
            for p in range(min(n, self.top_dim) + 1):
                for sigma in surjections(n, p):
                    w = word_of_surjection(sigma)
                    out.extend(SimplexRef(w, i, p) for i in self.gens(p))
            out.sort(key=SimplexRef.sort_key)
            cache[n] = out
        return cache[n]

    def subcomplex(self, keys: Iterable[Key], name: str | None = None) -> "SSet":
        keys = set(keys)
        missing = _closure_violations(self, keys)
        if missing:
            raise InvalidPresentation(f"not closed under faces: {missing[0]}")
        gens: dict[int, list[str]] = {}
        for d, i in keys:
            gens.setdefault(d, []).append(i)
        faces = {k: v for k, v in self.faces.items() if k in keys}
        bp = self.basepoint if self.basepoint is not None and (0, self.basepoint) in keys else None
        return SSet.build(name or f"sub({self.name})", gens, faces, bp)


def _closure_violations(X: SSet, keys: set[Key]) -> list[str]:
    out = []
    for k in sorted(keys):
        if not X.has(*k):
            out.append(f"{k[1]} (dim {k[0]}) is not a generator")
            continue
        for i, f in enumerate(X.faces.get(k, ())):
            if f.key not in keys:
                out.append(f"d_{i}({k[1]}) = {f} leaves the subcomplex")
    return out


def pull(X: SSet, theta: Sequence[int], x: SimplexRef) -> SimplexRef:
    """``theta^* x`` for a monotone ``theta : [m] -> [dim x]``."""
    theta = tuple(theta)
    memo = X._cache.setdefault("pull", {})
    hit = memo.get((theta, x))
    if hit is not None:
        return hit
    sigma = surjection_of_word(x.word, x.base)
    if theta and not (0 <= min(theta) and max(theta) < len(sigma)):
        raise SSetError(f"operator {theta} does not act on the {x.dim}-simplex {x}")
    phi = tuple(sigma[t] for t in theta)
    image = sorted(set(phi))
    if len(image) == x.base + 1:
        res = SimplexRef(word_of_surjection(phi), x.target, x.base)
    else:
        missing = max(set(range(x.base + 1)) - set(image))
        faces = X.faces.get(x.key)
        if faces is None:
            raise InvalidPresentation(f"no faces recorded for {x.target} (dim {x.base})")
        shifted = tuple(v if v < missing else v - 1 for v in phi)
        res = pull(X, shifted, faces[missing])
    memo[(theta, x)] = res
    return res


def face(X: SSet, s: SimplexRef, i: int) -> SimplexRef:
    n = s.dim
    if n < 1 or not 0 <= i <= n:
        raise SSetError(f"d_{i} is not defined on the {n}-simplex {s}")
    return pull(X, coface(n, i), s)


def degeneracy(s: SimplexRef, i: int) -> SimplexRef:
    if not 0 <= i <= s.dim:
        raise SSetError(f"s_{i} is not defined on the {s.dim}-simplex {s}")
    return normalize((i,), s)


def apply_operators(X: SSet, ops: Sequence[tuple[str, int]], s: SimplexRef) -> SimplexRef:
    """Apply ``ops`` (leftmost outermost) one operator at a time, e.g. d_1 s_0 x."""
    for kind, i in reversed(ops):
        s = face(X, s, i) if kind == "d" else degeneracy(s, i)
    return s


def operator_map(ops: Sequence[tuple[str, int]], n: int) -> tuple[int, ...]:
    """The monotone map in Delta encoded by an operator word acting on n-simplices."""
    theta = tuple(range(n + 1))
    dim = n
    for kind, i in reversed(ops):
        if kind == "d":
            theta = tuple(theta[v] for v in coface(dim, i))
            dim -= 1
        else:
            theta = tuple(theta[v] for v in codegeneracy(dim, i))
            dim += 1
    return theta


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class Issue:
    kind: str
    where: str
    detail: str

    def __str__(self) -> str:
        return f"[{self.kind}] {self.where}: {self.detail}"


def validate(X: SSet) -> list[Issue]:
    """Every violated invariant of a presentation; empty iff valid."""
    issues: list[Issue] = []
    for d, ids in X.generators.items():
        if d < 0:
            issues.append(Issue("dimension", f"dim {d}", "negative dimension"))
        if len(set(ids)) != len(ids):
            issues.append(Issue("duplicate", f"dim {d}", "repeated generator id"))
    for k in X.faces:
        if not X.has(*k):
            issues.append(Issue("dangling", k[1], f"faces given for unknown {k[0]}-simplex"))
    for d, i in X.keys():
        fs = X.faces.get((d, i))
        if d == 0:
            if fs:
                issues.append(Issue("arity", i, "a vertex has no faces"))
            continue
        if fs is None or len(fs) != d + 1:
            issues.append(Issue("arity", i, f"expected {d + 1} faces, got {0 if fs is None else len(fs)}"))
            continue
        for j, f in enumerate(fs):
            where = f"d_{j}({i})"
            if not is_admissible(f.word):
                issues.append(Issue("admissible", where, f"word {list(f.word)} is not strictly decreasing"))
                continue
            if f.word and f.word[0] > f.dim - 1:
                issues.append(Issue("admissible", where, f"s_{f.word[0]} out of range"))
                continue
            if not X.has(f.base, f.target):
                issues.append(Issue("dangling", where, f"missing {f.base}-simplex {f.target!r}"))
                continue
            if f.dim != d - 1:
                issues.append(Issue("dimension", where, f"face has dimension {f.dim}, expected {d - 1}"))
    if X.basepoint is not None and not X.has(0, X.basepoint):
        issues.append(Issue("basepoint", X.basepoint, "basepoint is not a vertex"))
    if issues:
        return issues
    for d, i in X.keys():
        if d < 2:
            continue
        fs = X.faces[(d, i)]
        for b in range(1, d + 1):
            for a in range(b):
                lhs = face(X, fs[b], a)
                rhs = face(X, fs[a], b - 1)
                if lhs != rhs:
                    issues.append(
                        Issue("identity", i, f"d_{a} d_{b} = {lhs} but d_{b - 1} d_{a} = {rhs}")
                    )
    return issues


def ensure_valid(X: SSet) -> SSet:
    if X._cache.get("valid"):
        return X
    issues = validate(X)
    if issues:
        raise InvalidPresentation(f"{X.name}: {issues[0]}" + (f" (+{len(issues) - 1} more)" if len(issues) > 1 else ""))
    X._cache["valid"] = True
    return X


def is_one_reduced(X: SSet) -> bool:
    return len(X.gens(0)) == 1 and not X.gens(1)


# -- maps ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SimplicialMap:
    """A map given by the image of every generator of the source."""

    source: SSet
    target: SSet
    assignment: Mapping[Key, SimplexRef]

    def __call__(self, x: SimplexRef) -> SimplexRef:
        try:
            img = self.assignment[x.key]
        except KeyError:
            raise InvalidMap(f"{x.target} (dim {x.base}) has no image") from None
        return normalize(x.word, img)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.assignment) == dict(other.assignment)
        )

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.assignment.items())))

    def signature(self) -> tuple:
        return tuple(self.assignment[k] for k in self.source.keys())

    def __repr__(self) -> str:
        body = ", ".join(f"{k[1]}->{v}" for k, v in sorted(self.assignment.items()))
        return f"SimplicialMap({self.source.name} -> {self.target.name}: {body})"


def check_map(f: SimplicialMap) -> list[Issue]:
    X, Y = f.source, f.target
    issues = []
    for k in X.keys():
        img = f.assignment.get(k)
        if img is None:
            issues.append(Issue("map", k[1], "generator has no image"))
            continue
        if not Y.has(img.base, img.target) or not is_admissible(img.word):
            issues.append(Issue("map", k[1], f"image {img} is not a simplex of {Y.name}"))
            continue
        if img.dim != k[0]:
            issues.append(Issue("map", k[1], f"image {img} has dimension {img.dim}, expected {k[0]}"))
    extra = set(f.assignment) - set(X.keys())
    for k in sorted(extra):
        issues.append(Issue("map", k[1], "assignment for a non-generator"))
    if issues:
        return issues
    for d, i in X.keys():
        if d == 0:
            continue
        img = f.assignment[(d, i)]
        for j, fc in enumerate(X.faces[(d, i)]):
            a, b = f(fc), face(Y, img, j)
            if a != b:
                issues.append(Issue("map", i, f"f(d_{j}) = {a} but d_{j}(f) = {b}"))
    if X.basepoint is not None and Y.basepoint is not None:
        if f.assignment[(0, X.basepoint)] != Y.base_ref():
            issues.append(Issue("map", X.basepoint, "basepoint not preserved"))
    return issues


def ensure_map(f: SimplicialMap) -> SimplicialMap:
    issues = check_map(f)
    if issues:
        raise InvalidMap(f"{f.source.name} -> {f.target.name}: {issues[0]}")
    return f


def identity(X: SSet) -> SimplicialMap:
    return SimplicialMap(X, X, {k: gen(k[1], k[0]) for k in X.keys()})


def constant_map(X: SSet, Y: SSet, vertex: str | None = None) -> SimplicialMap:
    v = Y.basepoint if vertex is None else vertex
    if v is None:
        raise NotPointed("constant map needs a vertex")
    return SimplicialMap(X, Y, {k: total_degeneracy(v, k[0]) for k in X.keys()})


def compose(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """``g . f``."""
    if f.target != g.source:
        raise InvalidMap("maps are not composable")
    return SimplicialMap(f.source, g.target, {k: g(v) for k, v in f.assignment.items()})


def inclusion(A: SSet, X: SSet) -> SimplicialMap:
    return ensure_map(SimplicialMap(A, X, {k: gen(k[1], k[0]) for k in A.keys()}))


def is_mono(f: SimplicialMap) -> bool:
    """Injective on simplices: generators go to distinct non-degenerate simplices."""
    ensure_map(f)
    seen = set()
    for v in f.assignment.values():
        if v.degenerate or v in seen:
            return False
        seen.add(v)
    return True


# -- constructions ------------------------------------------------------------


class Product(NamedTuple):
    space: SSet
    pr1: SimplicialMap
    pr2: SimplicialMap
    pairs: Mapping[Key, tuple[SimplexRef, SimplexRef]]

    def pair(self, x: SimplexRef, y: SimplexRef) -> SimplexRef:
        return pair_ref(x, y)


def _pair_id(x: SimplexRef, y: SimplexRef) -> str:
    return f"({x},{y})"


def pair_ref(x: SimplexRef, y: SimplexRef) -> SimplexRef:
    """The product simplex ``(x, y)`` as a degeneracy of a non-degenerate pair."""
    if x.dim != y.dim:
        raise SSetError("pair of simplices of different dimensions")
    sx = surjection_of_word(x.word, x.base)
    sy = surjection_of_word(y.word, y.base)
    n = x.dim
    common = {j for j in range(n) if sx[j] == sx[j + 1] and sy[j] == sy[j + 1]}
    reps = [t for t in range(n + 1) if t == 0 or (t - 1) not in common]
    rho, v = [], 0
    for t in range(n + 1):
        if t > 0 and (t - 1) not in common:
            v += 1
        rho.append(v)
    x2 = SimplexRef(word_of_surjection([sx[t] for t in reps]), x.target, x.base)
    y2 = SimplexRef(word_of_surjection([sy[t] for t in reps]), y.target, y.base)
    return SimplexRef(word_of_surjection(rho), _pair_id(x2, y2), len(reps) - 1)


def product(X: SSet, Y: SSet, name: str | None = None) -> Product:
    ensure_valid(X)
    ensure_valid(Y)
    gens: dict[int, list[str]] = {}
    faces: dict[Key, tuple[SimplexRef, ...]] = {}
    pairs: dict[Key, tuple[SimplexRef, SimplexRef]] = {}
    top = X.top_dim + Y.top_dim
    if X.top_dim < 0 or Y.top_dim < 0:
        top = -1
    for n in range(top + 1):
        xs = X.simplices(n)
        ys = Y.simplices(n)
        for x in xs:
            rx = _repeats(x)
            for y in ys:
                if rx & _repeats(y):
                    continue
                pid = _pair_id(x, y)
                gens.setdefault(n, []).append(pid)
                pairs[(n, pid)] = (x, y)
                if n > 0:
                    faces[(n, pid)] = tuple(
                        pair_ref(face(X, x, i), face(Y, y, i)) for i in range(n + 1)
                    )
    bp = None
    if X.pointed and Y.pointed:
        bp = _pair_id(X.base_ref(), Y.base_ref())
    P = SSet.build(name or f"{X.name}x{Y.name}", gens, faces, bp)
    pr1 = SimplicialMap(P, X, {k: v[0] for k, v in pairs.items()})
    pr2 = SimplicialMap(P, Y, {k: v[1] for k, v in pairs.items()})
    return Product(P, pr1, pr2, pairs)


def _repeats(x: SimplexRef) -> set[int]:
    # positions j with x in the image of s_j
    s = surjection_of_word(x.word, x.base)
    return {j for j in range(len(s) - 1) if s[j] == s[j + 1]}


class Quotient(NamedTuple):
    space: SSet
    map: SimplicialMap


def quotient(X: SSet, A: Iterable[Key], name: str | None = None) -> Quotient:
    """Collapse the subcomplex ``A`` to a single vertex, the new basepoint."""
    ensure_valid(X)
    A = set(A)
    bad = _closure_violations(X, A)
    if bad:
        raise InvalidPresentation(f"cannot collapse a non-subcomplex: {bad[0]}")
    star = "*"
    n = 0
    while X.has(0, star) and (0, star) not in A:
        n += 1
        star = "*" + "'" * n

    def push(r: SimplexRef) -> SimplexRef:
        return total_degeneracy(star, r.dim) if r.key in A else r

    gens: dict[int, list[str]] = {0: [star]}
    faces = {}
    for d, i in X.keys():
        if (d, i) in A:
            continue
        gens.setdefault(d, []).append(i)
        if d > 0:
            faces[(d, i)] = tuple(push(f) for f in X.faces[(d, i)])
    Q = SSet.build(name or f"{X.name}/{len(A)}", gens, faces, star)
    q = SimplicialMap(X, Q, {k: push(gen(k[1], k[0])) for k in X.keys()})
    return Quotient(Q, q)


class Coproduct(NamedTuple):
    space: SSet
    inl: SimplicialMap
    inr: SimplicialMap


def coproduct(X: SSet, Y: SSet, name: str | None = None) -> Coproduct:
    clash = any(X.has(d, i) for d, i in Y.keys())
    lx, ly = ("a.", "b.") if clash else ("", "")

    def tag(p: str, r: SimplexRef) -> SimplexRef:
        return SimplexRef(r.word, p + r.target, r.base)

    gens: dict[int, list[str]] = {}
    faces = {}
    for p, Z in ((lx, X), (ly, Y)):
        for d, i in Z.keys():
            gens.setdefault(d, []).append(p + i)
            if d:
                faces[(d, p + i)] = tuple(tag(p, f) for f in Z.faces[(d, i)])
    C = SSet.build(name or f"{X.name}+{Y.name}", gens, faces)
    inl = SimplicialMap(X, C, {k: gen(lx + k[1], k[0]) for k in X.keys()})
    inr = SimplicialMap(Y, C, {k: gen(ly + k[1], k[0]) for k in Y.keys()})
    return Coproduct(C, inl, inr)


class Wedge(NamedTuple):
    space: SSet
    inl: SimplicialMap
    inr: SimplicialMap


def wedge(X: SSet, Y: SSet, name: str | None = None) -> Wedge:
    if not (X.pointed and Y.pointed):
        raise NotPointed("wedge needs two pointed simplicial sets")
    C = coproduct(X, Y)
    A = {C.inl(X.base_ref()).key, C.inr(Y.base_ref()).key}
    Q = quotient(C.space, A, name or f"{X.name}v{Y.name}")
    return Wedge(Q.space, compose(Q.map, C.inl), compose(Q.map, C.inr))


class Smash(NamedTuple):
    space: SSet
    map: SimplicialMap  # product -> smash
    product: Product

    def pair(self, x: SimplexRef, y: SimplexRef) -> SimplexRef:
        return self.map(pair_ref(x, y))


def smash(X: SSet, Z: SSet, name: str | None = None) -> Smash:
    if not (X.pointed and Z.pointed):
        raise NotPointed("smash needs two pointed simplicial sets")
    P = product(X, Z)
    axes = {k for k, (x, z) in P.pairs.items() if x.target == X.basepoint and x.base == 0
            or z.target == Z.basepoint and z.base == 0}
    Q = quotient(P.space, axes, name or f"{X.name}^{Z.name}")
    return Smash(Q.space, Q.map, P)


def disjoint_basepoint(Z: SSet, name: str | None = None) -> SSet:
    plus, n = "+", 0
    while Z.has(0, plus):
        n += 1
        plus = f"+{n}"
    gens = {d: list(ids) for d, ids in Z.generators.items()}
    gens.setdefault(0, []).append(plus)
    return SSet.build(name or f"{Z.name}_+", gens, dict(Z.faces), plus)
