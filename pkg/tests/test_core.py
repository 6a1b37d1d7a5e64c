from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

import brute
from sset1 import corpus
from sset1.constructors import (
    boundary_complex,
    horn_complex,
    ordered_complex,
    point,
    rp2_model,
    simplicial_sphere,
    standard_simplex,
)
from sset1.core import (
    InvalidPresentation,
    NotPointed,
    check_map,
    SimplexRef,
    SSet,
    SSetError,
    compose,
    disjoint_basepoint,
    face,
    gen,
    identity,
    is_mono,
    is_one_reduced,
    normalize,
    product,
    quotient,
    smash,
    surjection_of_word,
    total_degeneracy,
    validate,
    wedge,
    word_of_surjection,
)
from sset1.functors import reduce1_map
from sset1.lifting import find_isomorphism, is_isomorphic


def x(dim=1, ident="x"):
    return gen(ident, dim)


# -- normalization -------------------------------------------------------------


def test_s0s0_reorders_to_s1s0():
    assert normalize((0, 0), x()) == SimplexRef((1, 0), "x", 1)


def test_d1_s0_is_identity():
    X = standard_simplex(1)
    s = normalize((0,), gen("01", 1))
    assert face(X, s, 1) == gen("01", 1)


def test_d0_s1_equals_s0_d0():
    X = standard_simplex(2)
    s = normalize((1,), gen("012", 2))
    assert face(X, s, 0) == normalize((0,), face(X, gen("012", 2), 0))


def test_normalize_idempotent_on_admissible():
    r = SimplexRef((3, 1), "x", 2)
    assert normalize((), r) == r


def test_normalize_rejects_out_of_range_index():
    with pytest.raises(SSetError):
        normalize((5,), x(1))


@given(st.lists(st.integers(0, 4), max_size=5), st.integers(0, 3))
def test_surjection_round_trip(word, base):
    try:
        sigma = surjection_of_word(word, base)
    except SSetError:
        return
    w = word_of_surjection(sigma)
    assert surjection_of_word(w, base) == sigma
    assert list(w) == sorted(set(w), reverse=True)


# -- face -----------------------------------------------------------------------


def test_face_of_triangle():
    assert face(standard_simplex(2), gen("012", 2), 0) == gen("12", 1)


def test_sphere_faces_are_basepoint_degeneracies():
    S2 = simplicial_sphere(2)
    eps = gen(S2.gens(2)[0], 2)
    for i in range(3):
        assert face(S2, eps, i) == total_degeneracy("*", 1)
    assert face(S2, normalize((0,), eps), 1) == eps


def test_face_index_out_of_range():
    with pytest.raises(SSetError):
        face(standard_simplex(2), gen("012", 2), 3)
    with pytest.raises(SSetError):
        face(standard_simplex(2), gen("0", 0), 0)


# -- validate -------------------------------------------------------------------


def test_validate_clean():
    assert validate(standard_simplex(3)) == []


def _perturbed_triangle(swap=(0, 1)):
    D = standard_simplex(2)
    fs = list(D.faces[(2, "012")])
    a, b = swap
    fs[a], fs[b] = fs[b], fs[a]
    faces = dict(D.faces)
    faces[(2, "012")] = tuple(fs)
    return SSet.build("bad", D.generators, faces)


def test_validate_detects_swapped_faces():
    issues = validate(_perturbed_triangle())
    assert issues and all(i.kind == "identity" for i in issues)


@pytest.mark.parametrize("swap", [(0, 1), (0, 2), (1, 2)])
def test_every_face_swap_is_detected(swap):
    assert validate(_perturbed_triangle(swap))


def test_validate_detects_wrong_dimension():
    D = standard_simplex(2)
    faces = dict(D.faces)
    faces[(2, "012")] = (gen("12", 1), gen("0", 0), gen("01", 1))
    issues = validate(SSet.build("bad", D.generators, faces))
    assert [i.kind for i in issues] == ["dimension"]


def test_validate_detects_dangling_face():
    D = standard_simplex(1)
    faces = {(1, "01"): (gen("1", 0), gen("7", 0))}
    assert [i.kind for i in validate(SSet.build("bad", D.generators, faces))] == ["dangling"]


# -- product ----------------------------------------------------------------------


def test_product_with_point_is_isomorphic():
    for stem in ("d2", "s2", "horn21"):
        X = corpus.space(stem).with_basepoint(None)
        assert is_isomorphic(product(point(), X).space, X)


@pytest.mark.parametrize(
    "p, q, expected",
    [(1, 1, (4, 5, 2)), (1, 2, (6, 12, 10, 3)), (2, 2, (9, 27, 37, 24, 6))],
)
def test_product_counts_against_brute_force(p, q, expected):
    P = product(standard_simplex(p), standard_simplex(q)).space
    oracle = brute.product_nondegenerate_counts(
        brute.OrderedModel([range(p + 1)]), brute.OrderedModel([range(q + 1)]), p + q
    )
    assert list(expected) == oracle
    assert P.counts() == expected
    assert validate(P) == []


def test_product_projections_are_maps():
    P = product(standard_simplex(1), simplicial_sphere(2))
    assert check_map(P.pr1) == [] and check_map(P.pr2) == []


# -- quotient ---------------------------------------------------------------------


def test_quotient_of_simplex_by_boundary_is_sphere():
    for n in (2, 3):
        D = standard_simplex(n)
        Q = quotient(D, [k for k in D.keys() if k[0] < n]).space
        assert Q.counts() == (1,) + (0,) * (n - 1) + (1,)
        assert is_isomorphic(Q, simplicial_sphere(n))


def test_quotient_by_everything_is_point():
    X = rp2_model()
    Q = quotient(X, X.keys()).space
    assert Q.counts() == (1,)


def test_quotient_by_one_skeleton_of_triangle():
    D = standard_simplex(2)
    Q = quotient(D, [k for k in D.keys() if k[0] <= 1])
    assert is_isomorphic(Q.space, simplicial_sphere(2))
    assert set(Q.map.assignment) == set(D.keys())


def test_quotient_requires_subcomplex():
    D = standard_simplex(2)
    with pytest.raises(InvalidPresentation):
        quotient(D, [(1, "01")])


# -- wedge, smash, disjoint basepoint ----------------------------------------------


def test_wedge_with_point():
    S2 = simplicial_sphere(2)
    assert is_isomorphic(wedge(S2, point().with_basepoint("0")).space, S2)


def test_wedge_of_two_spheres():
    assert wedge(simplicial_sphere(2), simplicial_sphere(2)).space.counts() == (1, 0, 2)


def test_wedge_needs_basepoints():
    with pytest.raises(NotPointed):
        wedge(standard_simplex(1), simplicial_sphere(2))


POINTED = ["s1", "s2", "s3", "s2vs2", "r1horn30"]


@pytest.mark.parametrize("a", POINTED)
@pytest.mark.parametrize("b", ["s1", "s2", "s2vs2"])
def test_wedge_euler_characteristic(a, b):
    X, Y = corpus.space(a), corpus.space(b)
    W = wedge(X, Y).space
    assert W.euler() == X.euler() + Y.euler() - 1
    assert validate(W) == []


def test_smash_of_sphere_with_interval_plus():
    S = smash(simplicial_sphere(2), disjoint_basepoint(standard_simplex(1))).space
    assert is_one_reduced(S)
    assert validate(S) == []
    oracle = brute.smash_nondegenerate_counts(
        brute.SphereModel(2), brute.OrderedModel([[0, 1], [9]], basepoint=9), 3
    )
    assert oracle == [1, 0, 4, 3]
    assert S.counts() == (1, 0, 4, 3)


@pytest.mark.parametrize("stem", ["s1", "s2", "s3", "s2vs2"])
def test_smash_with_s0_is_identity(stem):
    X = corpus.space(stem)
    S0 = disjoint_basepoint(point())
    assert is_isomorphic(smash(X, S0).space, X)


def test_smash_needs_basepoints():
    with pytest.raises(NotPointed):
        smash(standard_simplex(1), simplicial_sphere(2))


def test_disjoint_basepoint_counts():
    assert disjoint_basepoint(point()).counts() == (2,)
    assert disjoint_basepoint(boundary_complex(2).space).counts() == (4, 3)


@pytest.mark.parametrize("stem", sorted(corpus.SPACE_BUILDERS))
def test_disjoint_basepoint_euler(stem):
    X = corpus.space(stem)
    assert disjoint_basepoint(X).euler() == X.euler() + 1


# -- predicates and maps ----------------------------------------------------------


def test_is_one_reduced():
    assert is_one_reduced(simplicial_sphere(2))
    assert not is_one_reduced(standard_simplex(1))
    assert not is_one_reduced(simplicial_sphere(1))


def test_is_mono():
    assert is_mono(boundary_complex(2).map)
    assert not is_mono(corpus.corpus_map("d2_to_s2"))


@pytest.mark.parametrize("stem", sorted(corpus.MAP_BUILDERS))
def test_reduction_preserves_monos_on_corpus(stem):
    f = corpus.corpus_map(stem)
    if is_mono(f):
        assert is_mono(reduce1_map(f))


def test_compose_with_identity():
    f = corpus.corpus_map("j21")
    assert compose(identity(f.target), f).assignment == f.assignment
    assert compose(f, identity(f.source)).assignment == f.assignment


def test_find_isomorphism_distinguishes():
    assert find_isomorphism(simplicial_sphere(2), simplicial_sphere(3)) is None
    assert find_isomorphism(boundary_complex(2).space, horn_complex(2, 1).space) is None


# -- simplices against the brute-force models ---------------------------------------


MODELS = {
    "d2": brute.OrderedModel([[0, 1, 2]]),
    "bd2": brute.OrderedModel([[0, 1], [0, 2], [1, 2]]),
    "horn30": brute.OrderedModel([[0, 1, 2], [0, 1, 3], [0, 2, 3]]),
    "s2": brute.SphereModel(2),
    "s3": brute.SphereModel(3),
}


@pytest.mark.parametrize("stem", sorted(MODELS))
@pytest.mark.parametrize("n", range(0, 5))
def test_all_simplices_match_model(stem, n):
    X, M = corpus.space(stem), MODELS[stem]
    got = [brute.model_ref(M, r.target, r.base, r.word) for r in X.simplices(n)]
    assert len(got) == len(set(got))
    assert set(got) == set(M.simplices(n))
    for r in X.simplices(n):
        v = brute.model_ref(M, r.target, r.base, r.word)
        assert M.degenerate(v) == r.degenerate
        for i in range(n + 1 if n else 0):
            f = face(X, r, i)
            assert brute.model_ref(M, f.target, f.base, f.word) == M.face(v, i)


@st.composite
def ordered_complexes(draw):
    n = draw(st.integers(2, 6))
    facets = draw(
        st.lists(st.sets(st.integers(0, n - 1), min_size=1, max_size=4), min_size=1, max_size=6)
    )
    return ordered_complex("rand", [sorted(f) for f in facets])


@given(ordered_complexes())
def test_random_ordered_complexes_validate(X):
    assert validate(X) == []
    P = product(X, standard_simplex(1)).space if X.n_generators() <= 12 else X
    assert validate(P) == []


@given(ordered_complexes(), st.integers(0, 5))
def test_degenerate_simplices_have_at_most_two_nondegenerate_faces(X, n):
    for r in X.simplices(n):
        if not r.degenerate:
            continue
        nd = sum(not face(X, r, i).degenerate for i in range(n + 1))
        assert nd == (2 if len(r.word) == 1 else 0)
