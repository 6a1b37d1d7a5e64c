from __future__ import annotations

import warnings

import pytest
from hypothesis import given, strategies as st

import brute
from sset1.core import SSetError
from sset1.homology import PrimeSet, cone_report, complex_homology
from sset1.localization import (
    PreconditionWarning,
    inclusion_degree,
    sphere_complex,
    sphere_inclusion,
    stage_inclusion_is_local_iso,
    stage_map,
    telescope_stage,
)


def test_first_attaching_cell():
    st1 = telescope_stage(2, [2], 1)
    assert st1.complex.basis[3] == ["e1"] and st1.complex.basis[2] == ["x0", "x1"]
    assert st1.complex.d(3).to_rows() == [[1], [-2]]


def test_stage_homology():
    H = telescope_stage(3, [2, 3], 2).homology()
    assert str(H[3]) == "Z" and H[4].is_trivial()
    assert str(H[0]) == "Z" and H[1].is_trivial() and H[2].is_trivial()


@pytest.mark.parametrize("ms, degree", [((2,), 2), ((), 1), ((2, 3), 6), ((3, 3, 2), 18)])
def test_inclusion_degree_examples(ms, degree):
    assert inclusion_degree(telescope_stage(2, ms)) == degree


def test_local_iso_examples():
    stage = telescope_stage(2, [2, 2, 2])
    assert stage_inclusion_is_local_iso(stage, PrimeSet.of([2])).ok
    with pytest.warns(PreconditionWarning):
        r = stage_inclusion_is_local_iso(stage, PrimeSet.of([3]))
    assert not r.ok
    assert [(n, str(G)) for n, G in r.witnesses()] == [(1, "Z/8")]


@pytest.mark.parametrize("n", range(2, 6))
def test_stage_zero_is_always_fine(n):
    stage = telescope_stage(n, [], 0)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert stage_inclusion_is_local_iso(stage, PrimeSet()).ok


def test_sphere_complex():
    H = complex_homology(sphere_complex(4))
    assert {n: str(G) for n, G in H.items() if not G.is_trivial()} == {0: "Z", 4: "Z"}


def test_argument_errors():
    with pytest.raises(SSetError):
        telescope_stage(1, [2])
    with pytest.raises(SSetError):
        telescope_stage(2, [2], 2)
    with pytest.raises(SSetError):
        telescope_stage(2, [2], -1)
    with pytest.raises(SSetError):
        telescope_stage(2, [0])
    with pytest.raises(SSetError):
        telescope_stage(2, [2, 5], allowed=[6])
    assert telescope_stage(2, [4, 3], allowed=[6]).k == 2


def test_stage_map_rejects_unrelated_stages():
    with pytest.raises(SSetError):
        stage_map(telescope_stage(2, [2]), telescope_stage(2, [3, 2]))
    with pytest.raises(SSetError):
        stage_map(telescope_stage(2, [2]), telescope_stage(3, [2]))


multipliers = st.lists(st.integers(1, 12), max_size=4)


@given(st.integers(2, 5), multipliers)
def test_inclusion_degree_is_product(n, ms):
    stage = telescope_stage(n, ms)
    prod = 1
    for m in ms:
        prod *= m
    assert inclusion_degree(stage) == prod
    assert sphere_inclusion(stage).commutes()


@given(st.integers(2, 4), multipliers, st.data())
def test_earlier_stages_embed(n, ms, data):
    k = data.draw(st.integers(0, len(ms)))
    src, dst = telescope_stage(n, ms, k), telescope_stage(n, ms)
    F = stage_map(src, dst)
    assert F.commutes()
    rest = 1
    for m in ms[k:]:
        rest *= m
    # the later stage inverts exactly the primes of the remaining multipliers
    P = PrimeSet.from_multiplicative(ms[k:])
    assert cone_report(F, P).ok
    if rest > 1:
        assert not cone_report(F, PrimeSet()).ok


@given(st.integers(2, 4), multipliers, st.sets(st.sampled_from([2, 3, 5, 7, 11])))
def test_local_iso_iff_multiplier_primes_inverted(n, ms, primes):
    P = PrimeSet.of(primes)
    stage = telescope_stage(n, ms)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ok = stage_inclusion_is_local_iso(stage, P).ok
    assert ok == all(P.is_unit(m) for m in ms)


@given(multipliers)
def test_stage_boundary_against_sympy(ms):
    D = telescope_stage(2, ms).complex.d(3)
    inv = brute.sympy_invariants(D.to_rows())
    assert len(inv) == len(ms) and set(inv) <= {1}
