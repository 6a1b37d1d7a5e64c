"""Finite stages of the telescope model of a localized sphere, at chain level.

Stage k of the telescope of ``S^n -> S^n -> ...`` (degrees m_1, m_2, ...) has
one 0-cell, n-cells x_0..x_k and (n+1)-cells e_1..e_k attached so that
``d e_j = x_{j-1} - m_j x_j``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Sequence

from .core import SSetError
from .homology import (
    ChainComplexZ,
    ChainMap,
    FGAbGroup,
    LocalIsoReport,
    PrimeSet,
    complex_homology,
    cone_report,
)
from .linalg import IntMatrix, factor, smith_normal_form


class PreconditionWarning(UserWarning):
    pass


@dataclass(frozen=True)
class TelescopeStage:
    n: int
    multipliers: tuple[int, ...]
    complex: ChainComplexZ

    @property
    def k(self) -> int:
        return len(self.multipliers)

    def homology(self) -> dict[int, FGAbGroup]:
        return complex_homology(self.complex)


def _cells(n: int, k: int) -> dict[int, list[str]]:
    basis = {d: [] for d in range(n + 2)}
    basis[0] = ["pt"]
    basis[n] = [f"x{i}" for i in range(k + 1)]
    basis[n + 1] = [f"e{j}" for j in range(1, k + 1)]
    return basis


def telescope_stage(
    n: int, multipliers: Sequence[int], k: int | None = None, allowed: Sequence[int] | None = None
) -> TelescopeStage:
    """Stage ``k`` (default: all multipliers) of the telescope.

    ``allowed`` optionally lists generators of the multiplicative set the
    multipliers must come from.
    """
    if n < 2:
        raise SSetError("telescope stages need n >= 2")
    ms = tuple(int(m) for m in multipliers)
    k = len(ms) if k is None else k
    if not 0 <= k <= len(ms):
        raise SSetError(f"stage {k} needs {k} multipliers, got {len(ms)}")
    ms = ms[:k]
    if any(m < 1 for m in ms):
        raise SSetError("multipliers must be positive integers")
    if allowed is not None:
        P = PrimeSet.from_multiplicative(allowed)
        for m in ms:
            if not all(P.inverts(p) for p in factor(m)):
                raise SSetError(f"multiplier {m} is not in the multiplicative set generated by {list(allowed)}")
    basis = _cells(n, k)
    ent = {}
    for j in range(1, k + 1):
        ent[(j - 1, j - 1)] = 1
        ent[(j, j - 1)] = -ms[j - 1]
    boundary = {n + 1: IntMatrix(k + 1, k, ent)}
    return TelescopeStage(n, ms, ChainComplexZ(basis, boundary).check())


def inclusion_degree(stage: TelescopeStage) -> int:
    """``|d|`` where the class of x_0 is d times a generator of ``H_n(stage)``."""
    D = stage.complex.d(stage.n + 1)
    F = smith_normal_form(D)
    r = F.rank
    if any(d != 1 for d in F.invariant_factors) or D.rows - r != 1:
        raise SSetError("stage homology in degree n is not infinite cyclic")
    # the free quotient is the coordinate after the pivots in the U-basis
    return abs(F.U[r, 0])


def sphere_complex(n: int) -> ChainComplexZ:
    return telescope_stage(n, (), 0).complex


def stage_map(src: TelescopeStage, dst: TelescopeStage) -> ChainMap:
    """The cellular inclusion of an earlier stage into a later one."""
    if src.n != dst.n or dst.multipliers[: src.k] != src.multipliers:
        raise SSetError("not an earlier stage of the same telescope")
    C, D = src.complex, dst.complex
    mats = {}
    for d in C.basis:
        idx = {c: t for t, c in enumerate(D.basis[d])}
        mats[d] = IntMatrix(D.rank(d), C.rank(d), {(idx[c], t): 1 for t, c in enumerate(C.basis[d])})
    return ChainMap(C, D, mats)


def sphere_inclusion(stage: TelescopeStage) -> ChainMap:
    return stage_map(telescope_stage(stage.n, (), 0), stage)


def stage_inclusion_is_local_iso(stage: TelescopeStage, P: PrimeSet) -> LocalIsoReport:
    """Whether ``S^n -> stage`` is a P-local homology isomorphism (computed).

    Warns when a multiplier has a prime outside P; the verdict is still the
    honest computation.
    """
    outside = sorted({p for m in stage.multipliers for p in factor(m) if not P.inverts(p)})
    if outside:
        warnings.warn(
            f"multiplier primes {outside} are not inverted in {P}", PreconditionWarning, stacklevel=2
        )
    F = sphere_inclusion(stage)
    if not F.commutes():
        raise SSetError("sphere inclusion is not a chain map")
    return cone_report(F, P)
