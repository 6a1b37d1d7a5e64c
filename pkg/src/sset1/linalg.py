"""Sparse integer matrices and Smith normal form over the integers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """An exact ``rows x cols`` integer matrix stored as its non-zero entries."""

    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r}, {c}) outside a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", {k: int(v) for k, v in self.entries.items() if v})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, {})

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        ent = {}
        for r, row in enumerate(rows):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                if v:
                    ent[(r, c)] = int(v)
        return cls(len(rows), cols, ent)

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def __getitem__(self, rc: tuple[int, int]) -> int:
        return self.entries.get(rc, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, tuple(sorted(self.entries.items()))))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: dict[tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                out[(r, c)] = out.get((r, c), 0) + v * w
        return IntMatrix(self.rows, other.cols, out)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return IntMatrix(self.rows, self.cols, out)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def is_zero(self) -> bool:
        return not self.entries

    def is_diagonal(self) -> bool:
        return all(r == c for r, c in self.entries)

    def diagonal(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        a = self.to_rows()
        n, sign, prev = self.rows, 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k]), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    @staticmethod
    def block_diag(blocks: Iterable["IntMatrix"]) -> "IntMatrix":
        ent, r0, c0 = {}, 0, 0
        for b in blocks:
            for (r, c), v in b.entries.items():
                ent[(r0 + r, c0 + c)] = v
            r0 += b.rows
            c0 += b.cols
        return IntMatrix(r0, c0, ent)


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == D`` with ``D`` diagonal, non-negative, d1 | d2 | ... ."""

    U: IntMatrix | None
    D: IntMatrix
    V: IntMatrix | None

    @property
    def invariant_factors(self) -> list[int]:
        return [d for d in self.D.diagonal() if d]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _ident(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A: IntMatrix, transforms: bool = True) -> SmithForm:
    m, n = A.rows, A.cols
    a = A.to_rows()
    U = _ident(m) if transforms else None
    V = _ident(n) if transforms else None

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row dst += q * row src
        ra, rd = a[src], a[dst]
        for c in range(n):
            if ra[c]:
                rd[c] += q * ra[c]
        if U is not None:
            us, ud = U[src], U[dst]
            for c in range(m):
                if us[c]:
                    ud[c] += q * us[c]

    def add_col(src, dst, q):  # col dst += q * col src
        for row in a:
            if row[src]:
                row[dst] += q * row[src]
        if V is not None:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    if a[t][j]:
                        dirty = True
            if dirty:
                # a smaller remainder exists in row or column t; pivot on it
                cands = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                cands += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
                _, i, j = min(cands)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if a[t][t] < 0:
            a[t] = [-v for v in a[t]]
            if U is not None:
                U[t] = [-v for v in U[t]]
        t += 1
    D = IntMatrix.from_rows(a, n)
    return SmithForm(
        IntMatrix.from_rows(U, m) if U is not None else None,
        D,
        IntMatrix.from_rows(V, n) if V is not None else None,
    )


def factor(n: int) -> dict[int, int]:
    """Prime factorization of ``|n| >= 1`` by trial division."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out
