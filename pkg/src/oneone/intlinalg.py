"""Exact integer matrices, Smith normal form and finitely generated abelian groups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise ValueError("dimensions do not match entry count")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(map(int, r)) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __matmul__(self, o: "IntMatrix") -> "IntMatrix":
        if self.cols != o.rows:
            raise ValueError("shape mismatch")
        a, b = self.to_rows(), o.to_rows()
        return IntMatrix.from_rows(
            [[sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(o.cols)]
             for i in range(self.rows)]
        )


@dataclass(frozen=True)
class SNFResult:
    diagonal: tuple[int, ...]

    @property
    def corank(self) -> int:
        return sum(1 for d in self.diagonal if d == 0)


def circulant(first_row: Sequence[int]) -> IntMatrix:
    """Row ``k`` is ``first_row`` cyclically shifted right by ``k``."""
    n = len(first_row)
    if n == 0:
        raise ValueError("empty first row")
    return IntMatrix.from_rows([[first_row[(j - i) % n] for j in range(n)] for i in range(n)])


def determinant(m: IntMatrix) -> int:
    """Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def rank(m: IntMatrix) -> int:
    """Rank over Q by fraction-free elimination."""
    a = m.to_rows()
    r = 0
    for c in range(m.cols):
        piv = next((i for i in range(r, m.rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, m.rows):
            if a[i][c]:
                f, g = a[i][c], a[r][c]
                a[i] = [x * g - y * f for x, y in zip(a[i], a[r])]
        r += 1
    return r


def smith_normal_form(m: IntMatrix) -> SNFResult:
    """Invariant factors ``d1 | d2 | ...``, zeros last.

    Pivots on the smallest nonzero entry of the remaining block.
    """
    a = m.to_rows()
    nr, nc = m.rows, m.cols
    diag = []
    for t in range(min(nr, nc)):
        while True:
            pivot = None
            for i in range(t, nr):
                for j in range(t, nc):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                diag.extend([0] * (min(nr, nc) - t))
                return SNFResult(tuple(diag))
            i, j = pivot
            a[t], a[i] = a[i], a[t]
            for row in a:
                row[t], row[j] = row[j], row[t]
            p = a[t][t]
            clean = True
            for i in range(t + 1, nr):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    clean = False
            for j in range(t + 1, nc):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
        diag.append(abs(a[t][t]))
    return SNFResult(tuple(diag))


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^rank + Z_t1 + ... + Z_tk`` with ``t1 | t2 | ...`` and every ``ti >= 2``."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("negative rank")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError("torsion coefficients must form a divisibility chain")

    @classmethod
    def cokernel(cls, relations: IntMatrix) -> "AbelianGroup":
        """Group on ``relations.cols`` generators with one relation per row."""
        d = smith_normal_form(relations).diagonal
        nonzero = [x for x in d if x]
        return cls(relations.cols - len(nonzero), tuple(x for x in nonzero if x > 1))

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Cardinality, or ``None`` when infinite."""
        if self.rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self) -> str:
        parts = ["Z"] * self.rank + [f"Z_{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}
