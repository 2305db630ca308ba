"""Small dense linear algebra over GF(2).

Rows are stored as tuples of 0/1 ints. Sizes here are tiny (homology of
desk-scale complexes, module interleaving searches), so simplicity wins
over bit packing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence


@dataclass(frozen=True)
class GF2Matrix:
    rows: tuple[tuple[int, ...], ...]
    nrows: int
    ncols: int

    def __init__(self, rows: Sequence[Sequence[int]], nrows: int | None = None, ncols: int | None = None):
        rows = tuple(tuple(int(x) % 2 for x in row) for row in rows)
        if nrows is None:
            nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if len(rows) != nrows or any(len(r) != ncols for r in rows):
            raise ValueError("inconsistent matrix shape")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", nrows)
        object.__setattr__(self, "ncols", ncols)

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "GF2Matrix":
        return GF2Matrix([[0] * ncols for _ in range(nrows)], nrows, ncols)

    @staticmethod
    def identity(n: int) -> "GF2Matrix":
        return GF2Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)], n, n)

    @staticmethod
    def from_columns(cols: Sequence[Sequence[int]], nrows: int) -> "GF2Matrix":
        return GF2Matrix(
            [[col[i] % 2 for col in cols] for i in range(nrows)], nrows, len(cols)
        )

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def matmul(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                row.append(sum(self.rows[i][k] & other.rows[k][j] for k in range(self.ncols)) % 2)
            out.append(row)
        return GF2Matrix(out, self.nrows, other.ncols)

    def __matmul__(self, other: "GF2Matrix") -> "GF2Matrix":
        return self.matmul(other)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(r[k] & vec[k] for k in range(self.ncols)) % 2 for r in self.rows)

    def rank(self) -> int:
        return len(_row_echelon([list(r) for r in self.rows])[0])

    def kernel_basis(self) -> list[tuple[int, ...]]:
        """Basis of the right null space, as column vectors of length ncols."""
        pivots, echelon = _row_echelon([list(r) for r in self.rows])
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for f in free:
            vec = [0] * self.ncols
            vec[f] = 1
            # back-substitute pivot coordinates
            for row, p in zip(reversed(echelon), reversed(pivots)):
                s = sum(row[j] & vec[j] for j in range(p + 1, self.ncols)) % 2
                vec[p] = s
            basis.append(tuple(vec))
        return basis

    def solve(self, target: Sequence[int]) -> tuple[int, ...] | None:
        """One solution x of self @ x = target, or None when inconsistent."""
        aug = [list(r) + [int(t) % 2] for r, t in zip(self.rows, target)]
        pivots, echelon = _row_echelon(aug, ncols=self.ncols)
        # reconstruct a candidate and verify; inconsistent systems fail the check
        x = [0] * self.ncols
        for row, p in zip(reversed(echelon), reversed(pivots)):
            s = (row[self.ncols] + sum(row[j] & x[j] for j in range(p + 1, self.ncols))) % 2
            x[p] = s
        if self.apply(x) != tuple(int(t) % 2 for t in target):
            return None
        return tuple(x)


def _row_echelon(rows: list[list[int]], ncols: int | None = None):
    """In-place style row echelon form; returns (pivot columns, pivot rows)."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    echelon: list[list[int]] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                rows[i] = [(a ^ b) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        echelon.append(rows[r])
        r += 1
        if r == len(rows):
            break
    return pivots, echelon


def span_rank(vectors: Sequence[Sequence[int]]) -> int:
    if not vectors:
        return 0
    return GF2Matrix([list(v) for v in vectors]).rank()


def extend_to_basis(base: list[tuple[int, ...]], candidates: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Greedily pick candidates that grow the span of ``base``; returns the
    picked vectors (not the base)."""
    chosen: list[tuple[int, ...]] = []
    current = list(base)
    r = span_rank(current)
    for cand in candidates:
        trial = current + [tuple(cand)]
        tr = span_rank(trial)
        if tr > r:
            chosen.append(tuple(cand))
            current = trial
            r = tr
    return chosen


def all_matrices(nrows: int, ncols: int) -> Iterator[GF2Matrix]:
    """Every GF(2) matrix of the given shape. 2^(nrows*ncols) of them."""
    if nrows == 0 or ncols == 0:
        yield GF2Matrix([], nrows, ncols) if nrows == 0 else GF2Matrix([[] for _ in range(nrows)], nrows, ncols)
        return
    for bits in product((0, 1), repeat=nrows * ncols):
        rows = [bits[i * ncols:(i + 1) * ncols] for i in range(nrows)]
        yield GF2Matrix(rows, nrows, ncols)
