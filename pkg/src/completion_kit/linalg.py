"""Matrices of polynomials and their exact determinants."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import lru_cache

from .poly import Homomorphism, Polynomial, RingMismatchError, RingSpec, hom_apply

__all__ = ["PolyMatrix", "mat_new", "determinant", "mat_apply_hom", "MAX_DET_SIZE"]

# cofactor expansion is exponential; nothing in this package needs more than 3
MAX_DET_SIZE = 8


class PolyMatrix:
    """Immutable rows x cols matrix with entries in one polynomial ring."""

    __slots__ = ("_ring", "_rows", "_cols", "_entries")

    def __init__(self, ring: RingSpec, rows: int, cols: int, entries: Iterable[Polynomial | int]):
        if rows <= 0 or cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        fixed = []
        for e in entries:
            if isinstance(e, int):
                e = ring.const(e)
            elif e.ring != ring:
                raise RingMismatchError(f"entry {e} is over {e.ring}, matrix is over {ring}")
            fixed.append(e)
        if len(fixed) != rows * cols:
            raise ValueError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(fixed)}")
        self._ring = ring
        self._rows = rows
        self._cols = cols
        self._entries = tuple(fixed)

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Sequence[Sequence[Polynomial | int]]) -> PolyMatrix:
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("rows must be non-empty and of equal length")
        return cls(ring, len(rows), len(rows[0]), [e for r in rows for e in r])

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> PolyMatrix:
        return cls(ring, n, n, [int(i == j) for i in range(n) for j in range(n)])

    @property
    def ring(self) -> RingSpec:
        return self._ring

    @property
    def shape(self) -> tuple[int, int]:
        return (self._rows, self._cols)

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> tuple[Polynomial, ...]:
        return self._entries

    def __getitem__(self, index: tuple[int, int]) -> Polynomial:
        i, j = index
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(f"index {index} out of range for shape {self.shape}")
        return self._entries[i * self._cols + j]

    def row(self, i: int) -> tuple[Polynomial, ...]:
        return self._entries[i * self._cols : (i + 1) * self._cols]

    def column(self, j: int) -> tuple[Polynomial, ...]:
        return self._entries[j :: self._cols]

    def to_rows(self) -> list[list[Polynomial]]:
        return [list(self.row(i)) for i in range(self._rows)]

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(
            self._ring, self._cols, self._rows, [e for j in range(self._cols) for e in self.column(j)]
        )

    def replace(self, i: int, j: int, value: Polynomial | int) -> PolyMatrix:
        """Copy with entry (i, j) replaced."""
        entries = list(self._entries)
        entries[i * self._cols + j] = value
        return PolyMatrix(self._ring, self._rows, self._cols, entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self._ring == other._ring
            and self.shape == other.shape
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self._ring, self.shape, self._entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self._rows))
        return f"PolyMatrix([{body}])"


def mat_new(ring: RingSpec, rows: int, cols: int, entries: Iterable[Polynomial | int]) -> PolyMatrix:
    return PolyMatrix(ring, rows, cols, entries)


def determinant(m: PolyMatrix) -> Polynomial:
    """Exact determinant by cofactor expansion along the first column.

    Minors are memoised on their row sets, so an n x n determinant costs
    O(n 2^n) polynomial multiplications instead of O(n!).
    """
    n, cols = m.shape
    if n != cols:
        raise ValueError(f"determinant of non-square {n}x{cols} matrix")
    if n > MAX_DET_SIZE:
        raise ValueError(f"matrix size {n} exceeds the limit of {MAX_DET_SIZE}")

    # minor(rows) = det of the submatrix on `rows` and the last len(rows) columns
    @lru_cache(maxsize=None)
    def minor(rows: tuple[int, ...]) -> Polynomial:
        col = n - len(rows)
        if len(rows) == 1:
            return m[rows[0], col]
        total = m.ring.zero()
        for k, i in enumerate(rows):
            entry = m[i, col]
            if entry.is_zero:
                continue
            sub = minor(rows[:k] + rows[k + 1 :])
            total = total - entry * sub if k % 2 else total + entry * sub
        return total

    return minor(tuple(range(n)))


def mat_apply_hom(h: Homomorphism, m: PolyMatrix) -> PolyMatrix:
    if m.ring != h.source:
        raise RingMismatchError(f"matrix over {m.ring}, homomorphism expects {h.source}")
    return PolyMatrix(h.target, m.rows, m.cols, [hom_apply(h, e) for e in m.entries])
