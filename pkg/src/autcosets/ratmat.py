"""Dense matrices over the exact rationals (fractions.Fraction entries)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"matrix entries must be Fraction, int, or 'p/q' string, got {type(x).__name__}")


class RationalMatrix:
    """Immutable matrix of exact rationals supporting exact product and
    equality.  Entries may be given as Fraction, int, or "p/q" strings."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows_data: Iterable[Iterable]):
        data = tuple(tuple(_as_fraction(x) for x in row) for row in rows_data)
        if not data:
            raise ValueError("matrix needs at least one row")
        width = len(data[0])
        if width == 0:
            raise ValueError("matrix needs at least one column")
        if any(len(row) != width for row in data):
            raise ValueError("ragged rows")
        self.data = data
        self.rows = len(data)
        self.cols = width

    @classmethod
    def identity(cls, dim: int) -> "RationalMatrix":
        one = Fraction(1)
        zero = Fraction(0)
        return cls(tuple(tuple(one if i == j else zero for j in range(dim)) for i in range(dim)))

    def entry(self, i: int, j: int) -> Fraction:
        return self.data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.data[i]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(tuple(zip(*self.data)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = tuple(zip(*other.data))
        return RationalMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.data
            )
        )

    def __mul__(self, other):
        if isinstance(other, RationalMatrix):
            return self.__matmul__(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def is_doubly_stochastic(self) -> bool:
        """Square, entrywise non-negative, every row and column summing to 1."""
        if not self.is_square():
            return False
        one = Fraction(1)
        for row in self.data:
            if any(x < 0 for x in row) or sum(row) != one:
                return False
        return all(sum(col) == one for col in zip(*self.data))

    def to_strings(self) -> list[list[str]]:
        """Entries as 'p/q' (or 'p') strings, row by row."""
        return [[str(x) for x in row] for row in self.data]

    @classmethod
    def from_strings(cls, rows: Iterable[Iterable[str]]) -> "RationalMatrix":
        return cls(rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"RationalMatrix({self.rows}x{self.cols}: {body})"
