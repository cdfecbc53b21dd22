"""Exact integer and rational arithmetic.

Everything downstream (Euler numbers, orbifold Euler characteristics, degree
equations, homology presentations) is decided by exact comparisons, so this
module never touches floating point.  Rationals are stdlib
``fractions.Fraction`` values: always stored reduced, denominator positive.

Provides Smith normal form over the integers with the unimodular transforms,
and a bounded integrality scan for ratios of affine integer sequences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

Rational = Fraction

_BINARY_OPS: dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def rational_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Apply one of the four field operations; ``div`` by zero raises."""
    if op not in _BINARY_OPS:
        raise ValueError(f"unknown operation {op!r}; expected one of {sorted(_BINARY_OPS)}")
    a, b = Fraction(a), Fraction(b)
    if op == "div" and b == 0:
        raise ZeroDivisionError("rational division by zero")
    return _BINARY_OPS[op](a, b)


def frac_str(q: Fraction) -> str:
    """Render a rational as ``p/q`` with positive denominator (``0`` -> ``0/1``)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``x*a + y*b = g``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        if not all(isinstance(e, int) for e in self.entries):
            raise ValueError("matrix entries must be integers")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        ]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        rows = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                row.append(sum(self.at(i, k) * other.at(k, j) for k in range(self.cols)))
            rows.append(row)
        return IntMatrix.from_rows(rows)


def smith_normal_form(m: IntMatrix) -> tuple[list[int], tuple[IntMatrix, IntMatrix]]:
    """Diagonalize ``m`` over the integers.

    Returns ``(diagonal, (U, V))`` where ``U @ m @ V`` is diagonal with
    non-negative entries, each entry divides the next, zeros trail, and both
    transforms are unimodular (determinant +-1).  Classic Euclidean pivoting:
    row and column operations shrink the pivot until it divides its whole row,
    column, and trailing block.
    """
    R, C = m.rows, m.cols
    a = m.to_rows()
    u = IntMatrix.identity(R).to_rows()
    v = IntMatrix.identity(C).to_rows()

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def add_row(src: int, dst: int, k: int) -> None:
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_col(src: int, dst: int, k: int) -> None:
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    def negate_row(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(R, C)):
        # seed with the smallest-magnitude nonzero entry of the trailing block
        pivot = None
        for i in range(t, R):
            for j in range(t, C):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])

        while True:
            # Euclid-reduce column t below the pivot
            progressed = True
            while progressed:
                progressed = False
                for i in range(t + 1, R):
                    if a[i][t]:
                        add_row(t, i, -(a[i][t] // a[t][t]))
                        if a[i][t]:  # nonzero remainder becomes the smaller pivot
                            swap_rows(t, i)
                            progressed = True
            # Euclid-reduce row t; a column swap can dirty the cleared column
            column_dirtied = False
            for j in range(t + 1, C):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                        column_dirtied = True
                        break
            if column_dirtied:
                continue
            # divisibility of the trailing block; fold an offender into row t
            offender = None
            for i in range(t + 1, R):
                if any(a[i][j] % a[t][t] for j in range(t + 1, C)):
                    offender = i
                    break
            if offender is None:
                break
            add_row(offender, t, 1)  # column t stays clear: a[offender][t] == 0
        if a[t][t] < 0:
            negate_row(t)

    diagonal = [a[i][i] for i in range(min(R, C))]
    return diagonal, (IntMatrix.from_rows(u), IntMatrix.from_rows(v))


@dataclass(frozen=True)
class AffineRatio:
    """The function ``x -> (a*x + b) / (c*x + d)`` with rational coefficients.

    Calling it returns an exact ``Fraction``, or ``None`` where the
    denominator vanishes (the function has no value there).
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.c == 0 and self.d == 0:
            raise ValueError("denominator is identically zero")

    def __call__(self, x: int) -> Fraction | None:
        den = self.c * x + self.d
        if den == 0:
            return None
        return (self.a * x + self.b) / den


def bounded_diophantine(
    f: Callable[[int], Fraction | None],
    domain: Iterable[int],
    value_filter: Callable[[int], bool] | None = None,
) -> list[tuple[int, int]]:
    """All ``(x, f(x))`` with ``x`` in ``domain`` and ``f(x)`` an integer.

    ``f`` is any callable returning an exact rational, or ``None`` at a pole;
    pole points are skipped (the function takes no value there).  An optional
    ``value_filter`` keeps only integer values it accepts.  The domain must be
    finite; callers supply whatever bound their problem justifies.
    """
    out: list[tuple[int, int]] = []
    for x in domain:
        value = f(x)
        if value is None:
            continue
        value = Fraction(value)
        if value.denominator != 1:
            continue
        n = int(value)
        if value_filter is None or value_filter(n):
            out.append((x, n))
    return out
