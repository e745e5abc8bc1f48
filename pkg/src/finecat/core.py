"""Exact sequences, convolution triangles, Pascal-matrix powers and truncated series.

Everything here is plain Python ``int`` arithmetic. Sequences and triangles are
1-indexed (``f(1)`` is the first term, ``t(n, k)`` with ``1 <= k <= n``); only the
Catalan numbers keep their customary 0-based index, ``catalan(0) == 1``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Union

from .validators import (
    InexactDivisionError,
    validate_index,
    validate_nonnegative,
    validate_positive,
)

logger = logging.getLogger(__name__)

# Levels of the Fine tower: f_0 is the Fine sequence, f_m its m-th invert transform.
TOWER_DEPTH = 4


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def exact_div(numerator: int, denominator: int, what: str = "division") -> int:
    """Divide exactly or raise.

    Raises:
        InexactDivisionError: If denominator does not divide numerator
    """
    if denominator == 0:
        raise InexactDivisionError(f"{what}: division by zero")
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivisionError(
            f"{what}: {numerator} is not divisible by {denominator}"
        )
    return quotient


@dataclass(frozen=True)
class Sequence:
    """A finite prefix f(1), ..., f(N) of an arithmetic function."""

    values: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"{self.label or 'sequence'}({n}) outside 1..{len(self.values)}")
        return self.values[n - 1]

    def prefix(self, length: int) -> Sequence:
        """First ``length`` terms."""
        if length > len(self.values):
            raise ValueError(
                f"{self.label or 'sequence'} has {len(self.values)} terms, {length} requested"
            )
        return Sequence(self.values[:length], self.label)

    @classmethod
    def from_function(cls, fn: Callable[[int], int], length: int, label: str = "") -> Sequence:
        return cls(tuple(fn(n) for n in range(1, length + 1)), label)


@dataclass(frozen=True)
class Triangle:
    """Lower-triangular array; row n holds t(n, 1), ..., t(n, n)."""

    rows: tuple[tuple[int, ...], ...]
    label: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        for n, row in enumerate(rows, 1):
            if len(row) != n:
                raise ValueError(f"row {n} of a triangle must hold {n} entries, got {len(row)}")
        object.__setattr__(self, "rows", rows)

    @property
    def order(self) -> int:
        return len(self.rows)

    def __call__(self, n: int, k: int) -> int:
        if not 1 <= k <= n <= self.order:
            raise IndexError(f"({n}, {k}) outside a triangle of order {self.order}")
        return self.rows[n - 1][k - 1]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n - 1]

    def column(self, k: int) -> tuple[int, ...]:
        return tuple(row[k - 1] for row in self.rows[k - 1 :])

    def row_sums(self) -> Sequence:
        return Sequence(tuple(sum(row) for row in self.rows), f"row sums of {self.label}".strip())

    def mirror(self) -> Triangle:
        """The triangle with every row reversed, t'(n, k) = t(n, n - k + 1)."""
        return Triangle(tuple(row[::-1] for row in self.rows), f"mirror of {self.label}".strip())

    def __matmul__(self, other: Union[Triangle, PascalPower]) -> Triangle:
        right = other.as_triangle() if isinstance(other, PascalPower) else other
        if not isinstance(right, Triangle):
            return NotImplemented
        if right.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {right.order}")
        rows = []
        for n in range(1, self.order + 1):
            left_row = self.rows[n - 1]
            rows.append(
                tuple(
                    sum(left_row[i - 1] * right.rows[i - 1][k - 1] for i in range(k, n + 1))
                    for k in range(1, n + 1)
                )
            )
        return Triangle(tuple(rows), self.label)


def identity_triangle(order: int) -> Triangle:
    """Identity matrix of the given order as a triangle."""
    validate_positive(order, "order")
    return Triangle(
        tuple(tuple(1 if k == n else 0 for k in range(1, n + 1)) for n in range(1, order + 1)),
        "I",
    )


@dataclass(frozen=True)
class PascalPower:
    """L^p: entry (i, j) = p^(i-j) * C(i-1, j-1) for j <= i, with 0^0 = 1."""

    order: int
    exponent: int

    def entry(self, i: int, j: int) -> int:
        if j > i:
            return 0
        return self.exponent ** (i - j) * comb(i - 1, j - 1)

    def as_triangle(self) -> Triangle:
        return Triangle(
            tuple(
                tuple(self.entry(i, j) for j in range(1, i + 1))
                for i in range(1, self.order + 1)
            ),
            f"L^{self.exponent}",
        )

    def __matmul__(self, other: Union[Triangle, PascalPower]) -> Triangle:
        return self.as_triangle() @ other


@dataclass(frozen=True)
class SeriesPoly:
    """Power series truncated after x^order, coefficients c(0), ..., c(order)."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i <= self.order else 0

    @classmethod
    def from_sequence(cls, f: Sequence, order: int) -> SeriesPoly:
        """sum_{i=1}^{order} f(i) x^i."""
        return cls((0,) + f.prefix(order).values)

    @classmethod
    def one(cls, order: int) -> SeriesPoly:
        return cls((1,) + (0,) * order)

    def __add__(self, other: SeriesPoly) -> SeriesPoly:
        order = min(self.order, other.order)
        return SeriesPoly(tuple(self[i] + other[i] for i in range(order + 1)))

    def __mul__(self, other: SeriesPoly) -> SeriesPoly:
        order = min(self.order, other.order)
        coefficients = [0] * (order + 1)
        for i, a in enumerate(self.coefficients[: order + 1]):
            if a:
                for j in range(order - i + 1):
                    coefficients[i + j] += a * other.coefficients[j]
        return SeriesPoly(tuple(coefficients))

    def __pow__(self, k: int) -> SeriesPoly:
        validate_nonnegative(k, "k")
        result = SeriesPoly.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result


def _require_unit_head(f: Sequence, length: int) -> None:
    validate_positive(length, "N")
    if len(f) < length:
        raise ValueError(f"{f.label or 'sequence'} has {len(f)} terms, {length} required")
    if f(1) != 1:
        raise ValueError(f"{f.label or 'sequence'}(1) must be 1, got {f(1)}")


def catalan(n: int) -> int:
    """Catalan number C_n = C(2n, n) / (n + 1)."""
    validate_nonnegative(n, "n")
    return exact_div(comb(2 * n, n), n + 1, "catalan")


def catalan_sequence(length: int, offset: int = 0) -> Sequence:
    """C_{n-1+offset} for n = 1..length; offset 0 is f_1, offset 1 is f_2."""
    validate_positive(length, "N")
    values = [catalan(offset)]
    for n in range(offset, offset + length - 1):
        values.append(exact_div(values[-1] * 2 * (2 * n + 1), n + 2, "catalan recurrence"))
    return Sequence(tuple(values), f"C(n-1+{offset})" if offset else "C(n-1)")


def invert_transform(f: Sequence, length: int | None = None) -> Sequence:
    """g(n) = f(n) + sum_{i=1}^{n-1} f(i) g(n-i).

    Raises:
        ValueError: If f(1) != 1 or f is shorter than ``length``
    """
    length = len(f) if length is None else length
    _require_unit_head(f, length)
    g: list[int] = []
    for n in range(1, length + 1):
        g.append(f(n) + sum(f(i) * g[n - i - 1] for i in range(1, n)))
    return Sequence(tuple(g), f"INVERT({f.label})" if f.label else "")


def invert_inverse(g: Sequence, length: int | None = None) -> Sequence:
    """The f whose invert transform is g: f(n) = g(n) - sum_{i=1}^{n-1} f(i) g(n-i)."""
    length = len(g) if length is None else length
    _require_unit_head(g, length)
    f: list[int] = []
    for n in range(1, length + 1):
        f.append(g(n) - sum(f[i - 1] * g(n - i) for i in range(1, n)))
    return Sequence(tuple(f), f"INVERT^-1({g.label})" if g.label else "")


def fine_sequence(length: int) -> Sequence:
    """Fine numbers F_1..F_N (F_1 = 1), recovered from the Catalan prefix."""
    validate_positive(length, "N")
    fine = invert_inverse(catalan_sequence(length), length)
    return Sequence(fine.values, "F(n)")


def convolution_triangle(f: Sequence, length: int | None = None) -> Triangle:
    """t(n, k) = sum over compositions i_1 + ... + i_k = n of f(i_1)...f(i_k)."""
    length = len(f) if length is None else length
    _require_unit_head(f, length)
    values = f.prefix(length).values
    rows: list[tuple[int, ...]] = []
    for n in range(1, length + 1):
        row = [values[n - 1]]
        for k in range(2, n + 1):
            row.append(
                sum(values[i - 1] * rows[n - i - 1][k - 2] for i in range(1, n - k + 2))
            )
        rows.append(tuple(row))
    logger.debug(f"Built convolution triangle of order {length} for {f.label or 'sequence'}")
    return Triangle(tuple(rows), f"conv({f.label})" if f.label else "")


def pascal_power(order: int, p: int) -> PascalPower:
    """L_order^p, valid for every integer p including negative ones."""
    validate_positive(order, "N")
    return PascalPower(order, p)


def triangle_times_pascal_power(t: Triangle, p: int) -> Triangle:
    """T . L^p, i.e. out(n, k) = sum_{i=k}^{n} T(n, i) p^(i-k) C(i-1, k-1)."""
    return t @ pascal_power(t.order, p)


def series_power_coefficient(f: Sequence, k: int, n: int) -> int:
    """Coefficient of x^n in (sum_{i>=1} f(i) x^i)^k."""
    validate_index(n, k)
    if len(f) < n:
        raise ValueError(f"{f.label or 'sequence'} has {len(f)} terms, {n} required")
    return (SeriesPoly.from_sequence(f, n) ** k)[n]


def fine_tower(length: int) -> tuple[Sequence, ...]:
    """f_0, ..., f_4 with f_0 the Fine numbers and f_m = INVERT(f_{m-1})."""
    tower = [fine_sequence(length)]
    for m in range(1, TOWER_DEPTH + 1):
        tower.append(Sequence(invert_transform(tower[-1], length).values, f"f{m}"))
    tower[0] = Sequence(tower[0].values, "f0")
    return tuple(tower)


def tower_sequence(m: int, length: int) -> Sequence:
    """f_m(1..length) from the invert-transform tower."""
    if not 0 <= m <= TOWER_DEPTH:
        raise ValueError(f"level must be in 0..{TOWER_DEPTH}, got {m}")
    return fine_tower(length)[m]


def tower_triangle(m: int, length: int) -> Triangle:
    """G_m by convolution of f_{m-1}."""
    if not 1 <= m <= TOWER_DEPTH:
        raise ValueError(f"triangle level must be in 1..{TOWER_DEPTH}, got {m}")
    triangle = convolution_triangle(fine_tower(length)[m - 1], length)
    return Triangle(triangle.rows, f"G{m}")


def matrix_triangle(m: int, length: int) -> Triangle:
    """G_m = G_1 . L^(m-1)."""
    if not 1 <= m <= TOWER_DEPTH:
        raise ValueError(f"triangle level must be in 1..{TOWER_DEPTH}, got {m}")
    g1 = convolution_triangle(fine_sequence(length), length)
    return Triangle(triangle_times_pascal_power(g1, m - 1).rows, f"G{m}")


def triangle_from_function(fn: Callable[[int, int], int], order: int, label: str = "") -> Triangle:
    """Materialize t(n, k) = fn(n, k) for 1 <= k <= n <= order."""
    validate_positive(order, "N")
    return Triangle(
        tuple(tuple(fn(n, k) for k in range(1, n + 1)) for n in range(1, order + 1)),
        label,
    )
