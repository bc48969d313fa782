"""Exact rational scalars, dense square matrices, and univariate polynomials.

Every geometric decision downstream (overlap, sign, distance comparison)
routes through these types. There is no floating point here; floats only
appear in presentation layers after a final conversion.

Rational numbers are ``fractions.Fraction``: arbitrary precision, always in
lowest terms with a positive denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int]


class DimensionError(ValueError):
    """Operand dimensions do not agree."""


def _rat(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def rational_str(x: RationalLike) -> str:
    """Serialize exactly, as "p/q" (or "p" for integers)."""
    q = _rat(x)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class RatMatrix:
    """Immutable square matrix over the rationals.

    ``rows[i][j]`` is the entry in row i, column j (0-based). Sizes stay
    small (order <= ~64), so storage is dense and products are cubic.
    """

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise DimensionError("matrix must be square and non-empty")

    @staticmethod
    def from_rows(rows: Iterable[Iterable[RationalLike]]) -> "RatMatrix":
        return RatMatrix(tuple(tuple(_rat(x) for x in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        if n < 1:
            raise DimensionError("order must be positive")
        return RatMatrix(
            tuple(
                tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
                for i in range(n)
            )
        )

    @property
    def order(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.order
        return tuple(self.column(j) for j in range(n))

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(row) for row in self.rows)

    def column_sums(self) -> tuple[Fraction, ...]:
        n = self.order
        return tuple(sum(self.rows[i][j] for i in range(n)) for j in range(n))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        return mat_mul(self, other)

    def mat_vec(self, v: Sequence[RationalLike]) -> tuple[Fraction, ...]:
        n = self.order
        if len(v) != n:
            raise DimensionError(f"vector length {len(v)} != matrix order {n}")
        vv = [_rat(x) for x in v]
        return tuple(sum(self.rows[i][k] * vv[k] for k in range(n)) for i in range(n))

    def with_column(self, j: int, col: Sequence[Fraction]) -> "RatMatrix":
        return RatMatrix(
            tuple(
                tuple(col[i] if c == j else self.rows[i][c] for c in range(self.order))
                for i in range(self.order)
            )
        )


def mat_mul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    """Exact matrix product; operands must have equal order."""
    n = a.order
    if b.order != n:
        raise DimensionError(f"order mismatch: {n} vs {b.order}")
    brows = b.rows
    return RatMatrix(
        tuple(
            tuple(sum(arow[k] * brows[k][j] for k in range(n)) for j in range(n))
            for arow in a.rows
        )
    )


@dataclass(frozen=True)
class RatPoly:
    """Univariate polynomial with rational coefficients, ascending by degree.

    Trailing zero coefficients are stripped; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    coefficients: tuple[Fraction, ...]

    @staticmethod
    def from_coefficients(coeffs: Iterable[RationalLike]) -> "RatPoly":
        cs = [_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return RatPoly(tuple(cs))

    @staticmethod
    def zero() -> "RatPoly":
        return RatPoly(())

    @staticmethod
    def x() -> "RatPoly":
        return RatPoly((Fraction(0), Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly.from_coefficients(out)

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return RatPoly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return RatPoly.from_coefficients(out)

    def scale(self, k: RationalLike) -> "RatPoly":
        kk = _rat(k)
        return RatPoly.from_coefficients(c * kk for c in self.coefficients)

    def shift_up(self) -> "RatPoly":
        """Multiply by x."""
        if not self.coefficients:
            return self
        return RatPoly((Fraction(0),) + self.coefficients)

    def lowest_term(self) -> tuple[int, Fraction]:
        """(degree, coefficient) of the lowest-degree nonzero term."""
        for d, c in enumerate(self.coefficients):
            if c != 0:
                return d, c
        raise ValueError("zero polynomial has no lowest term")


def poly_eval(p: RatPoly, x: RationalLike) -> Fraction:
    """Exact Horner evaluation."""
    xx = _rat(x)
    acc = Fraction(0)
    for c in reversed(p.coefficients):
        acc = acc * xx + c
    return acc


def poly_interpolate(points: Sequence[tuple[RationalLike, RationalLike]]) -> RatPoly:
    """Unique least-degree polynomial through the given points (Lagrange, exact).

    Requires distinct x values. The result always interpolates every point;
    callers expecting a lower-degree model should check ``degree`` (extra
    sample points force the degree up exactly when the data is inconsistent).
    """
    pts = [(_rat(x), _rat(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must have distinct x values")
    k = len(pts)
    coeffs = [Fraction(0)] * k
    for i, (xi, yi) in enumerate(pts):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                nxt[d + 1] += c
                nxt[d] -= c * xj
            basis = nxt
            denom *= xi - xj
        w = yi / denom
        for d, c in enumerate(basis):
            coeffs[d] += c * w
    return RatPoly.from_coefficients(coeffs)
