"""Truncated one-variable power series over exact rationals or floats.

A series is stored as its coefficient list ``c[0..N]`` (degree ascending)
together with the truncation order ``N``.  Arithmetic silently discards all
terms of degree greater than ``N``.  Two backends are supported: ``Fraction``
coefficients for bit-exact identity checking, and plain floats for numeric
evaluation.  The "group series" used by the entropy machinery are the
normalized ones with ``c[0] == 0`` and ``c[1] == 1``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, float, Fraction]


class SeriesError(ValueError):
    """Invalid operand for a truncated-series operation."""


class OrderMismatchError(SeriesError):
    """Binary operation on series with different truncation orders."""


class TruncatedSeries:
    """A power series truncated at a fixed degree.

    Immutable; all operations return new instances.  Coefficients keep
    whatever numeric type they were given, so building a series from
    ``Fraction`` values keeps every derived quantity exact.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence[Number], order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise SeriesError("truncation order must be nonnegative")
        if len(coeffs) < order + 1:
            coeffs = coeffs + [0] * (order + 1 - len(coeffs))
        elif len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        self.coeffs = tuple(coeffs)
        self.order = order

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def identity(cls, order: int) -> "TruncatedSeries":
        """The series t."""
        return cls([0, 1], order)

    @classmethod
    def monomial(cls, degree: int, order: int, coeff: Number = 1) -> "TruncatedSeries":
        c = [0] * (order + 1)
        if degree <= order:
            c[degree] = coeff
        return cls(c, order)

    # -- basic queries --------------------------------------------------------

    def __getitem__(self, degree: int) -> Number:
        if 0 <= degree <= self.order:
            return self.coeffs[degree]
        return 0

    @property
    def constant(self) -> Number:
        return self.coeffs[0]

    def is_normalized(self) -> bool:
        """True for a normalized group series: zero constant, unit linear term."""
        return self.coeffs[0] == 0 and self.order >= 1 and self.coeffs[1] == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r}, order={self.order})"

    # -- ring operations ------------------------------------------------------

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"orders differ: {self.order} != {other.order}"
            )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product, degrees above the common order discarded."""
        self._check_order(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(0, n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out, n)

    def scale(self, factor: Number) -> "TruncatedSeries":
        return TruncatedSeries([factor * a for a in self.coeffs], self.order)

    def derivative(self) -> "TruncatedSeries":
        """Termwise derivative; the result is truncated at order N - 1."""
        if self.order == 0:
            return TruncatedSeries([0], 0)
        out = [k * self.coeffs[k] for k in range(1, self.order + 1)]
        return TruncatedSeries(out, self.order - 1)

    # -- composition and reversion -------------------------------------------

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(t)); requires inner to have zero constant term."""
        self._check_order(inner)
        if inner.constant != 0:
            raise SeriesError(
                "composition requires the inner series to vanish at 0"
            )
        n = self.order
        acc = TruncatedSeries([self.coeffs[n]], n)
        for k in range(n - 1, -1, -1):
            acc = acc * inner
            acc = TruncatedSeries(
                [acc.coeffs[0] + self.coeffs[k]] + list(acc.coeffs[1:]), n
            )
        return acc

    def revert(self) -> "TruncatedSeries":
        """Compositional inverse of a normalized group series.

        Solves coefficient-by-coefficient for f with f(self(t)) = t; the
        triangular recursion is the workhorse form of Lagrange inversion.
        Exact when the coefficients are exact.
        """
        if not self.is_normalized():
            raise SeriesError(
                "reversion requires a normalized series (g(0)=0, g'(0)=1)"
            )
        n = self.order
        # powers[k] = self**k truncated
        powers = [TruncatedSeries.monomial(0, n)]
        for _ in range(n):
            powers.append(powers[-1] * self)
        inv = [0] * (n + 1)
        inv[1] = 1
        for m in range(2, n + 1):
            s = 0
            for k in range(1, m):
                s += inv[k] * powers[k].coeffs[m]
            inv[m] = -s
        return TruncatedSeries(inv, n)

    # -- evaluation -----------------------------------------------------------

    def eval(self, x: float) -> float:
        """Horner evaluation of the truncated polynomial at x."""
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def eval_with_tail(self, x: float) -> tuple[float, float]:
        """Value plus |highest nonzero retained term|, a truncation indicator."""
        value = self.eval(x)
        tail = 0.0
        for deg in range(self.order, -1, -1):
            if self.coeffs[deg] != 0:
                tail = abs(float(self.coeffs[deg]) * x ** deg)
                break
        return value, tail

    def to_float(self) -> "TruncatedSeries":
        return TruncatedSeries([float(c) for c in self.coeffs], self.order)


def from_a_sequence(a: Iterable[Number], order: int) -> TruncatedSeries:
    """Build the exponential-type series sum_k a_k t^(k+1)/(k+1).

    The sequence ``a`` is read up to degree ``order``.  A leading a_0 of zero
    gives a non-invertible series; reversion and group-law construction will
    reject it downstream, but plain evaluation is still allowed.
    """
    a = list(a)
    if not a or all(x == 0 for x in a):
        raise SeriesError("invalid exponential: need a nonzero coefficient")
    coeffs: list[Number] = [0] * (order + 1)
    for k, ak in enumerate(a):
        deg = k + 1
        if deg > order:
            break
        coeffs[deg] = Fraction(ak) / (k + 1) if isinstance(ak, (int, Fraction)) else ak / (k + 1)
    return TruncatedSeries(coeffs, order)


def a_sequence_of(series: TruncatedSeries) -> list[Number]:
    """Recover a_k = (k+1) * c_{k+1} from an exponential-type series."""
    return [(k + 1) * series.coeffs[k + 1] for k in range(series.order)]


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse a comma-separated list of rationals like ``1, -1/2, 1/3``."""
    items = [chunk.strip() for chunk in text.split(",")]
    out = []
    for item in items:
        if not item:
            continue
        try:
            out.append(Fraction(item))
        except (ValueError, ZeroDivisionError) as exc:
            raise SeriesError(f"bad rational literal {item!r}") from exc
    if not out:
        raise SeriesError("empty coefficient list")
    return out


def normalized_from_literal(text: str, order: int) -> TruncatedSeries:
    """Series from a CLI literal; coefficients are degree-1 ascending."""
    vals = parse_rational_list(text)
    return TruncatedSeries([Fraction(0)] + vals, order)
