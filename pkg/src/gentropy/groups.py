"""Formal group laws built from a group exponential, plus axiom checks.

The central construction is Phi(x, y) = G(F(x) + F(y)) with F the
compositional inverse of G, expanded as a bivariate polynomial truncated at
a total degree.  Everything here runs in exact rational arithmetic, so the
symmetry / null-composability / associativity verdicts are bit-exact to the
truncation order, not approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterator

from .series import SeriesError, TruncatedSeries

Monomial = tuple[int, ...]


class MultiPoly:
    """Sparse multivariate polynomial truncated at a total degree.

    Coefficients are kept in a dict keyed by exponent tuples; any term whose
    total degree exceeds ``order`` is dropped on construction.
    """

    __slots__ = ("terms", "nvars", "order")

    def __init__(self, terms: dict[Monomial, Fraction], nvars: int, order: int):
        clean = {}
        for mono, coeff in terms.items():
            if coeff != 0 and sum(mono) <= order:
                clean[mono] = coeff
        self.terms = clean
        self.nvars = nvars
        self.order = order

    @classmethod
    def zero(cls, nvars: int, order: int) -> "MultiPoly":
        return cls({}, nvars, order)

    @classmethod
    def constant(cls, value, nvars: int, order: int) -> "MultiPoly":
        return cls({(0,) * nvars: Fraction(value)}, nvars, order)

    @classmethod
    def variable(cls, index: int, nvars: int, order: int) -> "MultiPoly":
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls({mono: Fraction(1)}, nvars, order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return MultiPoly(out, self.nvars, self.order)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) - coeff
        return MultiPoly(out, self.nvars, self.order)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            d1 = sum(m1)
            for m2, c2 in other.terms.items():
                if d1 + sum(m2) > self.order:
                    continue
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return MultiPoly(out, self.nvars, self.order)

    def scale(self, factor) -> "MultiPoly":
        factor = Fraction(factor)
        return MultiPoly(
            {m: c * factor for m, c in self.terms.items()}, self.nvars, self.order
        )

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def iter_terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items()))

    def swap(self, i: int, j: int) -> "MultiPoly":
        """Exchange two variables."""
        out = {}
        for mono, coeff in self.terms.items():
            m = list(mono)
            m[i], m[j] = m[j], m[i]
            out[tuple(m)] = coeff
        return MultiPoly(out, self.nvars, self.order)

    def substitute_univariate(self, series: TruncatedSeries) -> "MultiPoly":
        """series(self); requires a zero constant term in self."""
        if self.coefficient((0,) * self.nvars) != 0:
            raise SeriesError("substitution requires a zero constant term")
        n = self.order
        acc = MultiPoly.constant(series[n], self.nvars, n)
        for k in range(n - 1, -1, -1):
            acc = acc * self + MultiPoly.constant(series[k], self.nvars, n)
        return acc

    def substitute_pair(self, a: "MultiPoly", b: "MultiPoly") -> "MultiPoly":
        """Evaluate a bivariate self at (a, b), both with zero constant term."""
        if self.nvars != 2:
            raise SeriesError("substitute_pair needs a bivariate polynomial")
        nvars, order = a.nvars, a.order
        zero_mono = (0,) * nvars
        if a.coefficient(zero_mono) != 0 or b.coefficient(zero_mono) != 0:
            raise SeriesError("substitution requires zero constant terms")
        max_deg = max((sum(m) for m in self.terms), default=0)
        pow_a = [MultiPoly.constant(1, nvars, order)]
        pow_b = [MultiPoly.constant(1, nvars, order)]
        for _ in range(max_deg):
            pow_a.append(pow_a[-1] * a)
            pow_b.append(pow_b[-1] * b)
        out = MultiPoly.zero(nvars, order)
        for (i, j), coeff in self.terms.items():
            out = out + (pow_a[i] * pow_b[j]).scale(coeff)
        return out


class GroupLawError(ValueError):
    """Invalid input for group-law construction."""


@dataclass(frozen=True)
class GroupLaw:
    """A formal group law with its exponential and logarithm series."""

    phi: MultiPoly  # bivariate, truncated at total degree `order`
    exp: TruncatedSeries  # G
    log: TruncatedSeries  # F = revert(G)

    @property
    def order(self) -> int:
        return self.phi.order

    def c_table(self) -> dict[tuple[int, int], Fraction]:
        """The coefficients c_km of Phi - (x + y)."""
        out = {}
        for (k, m), coeff in self.phi.terms.items():
            if (k, m) in ((1, 0), (0, 1)):
                continue
            out[(k, m)] = coeff
        return out


@dataclass(frozen=True)
class LawAxiomCheck:
    """Exact verdicts for one constructed (or hand-supplied) law."""

    symmetric: bool
    null_composable: bool
    associative: bool
    first_violation: tuple[str, Monomial, Fraction] | None

    @property
    def all_pass(self) -> bool:
        return self.symmetric and self.null_composable and self.associative


def group_law_from_exponential(G: TruncatedSeries, order: int | None = None) -> GroupLaw:
    """Construct Phi(x, y) = G(F(x) + F(y)) truncated at total degree."""
    if not G.is_normalized():
        raise GroupLawError("group exponential must be normalized (G(0)=0, G'(0)=1)")
    if order is None:
        order = G.order
    if order > G.order:
        raise GroupLawError("requested order exceeds the exponential's order")
    Gn = TruncatedSeries(G.coeffs[: order + 1], order)
    F = Gn.revert()
    x = MultiPoly.variable(0, 2, order)
    y = MultiPoly.variable(1, 2, order)
    u = x.substitute_univariate(F) + y.substitute_univariate(F)
    phi = u.substitute_univariate(Gn)
    return GroupLaw(phi=phi, exp=Gn, log=F)


def law_from_table(c: dict[tuple[int, int], Fraction], order: int) -> MultiPoly:
    """Phi = x + y + sum c_km x^k y^m from a user-supplied coefficient table."""
    terms: dict[Monomial, Fraction] = {(1, 0): Fraction(1), (0, 1): Fraction(1)}
    for (k, m), coeff in c.items():
        terms[(k, m)] = terms.get((k, m), Fraction(0)) + Fraction(coeff)
    return MultiPoly(terms, 2, order)


def check_axioms(phi: MultiPoly, assoc_order: int | None = None) -> LawAxiomCheck:
    """Symmetry, null-composability and associativity, coefficientwise.

    Associativity expands both trivariate compositions, by default to the
    law's own truncation order.
    """
    if assoc_order is None:
        assoc_order = phi.order
    violation = None

    sym = phi.swap(0, 1) == phi
    if not sym and violation is None:
        diff = phi - phi.swap(0, 1)
        mono, coeff = min(diff.iter_terms())
        violation = ("symmetry", mono, coeff)

    # Phi(x, 0) = x: drop every term containing y and compare with x.
    at_zero = MultiPoly(
        {m: c for m, c in phi.terms.items() if m[1] == 0}, 2, phi.order
    )
    null_ok = at_zero == MultiPoly.variable(0, 2, phi.order)
    if not null_ok and violation is None:
        diff = at_zero - MultiPoly.variable(0, 2, phi.order)
        mono, coeff = min(diff.iter_terms())
        violation = ("null-composability", mono, coeff)

    x = MultiPoly.variable(0, 3, assoc_order)
    y = MultiPoly.variable(1, 3, assoc_order)
    z = MultiPoly.variable(2, 3, assoc_order)
    phi_n = MultiPoly(
        {m: c for m, c in phi.terms.items() if sum(m) <= assoc_order}, 2, assoc_order
    )
    inner_yz = phi_n.substitute_pair(y, z)
    inner_xy = phi_n.substitute_pair(x, y)
    left = phi_n.substitute_pair(x, inner_yz)
    right = phi_n.substitute_pair(inner_xy, z)
    assoc = left == right
    if not assoc and violation is None:
        diff = left - right
        mono, coeff = min(diff.iter_terms())
        violation = ("associativity", mono, coeff)

    return LawAxiomCheck(
        symmetric=sym,
        null_composable=null_ok,
        associative=assoc,
        first_violation=violation,
    )


def formal_inverse(law: GroupLaw) -> TruncatedSeries:
    """The series phi with Phi(x, phi(x)) = 0 to the law's order.

    Solved degree by degree; purely formal, no claim about real arguments.
    """
    n = law.order
    inv = [Fraction(0)] * (n + 1)
    inv[1] = Fraction(-1)
    x = MultiPoly.variable(0, 1, n)
    for m in range(2, n + 1):
        candidate = MultiPoly(
            {(k,): Fraction(inv[k]) for k in range(1, n + 1)}, 1, n
        )
        residual = law.phi.substitute_pair(x, candidate)
        inv[m] -= residual.coefficient((m,))
    # confirm the solve closed
    candidate = MultiPoly({(k,): Fraction(inv[k]) for k in range(1, n + 1)}, 1, n)
    if law.phi.substitute_pair(x, candidate).terms:
        raise GroupLawError("formal inverse recursion did not close")
    return TruncatedSeries(inv, n)


def lie_bracket(phi: MultiPoly) -> MultiPoly:
    """Antisymmetrized quadratic part Phi_2(x,y) - Phi_2(y,x)."""
    quad = MultiPoly(
        {m: c for m, c in phi.terms.items() if sum(m) == 2}, 2, phi.order
    )
    return quad - quad.swap(0, 1)


def abel_coefficients(a: Fraction, b: Fraction, count: int) -> list[Fraction]:
    """Closed-form coefficients beta_1..beta_count of the Abel group law.

    beta_1 = a + b and, for n > 1,
    beta_n = (-1)^(n-1) / (n! (n-1)) * prod_{i+j=n-1, i,j>=0} (i a + j b).
    """
    a, b = Fraction(a), Fraction(b)
    if a == b:
        raise GroupLawError("Abel coefficients need distinct parameters a != b")
    if count < 1:
        raise GroupLawError("count must be at least 1")
    out = [a + b]
    for n in range(2, count + 1):
        prod = Fraction(1)
        for i in range(n):
            j = n - 1 - i
            prod *= i * a + j * b
        sign = Fraction((-1) ** (n - 1))
        out.append(sign * prod / (factorial(n) * (n - 1)))
    return out


def abel_exponential(a: Fraction, b: Fraction, order: int) -> TruncatedSeries:
    """Exact expansion of (e^{at} - e^{bt}) / (a - b)."""
    a, b = Fraction(a), Fraction(b)
    if a == b:
        raise GroupLawError("Abel exponential needs distinct parameters a != b")
    coeffs = [Fraction(0)]
    for m in range(1, order + 1):
        coeffs.append((a ** m - b ** m) / ((a - b) * factorial(m)))
    return TruncatedSeries(coeffs, order)
