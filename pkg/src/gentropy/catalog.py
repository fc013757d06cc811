"""Catalog of generalized entropies and their group exponentials.

Every entropy here is trace-form: S = kB * sum_i p_i * g(p_i) (plus, for the
incomplete-gamma family, an additive constant).  Where the entropy belongs to
the exponential class, the class also exposes the group exponential G with
S = kB * sum_i p_i * G(ln 1/p_i), its closed-form derivatives, the exact
rational coefficient sequence a_k with G(t) = sum a_k t^(k+1)/(k+1), and the
generalized logarithm / its inverse when one exists in closed form.

A scale constant c turns G(t) into G(c t), equivalently rescales the
coefficient sequence to a_k c^k; it defaults to 1 and is folded into the
public wrappers once, so subclasses only implement the unscaled forms.

Closed forms are authoritative for evaluation; series expansions are only
used for coefficient reporting and cross-checks.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import brentq

from .series import TruncatedSeries, from_a_sequence


class SpecError(ValueError):
    """Invalid entropy specification parameters."""


class UnsupportedRepresentation(SpecError):
    """The requested representation does not exist for this entropy."""


class DistributionError(ValueError):
    """Invalid probability data."""


_SUM_TOL = 1e-12


class Distribution:
    """A discrete probability vector."""

    __slots__ = ("p",)

    def __init__(self, p: Sequence[float]):
        arr = np.asarray(p, dtype=float)
        if arr.ndim != 1 or arr.size < 1:
            raise DistributionError("need a nonempty 1-d probability vector")
        if np.any(arr < 0):
            raise DistributionError("probabilities must be nonnegative")
        if abs(arr.sum() - 1.0) > _SUM_TOL:
            raise DistributionError(
                f"probabilities sum to {arr.sum()!r}, not 1 within {_SUM_TOL}"
            )
        self.p = arr

    @classmethod
    def uniform(cls, W: int) -> "Distribution":
        if W < 1:
            raise DistributionError("need at least one state")
        return cls(np.full(W, 1.0 / W))

    @property
    def W(self) -> int:
        return self.p.size

    def append_zero(self) -> "Distribution":
        return Distribution(np.append(self.p, 0.0))

    def __repr__(self):
        return f"Distribution({self.p.tolist()!r})"


class JointDistribution:
    """A W_A x W_B joint probability matrix."""

    __slots__ = ("p",)

    def __init__(self, p) -> None:
        arr = np.asarray(p, dtype=float)
        if arr.ndim != 2 or arr.size < 1:
            raise DistributionError("need a 2-d probability matrix")
        if np.any(arr < 0):
            raise DistributionError("probabilities must be nonnegative")
        if abs(arr.sum() - 1.0) > _SUM_TOL:
            raise DistributionError("joint probabilities must sum to 1")
        self.p = arr

    @classmethod
    def product(cls, a: Distribution, b: Distribution) -> "JointDistribution":
        return cls(np.outer(a.p, b.p))

    def marginal_a(self) -> Distribution:
        return Distribution(self.p.sum(axis=1))

    def marginal_b(self) -> Distribution:
        return Distribution(self.p.sum(axis=0))

    def flatten(self) -> Distribution:
        return Distribution(self.p.reshape(-1))


def elementary_functional(k: int, dist: Distribution, kB: float = 1.0) -> float:
    """S_k = kB * sum_i p_i (ln 1/p_i)^k with the 0 * log(0) -> 0 convention."""
    if k < 1:
        raise SpecError("elementary functional index must be >= 1")
    p = dist.p
    mask = p > 0
    terms = p[mask] * (-np.log(p[mask])) ** k
    return kB * float(terms.sum())


def _is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))


def _as_fraction(x) -> Fraction:
    if _is_rational(x):
        return Fraction(x)
    f = Fraction(x).limit_denominator(10 ** 12)
    if float(f) != float(x):
        raise SpecError(
            "exact coefficients need rational parameters; got %r" % (x,)
        )
    return f


def _numeric_inverse(func: Callable[[float], float], s: float) -> float:
    """Invert a strictly increasing func with func(0) = 0 near the origin."""
    if s == 0:
        return 0.0
    lo, hi = (0.0, 1.0) if s > 0 else (-1.0, 0.0)
    for _ in range(200):
        if s > 0 and func(hi) >= s:
            break
        if s < 0 and func(lo) <= s:
            break
        lo, hi = (lo, hi * 2) if s > 0 else (lo * 2, hi)
    else:
        raise SpecError(f"could not bracket inverse at {s!r}")
    return float(brentq(lambda t: func(t) - s, lo, hi, xtol=1e-15, rtol=8.9e-16))


class Entropy:
    """Base class for catalog entropies."""

    name = "entropy"
    has_exponential = False
    has_group_law = False  # a usable composition rule Phi exists
    monoid_only = False

    def __init__(self, kB: float = 1.0, scale_c=1):
        if kB <= 0:
            raise SpecError("kB must be positive")
        if scale_c <= 0:
            raise SpecError("scale constant must be positive")
        self.kB = float(kB)
        self.scale = scale_c  # kept rational if given rational

    # -- evaluation -----------------------------------------------------------

    def density(self, x):
        """Per-state term g with S = kB * (sum_i p_i g(p_i) + constant_term).

        Vectorized over numpy arrays of probabilities in (0, 1].  For
        exponential-class entropies this is G(scale * ln(1/x)).
        """
        if not self.has_exponential:
            raise NotImplementedError
        return self.G(-np.log(np.asarray(x, dtype=float)))

    def constant_term(self) -> float:
        return 0.0

    def evaluate(self, dist: Distribution) -> float:
        p = dist.p
        mask = p > 0
        total = float(np.sum(p[mask] * self.density(p[mask])))
        return self.kB * (total + self.constant_term())

    # -- group-exponential representation -------------------------------------

    def _G(self, t):
        raise UnsupportedRepresentation(f"{self.name} has no group exponential")

    def _dG(self, t):
        raise UnsupportedRepresentation(f"{self.name} has no group exponential")

    def _d2G(self, t):
        raise UnsupportedRepresentation(f"{self.name} has no group exponential")

    def _F(self, s):
        return _numeric_inverse(lambda t: float(self._G(t)), s)

    def G(self, t):
        c = float(self.scale)
        return self._G(c * np.asarray(t, dtype=float)) if np.ndim(t) else self._G(c * t)

    def dG(self, t):
        c = float(self.scale)
        t = np.asarray(t, dtype=float) if np.ndim(t) else t
        return c * self._dG(c * t)

    def d2G(self, t):
        c = float(self.scale)
        t = np.asarray(t, dtype=float) if np.ndim(t) else t
        return c * c * self._d2G(c * t)

    def F(self, s):
        """Inverse of G on the relevant real domain (closed form or numeric)."""
        if not self.has_exponential:
            raise UnsupportedRepresentation(f"{self.name} has no group exponential")
        if np.ndim(s):
            return np.array([self.F(v) for v in np.asarray(s, dtype=float)])
        return self._F(s) / float(self.scale)

    def base_a_sequence(self, count: int) -> list[Fraction]:
        """Exact a_k, k = 0..count-1, before the scale-constant rescaling."""
        raise UnsupportedRepresentation(f"{self.name} has no group exponential")

    def a_sequence(self, count: int) -> list[Fraction]:
        """Exact a_k; the scale constant c rescales term k by c^k."""
        base = self.base_a_sequence(count)
        if self.scale == 1:
            return base
        c = _as_fraction(self.scale)
        return [ak * c ** k for k, ak in enumerate(base)]

    def exp_series(self, order: int) -> TruncatedSeries:
        """Truncated expansion of the group exponential, exact coefficients."""
        return from_a_sequence(self.a_sequence(order), order)

    def expansion_coefficients(self, count: int) -> list[Fraction]:
        """Coefficients a'_k = a_{k-1}/k of the elementary-functional expansion."""
        a = self.a_sequence(count)
        return [ak / (k + 1) for k, ak in enumerate(a)]

    # -- generalized logarithm -------------------------------------------------

    def generalized_log(self, x):
        raise UnsupportedRepresentation(f"{self.name} has no generalized logarithm")

    def log_inverse(self, y):
        """E = inverse of the generalized logarithm."""
        raise UnsupportedRepresentation(f"{self.name} has no generalized logarithm")

    # -- composition rule ------------------------------------------------------

    def phi(self, x: float, y: float) -> float:
        """The composition value Phi(x, y); arguments are entropy values."""
        if not self.has_exponential:
            raise UnsupportedRepresentation(f"{self.name} has no composition rule")
        kb = self.kB
        return kb * self.G(self.F(x / kb) + self.F(y / kb))

    def describe(self) -> dict:
        return {"kind": self.name}


class BoltzmannGibbs(Entropy):
    name = "bg"
    has_exponential = True
    has_group_law = True

    def _G(self, t):
        return t

    def _dG(self, t):
        return np.ones_like(t) if np.ndim(t) else 1.0

    def _d2G(self, t):
        return np.zeros_like(t) if np.ndim(t) else 0.0

    def _F(self, s):
        return s

    def base_a_sequence(self, count):
        return [Fraction(1)] + [Fraction(0)] * (count - 1)

    def generalized_log(self, x):
        if np.any(np.asarray(x) <= 0):
            raise SpecError("logarithm needs a positive argument")
        return np.log(x)

    def log_inverse(self, y):
        return np.exp(y)


class Tsallis(Entropy):
    """S_q = kB (sum p^q - 1)/(1 - q), q != 1."""

    name = "tsallis"
    has_exponential = True
    has_group_law = True

    def __init__(self, q, kB: float = 1.0, scale_c=1):
        super().__init__(kB, scale_c)
        if q == 1:
            raise SpecError("q = 1 is the BG case; use BoltzmannGibbs")
        self.q = q
        self.sigma = 1 - q  # exact representation parameter, any q != 1

    def _G(self, t):
        s = float(self.sigma)
        return np.expm1(s * t) / s

    def _dG(self, t):
        return np.exp(float(self.sigma) * t)

    def _d2G(self, t):
        s = float(self.sigma)
        return s * np.exp(s * t)

    def _F(self, s_val):
        s = float(self.sigma)
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.log1p(s * s_val) / s

    def base_a_sequence(self, count):
        s = _as_fraction(self.sigma)
        return [s ** k / factorial(k) for k in range(count)]

    def expansion_coefficients(self, count):
        # the printed decomposition uses 1-q below q=1 but q-1 above it
        if self.scale != 1:
            return super().expansion_coefficients(count)
        s = _as_fraction(self.sigma)
        if not (self.q < 1):
            s = -s
        return [s ** k / factorial(k + 1) for k in range(count)]

    def generalized_log(self, x):
        if np.any(np.asarray(x) <= 0):
            raise SpecError("logarithm needs a positive argument")
        s = float(self.sigma)
        return np.expm1(s * np.log(x)) / s

    def log_inverse(self, y):
        s = float(self.sigma)
        return (1.0 + s * y) ** (1.0 / s)

    def describe(self):
        return {"kind": self.name, "q": self.q}


class Kaniadakis(Entropy):
    """S_kappa = kB sum p (p^-kappa - p^kappa) / (2 kappa), -1 < kappa <= 1."""

    name = "kaniadakis"
    has_exponential = True
    has_group_law = True

    def __init__(self, kappa, kB: float = 1.0, scale_c=1):
        super().__init__(kB, scale_c)
        if not (-1 < kappa <= 1) or kappa == 0:
            raise SpecError("kappa must lie in (-1, 1], nonzero")
        self.kappa = kappa

    def _G(self, t):
        k = float(self.kappa)
        return np.sinh(k * t) / k

    def _dG(self, t):
        return np.cosh(float(self.kappa) * t)

    def _d2G(self, t):
        k = float(self.kappa)
        return k * np.sinh(k * t)

    def _F(self, s):
        k = float(self.kappa)
        return np.arcsinh(k * s) / k

    def base_a_sequence(self, count):
        k = _as_fraction(self.kappa)
        return [
            k ** j / factorial(j) if j % 2 == 0 else Fraction(0)
            for j in range(count)
        ]

    def describe(self):
        return {"kind": self.name, "kappa": self.kappa}


class BorgesRoditi(Entropy):
    """Two-parameter entropy with logarithm (x^a - x^b)/(a - b)."""

    name = "borges_roditi"
    has_exponential = True
    has_group_law = True

    def __init__(self, a, b, kB: float = 1.0, scale_c=1):
        super().__init__(kB, scale_c)
        if a == b:
            raise SpecError("Borges-Roditi needs distinct parameters a != b")
        self.a = a
        self.b = b

    def _G(self, t):
        a, b = float(self.a), float(self.b)
        return (np.exp(a * t) - np.exp(b * t)) / (a - b)

    def _dG(self, t):
        a, b = float(self.a), float(self.b)
        return (a * np.exp(a * t) - b * np.exp(b * t)) / (a - b)

    def _d2G(self, t):
        a, b = float(self.a), float(self.b)
        return (a * a * np.exp(a * t) - b * b * np.exp(b * t)) / (a - b)

    def base_a_sequence(self, count):
        a, b = _as_fraction(self.a), _as_fraction(self.b)
        return [
            (a ** (k + 1) - b ** (k + 1)) / ((a - b) * factorial(k))
            for k in range(count)
        ]

    def generalized_log(self, x):
        if np.any(np.asarray(x) <= 0):
            raise SpecError("logarithm needs a positive argument")
        a, b = float(self.a), float(self.b)
        return (x ** a - x ** b) / (a - b)

    def log_inverse(self, y):
        return math.exp(_numeric_inverse(lambda t: float(self._G(t)), y))

    def describe(self):
        return {"kind": self.name, "a": self.a, "b": self.b}


class GroupEntropy(Entropy):
    """Entropy from a generalized logarithm (1/sigma) sum k_n x^(sigma n).

    The coefficients must satisfy sum k_n = 0 and sum n k_n = 1, with the
    extreme coefficients nonzero; this forces Log(1) = 0 and the small-sigma
    limit to the natural logarithm.
    """

    name = "group_entropy"
    has_exponential = True
    has_group_law = True

    def __init__(self, sigma, coeffs: dict[int, object], kB: float = 1.0, scale_c=1):
        super().__init__(kB, scale_c)
        if sigma == 0:
            raise SpecError("sigma must be nonzero (sigma -> 0 is the BG limit)")
        if len(coeffs) < 2:
            raise SpecError("need coefficients at more than one index")
        lo, hi = min(coeffs), max(coeffs)
        if coeffs[lo] == 0 or coeffs[hi] == 0:
            raise SpecError("extreme coefficients k_l, k_m must be nonzero")
        total = sum(coeffs.values())
        weighted = sum(n * v for n, v in coeffs.items())
        if total != 0 or weighted != 1:
            raise SpecError(
                "generalized-log coefficients must satisfy sum k_n = 0 and "
                "sum n k_n = 1"
            )
        self.sigma = sigma
        self.coeffs = dict(sorted(coeffs.items()))

    def _G(self, t):
        s = float(self.sigma)
        out = 0.0
        for n, kn in self.coeffs.items():
            out = out + float(kn) * np.exp(n * s * t)
        return out / s

    def _dG(self, t):
        s = float(self.sigma)
        out = 0.0
        for n, kn in self.coeffs.items():
            out = out + float(kn) * n * np.exp(n * s * t)
        return out

    def _d2G(self, t):
        s = float(self.sigma)
        out = 0.0
        for n, kn in self.coeffs.items():
            out = out + float(kn) * n * n * np.exp(n * s * t)
        return s * out

    def base_a_sequence(self, count):
        s = _as_fraction(self.sigma)
        ks = {n: _as_fraction(v) for n, v in self.coeffs.items()}
        out = []
        for k in range(count):
            m = k + 1
            moment = sum(v * Fraction(n) ** m for n, v in ks.items())
            out.append(s ** (m - 1) * moment / factorial(m - 1))
        return out

    def generalized_log(self, x):
        if np.any(np.asarray(x) <= 0):
            raise SpecError("logarithm needs a positive argument")
        s = float(self.sigma)
        out = 0.0
        for n, kn in self.coeffs.items():
            out = out + float(kn) * np.power(np.asarray(x, dtype=float), s * n)
        return out / s

    def log_inverse(self, y):
        return math.exp(_numeric_inverse(lambda t: float(self._G(t)), y))

    def describe(self):
        return {
            "kind": self.name,
            "sigma": self.sigma,
            "coeffs": dict(self.coeffs),
        }


class SThird(GroupEntropy):
    """Group entropy of the third-order discrete derivative, parameter q."""

    name = "s_iii"

    def __init__(self, q, kB: float = 1.0, scale_c=1):
        if q == 1:
            raise SpecError("q = 1 is the BG case; use BoltzmannGibbs")
        super().__init__(1 - q, {1: 1, -1: -2, -2: 1}, kB, scale_c)
        self.q = q

    def describe(self):
        return {"kind": self.name, "q": self.q}


class SFourth(GroupEntropy):
    """Group entropy of the fourth-order discrete derivative, parameter q."""

    name = "s_iv"

    def __init__(self, q, kB: float = 1.0, scale_c=1):
        if q == 1:
            raise SpecError("q = 1 is the BG case; use BoltzmannGibbs")
        super().__init__(
            1 - q,
            {2: 1, 1: Fraction(-3, 2), -1: Fraction(3, 2), -2: -1},
            kB,
            scale_c,
        )
        self.q = q

    def describe(self):
        return {"kind": self.name, "q": self.q}


class SAlphaBetaQ(GroupEntropy):
    """Three-parameter group entropy with indices -2..2."""

    name = "s_alpha_beta_q"

    def __init__(self, alpha, beta, q, kB: float = 1.0, scale_c=1):
        if q == 1:
            raise SpecError("q = 1 is the BG case; use BoltzmannGibbs")
        # exact binary fractions keep the two coefficient constraints exact
        al = Fraction(alpha)
        be = Fraction(beta)
        coeffs = {
            2: al,
            1: (1 - 3 * al + be) / 2,
            -1: (al - 1 - 3 * be) / 2,
            -2: be,
        }
        coeffs = {n: v for n, v in coeffs.items() if v != 0}
        super().__init__(1 - q, coeffs, kB, scale_c)
        self.alpha = alpha
        self.beta = beta
        self.q = q

    def describe(self):
        return {
            "kind": self.name,
            "alpha": self.alpha,
            "beta": self.beta,
            "q": self.q,
        }


class SDelta(Entropy):
    """S_delta = kB sum p (ln 1/p)^delta, 0 < delta <= 1 + ln W.

    The uniform-distribution composition rule is
    (x^(1/delta) + y^(1/delta))^delta, a monoid rather than a group law
    unless delta is an odd integer.
    """

    name = "s_delta"
    has_exponential = False
    has_group_law = True
    monoid_only = True

    def __init__(self, delta, kB: float = 1.0, scale_c=1):
        super().__init__(kB, scale_c)
        if delta <= 0:
            raise SpecError("delta must be positive")
        self.delta = delta

    def validate_for(self, W: int) -> None:
        """The stated admissibility range; the defining sum exists regardless.

        Evaluation itself stays lenient so composition identities can be
        checked across state counts; call this to enforce the range.
        """
        if W > 1 and self.delta > 1 + math.log(W):
            raise SpecError(f"delta = {self.delta} exceeds 1 + ln W for W = {W}")

    def density(self, x):
        return (-np.log(np.asarray(x, dtype=float))) ** float(self.delta)

    def phi(self, x, y):
        d = float(self.delta)
        kb = self.kB
        return kb * ((x / kb) ** (1 / d) + (y / kb) ** (1 / d)) ** d

    def describe(self):
        return {"kind": self.name, "delta": self.delta}


class SQDelta(Entropy):
    """S_{q,delta} = kB sum p (ln_q 1/p)^delta; delta = 1 recovers Tsallis.

    Evaluated as defined; no concavity or admissibility claim is made for
    general (q, delta).
    """

    name = "s_q_delta"
    has_exponential = False
    has_group_law = True
    monoid_only = True

    def __init__(self, q, delta, kB: float = 1.0, scale_c=1):
        super().__init__(kB, scale_c)
        if q == 1:
            raise SpecError("q = 1 with general delta is the s_delta case")
        if delta <= 0:
            raise SpecError("delta must be positive")
        self.q = q
        self.delta = delta
        self.sigma = 1 - q

    def density(self, x):
        s = float(self.sigma)
        lnq = np.expm1(-s * np.log(np.asarray(x, dtype=float))) / s  # ln_q(1/x)
        return lnq ** float(self.delta)

    def phi(self, x, y):
        d = float(self.delta)
        s = float(self.sigma)
        kb = self.kB
        u = (x / kb) ** (1 / d)
        v = (y / kb) ** (1 / d)
        return kb * (u + v + s * u * v) ** d

    def describe(self):
        return {"kind": self.name, "q": self.q, "delta": self.delta}


class GenericEntropy(Entropy):
    """Entropy from a raw a-sequence, evaluated through its truncated series.

    A leading coefficient a_0 != 1 is accepted but flagged: such a series is
    not a normalized group exponential and is excluded from group-law checks.
    """

    name = "generic"
    has_exponential = True
    has_group_law = True

    def __init__(self, a: Sequence, order: int = 12, kB: float = 1.0, scale_c=1):
        super().__init__(kB, scale_c)
        a = list(a)
        if not a or all(x == 0 for x in a):
            raise SpecError("generic entropy needs a nonzero coefficient sequence")
        self.a = a
        self.order = order
        self.normalized = a[0] == 1
        if a[0] == 0:
            # G is not invertible at the origin: no usable composition rule
            self.has_group_law = False
        self._series = from_a_sequence(
            [Fraction(x) if _is_rational(x) else x for x in a], order
        )
        self._float = self._series.to_float()
        self._dfloat = self._float.derivative()
        self._d2float = self._dfloat.derivative()

    @staticmethod
    def _horner(coeffs, t):
        acc = np.zeros_like(t) if np.ndim(t) else 0.0
        for c in reversed(coeffs):
            acc = acc * t + c
        return acc

    def _G(self, t):
        return self._horner(self._float.coeffs, t)

    def _dG(self, t):
        return self._horner(self._dfloat.coeffs, t)

    def _d2G(self, t):
        return self._horner(self._d2float.coeffs, t)

    def base_a_sequence(self, count):
        out = [_as_fraction(x) for x in self.a[:count]]
        out += [Fraction(0)] * (count - len(out))
        return out

    def truncation_indicator(self, t: float) -> float:
        """Magnitude of the last retained series term at argument t."""
        return self._float.eval_with_tail(t)[1]

    def describe(self):
        return {"kind": self.name, "a": [str(x) for x in self.a], "order": self.order}
