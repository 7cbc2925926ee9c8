"""Truncated power series with exact rational coefficients, and the named
generating functions of 321-avoiding involutions.

A series known through ``x**N`` has ``order == N``; arithmetic keeps the
smaller order of its operands and never invents coefficients past it.
Coefficient ``n`` always counts objects of length ``n``.

>>> [int(c) for c in expand_named("f", 8).coeffs[1:]]
[1, 2, 3, 6, 10, 20, 35, 70]
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from numbers import Rational

DEFAULT_ORDER = 40


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class RationalSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesError("a series needs at least its constant term")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def of(cls, coeffs, order: int) -> RationalSeries:
        """Pad or cut a coefficient list to exactly ``order + 1`` terms."""
        cs = list(coeffs)[: order + 1]
        return cls(tuple(cs + [0] * (order + 1 - len(cs))))

    @classmethod
    def poly(cls, terms: dict[int, int | Fraction], order: int) -> RationalSeries:
        cs = [0] * (order + 1)
        for k, c in terms.items():
            if k <= order:
                cs[k] += c
        return cls(tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n > self.order:
            raise SeriesError(f"coefficient {n} lies beyond order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> RationalSeries:
        if order > self.order:
            raise SeriesError(f"cannot extend order {self.order} to {order}")
        return RationalSeries(self.coeffs[: order + 1])

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None if all known ones vanish."""
        return next((i for i, c in enumerate(self.coeffs) if c), None)

    def is_zero(self) -> bool:
        return self.valuation() is None

    def integers(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise SeriesError("series has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    def _coerce(self, other) -> RationalSeries:
        if isinstance(other, RationalSeries):
            return other
        if isinstance(other, (int, Rational)):
            return RationalSeries.poly({0: Fraction(other)}, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return RationalSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self):
        return RationalSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return RationalSeries(tuple(c * other for c in self.coeffs))
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return ps_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return RationalSeries(tuple(c / Fraction(other) for c in self.coeffs))
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return ps_div(self, other)

    def __rtruediv__(self, other):
        return ps_div(self._coerce(other), self)

    def __pow__(self, k: int):
        out = RationalSeries.poly({0: 1}, self.order)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> RationalSeries:
        """Multiply by ``x**k``; the known range moves up with the coefficients."""
        return RationalSeries((Fraction(0),) * k + self.coeffs)

    def unshift(self, k: int) -> RationalSeries:
        """Divide by ``x**k``; the first k coefficients must be zero."""
        if any(self.coeffs[:k]):
            raise SeriesError(f"cannot divide by x^{k}: low coefficients are nonzero")
        if k > self.order:
            raise SeriesError(f"nothing known after dividing order {self.order} by x^{k}")
        return RationalSeries(self.coeffs[k:])

    def __str__(self) -> str:
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return (" + ".join(terms) or "0") + f" + O(x^{self.order + 1})"

    def to_json(self, start: int = 0) -> str:
        return json.dumps([str(c) for c in self.integers()[start:]])

    def to_csv(self, start: int = 0) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "coefficient"])
        for n, c in enumerate(self.integers()):
            if n >= start:
                writer.writerow([n, str(c)])
        return buf.getvalue()


def x(order: int) -> RationalSeries:
    return RationalSeries.poly({1: 1}, order)


def ps_add(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    return a + b


def ps_mul(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return RationalSeries(tuple(out))


def ps_div(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    """a / b, cancelling a common power of x explicitly first."""
    v = b.valuation()
    if v is None:
        raise SeriesError("division by a series with no known nonzero coefficient")
    if v:
        if a.valuation() is not None and a.valuation() < v:
            raise SeriesError(f"numerator valuation {a.valuation()} below divisor valuation {v}")
        a, b = a.unshift(v), b.unshift(v)
    n = min(a.order, b.order)
    b0 = b.coeffs[0]
    q: list[Fraction] = []
    for k in range(n + 1):
        s = a.coeffs[k]
        for i in range(1, k + 1):
            if b.coeffs[i]:
                s -= b.coeffs[i] * q[k - i]
        q.append(s / b0)
    return RationalSeries(tuple(q))


def ps_sqrt(a: RationalSeries) -> RationalSeries:
    """The square root with constant term +1."""
    if a.coeffs[0] != 1:
        raise SeriesError(f"square root needs constant term 1, got {a.coeffs[0]}")
    s = [Fraction(1)]
    for n in range(1, a.order + 1):
        acc = a.coeffs[n] - sum((s[k] * s[n - k] for k in range(1, n)), Fraction(0))
        s.append(acc / 2)
    return RationalSeries(tuple(s))


def ps_compose(outer: RationalSeries, inner: RationalSeries) -> RationalSeries:
    """outer(inner(x)); inner must have zero constant term."""
    if inner.coeffs[0] != 0:
        raise SeriesError("inner series of a composition must have zero constant term")
    v = inner.valuation()
    # terms of outer past its order start at degree (outer.order + 1) * v
    order = inner.order if v is None else min(inner.order, (outer.order + 1) * v - 1)
    inner = inner.truncate(order)
    acc = RationalSeries.poly({0: outer.coeffs[-1]}, order)
    for c in reversed(outer.coeffs[:-1]):
        acc = ps_mul(acc, inner) + c
    return acc


def compress_even(a: RationalSeries) -> RationalSeries:
    """sum a_{2n} t^n for an even series."""
    if any(a.coeffs[1::2]):
        raise SeriesError("series has odd-index terms")
    return RationalSeries(a.coeffs[::2])


def expand_even(a: RationalSeries) -> RationalSeries:
    """Inverse of :func:`compress_even`: t^n -> x^{2n}."""
    out = []
    for c in a.coeffs:
        out += [c, Fraction(0)]
    return RationalSeries(tuple(out[:-1]))


# ---------------------------------------------------------------- closed forms

NAMES = ("phi", "f", "alpha", "beta", "gamma", "delta", "zeta", "epsilon", "omega", "f_minus_gamma")

# first index with a nonzero coefficient
LEADING_INDEX = {
    "phi": 1, "f": 1, "alpha": 2, "beta": 2, "gamma": 6, "delta": 8,
    "zeta": 6, "epsilon": 2, "omega": 1, "f_minus_gamma": 1,
}


@dataclass(frozen=True)
class NamedSeries:
    name: str
    series: RationalSeries


def _radical_quotient(lead: dict, radicand: dict, denominator: dict, order: int) -> RationalSeries:
    """(lead - sqrt(radicand)) / denominator, from coefficient dictionaries."""
    num = RationalSeries.poly(lead, order) - ps_sqrt(RationalSeries.poly(radicand, order))
    return num / RationalSeries.poly(denominator, order)


def _f(order):
    return _radical_quotient({0: 1, 2: -4}, {0: 1, 2: -4}, {1: -2, 2: 4}, order)


def _alpha(order):
    return _radical_quotient(
        {0: 1, 1: 1, 2: -4, 3: -4},
        {0: 1, 1: 2, 2: -7, 3: -12, 4: 16, 5: 16, 6: -16},
        {1: -2, 2: 4},
        order,
    )


def _zeta(order):
    return _radical_quotient(
        {0: 1, 2: -4, 4: 3},
        {0: 1, 2: -8, 4: 22, 6: -28, 8: 17, 10: -4},
        {0: 2, 2: -4, 4: 2},
        order,
    )


def gamma_from_radical(order: int) -> RationalSeries:
    return _radical_quotient({0: 1, 2: -1, 4: -2}, {0: 1, 2: -2, 4: -3}, {0: 2, 2: 2}, order)


def gamma_from_zeta(order: int) -> RationalSeries:
    """Undo the run inflation: in t = x^2, gamma(t) = zeta(t / (1 + t))."""
    half = (order + 1) // 2
    z = compress_even(_zeta(2 * half))
    t = RationalSeries.poly({1: 1}, z.order)
    sub = t / RationalSeries.poly({0: 1, 1: 1}, z.order)
    return expand_even(ps_compose(z, sub)).truncate(order)


def _phi(order):
    return RationalSeries.poly({1: 1, 2: 1, 3: -1}, order) / RationalSeries.poly(
        {0: 1, 1: -1, 2: -2, 3: 1}, order
    )


def _beta(order):
    return RationalSeries.poly({2: 1}, order) / RationalSeries.poly({0: 1, 2: -1}, order)


def _omega(order):
    return _f(order) / RationalSeries.poly({0: 1, 1: 2}, order)


def expand_named(name: str, order: int = DEFAULT_ORDER) -> RationalSeries:
    """Coefficients 0..order of a named generating function."""
    if order < 1:
        raise SeriesError("order must be at least 1")
    work = order + 2  # headroom for the valuation-cancelling divisions
    if name == "phi":
        s = _phi(work)
    elif name == "f":
        s = _f(work)
    elif name == "alpha":
        s = _alpha(work)
    elif name == "beta":
        s = _beta(work)
    elif name == "zeta":
        s = _zeta(work)
    elif name == "gamma":
        s = gamma_from_zeta(work)
    elif name == "delta":
        s = _zeta(work) - gamma_from_zeta(work)
    elif name == "omega":
        s = _omega(work)
    elif name == "epsilon":
        s = _omega(work).shift(1) * 2
    elif name == "f_minus_gamma":
        s = _f(work) - gamma_from_zeta(work)
    else:
        raise SeriesError(f"unknown series {name!r}; known: {', '.join(NAMES)}")
    return s.truncate(order)


def named(name: str, order: int = DEFAULT_ORDER) -> NamedSeries:
    return NamedSeries(name, expand_named(name, order))


def printed_epsilon(order: int = DEFAULT_ORDER) -> RationalSeries:
    """(-1 - 4x^2 - sqrt(1 - 4x^2)) / (-1 + 4x^2), taken literally.

    Its constant term is 2, so it cannot count even-length involutions; kept
    only so the discrepancy can be reported.
    """
    return _radical_quotient({0: -1, 2: -4}, {0: 1, 2: -4}, {0: -1, 2: 4}, order)


def phi_recurrence(order: int) -> list[int]:
    """c_1..c_order from c_{n+3} = c_{n+2} + 2 c_{n+1} - c_n, seeds 1, 2, 3."""
    if order < 3:
        raise ValueError("need at least the three seeds")
    c = [1, 2, 3]
    while len(c) < order:
        c.append(c[-1] + 2 * c[-2] - c[-3])
    return c


def central_binomial(n: int) -> int:
    return comb(n, n // 2)


def inflated_simple_count(n: int, gamma_coeffs) -> int:
    """Inflations of simple involutions of length 2n, from the counts of simple ones.

    ``gamma_coeffs[k]`` is the number of simple involutions of length k.
    """
    if n < 4:
        raise ValueError("formula starts at length 8 (n = 4)")
    if len(gamma_coeffs) <= 2 * (n - 1):
        raise ValueError(f"need simple counts up to length {2 * (n - 1)}")
    total = 0
    for i in range(1, n - 2):
        inner = sum(comb(i - 1, j) * comb(n - i, j + 1) for j in range(i))
        total += int(gamma_coeffs[2 * (n - i)]) * inner
    return total


# ---------------------------------------------------------------- residuals

SYSTEMS = ("1", "2", "3", "4", "5", "f_poly", "alpha_poly", "gamma_poly")


def relation_residual(system: str, order: int = DEFAULT_ORDER) -> dict[str, RationalSeries]:
    """Residual of every equation in a relation system, after substituting the expansions.

    Each value should be the zero series through ``order``.
    """
    N = order
    X = x(N)
    one = RationalSeries.poly({0: 1}, N)
    f = expand_named("f", N)
    alpha = expand_named("alpha", N)
    beta = expand_named("beta", N)
    gamma = expand_named("gamma", N)
    delta = expand_named("delta", N)
    zeta = expand_named("zeta", N)
    eps = expand_named("epsilon", N)
    omega = expand_named("omega", N)
    nonsum = beta + gamma + delta
    sys1 = {
        "f = x + alpha + beta + gamma + delta": f - (X + alpha + beta + gamma + delta),
        "beta = 1/(1-x^2) - 1": beta - (one / (one - X * X) - 1),
        "alpha = (x+beta+gamma+delta)(x+alpha+beta+gamma+delta)": alpha - (X + nonsum) * (X + alpha + nonsum),
    }
    sys3 = {
        "omega = x + x*eps + (beta+gamma+delta)*omega": omega - (X + X * eps + nonsum * omega),
        "eps = beta+gamma+delta + (beta+gamma+delta)*eps + x*omega": eps - (nonsum + nonsum * eps + X * omega),
    }
    if system == "1":
        return sys1
    if system == "2":
        phi = expand_named("phi", N)
        # type-12 part of the 1/12/21-only subset, solved from its own equation
        alpha_sep = (X + beta) * (X + beta) / (one - X - beta)
        return {
            "phi = x + alpha' + beta": phi - (X + alpha_sep + beta),
            "alpha' = (x+beta)(x+alpha'+beta)": alpha_sep - (X + beta) * (X + alpha_sep + beta),
            "beta = 1/(1-x^2) - 1": beta - (one / (one - X * X) - 1),
        }
    if system == "3":
        return sys3
    if system == "4":
        out = dict(sys1)
        out["f = omega + eps"] = f - (omega + eps)
        out.update(sys3)
        out["eps = 2x*omega"] = eps - X * omega * 2
        return out
    if system == "5":
        x2, x4, x6 = X**2, X**4, X**6
        return {
            "(-1+4x^2-3x^4)zeta + (1-2x^2+x^4)zeta^2 + x^6": (-1 + 4 * x2 - 3 * x4) * zeta
            + (1 - 2 * x2 + x4) * zeta * zeta
            + x6,
            "zeta = gamma + delta": zeta - (gamma + delta),
        }
    if system == "f_poly":
        x2 = X * X
        return {"-f + x - f^2 x + 2x^2 + 4f x^2 + 2f^2 x^2": -f + X - f * f * X + 2 * x2 + 4 * f * x2 + 2 * f * f * x2}
    if system == "alpha_poly":
        a = alpha
        x2, x3, x4 = X**2, X**3, X**4
        return {
            "alpha polynomial": a + a * X + a * a * X - x2 - 4 * a * x2 - 2 * a * a * x2 - 4 * x3 - 4 * a * x3 - 4 * x4
        }
    if system == "gamma_poly":
        x2, x4, x6 = X**2, X**4, X**6
        return {
            "(1+x^2)gamma^2 + (-1+x^2+2x^4)gamma + x^6": (1 + x2) * gamma * gamma + (-1 + x2 + 2 * x4) * gamma + x6,
            "gamma radical = gamma via zeta": gamma_from_radical(N) - gamma,
        }
    raise SeriesError(f"unknown system {system!r}; known: {', '.join(SYSTEMS)}")


# compatibility names
theorem51_delta = inflated_simple_count
