"""Exact truncated bivariate power series and the run-counting functional equations.

Series are truncated at a fixed order N in the size variable z; each z
coefficient is a polynomial in the run-marking variable v with exact
rational coefficients.  No floating point enters this module: every
identity check below is an exact coefficient-wise comparison.

The four generating functions handled here, with counts recovered as
n! [z^n v^m]:

* auxiliary_series   solves  A = z (v e^A + 1 - v),
* tree_series        solves  dF/dz = (e^F - 1 + v) / (1 - z (e^F - 1 + v)),
  so n! [z^n v^m] counts size-n trees with m ascending runs,
* mapping_series     is  1 / (1 - z v e^A),  counting mappings by runs,
* connected_series   is  ln((v e^A + 1 - v) / (v e^A (1 - A) + 1 - v)),
  counting connected mappings by runs; its exp is the mapping series.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact import CountTable

Rational = int | Fraction


class VPoly:
    """Polynomial in the marking variable v with Fraction coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def const(cls, x: Rational) -> "VPoly":
        return cls((x,))

    @classmethod
    def v(cls) -> "VPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.c) - 1  # -1 for the zero polynomial

    def __getitem__(self, k: int) -> Fraction:
        return self.c[k] if 0 <= k < len(self.c) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.c

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = VPoly((other,))
        return isinstance(other, VPoly) and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __add__(self, other) -> "VPoly":
        if isinstance(other, (int, Fraction)):
            other = VPoly((other,))
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        return VPoly([x + (b[k] if k < len(b) else 0) for k, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "VPoly":
        return VPoly([-x for x in self.c])

    def __sub__(self, other) -> "VPoly":
        return self + (-other if isinstance(other, VPoly) else VPoly((-Fraction(other),)))

    def __rsub__(self, other) -> "VPoly":
        return (-self) + other

    def __mul__(self, other) -> "VPoly":
        if isinstance(other, (int, Fraction)):
            return VPoly([x * other for x in self.c])
        out = [Fraction(0)] * (len(self.c) + len(other.c))
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    out[i + j] += a * b
        return VPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Rational) -> "VPoly":
        return VPoly([x / other for x in self.c])

    def deriv(self) -> "VPoly":
        return VPoly([k * x for k, x in enumerate(self.c)][1:])

    def __call__(self, value: Rational) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self.c):
            acc = acc * value + a
        return acc

    def __repr__(self) -> str:
        if not self.c:
            return "0"
        parts = []
        for k, a in enumerate(self.c):
            if a:
                parts.append(f"{a}" if k == 0 else (f"{a}*v^{k}" if k > 1 else f"{a}*v"))
        return " + ".join(parts)


_ZERO = VPoly()
_ONE = VPoly((1,))


class BivariateSeries:
    """Power series in z truncated at a fixed order, with VPoly coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=None):
        if order < 0:
            raise ValueError("order must be non-negative")
        self.order = order
        cs = list(coeffs) if coeffs is not None else []
        cs = [c if isinstance(c, VPoly) else VPoly.const(c) for c in cs[: order + 1]]
        cs += [_ZERO] * (order + 1 - len(cs))
        self.coeffs: tuple[VPoly, ...] = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "BivariateSeries":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "BivariateSeries":
        return cls(order, [_ONE])

    @classmethod
    def z(cls, order: int) -> "BivariateSeries":
        return cls(order, [_ZERO, _ONE])

    @classmethod
    def v(cls, order: int) -> "BivariateSeries":
        return cls(order, [VPoly.v()])

    def __eq__(self, other) -> bool:
        return (isinstance(other, BivariateSeries)
                and self.order == other.order and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def coefficient(self, n: int, m: int | None = None):
        """[z^n] as a VPoly, or the exact rational [z^n v^m] when m is given."""
        if not 0 <= n <= self.order:
            raise IndexError(f"z-order {n} outside truncation {self.order}")
        return self.coeffs[n] if m is None else self.coeffs[n][m]

    def count(self, n: int, m: int) -> int:
        """n! [z^n v^m], which must be an integer for counting series."""
        x = self.coefficient(n, m) * math.factorial(n)
        if x.denominator != 1:
            raise ValueError(f"n![z^{n}v^{m}] = {x} is not an integer")
        return x.numerator

    def _lift(self, other) -> "BivariateSeries":
        if isinstance(other, BivariateSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return BivariateSeries(self.order, [VPoly.const(other)])
        if isinstance(other, VPoly):
            return BivariateSeries(self.order, [other])
        return NotImplemented

    def __add__(self, other) -> "BivariateSeries":
        other = self._lift(other)
        order = min(self.order, other.order)
        return BivariateSeries(
            order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "BivariateSeries":
        return BivariateSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other) -> "BivariateSeries":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "BivariateSeries":
        return (-self) + other

    def __mul__(self, other) -> "BivariateSeries":
        if isinstance(other, (int, Fraction, VPoly)):
            return BivariateSeries(self.order, [c * other for c in self.coeffs])
        order = min(self.order, other.order)
        out = [_ZERO] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return BivariateSeries(order, out)

    __rmul__ = __mul__

    def inverse(self) -> "BivariateSeries":
        """Reciprocal; requires the z^0 coefficient to be the constant 1."""
        if self.coeffs[0] != _ONE:
            raise ValueError("reciprocal needs constant term 1")
        out = [_ONE] + [_ZERO] * self.order
        for k in range(1, self.order + 1):
            acc = _ZERO
            for j in range(1, k + 1):
                if not self.coeffs[j].is_zero():
                    acc = acc + self.coeffs[j] * out[k - j]
            out[k] = -acc
        return BivariateSeries(self.order, out)

    def __truediv__(self, other) -> "BivariateSeries":
        if isinstance(other, (int, Fraction)):
            return BivariateSeries(self.order, [c / other for c in self.coeffs])
        return self * other.inverse()

    def exp(self) -> "BivariateSeries":
        """Exponential; requires zero constant term.  e_k = (1/k) sum j a_j e_{k-j}."""
        if not self.coeffs[0].is_zero():
            raise ValueError("exp needs zero constant term")
        out = [_ONE] + [_ZERO] * self.order
        for k in range(1, self.order + 1):
            acc = _ZERO
            for j in range(1, k + 1):
                if not self.coeffs[j].is_zero():
                    acc = acc + (self.coeffs[j] * j) * out[k - j]
            out[k] = acc / k
        return BivariateSeries(self.order, out)

    def log(self) -> "BivariateSeries":
        """Logarithm; requires constant term 1.  l_k = a_k - (1/k) sum j l_j a_{k-j}."""
        if self.coeffs[0] != _ONE:
            raise ValueError("log needs constant term 1")
        out = [_ZERO] * (self.order + 1)
        for k in range(1, self.order + 1):
            acc = _ZERO
            for j in range(1, k):
                if not out[j].is_zero():
                    acc = acc + (out[j] * j) * self.coeffs[k - j]
            out[k] = self.coeffs[k] - acc / k
        return BivariateSeries(self.order, out)

    def diff_z(self) -> "BivariateSeries":
        """d/dz; drops the truncation order by one."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 truncation")
        return BivariateSeries(
            self.order - 1,
            [self.coeffs[k + 1] * (k + 1) for k in range(self.order)])

    def integrate_z(self) -> "BivariateSeries":
        """Antiderivative with zero constant term, at order one higher."""
        return BivariateSeries(
            self.order + 1,
            [_ZERO] + [self.coeffs[k] / (k + 1) for k in range(self.order + 1)])

    def diff_v(self) -> "BivariateSeries":
        return BivariateSeries(self.order, [c.deriv() for c in self.coeffs])

    def eval_v(self, value: Rational) -> tuple[Fraction, ...]:
        """Substitute a rational for v, leaving exact univariate z coefficients."""
        return tuple(c(value) for c in self.coeffs)

    def truncate(self, order: int) -> "BivariateSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return BivariateSeries(order, self.coeffs[: order + 1])

    def __repr__(self) -> str:
        terms = [f"({c!r}) z^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero()]
        return " + ".join(terms) if terms else "0"


def auxiliary_series(order: int) -> BivariateSeries:
    """Unique zero-at-origin solution of A = z (v e^A + 1 - v).

    Fixed-point iteration gains one z order per pass, so ``order`` passes
    settle every retained coefficient.
    """
    z = BivariateSeries.z(order)
    v = BivariateSeries.v(order)
    one = BivariateSeries.one(order)
    a = BivariateSeries.zero(order)
    for _ in range(order + 1):
        nxt = z * (v * a.exp() + one - v)
        if nxt == a:
            break
        a = nxt
    return a


def tree_series(order: int) -> BivariateSeries:
    """Run-marked tree series: n! [z^n v^m] counts size-n trees with m runs.

    Solved through its z derivative, which is rational in the series
    itself: dF/dz = g / (1 - z g) with g = e^F - 1 + v.  Integrating the
    relation term by term gains one z order per pass.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    z = BivariateSeries.z(order)
    v = BivariateSeries.v(order)
    one = BivariateSeries.one(order)
    f = BivariateSeries.zero(order)
    for _ in range(order + 1):
        g = f.exp() - one + v
        nxt = (g.truncate(order - 1) / (one - z * g).truncate(order - 1)).integrate_z()
        if nxt == f:
            break
        f = nxt
    return f


def mapping_series(order: int) -> BivariateSeries:
    """Run-marked mapping series 1 / (1 - z v e^A) with A the auxiliary series."""
    z = BivariateSeries.z(order)
    v = BivariateSeries.v(order)
    one = BivariateSeries.one(order)
    a = auxiliary_series(order)
    return (one - z * v * a.exp()).inverse()


def connected_series(order: int) -> BivariateSeries:
    """Run-marked connected-mapping series.

    ln((v e^A + 1 - v) / (v e^A (1 - A) + 1 - v)); both factors have
    constant term 1, so the quotient's log is taken termwise exactly.
    """
    v = BivariateSeries.v(order)
    one = BivariateSeries.one(order)
    a = auxiliary_series(order)
    ea = a.exp()
    numer = v * ea + one - v
    denom = v * ea * (one - a) + one - v
    return numer.log() - denom.log()


def pde_residual(f: BivariateSeries) -> BivariateSeries:
    """Residual of (1 - z v e^F) F_z - v (1 - v) e^F F_v - v e^F, one order lower.

    Identically zero exactly when f solves the run-marked tree equation.
    """
    order = f.order
    z = BivariateSeries.z(order)
    v = BivariateSeries.v(order)
    one = BivariateSeries.one(order)
    ef = f.exp()
    lhs = (one - z * v * ef).truncate(order - 1) * f.diff_z()
    rhs = (v * (one - v) * ef * f.diff_v() + v * ef).truncate(order - 1)
    return lhs - rhs


def check_mapping_from_tree_derivative(order: int) -> bool:
    """Mapping series = 1 + z dF/dz coefficient-wise, i.e. each mapping count is n times the tree count."""
    f = tree_series(order)
    r = mapping_series(order)
    z_fz = BivariateSeries(order, [c * k for k, c in enumerate(f.coeffs)])
    return (r - 1 - z_fz).is_zero()


def check_aux_tree_relation(order: int) -> bool:
    """v e^A = e^F - 1 + v, linking the auxiliary and tree series."""
    f = tree_series(order)
    a = auxiliary_series(order)
    v = BivariateSeries.v(order)
    one = BivariateSeries.one(order)
    return (v * a.exp() - f.exp() + one - v).is_zero()


def check_exp_connected_is_mapping(order: int) -> bool:
    """exp of the connected series reproduces the mapping series."""
    return (connected_series(order).exp() - mapping_series(order)).is_zero()


def series_count_table(s: BivariateSeries, n: int) -> CountTable:
    """CountTable of n! [z^n v^m] for m = 1..n, for any of the counting series."""
    values = {}
    for m in range(1, n + 1):
        x = s.count(n, m)
        if x:
            values[m] = x
    return CountTable(n=n, values=values)
