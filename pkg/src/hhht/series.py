"""Truncated power series with exact rational coefficients.

Used to expand the closed-form generating function of the win-probability
gap and to check the identities around it coefficient by coefficient.

A series of order ``N`` knows the coefficients of ``t**0 .. t**N``; anything
above is unknown. Binary operations on series of different orders truncate to
the smaller order instead of zero-padding the shorter operand.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .report import VerificationReport

# (1-t)(1-2t)(2t^2+t+1) expanded; lowest degree first
DISCRIMINANT = (1, -2, 1, -4, 4)
ODE_COEFF = (-1, 1, -6, 8)  # 8t^3 - 6t^2 + t - 1


class TruncatedSeries:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable):
        c = tuple(Fraction(x) for x in coeffs)
        if not c:
            raise ValueError("a truncated series needs at least one coefficient")
        self._c = c

    @classmethod
    def from_poly(cls, poly: Sequence, order: int) -> "TruncatedSeries":
        """Exact polynomial, so zero coefficients above its degree are known."""
        if order < 0:
            raise ValueError("order must be >= 0")
        c = list(poly[: order + 1])
        return cls(c + [0] * (order + 1 - len(c)))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_poly([1], order)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def order(self) -> int:
        return len(self._c) - 1

    def __getitem__(self, i):
        return self._c[i]

    def __len__(self):
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        shown = ", ".join(str(x) for x in self._c[:8])
        more = ", ..." if len(self._c) > 8 else ""
        return f"TruncatedSeries([{shown}{more}], order={self.order})"

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self._c[: order + 1])

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.from_poly([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries(a + b for a, b in zip(self._c, other._c))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-a for a in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries(a - b for a, b in zip(self._c, other._c))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(a * other for a in self._c)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order) + 1
        a, b = self._c[:n], other._c[:n]
        sparse_a = [(i, x) for i, x in enumerate(a) if x]
        sparse_b = [(i, x) for i, x in enumerate(b) if x]
        if len(sparse_b) < len(sparse_a):
            sparse_a, b = sparse_b, a
        out = [Fraction(0)] * n
        for i, x in sparse_a:
            for j in range(n - i):
                if b[j]:
                    out[i + j] += x * b[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(a / other for a in self._c)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        b0 = other._c[0]
        if b0 == 0:
            raise ZeroDivisionError("series division needs a nonzero constant term")
        n = min(self.order, other.order) + 1
        tail = [(k, x) for k, x in enumerate(other._c[1:n], start=1) if x]
        out: list[Fraction] = []
        for m in range(n):
            acc = self._c[m]
            for k, x in tail:
                if k > m:
                    break
                acc -= x * out[m - k]
            out.append(acc / b0)
        return TruncatedSeries(out)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative; the result has order one less."""
        if self.order == 0:
            raise ValueError("derivative of an order-0 series has no known coefficients")
        return TruncatedSeries(k * self._c[k] for k in range(1, len(self._c)))

    def integral(self) -> "TruncatedSeries":
        """Formal antiderivative with zero constant term; order grows by one."""
        return TruncatedSeries([0, *(x / (k + 1) for k, x in enumerate(self._c))])

    def power(self, alpha: Fraction) -> "TruncatedSeries":
        """``self ** alpha`` for a series with constant term exactly 1.

        Coefficients come from ``a * b' = alpha * a' * b`` (with ``b = a**alpha``),
        which gives ``n b_n = sum_k ((alpha + 1) k - n) a_k b_{n-k}``. Cost is
        ``O(N * nnz(a))``, linear for a polynomial ``a``.
        """
        if self._c[0] != 1:
            raise ValueError(f"constant term must be 1, got {self._c[0]}")
        alpha = Fraction(alpha)
        a1 = alpha + 1
        tail = [(k, x) for k, x in enumerate(self._c[1:], start=1) if x]
        b = [Fraction(1)]
        for n in range(1, len(self._c)):
            acc = Fraction(0)
            for k, x in tail:
                if k > n:
                    break
                acc += (a1 * k - n) * x * b[n - k]
            b.append(acc / n)
        return TruncatedSeries(b)

    def sqrt_inv(self) -> "TruncatedSeries":
        """``1 / sqrt(self)``; requires constant term 1 so no irrational constant appears."""
        return self.power(Fraction(-1, 2))

    def sqrt_inv_newton(self) -> "TruncatedSeries":
        """Same as :meth:`sqrt_inv` by Newton iteration ``x <- x (3 - a x^2) / 2``.

        Quadratically convergent in the number of correct coefficients; kept as
        an independent route for cross-checking.
        """
        if self._c[0] != 1:
            raise ValueError(f"constant term must be 1, got {self._c[0]}")
        target = self.order
        x = TruncatedSeries([1])
        prec = 0
        while prec < target:
            prec = min(2 * prec + 1, target)
            a = self.truncate(prec)
            x = TruncatedSeries.from_poly(x.coeffs, prec)
            x = x * (3 - a * x * x) / 2
        return x

    def log(self) -> "TruncatedSeries":
        """Formal ``log`` as the antiderivative of ``a'/a`` (constant term 1 required)."""
        if self._c[0] != 1:
            raise ValueError(f"constant term must be 1, got {self._c[0]}")
        if self.order == 0:
            return TruncatedSeries([0])
        return (self.derivative() / self.truncate(self.order - 1)).integral()


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a / b


def series_sqrt_inv(a: TruncatedSeries) -> TruncatedSeries:
    return a.sqrt_inv()


def poly(coeffs: Sequence, order: int) -> TruncatedSeries:
    return TruncatedSeries.from_poly(coeffs, order)


def radicand(order: int) -> TruncatedSeries:
    """``(1-t)(1-2t)(2t^2+t+1)`` built as a product of its factors."""
    return poly([1, -1], order) * poly([1, -2], order) * poly([1, 1, 2], order)


def f_tilde(order: int) -> TruncatedSeries:
    """Generating function of ``d_n = 2**n * Delta_n + 1/2``."""
    return radicand(order).sqrt_inv() / 2


def gap_generating_function(order: int) -> TruncatedSeries:
    """``sum_n Delta_n (2t)^n`` from its inverse-square-root closed form."""
    return f_tilde(order) - poly([1], order) / poly([1, -1], order) / 2


def delta_from_closed_form(order: int) -> list[Fraction]:
    """``Delta_0 .. Delta_order``; ``Delta_0`` is 0 by construction."""
    if order < 0:
        raise ValueError("order must be >= 0")
    f = gap_generating_function(order)
    return [c / (1 << n) for n, c in enumerate(f)]


def h_series(order: int) -> TruncatedSeries:
    """``(t+2)/(2t^2+t+1) + 1/(1-2t)`` by series division."""
    return poly([2, 1], order) / poly([1, 1, 2], order) + poly([1], order) / poly([1, -2], order)


def h_coefficients(order: int) -> list[Fraction]:
    return list(h_series(order))


def phi_real_parts(order: int) -> list[int]:
    """``r_n = 2 Re(phi**n)`` for ``phi = (-1 + sqrt(-7))/2``.

    ``phi`` and its conjugate are the roots of ``x^2 + x + 2``, so
    ``r_n = -r_{n-1} - 2 r_{n-2}`` with ``r_0 = 2``, ``r_1 = -1``.
    """
    r = [2, -1][: order + 1]
    for _ in range(2, order + 1):
        r.append(-r[-1] - 2 * r[-2])
    return r


def h_closed_form(order: int) -> list[int]:
    return [rn + (1 << n) for n, rn in enumerate(phi_real_parts(order))]


def h_positivity_scan(order: int, report: VerificationReport | None = None) -> VerificationReport:
    """Check every coefficient of ``h`` through ``order`` is a positive integer.

    Runs the integer recurrence for ``r_n`` on the fly without storing it.
    """
    report = report or VerificationReport("h-positivity")
    r, r_next = 2, -1
    power = 1
    first_bad = None
    for n in range(order + 1):
        if r + power <= 0:
            first_bad = (n, r + power)
            break
        r, r_next = r_next, -r_next - 2 * r
        power <<= 1
    if first_bad is None:
        report.record("h_n > 0", f"0..{order}", True, True)
    else:
        report.record("h_n > 0", first_bad[0], "> 0", first_bad[1], ok=False)
    return report


def delta_positivity_scan(deltas: Sequence, report: VerificationReport | None = None) -> VerificationReport:
    """``Delta_1 = Delta_2 = 0`` and ``Delta_n > 0`` for ``n >= 3``.

    ``deltas[n]`` is ``Delta_n``; index 0 is ignored.
    """
    report = report or VerificationReport("delta-positivity")
    for n in (1, 2):
        if n < len(deltas):
            report.record("Delta_n == 0", n, 0, deltas[n])
    bad = next((n for n in range(3, len(deltas)) if not deltas[n] > 0), None)
    if bad is None:
        if len(deltas) > 3:
            report.record("Delta_n > 0", f"3..{len(deltas) - 1}", True, True)
    else:
        report.record("Delta_n > 0", bad, "> 0", deltas[bad], ok=False)
    return report


def positivity_scan(order: int, deltas: Sequence | None = None) -> VerificationReport:
    """Positivity of ``h`` and of ``Delta_n`` (from the closed form unless supplied)."""
    if order < 3:
        raise ValueError("positivity scan needs order >= 3")
    report = VerificationReport("positivity")
    h_positivity_scan(order, report)
    if deltas is None:
        deltas = delta_from_closed_form(order)
    delta_positivity_scan(list(deltas)[: order + 1], report)
    return report


def log_derivative_identity_check(order: int, h: TruncatedSeries | None = None) -> bool:
    """``2t^2/(1-t) * h(t) == d/dt (1/2) log((1-t) / ((1-2t)(2t^2+t+1)))``.

    Both sides are compared through ``t**(order-1)``. The log is the formal
    antiderivative of ``Q'/Q``, so no logarithm of a constant appears.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if h is None:
        h = h_series(order)
    h = h.truncate(order)
    lhs = poly([0, 0, 2], order) / poly([1, -1], order) * h
    q = poly([1, -1], order) / (poly([1, -2], order) * poly([1, 1, 2], order))
    rhs = (q.log() / 2).derivative()
    return lhs.coeffs[:order] == rhs.coeffs[:order]


def ode_identity_check(order: int, discriminant: Sequence = DISCRIMINANT) -> bool:
    """``disc(t) f~'(t) + (8t^3 - 6t^2 + t - 1) f~(t) == 0`` through ``t**(order-1)``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    ft = f_tilde(order)
    lhs = poly(discriminant, order - 1) * ft.derivative() + poly(ODE_COEFF, order) * ft
    return all(c == 0 for c in lhs.coeffs[:order])
