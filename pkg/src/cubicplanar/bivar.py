"""Exact polynomials in the marking variable u, and bivariate series helpers.

A bivariate series (x-series whose coefficients count marked objects) is a
plain Series whose coefficients are UPoly values instead of rationals.  A
UPoly is an exact polynomial in u with rational coefficients; there is no
truncation in u because an n-vertex graph carries boundedly many marks.

UPoly optionally carries a jet `cap`: arithmetic then truncates every
product at u-degree <= cap.  With the substitution u = 1 + v and cap 1
this turns the whole bivariate pipeline into first-order jets around u=1,
which is how mean-marker series at large order are computed cheaply.
"""

from __future__ import annotations

from typing import Sequence

from .series import Rat, R0, R1, Series, SeriesError, rat_str


def _mincap(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class UPoly:
    """Polynomial in u over exact rationals; trailing zeros trimmed."""

    __slots__ = ("c", "cap")

    def __init__(self, coeffs: Sequence = (), cap: int | None = None):
        cs = [Rat(v) for v in coeffs]
        if cap is not None:
            cs = cs[: cap + 1]
        while cs and not cs[-1]:
            cs.pop()
        self.c = tuple(cs)
        self.cap = cap

    @staticmethod
    def const(v, cap: int | None = None) -> "UPoly":
        return UPoly((v,), cap)

    @staticmethod
    def u(cap: int | None = None) -> "UPoly":
        return UPoly((0, 1), cap)

    # -- structure ----------------------------------------------------------

    def degree(self) -> int:
        return len(self.c) - 1 if self.c else -1

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.c == other.c
        # scalar comparison against a constant polynomial
        if not self.c:
            return other == 0
        return len(self.c) == 1 and self.c[0] == other

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        if not self.c:
            return "UPoly(0)"
        terms = " + ".join(f"({c})u^{i}" for i, c in enumerate(self.c) if c)
        return f"UPoly({terms})"

    def coeff(self, k: int):
        return self.c[k] if 0 <= k < len(self.c) else R0

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly.const(other)
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return UPoly(out, _mincap(self.cap, other.cap if isinstance(other, UPoly) else None))

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        p = UPoly.__new__(UPoly)
        p.c = tuple(-v for v in self.c)
        p.cap = self.cap
        return p

    def __sub__(self, other):
        if not isinstance(other, UPoly):
            other = UPoly.const(other)
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            p = UPoly.__new__(UPoly)
            p.c = tuple(v * other for v in self.c) if other else ()
            p.cap = self.cap
            return p
        a, b = self.c, other.c
        cap = _mincap(self.cap, other.cap)
        if not a or not b:
            return UPoly((), cap)
        top = len(a) + len(b) - 2
        if cap is not None:
            top = min(top, cap)
        out = [R0] * (top + 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            jmax = min(len(b) - 1, top - i)
            for j in range(jmax + 1):
                if b[j]:
                    out[i + j] = out[i + j] + ai * b[j]
        return UPoly(out, cap)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, UPoly):
            raise SeriesError("UPoly division only by scalars")
        p = UPoly.__new__(UPoly)
        p.c = tuple(v / other for v in self.c)
        p.cap = self.cap
        return p

    def pow(self, k: int) -> "UPoly":
        acc = UPoly.const(1, self.cap)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    # -- u-specific operations -------------------------------------------------

    def shift_u(self, k: int) -> "UPoly":
        """Multiply by u^k (k >= 0) or divide exactly by u^{-k} (k < 0)."""
        if self.cap is not None:
            raise SeriesError("shift_u is not defined on capped jets")
        if k >= 0:
            return UPoly((R0,) * k + self.c) if self.c else self
        m = -k
        if any(self.c[:m]):
            raise SeriesError(f"UPoly not divisible by u^{m}")
        return UPoly(self.c[m:])

    def uderiv(self) -> "UPoly":
        """d/du."""
        return UPoly([i * v for i, v in enumerate(self.c)][1:], self.cap)

    def eval_rat(self, v):
        """Evaluate at a rational value of u."""
        acc = R0
        for c in reversed(self.c):
            acc = acc * v + c
        return acc

    def eval_series(self, v: Series) -> Series:
        """Evaluate at a series value of u (Horner; any coefficient ring)."""
        zero = v._zero_coef()
        acc = Series([zero] * (v.order + 1))
        for c in reversed(self.c):
            acc = acc * v + c
        return acc

    def to_json(self) -> list[str]:
        return [rat_str(c) for c in self.c]


UP0 = UPoly(())
UP1 = UPoly((1,))


# -- bivariate series helpers --------------------------------------------------


def bseries_zero(order: int, cap: int | None = None) -> Series:
    return Series((UPoly((), cap),) * (order + 1))


def bseries_const(v, order: int, cap: int | None = None) -> Series:
    return Series((UPoly((v,), cap),) + (UPoly((), cap),) * order)


def lift_series(a: Series, order: int | None = None, cap: int | None = None) -> Series:
    """Lift a rational-coefficient series to UPoly coefficients."""
    n = a.order if order is None else min(order, a.order)
    return Series([UPoly((c,), cap) if c else UPoly((), cap) for c in a.coeffs[: n + 1]])


def eval_u(a: Series, v) -> Series:
    """Substitute u := v in a bivariate series.

    v may be a rational (each x-coefficient polynomial is evaluated at it) or
    a Series (the polynomial is evaluated at that series; exact because each
    x-coefficient has finite u-degree).  The substituted value may have a
    nonzero constant term: this is plain polynomial evaluation per
    x-coefficient, not formal composition.
    """
    if isinstance(v, Series):
        out = Series.zero(min(a.order, v.order))
        for n in range(out.order, -1, -1):
            p = a.coeffs[n]
            if p.is_zero():
                continue
            out = out + p.eval_series(v.truncate(out.order - n)).shift(n)
        return out.truncate(min(a.order, v.order))
    return Series([p.eval_rat(v) for p in a.coeffs])


def eval_bivariate(t: Series, zarg: Series, uarg) -> Series:
    """Evaluate t(z, u) at z := zarg, u := uarg.

    t is a bivariate series (UPoly coefficients in z); zarg must have zero
    constant term; uarg is a rational, a rational series, or a bivariate
    series.  Horner in zarg with per-coefficient polynomial evaluation in u.
    """
    if zarg.coeffs[0] != 0:
        raise SeriesError("z-substitution requires zero constant term")
    v = zarg.valuation()
    zero = zarg._zero_coef()
    if v is None:
        out = [zero] * (zarg.order + 1)
        p0 = t.coeffs[0]
        out[0] = out[0] + (p0.eval_rat(uarg) if not isinstance(uarg, Series) else R0)
        if isinstance(uarg, Series) and not p0.is_zero():
            return Series(out) + p0.eval_series(uarg)
        return Series(out)
    n_res = min(zarg.order, (t.order + 1) * v - 1)
    if isinstance(uarg, Series):
        n_res = min(n_res, uarg.order)
    top = min(t.order, n_res // v)
    zt = zarg.truncate(n_res)

    def coef_at(n: int):
        p = t.coeffs[n]
        if isinstance(uarg, Series):
            return p.eval_series(uarg.truncate(n_res))
        return p.eval_rat(uarg)

    acc = Series([zero] * (n_res + 1)) + coef_at(top)
    for k in range(top - 1, -1, -1):
        acc = acc * zt + coef_at(k)
    return acc


def shift_u_series(a: Series, k: int) -> Series:
    """Multiply/divide every x-coefficient by a power of u."""
    return Series([p.shift_u(k) for p in a.coeffs])


def u_coeff_series(a: Series, k: int) -> Series:
    """Extract the rational series multiplying u^k."""
    return Series([p.coeff(k) for p in a.coeffs])


def max_u_degree(a: Series) -> int:
    return max((p.degree() for p in a.coeffs), default=-1)
