"""Truncated power series over exact rationals.

A Series stores exact coefficients of x^0..x^order; coefficients beyond
`order` are unknown, not zero.  Arithmetic never claims more than the
operands guarantee: sums and products truncate to the minimum order, while
multiplying or dividing by a power of x honestly shifts the guaranteed
order up or down.

Coefficients are gmpy2.mpq when available (noticeably faster on big
numerators), plain fractions.Fraction otherwise.  The same class also
serves as the bivariate series type when the coefficients are UPoly
values (polynomials in the marking variable u, see bivar.py): everything
here is written against the generic ring operations +, -, *, == and
division by integers.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rat

R0 = Rat(0)
R1 = Rat(1)


def rat_str(q) -> str:
    """Serialize an exact rational as "num/den"."""
    return f"{int(q.numerator)}/{int(q.denominator)}"


def rat_from_str(s: str):
    num, den = s.split("/")
    return Rat(int(num), int(den))


class SeriesError(ValueError):
    pass


class Series:
    """Immutable truncated power series with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if len(coeffs) == 0:
            raise SeriesError("a series needs at least the constant term")
        self.coeffs = tuple(coeffs)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(order: int) -> "Series":
        return Series((R0,) * (order + 1))

    @staticmethod
    def const(c, order: int) -> "Series":
        return Series((Rat(c),) + (R0,) * order)

    @staticmethod
    def x_power(k: int, order: int) -> "Series":
        if k > order:
            raise SeriesError(f"x^{k} not representable at order {order}")
        c = [R0] * (order + 1)
        c[k] = R1
        return Series(c)

    @staticmethod
    def from_coeffs(cs: Iterable, order: int) -> "Series":
        c = [Rat(v) for v in cs]
        if len(c) < order + 1:
            c += [R0] * (order + 1 - len(c))
        return Series(c[: order + 1])

    # -- basic structure ---------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        if n > self.order:
            raise SeriesError(f"coefficient x^{n} beyond truncation {self.order}")
        return self.coeffs[n]

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None if all stored are 0."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def truncate(self, order: int) -> "Series":
        if order >= self.order:
            return self
        return Series(self.coeffs[: order + 1])

    def is_even(self) -> bool:
        return not any(self.coeffs[1::2])

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def agrees_with(self, other: "Series") -> bool:
        """Equality up to the common guaranteed order."""
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"Series([{shown}{tail}]; order={self.order})"

    # -- ring operations ---------------------------------------------------

    def _zero_coef(self):
        return self.coeffs[0] * 0

    def __add__(self, other):
        if not isinstance(other, Series):
            c = list(self.coeffs)
            c[0] = c[0] + other
            return Series(c)
        n = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        if not isinstance(other, Series):
            c = list(self.coeffs)
            c[0] = c[0] - other
            return Series(c)
        n = min(self.order, other.order)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Series([-c for c in self.coeffs])

    def scale(self, c) -> "Series":
        return Series([c * v for v in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        zero = self._zero_coef()
        out = [zero] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return Series(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        return Series([c / other for c in self.coeffs])

    def pow(self, k: int) -> "Series":
        if k < 0:
            return self.inverse().pow(-k)
        if k == 0:
            one = self._zero_coef() + 1
            return Series([one] + [self._zero_coef()] * self.order)
        acc = None
        base = self
        while k:
            if k & 1:
                acc = base if acc is None else acc * base
            k >>= 1
            if k:
                base = base * base
        return acc

    # -- shifts (honest order bookkeeping) ---------------------------------

    def shift(self, k: int) -> "Series":
        """Multiply by x^k (k >= 0) or divide by x^{-k} (k < 0, exact)."""
        if k == 0:
            return self
        if k > 0:
            zero = self._zero_coef()
            return Series((zero,) * k + self.coeffs)
        m = -k
        if any(self.coeffs[:m]):
            raise SeriesError(f"division by x^{m} needs valuation >= {m}")
        if self.order < m:
            raise SeriesError("series too short to divide")
        return Series(self.coeffs[m:])

    # -- inverses and elementary functions ---------------------------------

    def inverse(self) -> "Series":
        """Multiplicative inverse; constant term must be invertible."""
        a = self.coeffs
        a0 = a[0]
        if not a0:
            raise SeriesError("inverse of a series with zero constant term")
        n = self.order
        unit = a0 == 1
        b = [a0 * 0] * (n + 1)
        b[0] = (a0 * 0 + 1) if unit else R1 / a0
        for m in range(1, n + 1):
            s = a[1] * b[m - 1]
            for i in range(2, m + 1):
                if a[i]:
                    s = s + a[i] * b[m - i]
            b[m] = -s if unit else (-s) / a0
        return Series(b)

    def sqrt1(self) -> "Series":
        """Square root of a series with constant term exactly 1."""
        if self.coeffs[0] != 1:
            raise SeriesError("sqrt1 requires constant term exactly 1")
        n = self.order
        a = self.coeffs
        b = [self._zero_coef()] * (n + 1)
        b[0] = self._zero_coef() + 1
        for m in range(1, n + 1):
            s = a[m]
            for i in range(1, m):
                if b[i] and b[m - i]:
                    s = s - b[i] * b[m - i]
            b[m] = s / 2
        return Series(b)

    def log1(self) -> "Series":
        """log of a series with constant term exactly 1."""
        if self.coeffs[0] != 1:
            raise SeriesError("log1 requires constant term exactly 1")
        n = self.order
        a = self.coeffs
        b = [self._zero_coef()] * (n + 1)
        for m in range(1, n + 1):
            s = m * a[m]
            for k in range(1, m):
                if b[k] and a[m - k]:
                    s = s - k * b[k] * a[m - k]
            b[m] = s / m
        return Series(b)

    def exp0(self) -> "Series":
        """exp of a series with constant term exactly 0."""
        if self.coeffs[0] != 0:
            raise SeriesError("exp0 requires constant term exactly 0")
        n = self.order
        a = self.coeffs
        b = [self._zero_coef()] * (n + 1)
        b[0] = self._zero_coef() + 1
        for m in range(1, n + 1):
            s = self._zero_coef()
            for k in range(1, m + 1):
                if a[k] and b[m - k]:
                    s = s + k * a[k] * b[m - k]
            b[m] = s / m
        return Series(b)

    # -- composition --------------------------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """self(inner); inner must have zero constant term.

        The result order is what inner's truncation and valuation honestly
        guarantee: min(inner.order, (self.order+1)*val - 1).
        """
        if inner.coeffs[0] != 0:
            raise SeriesError("composition requires inner constant term 0")
        v = inner.valuation()
        if v is None:
            # inner is 0 to its stated order
            zero = inner._zero_coef()
            out = [zero] * (inner.order + 1)
            out[0] = out[0] + self.coeffs[0]
            return Series(out)
        n_res = min(inner.order, (self.order + 1) * v - 1)
        top = min(self.order, n_res // v)
        inner_t = inner.truncate(n_res)
        zero = inner._zero_coef()
        acc = Series([zero + self.coeffs[top]] + [zero] * n_res)
        for k in range(top - 1, -1, -1):
            acc = acc * inner_t + self.coeffs[k]
        return acc

    # -- calculus -----------------------------------------------------------

    def xdx(self) -> "Series":
        """x * d/dx: multiplies the x^n coefficient by n (no order loss)."""
        return Series([n * c for n, c in enumerate(self.coeffs)])

    def integrate_over_x(self) -> "Series":
        """Inverse of xdx: divides the x^n coefficient by n; needs a_0 = 0."""
        if self.coeffs[0] != 0:
            raise SeriesError("integrate_over_x requires zero constant term")
        return Series([self.coeffs[0]] + [c / n for n, c in enumerate(self.coeffs) if n >= 1])

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [rat_str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(d: dict) -> "Series":
        return Series([rat_from_str(s) for s in d["coeffs"]])


class FixpointError(RuntimeError):
    pass


def solve_fixpoint(
    rules: Sequence[tuple[str, Callable[[Mapping[str, Series]], Series]]],
    order: int,
    initial: Mapping[str, Series] | None = None,
    zero: Series | None = None,
) -> dict[str, Series]:
    """Solve a well-founded system of series equations by sweeping.

    `rules` is an ordered list of (name, fn); each fn maps the current state
    to the new right-hand side for that name.  Starting from all-zero series
    the sweep is repeated, in declaration order, until a full sweep changes
    nothing.  Coefficients up to x^order stabilize after at most order+1
    sweeps for a well-founded system; beyond order+2 sweeps we fail loudly.
    """
    if zero is None:
        zero = Series.zero(order)
    state: dict[str, Series] = {name: zero for name, _ in rules}
    if initial:
        state.update(initial)
    if not rules:
        return {}
    for _ in range(order + 3):
        changed = False
        for name, fn in rules:
            new = fn(state).truncate(order)
            if new != state[name]:
                state[name] = new
                changed = True
        if not changed:
            return state
    raise FixpointError(f"fixpoint did not stabilize within {order + 3} sweeps")
