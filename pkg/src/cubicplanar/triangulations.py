"""Series for rooted triangulations and 3-connected cubic planar graphs.

Tutte's series: T(z) = U(1-2U) with z = U(1-U)^3 counts rooted
3-connected triangulations (plus the single triangle), z marking vertices
minus two; T4 counts the 4-connected ones via z = V(1-V)^2.  Duality turns
these into the edge-rooted 3-connected cubic planar graphs M(x,y) and
their unrooted integral Mbar(x,y), which feed the network systems through
the substitutions y = 1 + D.
"""

from __future__ import annotations

from math import comb

from .bivar import UPoly
from .series import R0, R1, Rat, Series, SeriesError, solve_fixpoint

TAU = Rat(27, 256)  # singularity of U and T
VARSIGMA = Rat(4, 27)  # singularity of V and T4


def u_series(order: int) -> Series:
    """Unique non-negative solution of z = U(1-U)^3, by fixpoint."""
    z = Series.x_power(1, order)
    one = Series.const(1, order)
    sol = solve_fixpoint([("U", lambda s: z * (one - s["U"]).pow(-3))], order)
    return sol["U"]


def u_series_lagrange(order: int) -> Series:
    """Same series by Lagrange inversion: [z^n]U = C(4n-2, n-1)/n."""
    return Series([R0] + [Rat(comb(4 * n - 2, n - 1), n) for n in range(1, order + 1)])


def v_series(order: int) -> Series:
    """Unique non-negative solution of z = V(1-V)^2."""
    z = Series.x_power(1, order)
    one = Series.const(1, order)
    sol = solve_fixpoint([("V", lambda s: z * (one - s["V"]).pow(-2))], order)
    return sol["V"]


def v_series_lagrange(order: int) -> Series:
    """[z^n]V = C(3n-2, n-1)/n."""
    return Series([R0] + [Rat(comb(3 * n - 2, n - 1), n) for n in range(1, order + 1)])


def t_series(order: int) -> Series:
    """T = U(1-2U): rooted 3-connected triangulations incl. the triangle."""
    u = u_series(order)
    return u * (1 - 2 * u)


def t_series_lagrange(order: int) -> Series:
    """Independent binomial-sum route: T = U - 2U^2 termwise."""
    coeffs = [R0]
    for n in range(1, order + 1):
        un = Rat(comb(4 * n - 2, n - 1), n)
        u2n = Rat(2 * comb(4 * n - 3, n - 2), n) if n >= 2 else R0
        coeffs.append(un - 2 * u2n)
    return Series(coeffs)


def t4_series(order: int) -> Series:
    """T4 = z + V(V-1)(V+1)^{-2} - z^2: 4-connected triangulations."""
    v = v_series(order)
    z = Series.x_power(1, order)
    one = Series.const(1, order)
    return z + v * (v - one) * (v + one).pow(-2) - Series.x_power(2, order)


def m_series(order: int) -> Series:
    """M(x, 1) = (T(x^2) - x^2)/2: edge-rooted 3-connected cubic planar EGF."""
    t = t_series(order // 2)
    x2 = Series.x_power(2, order)
    return (t.compose(x2) - x2) / 2


def m_coeff(nx: int, ny: int):
    """Exact coefficient of x^nx y^ny in M(x,y); zero unless 3*nx = 2*ny."""
    if nx % 2 or 3 * nx != 2 * ny:
        return R0
    n = nx // 2
    tn = t_series_lagrange(n)[n]
    return (tn - (R1 if n == 1 else R0)) / 2


def h_substitution(d: Series, order: int) -> Series:
    """H = M(x, 1+D)/(1+D) = (T(x^2(1+D)^3) - x^2(1+D)^3) / (2(1+D))."""
    if d.coeffs[0] != 0:
        raise SeriesError("network series D must have zero constant term")
    one_d = d + 1
    w = one_d.pow(3).shift(2).truncate(order)
    t = t_series(order // 2)
    return (t.compose(w) - w) * one_d.inverse() / 2


def mbar_z_series(order: int) -> Series:
    """Unrooted counterpart in the z variable:

    mbar(z) = -(1/12)(4U^2 + 2U + 3 log(1-U) + z),  so that
    Mbar(x,y) = mbar(x^2 y^3).  Satisfies 6 z mbar'(z) = (T(z)-z)/2.
    """
    u = u_series(order)
    z = Series.x_power(1, order)
    log_term = (1 - u).log1()
    return -(4 * u * u + 2 * u + 3 * log_term + z) / 12


def mbar_substitution(d: Series, order: int) -> Series:
    """Mbar(x, 1+D): unrooted 3-connected cores with substituted edges."""
    if d.coeffs[0] != 0:
        raise SeriesError("network series D must have zero constant term")
    w = (d + 1).pow(3).shift(2).truncate(order)
    return mbar_z_series(order // 2).compose(w)


def m_series_xy(order: int) -> Series:
    """M(x,y) as an x-series with y-polynomial coefficients."""
    t = t_series(order // 2)
    coeffs = [UPoly(())] * (order + 1)
    for n in range(1, order // 2 + 1):
        c = t[n] - (R1 if n == 1 else R0)
        if c:
            coeffs[2 * n] = UPoly((R0,) * (3 * n) + (c / 2,))
    return Series(coeffs)


def mbar_series_xy(order: int) -> Series:
    """Mbar(x,y) as an x-series with y-polynomial coefficients."""
    mbar = mbar_z_series(order // 2)
    coeffs = [UPoly(())] * (order + 1)
    for n in range(1, order // 2 + 1):
        if mbar[n]:
            coeffs[2 * n] = UPoly((R0,) * (3 * n) + (mbar[n],))
    return Series(coeffs)
