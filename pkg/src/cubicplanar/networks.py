"""Network systems for cubic planar families: simple, 2-connected, multigraph.

A network is a connected cubic planar multigraph with an ordered pair of
adjacent poles whose root edge, when removed, leaves a simple graph (the
multigraph family drops that last requirement).  Removing the root edge
classifies networks into loop/isthmus/series/parallel/h types, giving a
positive system of equations whose unique non-negative power-series
solution is computed here by fixpoint sweeps.

The systems are stored in rewritten form, substituting D-L = S+P+H and
D-S = L+P+H so every right-hand side has non-negative coefficients; the
raw equations and the closed-form eliminations (square-root form of L,
single equation for D) are kept as post-hoc identity checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import Series, SeriesError, solve_fixpoint
from .triangulations import h_substitution


@dataclass(frozen=True)
class NetworkBundle:
    """Solved network series of one family, all exact to x^order."""

    family: str  # "simple" | "biconnected" | "multigraph"
    order: int
    D: Series
    L: Series
    I: Series
    S: Series
    P: Series
    H: Series
    crooted: Series | None  # C-bullet (simple), B-bullet (biconnected)

    def to_json(self) -> dict:
        out = {"family": self.family, "order": self.order}
        for name in ("D", "L", "I", "S", "P", "H"):
            out[name] = getattr(self, name).to_json()
        if self.crooted is not None:
            out["crooted"] = self.crooted.to_json()
        return out


def _check_bundle(bundle: NetworkBundle) -> None:
    for name in ("D", "L", "I", "S", "P", "H"):
        s = getattr(bundle, name)
        if not s.is_even():
            raise SeriesError(f"{bundle.family} network series {name} is not even")
        if any(c < 0 for c in s.coeffs):
            raise SeriesError(f"{bundle.family} network series {name} has a negative coefficient")


def solve_simple(order: int) -> NetworkBundle:
    """Networks of simple connected cubic planar graphs (Bodirsky et al. system)."""
    n = order + 2  # margin so that I = L^2/x^2 is exact to x^order
    x2 = Series.x_power(2, n)

    def rule_L(s):
        return (s["I"] + s["S"] + s["P"] + s["H"]).shift(2) / 2

    def rule_I(s):
        return (s["L"] * s["L"]).shift(-2)

    def rule_S(s):
        return s["D"] * (s["L"] + s["P"] + s["H"])

    def rule_P(s):
        return (s["D"] + s["D"] * s["D"] / 2).shift(2)

    def rule_H(s):
        return h_substitution(s["D"], n)

    def rule_D(s):
        return s["L"] + s["S"] + s["P"] + s["H"]

    sol = solve_fixpoint(
        [("L", rule_L), ("I", rule_I), ("S", rule_S), ("P", rule_P), ("H", rule_H), ("D", rule_D)],
        n,
    )
    d, l, i = sol["D"], sol["L"], sol["I"]
    # 3 C-bullet = D + I - L - x^2 D - L^2
    crooted = (d + i - l - d.shift(2) - l * l) / 3
    b = NetworkBundle(
        family="simple",
        order=order,
        D=d.truncate(order),
        L=l.truncate(order),
        I=i.truncate(order),
        S=sol["S"].truncate(order),
        P=sol["P"].truncate(order),
        H=sol["H"].truncate(order),
        crooted=crooted.truncate(order),
    )
    _check_bundle(b)
    return b


def solve_biconnected(order: int) -> NetworkBundle:
    """Networks restricted to 2-connected graphs: no loop or isthmus classes."""
    n = order + 2
    zero = Series.zero(n)

    def rule_S(s):
        return s["D"] * (s["P"] + s["H"])

    def rule_P(s):
        return (s["D"] + s["D"] * s["D"] / 2).shift(2)

    def rule_H(s):
        return h_substitution(s["D"], n)

    def rule_D(s):
        return s["S"] + s["P"] + s["H"]

    sol = solve_fixpoint([("S", rule_S), ("P", rule_P), ("H", rule_H), ("D", rule_D)], n)
    d = sol["D"]
    # directed-edge-rooted 2-connected graphs: D - x^2 D; vertex-rooted: /3
    crooted = (d - d.shift(2)) / 3
    b = NetworkBundle(
        family="biconnected",
        order=order,
        D=d.truncate(order),
        L=zero.truncate(order),
        I=zero.truncate(order),
        S=sol["S"].truncate(order),
        P=sol["P"].truncate(order),
        H=sol["H"].truncate(order),
        crooted=crooted.truncate(order),
    )
    _check_bundle(b)
    return b


def solve_multigraph(order: int) -> NetworkBundle:
    """Networks of cubic planar multigraphs: loops and multiple edges allowed.

    Extra terms against the simple system: x^2 in P (the 3-bond) and
    x^2(1+L) in L (the two-vertex double-loop multigraph rooted at a loop,
    with the other loop possibly replaced by a loop-network).
    """
    n = order + 2
    x2 = Series.x_power(2, n)

    def rule_L(s):
        return x2 + s["L"].shift(2) + (s["I"] + s["S"] + s["P"] + s["H"]).shift(2) / 2

    def rule_I(s):
        return (s["L"] * s["L"]).shift(-2)

    def rule_S(s):
        return s["D"] * (s["L"] + s["P"] + s["H"])

    def rule_P(s):
        return x2 + (s["D"] + s["D"] * s["D"] / 2).shift(2)

    def rule_H(s):
        return h_substitution(s["D"], n)

    def rule_D(s):
        return s["L"] + s["S"] + s["P"] + s["H"]

    sol = solve_fixpoint(
        [("L", rule_L), ("I", rule_I), ("S", rule_S), ("P", rule_P), ("H", rule_H), ("D", rule_D)],
        n,
    )
    b = NetworkBundle(
        family="multigraph",
        order=order,
        D=sol["D"].truncate(order),
        L=sol["L"].truncate(order),
        I=sol["I"].truncate(order),
        S=sol["S"].truncate(order),
        P=sol["P"].truncate(order),
        H=sol["H"].truncate(order),
        crooted=None,
    )
    _check_bundle(b)
    return b


def solve_family(family: str, order: int) -> NetworkBundle:
    if family == "simple":
        return solve_simple(order)
    if family == "biconnected":
        return solve_biconnected(order)
    if family == "multigraph":
        return solve_multigraph(order)
    raise ValueError(f"unknown network family {family!r}")


# -- post-hoc identity checks (closed forms used by the eliminations) -----------


def closed_form_L(bundle: NetworkBundle) -> Series:
    """Square-root solution for L used when eliminating down to one equation."""
    n = bundle.order
    d = bundle.D
    x2 = Series.x_power(2, n)
    x4 = Series.x_power(4, n)
    if bundle.family == "simple":
        q = x4 / 4 + 1 - (d - 1).shift(2)
        return 1 + x2 / 2 - q.sqrt1()
    if bundle.family == "multigraph":
        q = x4 / 4 + 1 - (d + 3).shift(2)
        return 1 - x2 / 2 - q.sqrt1()
    raise ValueError("closed-form L only exists for the simple and multigraph families")


def single_equation_residual(bundle: NetworkBundle) -> Series:
    """Residual of the one-equation form (1+D) sqrt(...) - T(x^2(1+D)^3)/2 - 1."""
    from .triangulations import t_series

    n = bundle.order
    d = bundle.D
    x4 = Series.x_power(4, n)
    if bundle.family == "simple":
        q = x4 / 4 + 1 - (d - 1).shift(2)
    elif bundle.family == "multigraph":
        q = x4 / 4 + 1 - (d + 3).shift(2)
    else:
        raise ValueError("single-equation form applies to simple and multigraph families")
    w = (d + 1).pow(3).shift(2).truncate(n)
    t = t_series(n // 2)
    return (d + 1) * q.sqrt1() - t.compose(w) / 2 - 1
