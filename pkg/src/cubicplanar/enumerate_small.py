"""Exhaustive ground truth: all labeled cubic planar (multi)graphs for small n.

Generation backtracks over vertices in label order; when vertex v is the
smallest unsaturated one, the full multiset of its remaining incidences
(an optional loop plus edges to larger unsaturated vertices) is chosen at
once in canonical order, so every edge multiset is produced exactly once
and the stream order is deterministic.

Planarity is decided on the simplified skeleton (loops dropped,
multiplicities collapsed - both are planarity-invariant).  Every distinct
skeleton is checked by two independent algorithms which must agree: the
left-right test from networkx and a direct Kuratowski search.  In a graph
of maximum degree 3 a K5 subdivision is impossible (it needs five branch
vertices of degree >= 4), so the Kuratowski search only has to look for a
K33 subdivision.  Decisions are cached per skeleton.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

MAX_N_SIMPLE = 10
MAX_N_MULTI = 8


@dataclass(frozen=True)
class LabeledGraph:
    """n vertices 0..n-1; pair edges with multiplicity; loops (1 per vertex)."""

    n: int
    edges: tuple[tuple[int, int, int], ...]  # (i, j, multiplicity), i < j
    loops: tuple[int, ...]  # vertices carrying a loop (contributes 2 to degree)

    def skeleton(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i, j, _ in self.edges)

    def is_simple(self) -> bool:
        return not self.loops and all(m == 1 for _, _, m in self.edges)

    def to_text(self) -> str:
        parts = [f"{i}-{j}" for i, j, m in self.edges for _ in range(m)]
        parts += [f"{v}-{v}" for v in self.loops]
        return " ".join(parts)


class OracleError(ValueError):
    pass


# -- planarity --------------------------------------------------------------


def _planar_lr(skeleton, n: int) -> bool:
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(skeleton)
    ok, _ = nx.check_planarity(g, counterexample=False)
    return ok


def _find_disjoint_paths(adj, pairs, banned, used, used_edges) -> bool:
    """Try to route internally-disjoint paths for all pairs (backtracking)."""
    if not pairs:
        return True
    a, b = pairs[0]

    def paths(v, interior, edges_used):
        if v == b:
            yield interior, edges_used
            return
        for w in adj[v]:
            e = (min(v, w), max(v, w))
            if e in used_edges or e in edges_used:
                continue
            if w != b and (w in banned or w in used or w in interior):
                continue
            yield from paths(w, interior | ({w} if w != b else set()), edges_used | {e})

    for interior, path_edges in paths(a, frozenset(), frozenset()):
        if _find_disjoint_paths(adj, pairs[1:], banned, used | interior, used_edges | path_edges):
            return True
    return False


def _has_k33_subdivision(skeleton, n: int) -> bool:
    """Direct Kuratowski search, valid for graphs of maximum degree 3."""
    adj = {v: [] for v in range(n)}
    for i, j in skeleton:
        adj[i].append(j)
        adj[j].append(i)
    deg3 = [v for v in range(n) if len(adj[v]) >= 3]
    if len(deg3) < 6:
        return False
    for branch in combinations(deg3, 6):
        rest = set(branch)
        for left in combinations(branch[1:], 2):
            side_a = (branch[0],) + left
            side_b = tuple(v for v in branch if v not in side_a)
            pairs = [(a, b) for a in side_a for b in side_b]
            if _find_disjoint_paths(adj, pairs, rest, frozenset(), frozenset()):
                return True
    return False


_planarity_cache: dict[tuple, bool] = {}


def is_planar(g: LabeledGraph, crosscheck: bool | None = None) -> bool:
    """Planarity of the multigraph (decided on its simple skeleton)."""
    skel = g.skeleton()
    key = (g.n, skel)
    hit = _planarity_cache.get(key)
    if hit is not None:
        return hit
    ok = _planar_lr(skel, g.n)
    if crosscheck is None:
        crosscheck = g.n <= 8
    if crosscheck:
        kur = _has_k33_subdivision(skel, g.n)
        if ok == kur:
            raise OracleError(f"planarity algorithms disagree on {skel}")
    _planarity_cache[key] = ok
    return ok


# -- per-graph classification -------------------------------------------------


def count_triangles(g: LabeledGraph) -> int:
    """3-cycles on distinct vertices along simple adjacency."""
    adj = [set() for _ in range(g.n)]
    for i, j, _ in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    total = 0
    for i in range(g.n):
        for j in adj[i]:
            if j <= i:
                continue
            total += sum(1 for k in adj[i] & adj[j] if k > j)
    return total


def _connected_after_removal(adj, n, removed: frozenset) -> bool:
    left = [v for v in range(n) if v not in removed]
    if not left:
        return True
    seen = {left[0]}
    stack = [left[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(left)


def connectivity_level(g: LabeledGraph) -> int:
    """Largest k in 0..3 with the graph k-connected (loops ignored)."""
    adj = [set() for _ in range(g.n)]
    for i, j, _ in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    if not _connected_after_removal(adj, g.n, frozenset()):
        return 0
    level = 1
    for size in (1, 2):
        if g.n <= size + 1:
            return level
        for removed in combinations(range(g.n), size):
            if not _connected_after_removal(adj, g.n, frozenset(removed)):
                return level
        level = size + 1
    return 3


# -- generation ----------------------------------------------------------------


def _generate(n: int, allow_loops: bool, allow_multi: bool):
    """Yield every labeled multigraph with all degrees 3, each exactly once."""
    residual = [3] * n
    edges: list[tuple[int, int, int]] = []
    loops: list[int] = []

    def rest_capacity(v: int) -> int:
        cap = 0
        for w in range(v + 1, n):
            if residual[w] > 0:
                cap += min(residual[w], 3 if allow_multi else 1)
        return cap

    def saturate(v: int):
        if v == n:
            yield LabeledGraph(n, tuple(edges), tuple(loops))
            return
        if residual[v] == 0:
            yield from saturate(v + 1)
            return

        def choose(w: int, need: int):
            # pick multiplicities for pairs (v, w), (v, w+1), ... totalling need
            if need == 0:
                yield from saturate(v + 1)
                return
            if w == n:
                return
            room = min(need, residual[w], 3 if allow_multi else 1)
            for m in range(room, -1, -1):
                if m:
                    residual[v] -= m
                    residual[w] -= m
                    edges.append((v, w, m))
                if need - m <= rest_capacity(w):
                    yield from choose(w + 1, need - m)
                if m:
                    edges.pop()
                    residual[v] += m
                    residual[w] += m

        if allow_loops and residual[v] >= 2:
            residual[v] -= 2
            loops.append(v)
            yield from choose(v + 1, residual[v])
            loops.pop()
            residual[v] += 2
        yield from choose(v + 1, residual[v])

    yield from saturate(0)


@dataclass
class EnumerationSummary:
    n: int
    flags: dict
    total: int = 0
    by_triangles: dict[int, int] = field(default_factory=dict)
    by_components: dict[int, int] = field(default_factory=dict)
    connected_by_triangles: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "flags": self.flags,
                "total": self.total,
                "by_triangles": self.by_triangles,
                "by_components": self.by_components,
                "connected_by_triangles": self.connected_by_triangles,
            },
            sort_keys=True,
        )


def _component_count(g: LabeledGraph) -> int:
    adj = [set() for _ in range(g.n)]
    for i, j, _ in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    seen = [False] * g.n
    comps = 0
    for v in range(g.n):
        if seen[v]:
            continue
        comps += 1
        stack = [v]
        seen[v] = True
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return comps


def enumerate_graphs(
    n: int,
    allow_loops: bool = False,
    allow_multiedges: bool = False,
    require_planar: bool = True,
    require_triangle_free: bool = False,
    connectivity_min: int = 0,
    yield_graphs: bool = False,
):
    """Stream (graph, triangles, components, connectivity) plus a summary.

    Returns (generator, summary); the summary is filled once the generator
    is exhausted.  Safety bounds: n <= 10 simple, n <= 8 with loops or
    multiple edges.
    """
    if n % 2:
        raise OracleError("cubic graphs have an even number of vertices")
    bound = MAX_N_MULTI if (allow_loops or allow_multiedges) else MAX_N_SIMPLE
    if n > bound:
        raise OracleError(f"n={n} beyond the safety bound {bound} for these flags")
    flags = {
        "allow_loops": allow_loops,
        "allow_multiedges": allow_multiedges,
        "require_planar": require_planar,
        "require_triangle_free": require_triangle_free,
        "connectivity_min": connectivity_min,
    }
    summary = EnumerationSummary(n=n, flags=flags)

    def stream():
        for g in _generate(n, allow_loops, allow_multiedges):
            if require_planar and not is_planar(g):
                continue
            tri = count_triangles(g)
            if require_triangle_free and tri:
                continue
            comps = _component_count(g)
            if connectivity_min > 0 and comps > 1:
                continue
            level = None
            if connectivity_min > 1:
                level = connectivity_level(g)
                if level < connectivity_min:
                    continue
            summary.total += 1
            summary.by_triangles[tri] = summary.by_triangles.get(tri, 0) + 1
            summary.by_components[comps] = summary.by_components.get(comps, 0) + 1
            if comps == 1:
                summary.connected_by_triangles[tri] = summary.connected_by_triangles.get(tri, 0) + 1
            if yield_graphs:
                yield g

    return stream(), summary


def count_graphs(n: int, **flags) -> EnumerationSummary:
    """Run the enumeration to completion and return the summary."""
    gen, summary = enumerate_graphs(n, **flags)
    for _ in gen:
        pass
    return summary
