"""Line graphs, exact Hamilton-cycle search and k-hamiltonicity of line graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph_core import Edge, Graph, GraphError, bits, component_of, is_connected, popcount
from .trails import has_dominating_closed_trail


@dataclass(frozen=True)
class LineGraphMap:
    lg: Graph
    edge_of: tuple[Edge, ...]  # line-graph vertex i is edge edge_of[i] of the base graph


def line_graph(g: Graph) -> LineGraphMap:
    edges = g.edges()
    if not edges:
        raise GraphError("line graph of an edgeless graph is empty")
    at: list[int] = [0] * g.n  # vertex -> mask of incident line-graph vertices
    for i, (u, v) in enumerate(edges):
        at[u] |= 1 << i
        at[v] |= 1 << i
    rows = tuple((at[u] | at[v]) & ~(1 << i) for i, (u, v) in enumerate(edges))
    return LineGraphMap(Graph(len(edges), rows), tuple(edges))


def is_hamiltonian(g: Graph) -> tuple[int, ...] | None:
    """Hamilton cycle as a vertex sequence (first vertex repeated at the end), or ``None``.

    Backtracking from vertex 0, trying the neighbour with the fewest onward
    options first (lowest id on ties).  Prunes an
    unvisited vertex with fewer than two usable neighbours, forces the next
    step when a neighbour of the path end has only two usable neighbours, and
    requires the unvisited vertices to stay reachable from the path end with
    a way back to the start.
    """
    n = g.n
    if n < 3 or not is_connected(g):
        return None
    adj = g.adj
    if any(popcount(r) < 2 for r in adj):
        return None
    start = 0
    path = [start]

    def extend(end: int, unvisited: int) -> bool:
        if not unvisited:
            return bool(adj[end] >> start & 1)
        if not adj[start] & unvisited:
            return False
        usable = unvisited | (1 << end) | (1 << start)
        forced = -1
        for w in bits(unvisited):
            deg = popcount(adj[w] & usable)
            if deg < 2:
                return False
            if deg == 2 and end != start and adj[end] >> w & 1:
                if forced >= 0:
                    return False
                forced = w
        if component_of(adj, end, unvisited | (1 << end)) & unvisited != unvisited:
            return False
        if forced >= 0:
            order = [forced]
        else:
            # fewest onward options first, lowest id on ties
            order = sorted(bits(adj[end] & unvisited), key=lambda w: (popcount(adj[w] & unvisited), w))
        for w in order:
            path.append(w)
            if extend(w, unvisited & ~(1 << w)):
                return True
            path.pop()
        return False

    if extend(start, ((1 << n) - 1) & ~1):
        return tuple(path) + (start,)
    return None


def _strip_isolated(g: Graph) -> Graph:
    keep = [v for v in range(g.n) if g.adj[v]]
    return g.induced(keep)


@dataclass
class KHamiltonianResult:
    ok: bool
    k: int
    failing: list[Edge] | None = None  # deleted base edges = deleted line-graph vertices
    failing_vertices: list[int] | None = None
    checked: int = 0
    disagreements: list[dict] = field(default_factory=list)  # under the 4-vertex hypothesis
    outside_hypothesis: list[dict] = field(default_factory=list)  # logged only
    self_test_failures: int = 0

    def __bool__(self) -> bool:
        return self.ok


def k_hamiltonian_check(g: Graph, k: int, self_test: bool | None = None) -> KHamiltonianResult:
    """Is ``L(g)`` k-hamiltonian?

    Route (a) deletes every line-graph vertex set ``S`` with ``|S| <= k`` and
    runs the Hamilton search on ``L(g) - S``.  Route (b) deletes the matching
    edge set ``X`` from ``g`` and asks for a dominating closed trail in
    ``g - X``; the two are compared whenever ``g - X`` (isolated vertices
    dropped) has at least four vertices.  The answer is route (a).
    """
    if k < 0:
        raise GraphError("k must be non-negative")
    lmap = line_graph(g)
    lg, edges = lmap.lg, lmap.edge_of
    if self_test is None:
        self_test = g.n <= 7
    result = KHamiltonianResult(ok=True, k=k)
    for size in range(k + 1):
        for s in combinations(range(lg.n), size):
            result.checked += 1
            xs = [edges[i] for i in s]
            keep = [i for i in range(lg.n) if i not in s]
            reduced_lg = lg.induced(keep)
            if self_test:
                h = g.remove_edges(xs)
                if h.m and line_graph(h).lg != reduced_lg:
                    result.self_test_failures += 1
            route_a = is_hamiltonian(reduced_lg) is not None
            rest = _strip_isolated(g.remove_edges(xs))
            if rest.n == 0:
                route_b = False
            else:
                route_b = is_connected(rest) and has_dominating_closed_trail(rest) is not None
            if route_a != route_b:
                entry = {"deleted": [list(e) for e in xs], "line_graph_hamiltonian": route_a,
                         "dominating_closed_trail": route_b, "vertices": rest.n, "edges": rest.m}
                if rest.n >= 4:
                    result.disagreements.append(entry)
                else:
                    result.outside_hypothesis.append(entry)
            if not route_a and result.ok:
                result.ok = False
                result.failing = xs
                result.failing_vertices = list(s)
    return result
