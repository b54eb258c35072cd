"""Spanning, dominating and prescribed-edge closed trails, with checkable certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph_core import (
    Edge,
    Graph,
    GraphError,
    Multigraph,
    bits,
    contract,
    is_connected,
    norm_edge,
    popcount,
)
from .search import find_subgraph


class InconsistentRoutesError(RuntimeError):
    """Two independent computations of the same predicate disagreed."""


@dataclass(frozen=True)
class TrailCertificate:
    """A trail as a walk: ``walk[0]`` is the start vertex, each step adds one edge.

    A closed trail with no edges is a single vertex ``walk == (v,)``.
    """

    kind: str  # "closed" or "open"
    walk: tuple[int, ...]

    @property
    def start(self) -> int:
        return self.walk[0]

    @property
    def end(self) -> int:
        return self.walk[-1]

    @property
    def edges(self) -> list[Edge]:
        return [norm_edge(a, b) for a, b in zip(self.walk, self.walk[1:])]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.walk)

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "endpoints": [self.start, self.end],
            "edges": [f"{a}-{b}" for a, b in zip(self.walk, self.walk[1:])],
        }

    @classmethod
    def from_record(cls, rec: dict) -> "TrailCertificate":
        walk = [rec["endpoints"][0]]
        for step in rec["edges"]:
            a, b = (int(x) for x in step.split("-"))
            walk.append(b)
        return cls(rec["kind"], tuple(walk))


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(
    g: Graph,
    cert: TrailCertificate,
    spanning: bool = False,
    dominating: bool = False,
    contains: Iterable[Sequence[int]] = (),
) -> CertificateCheck:
    """Replay ``cert`` against ``g`` and check the requested properties."""
    walk = cert.walk
    if not walk:
        return CertificateCheck(False, "empty-walk")
    if any(not 0 <= v < g.n for v in walk):
        return CertificateCheck(False, "vertex-out-of-range")
    seen: set[Edge] = set()
    for a, b in zip(walk, walk[1:]):
        if not g.has_edge(a, b):
            return CertificateCheck(False, "not-an-edge")
        e = norm_edge(a, b)
        if e in seen:
            return CertificateCheck(False, "duplicate-edge")
        seen.add(e)
    if cert.kind == "closed":
        if walk[0] != walk[-1]:
            return CertificateCheck(False, "not-closed")
    elif cert.kind != "open":
        return CertificateCheck(False, "unknown-kind")
    on_trail = set(walk)
    if spanning and len(on_trail) != g.n:
        return CertificateCheck(False, "not-spanning")
    if dominating:
        for u, v in g.edges():
            if u not in on_trail and v not in on_trail:
                return CertificateCheck(False, "not-dominating")
    for e in contains:
        if norm_edge(*e) not in seen:
            return CertificateCheck(False, "missing-required-edge")
    return CertificateCheck(True)


def euler_walk(n: int, edges: Iterable[Edge], start: int) -> tuple[int, ...]:
    """Hierholzer splice traversal; always leaves by the smallest unused neighbour."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for row in adj:
        row.sort(reverse=True)  # pop() yields the smallest
    used: set[Edge] = set()
    stack = [start]
    walk: list[int] = []
    while stack:
        v = stack[-1]
        row = adj[v]
        while row and norm_edge(v, row[-1]) in used:
            row.pop()
        if row:
            w = row.pop()
            used.add(norm_edge(v, w))
            stack.append(w)
        else:
            walk.append(stack.pop())
    walk.reverse()
    return tuple(walk)


def _closed_from(n: int, edges: list[Edge], default: int) -> TrailCertificate:
    if not edges:
        return TrailCertificate("closed", (default,))
    start = min(v for e in edges for v in e)
    return TrailCertificate("closed", euler_walk(n, edges, start))


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("graph is not connected")


def has_spanning_closed_trail(g: Graph) -> TrailCertificate | None:
    """Spanning closed trail, i.e. a connected spanning even subgraph, or ``None``."""
    _require_connected(g)
    found = find_subgraph(g.n, g.edges())
    if found is None:
        return None
    return _closed_from(g.n, found, 0)


def has_spanning_trail(g: Graph, u: int, v: int) -> TrailCertificate | None:
    _require_connected(g)
    if u == v:
        found = find_subgraph(g.n, g.edges())
        if found is None:
            return None
        if not found:
            return TrailCertificate("closed", (u,))
        walk = euler_walk(g.n, found, u)
        return TrailCertificate("closed", walk)
    found = find_subgraph(g.n, g.edges(), odd=(1 << u) | (1 << v))
    if found is None:
        return None
    return TrailCertificate("open", euler_walk(g.n, found, u))


def maximal_independent_sets(g: Graph) -> list[int]:
    """All maximal independent sets as bitmasks, in a deterministic order."""
    out: list[int] = []
    adj = g.adj

    def expand(chosen: int, cand: int, excl: int) -> None:
        if not cand and not excl:
            out.append(chosen)
            return
        for v in list(bits(cand)):
            closed = adj[v] | (1 << v)
            expand(chosen | (1 << v), cand & ~closed, excl & ~closed)
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, (1 << g.n) - 1, 0)
    return out


def has_dominating_closed_trail(g: Graph) -> TrailCertificate | None:
    """Closed trail touching every edge; the one-vertex trail counts."""
    _require_connected(g)
    edges = g.edges()
    for v in range(g.n):
        if all(v in e for e in edges):
            return TrailCertificate("closed", (v,))
    full = (1 << g.n) - 1
    covers = sorted({full & ~s for s in maximal_independent_sets(g)}, key=lambda c: (popcount(c), c))
    for cover in covers:
        found = find_subgraph(g.n, edges, cover=cover)
        if found:
            return _closed_from(g.n, found, 0)
    return None


@dataclass(frozen=True)
class SubdividedGraph:
    """``G_X``: every edge of X replaced by a path through a new vertex ``w(e)``."""

    graph: Graph
    markers: dict = field(default_factory=dict)  # edge of X -> new vertex
    base_n: int = 0


def _edge_subset(g: Graph, x: Iterable[Sequence[int]]) -> list[Edge]:
    out = sorted({norm_edge(*e) for e in x})
    for u, v in out:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge of the graph")
    return out


def build_GX(g: Graph, x: Iterable[Sequence[int]]) -> SubdividedGraph:
    xs = _edge_subset(g, x)
    n = g.n + len(xs)
    markers = {e: g.n + i for i, e in enumerate(xs)}
    edges = [e for e in g.edges() if e not in markers]
    for (u, v), w in markers.items():
        edges += [(u, w), (v, w)]
    return SubdividedGraph(Graph.from_edges(n, edges), markers, g.n)


def build_GX_star(gx: SubdividedGraph | Graph) -> tuple[Multigraph, dict[int, int]]:
    """Contract every edge whose two ends both have degree 2 (``G_X*``)."""
    h = gx.graph if isinstance(gx, SubdividedGraph) else gx
    deg = h.degrees()
    parent = list(range(h.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in h.edges():
        if deg[u] == 2 and deg[v] == 2:
            parent[find(u)] = find(v)
    groups: dict[int, list[int]] = {}
    for v in range(h.n):
        groups.setdefault(find(v), []).append(v)
    parts = sorted(groups.values())
    return contract(h, parts)


def _map_back(cert: TrailCertificate, gx: SubdividedGraph) -> TrailCertificate:
    walk = [v for v in cert.walk if v < gx.base_n]
    if len(walk) > 1 or cert.walk[0] < gx.base_n:
        return TrailCertificate(cert.kind, tuple(walk))
    raise GraphError("trail does not meet the original graph")


def trail_through_X(g: Graph, x: Iterable[Sequence[int]]) -> TrailCertificate | None:
    """Spanning closed trail of ``g`` using every edge of ``x``.

    Decided twice: as a spanning closed trail of ``G_X`` (markers mapped back
    to their edges) and by direct search with ``x`` forced in.  The two must
    agree.
    """
    xs = _edge_subset(g, x)
    _require_connected(g)
    gx = build_GX(g, xs)
    via_gx = has_spanning_closed_trail(gx.graph)
    direct = find_subgraph(g.n, g.edges(), include=xs)
    if (via_gx is None) != (direct is None):
        raise InconsistentRoutesError(f"G_X route and direct route disagree on {g!r}, X={xs}")
    if via_gx is None:
        return None
    if via_gx.walk[0] >= gx.base_n:
        # a trail starting at a marker: rotate so it starts at an original vertex
        via_gx = TrailCertificate("closed", via_gx.walk[1:] + (via_gx.walk[1],))
    return _map_back(via_gx, gx)
