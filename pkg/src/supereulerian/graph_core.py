"""Graph values, the graph6 codec, canonical labeling and basic invariants.

Graphs are immutable.  Adjacency rows are stored as integer bitmasks, so
``adj[v] >> w & 1`` tests the edge ``vw``.  Vertex ids are ``0..n-1`` and an
edge is always written ``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_GRAPH6_N = 62
MAX_CANON_N = 10

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph data or an operation outside its supported domain."""


class Graph6Error(GraphError):
    """Malformed graph6 input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError("adjacency rows do not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor out of range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def remove_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            if not rows[u] >> v & 1:
                raise GraphError(f"({u}, {v}) is not an edge")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def remove_vertices(self, vs: Iterable[int]) -> "Graph":
        gone = set(vs)
        keep = [v for v in range(self.n) if v not in gone]
        return self.induced(keep)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled in the order given."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in bits(self.adj[v]):
                if w in index:
                    row |= 1 << index[w]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for w in bits(self.adj[v]):
                row |= 1 << perm[w]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True, eq=False)
class Multigraph:
    """Loopless multigraph; ``mult`` maps ``(u, v)`` with ``u < v`` to a positive count."""

    n: int
    mult: dict

    def __post_init__(self) -> None:
        for (u, v), k in self.mult.items():
            if not (0 <= u < v < self.n):
                raise GraphError(f"bad multigraph edge key ({u}, {v})")
            if k < 1:
                raise GraphError(f"non-positive multiplicity on ({u}, {v})")

    @classmethod
    def from_graph(cls, g: Graph) -> "Multigraph":
        return cls(g.n, {e: 1 for e in g.edges()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self.mult == other.mult

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.mult.items())))

    def degree(self, v: int) -> int:
        return sum(k for e, k in self.mult.items() if v in e)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for (u, v), k in self.mult.items():
            deg[u] += k
            deg[v] += k
        return deg

    def is_simple(self) -> bool:
        return all(k == 1 for k in self.mult.values())

    def underlying(self) -> Graph:
        return Graph.from_edges(self.n, self.mult)

    def to_graph(self) -> Graph:
        if not self.is_simple():
            raise GraphError("multigraph has parallel edges")
        return self.underlying()


def _as_rows(g: Graph | Multigraph) -> tuple[int, ...]:
    if isinstance(g, Graph):
        return g.adj
    return g.underlying().adj


# -- graph6 -----------------------------------------------------------------

def graph6_encode(g: Graph) -> str:
    n = g.n
    if n > MAX_GRAPH6_N:
        raise GraphError(f"graph6 codec supports n <= {MAX_GRAPH6_N}, got {n}")
    out = [chr(63 + n)]
    acc = nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph6_decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside 63..126", i)
    n = ord(s[0]) - 63
    if n > MAX_GRAPH6_N:
        raise Graph6Error("multi-byte size header not supported", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 < nbytes:
        raise Graph6Error(f"truncated bit field: expected {nbytes} data bytes", len(s))
    if len(s) - 1 > nbytes:
        raise Graph6Error("trailing bytes after bit field", 1 + nbytes)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbytes:
        pad = 6 * nbytes - nbits
        if (ord(s[nbytes]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("nonzero padding bits", nbytes)
    return Graph(n, tuple(rows))


# -- canonical labeling -----------------------------------------------------

def _refine(adj: Sequence[int], colors: list[int]) -> list[int]:
    """Colour refinement with label-independent colour names (ranks of signatures)."""
    n = len(adj)
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            sigs.append((colors[v], tuple(sorted(colors[w] for w in bits(adj[v])))))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return new
        colors, ncolors = new, len(rank)


def _twin_classes(adj: Sequence[int]) -> list[int]:
    """Representative id per vertex; vertices sharing one are twins (swapping them is an automorphism)."""
    n = len(adj)
    rep = list(range(n))
    for v in range(n):
        if rep[v] != v:
            continue
        for w in range(v + 1, n):
            if rep[w] == w and adj[v] & ~(1 << w) == adj[w] & ~(1 << v):
                rep[w] = v
    return rep


def _code_for(adj: Sequence[int], colors: list[int]) -> tuple[int, ...]:
    # colors is discrete: vertex v gets new label colors[v]
    n = len(adj)
    rows = [0] * n
    for v in range(n):
        row = 0
        for w in bits(adj[v]):
            row |= 1 << colors[w]
        rows[colors[v]] = row
    return tuple(rows)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Return ``perm`` such that ``g.relabel(perm)`` is the canonical representative.

    Search is individualisation/refinement over the (degree, neighbour-colour)
    partition; all leaves are compared, with siblings that are twins skipped.
    """
    adj = g.adj
    n = g.n
    if n == 0:
        return ()
    twins = _twin_classes(adj)
    best_code: tuple[int, ...] | None = None
    best_perm: list[int] | None = None

    def search(colors: list[int]) -> None:
        nonlocal best_code, best_perm
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        if len(counts) == n:
            code = _code_for(adj, colors)
            if best_code is None or code < best_code:
                best_code, best_perm = code, colors
            return
        # first smallest non-singleton cell
        target = min((k, c) for c, k in counts.items() if k > 1)[1]
        seen = set()
        for v in range(n):
            if colors[v] != target or twins[v] in seen:
                continue
            seen.add(twins[v])
            child = [2 * c + 1 for c in colors]
            child[v] -= 1
            search(_refine(adj, child))

    search(_refine(adj, [popcount(r) for r in adj]))
    return tuple(best_perm)


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-class code without the size cap (use for structured families)."""
    return graph6_encode(canonical_graph(g)).encode("ascii")


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (n <= 10)."""
    if g.n > MAX_CANON_N:
        raise GraphError(f"canonical_form supports n <= {MAX_CANON_N}, got {g.n}")
    return canonical_code(g)


# -- invariants ---------------------------------------------------------------

def edge_degree(g: Graph, u: int, v: int) -> int:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return popcount(g.adj[u]) + popcount(g.adj[v])


def edge_degrees(g: Graph) -> dict[Edge, int]:
    deg = g.degrees()
    return {(u, v): deg[u] + deg[v] for u, v in g.edges()}


def xi(g: Graph) -> int:
    """Minimum edge degree ``d(x) + d(y)`` over all edges ``xy``."""
    ed = edge_degrees(g)
    if not ed:
        raise GraphError("xi is undefined for an edgeless graph")
    return min(ed.values())


def odd_set(g: Graph | Multigraph) -> frozenset[int]:
    deg = g.degrees()
    return frozenset(v for v in range(g.n) if deg[v] & 1)


def component_of(adj: Sequence[int], start: int, allowed: int | None = None) -> int:
    """Bitmask of the component containing ``start`` within the ``allowed`` vertex mask."""
    if allowed is None:
        allowed = (1 << len(adj)) - 1
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph | Multigraph) -> list[frozenset[int]]:
    adj = _as_rows(g)
    left = (1 << g.n) - 1
    out = []
    while left:
        comp = component_of(adj, (left & -left).bit_length() - 1, left)
        out.append(frozenset(bits(comp)))
        left &= ~comp
    return out


def is_connected(g: Graph | Multigraph) -> bool:
    if g.n == 0:
        return True
    adj = _as_rows(g)
    return component_of(adj, 0) == (1 << g.n) - 1


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``inf`` for forests."""
    best = float("inf")
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for v in queue:
            for w in bits(g.adj[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def contract(g: Graph | Multigraph, parts: Sequence[Iterable[int]]) -> tuple[Multigraph, dict[int, int]]:
    """Identify each part to one vertex, dropping loops and keeping parallel edges.

    Returns the contracted multigraph and the map from original vertex to new
    vertex (part ``i`` becomes vertex ``i``).
    """
    where: dict[int, int] = {}
    for i, part in enumerate(parts):
        part = list(part)
        if not part:
            raise GraphError(f"part {i} is empty")
        for v in part:
            if not 0 <= v < g.n:
                raise GraphError(f"vertex {v} out of range")
            if v in where:
                raise GraphError(f"vertex {v} appears in two parts")
            where[v] = i
    if len(where) != g.n:
        raise GraphError("parts do not cover every vertex")
    source = g.mult if isinstance(g, Multigraph) else {e: 1 for e in g.edges()}
    mult: dict[Edge, int] = {}
    for (u, v), k in source.items():
        a, b = where[u], where[v]
        if a == b:
            continue
        e = norm_edge(a, b)
        mult[e] = mult.get(e, 0) + k
    return Multigraph(len(parts), mult), where
