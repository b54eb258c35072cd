"""Collapsibility oracle and reduction by contracting collapsible subgraphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .graph_core import (
    Edge,
    Graph,
    GraphError,
    bits,
    component_of,
    graph6_encode,
    is_connected,
    norm_edge,
    popcount,
)
from .search import find_subgraph, is_connected_edges


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def parity_connected_subgraph(g: Graph, target: Iterable[int] | int) -> list[Edge] | None:
    """Spanning connected subgraph whose odd-degree set is exactly ``target``."""
    odd = target if isinstance(target, int) else _mask(target)
    if popcount(odd) & 1:
        raise GraphError("target set must have even size")
    if not is_connected(g):
        raise GraphError("graph is not connected")
    return find_subgraph(g.n, g.edges(), odd=odd)


def _path_in(adj: Sequence[int], a: int, b: int) -> list[Edge] | None:
    parent = {a: -1}
    queue = [a]
    for v in queue:
        if v == b:
            break
        for w in bits(adj[v]):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    if b not in parent:
        return None
    path = []
    while parent[b] != -1:
        path.append(norm_edge(b, parent[b]))
        b = parent[b]
    return path


def _rows(n: int, edges: Iterable[Edge]) -> list[int]:
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def is_collapsible(g: Graph, witnesses: bool = False):
    """Decide collapsibility directly from the definition.

    Every even-size ``R`` is tried in Gray-code order; the witness for the
    previous ``R`` is patched along a path between the two flipped vertices
    before falling back to a fresh search.  With ``witnesses=True`` returns
    ``(flag, {R: edges})`` where ``R`` is a vertex bitmask.
    """
    if not is_connected(g):
        raise GraphError("graph is not connected")
    found: dict[int, list[Edge]] = {}
    result = _collapsible(g, found if witnesses else None)
    return (result, found) if witnesses else result


@lru_cache(maxsize=65536)
def _collapsible_cached(g: Graph) -> bool:
    return _collapsible(g, None)


def _collapsible(g: Graph, keep: dict | None) -> bool:
    n = g.n
    if n == 1:
        if keep is not None:
            keep[0] = []
        return True
    if any(popcount(r) < 2 for r in g.adj):
        return False
    edges = g.edges()
    all_edges = set(edges)
    current: set[Edge] | None = None
    prev_r = 0
    for i in range(1 << (n - 1)):
        gray = i ^ (i >> 1)
        r = gray | ((popcount(gray) & 1) << (n - 1))
        witness = None
        if current is not None:
            a, b = bits(r ^ prev_r)
            spare = _rows(n, all_edges - current)
            path = _path_in(spare, a, b)
            if path is not None:
                witness = current | set(path)
            else:
                path = _path_in(g.adj, a, b)
                candidate = current ^ set(path)
                if is_connected_edges(n, candidate, (1 << n) - 1):
                    witness = candidate
        if witness is None:
            found = find_subgraph(n, edges, odd=r)
            if found is None:
                return False
            witness = set(found)
        current = witness
        prev_r = r
        if keep is not None:
            keep[r] = sorted(witness)
    return True


def two_neighbor_extension(g: Graph, h: Iterable[int], y: int) -> bool:
    """True when ``y`` has at least two neighbours in the collapsible set ``h``."""
    hm = _mask(h)
    if hm >> y & 1:
        raise GraphError("y must lie outside h")
    return popcount(g.adj[y] & hm) >= 2


@dataclass(frozen=True)
class ReductionResult:
    reduced: Graph
    preimages: tuple[frozenset[int], ...]

    @property
    def nontrivial(self) -> tuple[bool, ...]:
        return tuple(len(p) > 1 for p in self.preimages)

    def is_identity(self) -> bool:
        return all(len(p) == 1 for p in self.preimages)

    def to_record(self) -> dict:
        return {
            "reduced": graph6_encode(self.reduced),
            "preimages": [sorted(p) for p in self.preimages],
            "nontrivial": list(self.nontrivial),
        }


def _quotient(g: Graph, parts: list[int]) -> tuple[list[int], dict[tuple[int, int], int]]:
    """Simple adjacency rows and edge multiplicities between parts (bitmasks)."""
    k = len(parts)
    rows = [0] * k
    mult: dict[tuple[int, int], int] = {}
    for i in range(k):
        for j in range(i + 1, k):
            c = 0
            for v in bits(parts[i]):
                c += popcount(g.adj[v] & parts[j])
            if c:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                mult[(i, j)] = c
    return rows, mult


def _bridgeless(rows: Sequence[int], vmask: int) -> bool:
    sub = [r & vmask if vmask >> v & 1 else 0 for v, r in enumerate(rows)]
    for v in bits(vmask):
        for w in bits(sub[v]):
            if w < v:
                continue
            sub[v] &= ~(1 << w)
            sub[w] &= ~(1 << v)
            ok = component_of(sub, v, vmask) >> w & 1
            sub[v] |= 1 << w
            sub[w] |= 1 << v
            if not ok:
                return False
    return True


def _collapsible_subset(rows: list[int]) -> int | None:
    """Largest vertex set inducing a collapsible subgraph with >= 4 vertices, if any.

    ``rows`` is a simple graph with no cycles of length < 4.
    """
    k = len(rows)
    for size in range(k, 3, -1):
        for combo in combinations(range(k), size):
            vm = _mask(combo)
            if any(popcount(rows[v] & vm) < 2 for v in combo):
                continue
            if component_of(rows, combo[0], vm) != vm or not _bridgeless(rows, vm):
                continue
            sub = Graph(k, tuple(rows[v] & vm if vm >> v & 1 else 0 for v in range(k)))
            if _collapsible_cached(sub.induced(combo)):
                return vm
    return None


def reduce(g: Graph, seed_order: Sequence[int] | None = None) -> ReductionResult:
    """Contract every maximal collapsible subgraph of ``g``.

    Seeds are parallel pairs (2-cycles) and triangles of the current
    contraction, each grown by two-neighbour extension; once none remain,
    every connected vertex subset of the contraction is tested with the
    exact oracle.  ``seed_order`` (a permutation of the vertices) changes the
    discovery order; the result does not depend on it.
    """
    if not is_connected(g):
        raise GraphError("graph is not connected")
    rank = list(range(g.n)) if seed_order is None else [0] * g.n
    if seed_order is not None:
        if sorted(seed_order) != list(range(g.n)):
            raise GraphError("seed_order must be a permutation of the vertices")
        for i, v in enumerate(seed_order):
            rank[v] = i
    parts = [1 << v for v in range(g.n)]

    def key(p: int) -> int:
        return min(rank[v] for v in bits(p))

    while True:
        parts.sort(key=key)
        rows, mult = _quotient(g, parts)
        k = len(parts)
        merge: list[int] | None = None
        for (i, j), c in mult.items():
            if c >= 2:
                merge = [i, j]
                break
        if merge is None:
            for i in range(k):
                for j in bits(rows[i] >> (i + 1) << (i + 1)):
                    common = rows[i] & rows[j]
                    if common:
                        merge = [i, j, (common & -common).bit_length() - 1]
                        break
                if merge:
                    break
        if merge is not None:
            # grow the seed by two-neighbour extension before contracting
            seed = _mask(merge)
            grown = True
            while grown:
                grown = False
                for y in range(k):
                    if seed >> y & 1:
                        continue
                    links = sum(mult.get(norm_edge(y, z), 0) for z in bits(seed))
                    if links >= 2:
                        seed |= 1 << y
                        grown = True
            merged = 0
            for i in bits(seed):
                merged |= parts[i]
            parts = [p for i, p in enumerate(parts) if not seed >> i & 1] + [merged]
            continue
        found = _collapsible_subset(rows)
        if found is None:
            break
        merged = 0
        for i in bits(found):
            merged |= parts[i]
        parts = [p for i, p in enumerate(parts) if not found >> i & 1] + [merged]

    parts.sort(key=lambda p: (p & -p))
    rows, _ = _quotient(g, parts)
    return ReductionResult(Graph(len(parts), tuple(rows)), tuple(frozenset(bits(p)) for p in parts))


def is_reduced(g: Graph) -> bool:
    return reduce(g).is_identity()


@dataclass(frozen=True)
class StarShape:
    """How a reduction looks when it is a star ``K_{1,t-1}``.

    For ``t == 2`` the "leaves" are the trivial ends of the ``K2``.
    """

    t: int
    leaves: tuple[int, ...]  # original vertices behind the star's leaves
    leaves_trivial: bool
    same_neighbor: bool  # every leaf has degree 1 in g, all at one common vertex
    removal_collapsible: bool  # t == 2 only: g - v collapsible for some trivial end v

    def structural(self) -> bool:
        return self.leaves_trivial

    def as_printed(self, n: int) -> bool:
        if self.t == 2:
            return self.removal_collapsible and self.t <= n / 2
        return self.t >= 3 and self.leaves_trivial and self.same_neighbor and self.t <= n / 2


def star_shape(g: Graph, red: ReductionResult) -> StarShape | None:
    """Describe ``red`` as a star reduction of ``g``; ``None`` if it is not a star."""
    h = red.reduced
    t = h.n
    if t < 2:
        return None
    deg = h.degrees()
    if t == 2:
        if h.m != 1:
            return None
        ends = [i for i in range(2) if len(red.preimages[i]) == 1]
    else:
        if sorted(deg) != [1] * (t - 1) + [t - 1]:
            return None
        ends = [i for i in range(t) if deg[i] == 1]
        if any(len(red.preimages[i]) != 1 for i in ends):
            return StarShape(t, (), False, False, False)
    if not ends:
        return StarShape(t, (), False, False, False)
    leaves = tuple(next(iter(red.preimages[i])) for i in ends)
    same = all(g.degree(v) == 1 for v in leaves) and len({g.adj[v] for v in leaves}) == 1
    removal = False
    if t == 2:
        for v in leaves:
            rest = g.remove_vertices([v])
            if rest.n and is_connected(rest) and _collapsible_cached(rest):
                removal = True
                break
    return StarShape(t, leaves, True, same, removal)
