"""Brute-force reference implementations used to check the search-based code.

Everything here walks all edge subsets or all vertex orders directly, with
no pruning, so it is only usable on small graphs.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from supereulerian.graph_core import Graph


def _find(parent, a):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def _is_connected_on(n, chosen, vertices):
    """Is the edge set ``chosen`` connected and touching exactly ``vertices``."""
    parent = list(range(n))
    touched = set()
    for u, v in chosen:
        touched.update((u, v))
        parent[_find(parent, u)] = _find(parent, v)
    if touched != set(vertices):
        return False
    return len({_find(parent, v) for v in vertices}) <= 1


def _subsets(edges):
    for mask in range(1 << len(edges)):
        yield mask, [e for i, e in enumerate(edges) if mask >> i & 1]


def _odd(chosen):
    odd = 0
    for u, v in chosen:
        odd ^= (1 << u) ^ (1 << v)
    return odd


@lru_cache(maxsize=None)
def spanning_odd_sets(g: Graph) -> frozenset[int]:
    """Odd-vertex bitmasks of every connected spanning edge subset."""
    if g.n == 1:
        return frozenset({0})
    edges = g.edges()
    out = set()
    for _, chosen in _subsets(edges):
        if _is_connected_on(g.n, chosen, range(g.n)):
            out.add(_odd(chosen))
    return frozenset(out)


def collapsible(g: Graph) -> bool:
    return len(spanning_odd_sets(g)) == 1 << (g.n - 1)


def supereulerian(g: Graph) -> bool:
    return 0 in spanning_odd_sets(g)


def spanning_trail(g: Graph, u: int, v: int) -> bool:
    if u == v:
        return supereulerian(g)
    return (1 << u) | (1 << v) in spanning_odd_sets(g)


def closed_trail_through(g: Graph, xs) -> bool:
    need = {tuple(sorted(e)) for e in xs}
    edges = g.edges()
    if g.n == 1:
        return not need
    for _, chosen in _subsets(edges):
        if need <= set(chosen) and _odd(chosen) == 0 and _is_connected_on(g.n, chosen, range(g.n)):
            return True
    return False


def dominating_closed_trail(g: Graph) -> bool:
    edges = g.edges()
    for v in range(g.n):
        if all(v in e for e in edges):
            return True
    for _, chosen in _subsets(edges):
        if not chosen or _odd(chosen):
            continue
        touched = {x for e in chosen for x in e}
        if not _is_connected_on(g.n, chosen, touched):
            continue
        if all(u in touched or v in touched for u, v in edges):
            return True
    return False


def hamiltonian(g: Graph) -> bool:
    n = g.n
    if n < 3:
        return False
    for rest in permutations(range(1, n)):
        order = (0,) + rest
        if all(g.has_edge(order[i], order[(i + 1) % n]) for i in range(n)):
            return True
    return False


def is_collapsible_subgraph_free(g: Graph) -> bool:
    """No vertex set of size >= 2 induces a collapsible graph (the reduced condition)."""
    from itertools import combinations

    for size in range(2, g.n + 1):
        for vs in combinations(range(g.n), size):
            h = g.induced(vs)
            if _is_connected_on(h.n, h.edges(), range(h.n)) and collapsible(h):
                return False
    return True
