"""Depth-first search for connected subgraphs with a prescribed odd-degree set.

This is the kernel under every trail and collapsibility question: find
``F ⊆ E`` such that

* the odd-degree vertices of ``(V, F)`` are exactly ``odd``,
* every vertex in ``cover`` has at least one edge of ``F``,
* ``F`` together with ``cover`` forms one connected piece,
* ``F`` contains every edge of ``include`` and none of ``exclude``.

Edges are decided in a vertex-elimination order so that each vertex's
parity is settled (and its last edge forced) as early as possible.  Every
exclusion re-checks that the surviving edges can still connect all vertices
that must end up in ``F``.
"""

from __future__ import annotations

import sys
from typing import Iterable, Sequence

from .graph_core import Edge, bits, component_of, norm_edge, popcount

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


def elimination_order(n: int, edges: Sequence[Edge]) -> list[Edge]:
    """Order edges vertex by vertex, lowest degree vertices first."""
    deg = [0] * n
    adj = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    present = set(edges)
    order = sorted(range(n), key=lambda v: (deg[v], v))
    placed = 0
    out = []
    for v in order:
        for w in order:
            if not placed >> w & 1 and w != v and adj[v] >> w & 1:
                e = norm_edge(v, w)
                if e in present:
                    out.append(e)
        placed |= 1 << v
    return out


def _connected_within(avail: list[int], need: int) -> bool:
    if need & (need - 1) == 0:
        return True
    comp = component_of(avail, (need & -need).bit_length() - 1)
    return need & ~comp == 0


def find_subgraph(
    n: int,
    edges: Iterable[Edge],
    odd: int = 0,
    cover: int | None = None,
    include: Iterable[Edge] = (),
    exclude: Iterable[Edge] = (),
) -> list[Edge] | None:
    """Return a subgraph edge list meeting the constraints above, or ``None``.

    ``odd`` and ``cover`` are vertex bitmasks; ``cover`` defaults to all
    vertices (spanning).  With an empty result the cover must have at most one
    vertex and ``odd`` must be empty.
    """
    if cover is None:
        cover = (1 << n) - 1
    edges = [norm_edge(*e) for e in edges]
    include_set = {norm_edge(*e) for e in include}
    exclude_set = {norm_edge(*e) for e in exclude}
    if include_set & exclude_set:
        return None
    if popcount(odd) & 1:
        return None
    if not odd and not include_set and cover & (cover - 1) == 0:
        return []
    order = elimination_order(n, [e for e in edges if e not in exclude_set])
    if not include_set <= set(order):
        return None

    m = len(order)
    eu = [e[0] for e in order]
    ev = [e[1] for e in order]
    last = [-1] * n
    avail = [0] * n
    for i, (u, v) in enumerate(order):
        last[u] = last[v] = i
        avail[u] |= 1 << v
        avail[v] |= 1 << u
    for v in range(n):
        if last[v] < 0 and odd >> v & 1:
            return None
    if not _connected_within(avail, cover | odd):
        return None
    mode = [0] * m  # 0 free, 1 must include
    for i, e in enumerate(order):
        if e in include_set:
            mode[i] = 1

    chosen: list[int] = []

    def dfs(i: int, parity: int, touched: int) -> bool:
        if i == m:
            return parity == odd and cover & ~touched == 0 and (
                _connected_within(avail, cover | touched))
        u, v = eu[i], ev[i]
        # value forced by parity when this is the last edge at u or v
        forced = -1
        if last[u] == i:
            forced = (parity ^ odd) >> u & 1
        if last[v] == i:
            fv = (parity ^ odd) >> v & 1
            if forced >= 0 and forced != fv:
                return False
            forced = fv
        if mode[i]:
            if forced == 0:
                return False
            options = (1,)
        elif forced >= 0:
            options = (forced,)
        else:
            options = (1, 0)
        for val in options:
            if val:
                new_touched = touched | (1 << u) | (1 << v)
                # a newly touched vertex must be reachable from the rest
                if new_touched != touched and not _connected_within(avail, cover | new_touched):
                    continue
                chosen.append(i)
                if dfs(i + 1, parity ^ (1 << u) ^ (1 << v), new_touched):
                    return True
                chosen.pop()
            else:
                if (last[u] == i and cover >> u & 1 and not touched >> u & 1) or (
                        last[v] == i and cover >> v & 1 and not touched >> v & 1):
                    continue
                avail[u] &= ~(1 << v)
                avail[v] &= ~(1 << u)
                if _connected_within(avail, cover | touched) and dfs(i + 1, parity, touched):
                    return True
                avail[u] |= 1 << v
                avail[v] |= 1 << u
        return False

    if dfs(0, 0, 0):
        return [order[i] for i in chosen]
    return None


def is_connected_edges(n: int, edges: Iterable[Edge], vertices: int) -> bool:
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return _connected_within(adj, vertices)


def odd_mask(edges: Iterable[Edge]) -> int:
    p = 0
    for u, v in edges:
        p ^= (1 << u) ^ (1 << v)
    return p


def touched_mask(edges: Iterable[Edge]) -> int:
    t = 0
    for u, v in edges:
        t |= (1 << u) | (1 << v)
    return t


__all__ = ["find_subgraph", "elimination_order", "odd_mask", "touched_mask", "is_connected_edges", "bits"]
