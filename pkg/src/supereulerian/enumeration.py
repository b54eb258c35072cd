"""Isomorph-free generation of small connected graphs."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .graph_core import Graph, GraphError, canonical_form, graph6_decode, is_connected, xi

MAX_ENUM_N = 10

# OEIS A001349, connected graphs on n unlabeled vertices
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080, 10: 11716571}


@lru_cache(maxsize=None)
def _connected_by_code(n: int) -> tuple[tuple[bytes, Graph], ...]:
    if n == 1:
        g = Graph.empty(1)
        return ((canonical_form(g), g),)
    found: dict[bytes, Graph] = {}
    full = (1 << (n - 1)) - 1
    # every connected graph has a non-cut vertex, so it arises from a smaller
    # connected graph by adding one vertex with a nonempty neighbourhood
    for _, parent in _connected_by_code(n - 1):
        for nbrs in range(1, full + 1):
            rows = [r | ((nbrs >> v & 1) << (n - 1)) for v, r in enumerate(parent.adj)]
            rows.append(nbrs)
            child = Graph(n, tuple(rows))
            code = canonical_form(child)
            if code not in found:
                found[code] = graph6_decode(code)
    return tuple(sorted(found.items()))


def enumerate_connected(n: int, min_xi: int | None = None) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class, in canonical-code order.

    With ``min_xi`` only graphs whose minimum edge degree is at least that
    value are kept; edgeless graphs never pass a ``min_xi`` filter.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    for _, g in _connected_by_code(n):
        if min_xi is None or (g.m and xi(g) >= min_xi):
            yield g


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)


def graphs_from_source(
    n_min: int,
    n_max: int,
    min_xi=None,
    source: Iterable[str] | None = None,
) -> Iterator[Graph]:
    """Connected graphs with ``n_min <= n <= n_max`` from the generator or a graph6 stream.

    ``min_xi`` may be an int or a callable ``n -> int``.
    """
    def threshold(n):
        return min_xi(n) if callable(min_xi) else min_xi

    if source is None:
        for n in range(n_min, n_max + 1):
            yield from enumerate_connected(n, threshold(n))
        return
    for g in read_graph6_stream(source):
        if not n_min <= g.n <= n_max or not is_connected(g):
            continue
        t = threshold(g.n)
        if t is None or (g.m and xi(g) >= t):
            yield g
