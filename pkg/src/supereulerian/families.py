"""Named exceptional graph families and discovery of the unnamed 7-vertex ones."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources

from .collapse import reduce, star_shape
from .enumeration import enumerate_connected
from .graph_core import Graph, GraphError, canonical_code, graph6_decode

GOLDEN_FILE = "exceptions_n7.g6"


class Family(str, Enum):
    STAR = "K1,n-1"
    COMPLETE_BIPARTITE_2 = "K2,n-2"
    K2N2_STAR = "K*2,n-2"
    K2N3_PRIME = "K'2,n-3"
    CYCLE5 = "C5"
    UNNAMED7 = "G7"


@dataclass(frozen=True)
class FamilyTag:
    family: Family
    n: int
    index: int = 0  # which discovered graph, for UNNAMED7

    def __str__(self) -> str:
        if self.family is Family.UNNAMED7:
            return f"G7#{self.index}"
        return f"{self.family.value}(n={self.n})"


def p(n: int) -> int:
    """Parity correction in the weakened edge-degree bound: 0 for even n, 1 for odd."""
    return n % 2


def eq2_threshold(n: int) -> int:
    return n - 1 - p(n)


def construct(tag: FamilyTag) -> Graph:
    """Build a family member; the two hubs (or the centre) come first."""
    n = tag.n
    f = tag.family
    if f is Family.STAR:
        if n < 2:
            raise GraphError("K1,n-1 needs n >= 2")
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if f is Family.COMPLETE_BIPARTITE_2:
        if n < 3:
            raise GraphError("K2,n-2 needs n >= 3")
        return Graph.from_edges(n, [(h, i) for h in (0, 1) for i in range(2, n)])
    if f is Family.K2N2_STAR:
        if n < 4:
            raise GraphError("K*2,n-2 needs n >= 4")
        return Graph.from_edges(n, [(0, 1)] + [(h, i) for h in (0, 1) for i in range(2, n)])
    if f is Family.K2N3_PRIME:
        if n < 4:
            raise GraphError("K'2,n-3 needs n >= 4")
        return Graph.from_edges(n, [(h, i) for h in (0, 1) for i in range(2, n - 1)] + [(0, n - 1)])
    if f is Family.CYCLE5:
        if n != 5:
            raise GraphError("C5 has n = 5")
        return Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    if f is Family.UNNAMED7:
        golden = load_golden()
        if n != 7 or not 1 <= tag.index <= len(golden):
            raise GraphError(f"no discovered 7-vertex exception #{tag.index}")
        return golden[tag.index - 1]
    raise GraphError(f"unknown family {f!r}")


def _named_tags(n: int) -> list[FamilyTag]:
    tags = []
    if n >= 2:
        tags.append(FamilyTag(Family.STAR, n))
    if n >= 3:
        tags.append(FamilyTag(Family.COMPLETE_BIPARTITE_2, n))
    if n >= 4:
        tags += [FamilyTag(Family.K2N2_STAR, n), FamilyTag(Family.K2N3_PRIME, n)]
    if n == 5:
        tags.append(FamilyTag(Family.CYCLE5, 5))
    return tags


def candidate_tags(n: int) -> list[FamilyTag]:
    tags = _named_tags(n)
    if n == 7:
        tags += [FamilyTag(Family.UNNAMED7, 7, i + 1) for i in range(len(load_golden()))]
    return tags


@lru_cache(maxsize=None)
def _code_of(tag: FamilyTag) -> bytes:
    return canonical_code(construct(tag))


def recognize(g: Graph) -> FamilyTag | None:
    """First family (in declaration order) isomorphic to ``g``.

    Small coincidences resolve by that order, e.g. ``K_{1,2} = K_{2,1}``
    is reported as a star.
    """
    code = canonical_code(g)
    for tag in candidate_tags(g.n):
        if _code_of(tag) == code:
            return tag
    return None


def theorem6_named(g: Graph) -> FamilyTag | None:
    """Membership in the exception list of the weakened-bound classification."""
    tag = recognize(g)
    if tag is None or tag.family is Family.K2N2_STAR:
        return None
    return tag


def outside_collapsible_and_star(g: Graph) -> bool:
    """Neither collapsible nor reducing to a star with trivial leaves."""
    red = reduce(g)
    if red.reduced.n == 1:
        return False
    shape = star_shape(g, red)
    return not (shape is not None and shape.structural())


def exceptional_graphs(n: int) -> list[Graph]:
    """Graphs meeting the weakened bound that are neither collapsible nor star-reducing."""
    return [g for g in enumerate_connected(n, eq2_threshold(n)) if outside_collapsible_and_star(g)]


def discover_exceptions(n: int = 7) -> list[Graph]:
    """Exceptional graphs that are not in any named family, in canonical-code order."""
    out = []
    for g in exceptional_graphs(n):
        tag = recognize(g)
        if tag is None or tag.family in (Family.UNNAMED7, Family.K2N2_STAR):
            out.append(g)
    return sorted(out, key=canonical_code)


@lru_cache(maxsize=1)
def load_golden() -> tuple[Graph, ...]:
    text = resources.files("supereulerian").joinpath("data").joinpath(GOLDEN_FILE).read_text()
    graphs = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            graphs.append(graph6_decode(line.split()[0]))
    return tuple(graphs)


def golden_lines(graphs: list[Graph]) -> str:
    lines = ["# 7-vertex exceptions to the weakened edge-degree classification", "# graph6 label"]
    for i, g in enumerate(sorted(graphs, key=canonical_code), 1):
        lines.append(f"{canonical_code(g).decode()} G7#{i}")
    return "\n".join(lines) + "\n"
