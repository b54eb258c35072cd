"""Exhaustive theorem checks over small connected graphs.

Every checker runs the same pipeline: enumerate graphs meeting the
hypothesis, evaluate the predicates on each graph, and assign each graph (or
each vertex pair, for T1) to an outcome bucket.  A graph that fits no bucket,
or more than one, is a counterexample.

Where a statement as printed is self-contradictory or misses cases, both the
printed reading and the reading the checker enforces are recorded; see the
``as_printed`` fields of each record.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .collapse import is_collapsible, reduce, star_shape
from .enumeration import graphs_from_source
from .families import Family, FamilyTag, construct, eq2_threshold, recognize, theorem6_named
from .graph_core import Graph, canonical_form, girth, graph6_decode, graph6_encode, xi
from .linegraph import is_hamiltonian, k_hamiltonian_check, line_graph
from .trails import (
    InconsistentRoutesError,
    has_dominating_closed_trail,
    has_spanning_closed_trail,
    has_spanning_trail,
    trail_through_X,
    verify_certificate,
)

THEOREMS = ("T1", "T2", "T3", "T5", "T6", "T7", "T9", "L1", "L2", "C8")
DEFAULT_KS = {"T7": (1, 2, 3), "C8": (1, 2, 3), "L1": (1, 2)}


class UnknownTheoremError(ValueError):
    pass


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    records: list[dict] = field(default_factory=list)

    @property
    def counterexamples(self) -> list[dict]:
        return [r for r in self.records if r["status"] == "FAIL"]

    @property
    def status(self) -> str:
        return "FAIL" if self.counterexamples else "PASS"

    def summary(self, key: str = "outcomes") -> dict[str, int]:
        total: Counter = Counter()
        for r in self.records:
            total.update(r.get(key, {}))
        return dict(sorted(total.items()))

    def as_printed_failures(self) -> list[dict]:
        return [r for r in self.records if r.get("as_printed_status") == "FAIL"]


def _is_family(g: Graph, family: Family) -> bool:
    if g.n < 3 or (family is Family.K2N2_STAR and g.n < 4):
        return False
    return canonical_form(g) == canonical_form(construct(FamilyTag(family, g.n)))


def _record(g: Graph, outcomes: dict, ok: bool, **extra) -> dict:
    rec = {"graph6": graph6_encode(g), "n": g.n, "outcomes": outcomes, "status": "PASS" if ok else "FAIL"}
    rec.update(extra)
    return rec


# -- per-theorem predicates ------------------------------------------------------

def _t1_outcomes(g: Graph, u: int, v: int, is_k2, trail_ok: bool, nonadjacent: bool) -> list[str]:
    n = g.n
    deg = g.degrees()
    out = []
    if trail_ok:
        out.append("i")
    if any(deg[z] == 1 for z in range(n) if z not in (u, v)):
        out.append("ii")
    if is_k2 and u == v and n % 2 == 1:
        out.append("iii")
    adjacent = g.has_edge(u, v)
    if is_k2 and u != v and (not adjacent if nonadjacent else adjacent) and n % 2 == 0 \
            and deg[u] == deg[v] == n - 2:
        out.append("iv")
    if u == v and deg[u] == 1 and deg.count(1) == 1:
        out.append("v")
    return out


def check_t1(g: Graph, ks) -> dict:
    """Spanning (u,v)-trail five-way classification over all ordered pairs."""
    is_k2 = _is_family(g, Family.COMPLETE_BIPARTITE_2)
    buckets: Counter = Counter()
    printed: Counter = Counter()
    bad, bad_printed, cert_fail = [], [], []
    closed = has_spanning_trail(g, 0, 0) is not None
    for u in range(g.n):
        for v in range(u, g.n):
            cert = has_spanning_trail(g, u, v) if u != v else None
            if cert is not None and not verify_certificate(g, cert, spanning=True):
                cert_fail.append([u, v])
            ok = closed if u == v else cert is not None
            for a, b in {(u, v), (v, u)}:
                out = _t1_outcomes(g, a, b, is_k2, ok, nonadjacent=True)
                out_p = _t1_outcomes(g, a, b, is_k2, ok, nonadjacent=False)
                buckets["+".join(out) or "none"] += 1
                printed["+".join(out_p) or "none"] += 1
                if len(out) != 1:
                    bad.append([a, b, out])
                if len(out_p) != 1:
                    bad_printed.append([a, b, out_p])
    # buckets (iii)/(iv) belong to K2,n-2 alone, by construction of the predicates
    return _record(g, dict(buckets), not bad and not cert_fail, violations=bad,
                   certificate_failures=cert_fail, as_printed=dict(printed),
                   as_printed_status="FAIL" if bad_printed else "PASS",
                   as_printed_violations=bad_printed)


def _classify_reduction(g: Graph, named: Callable[[Graph], FamilyTag | None] | None):
    """Flags under the enforced reading and under the printed one.

    The enforced star case needs trivial leaves only.  With a named exception
    list (T6) it also needs ``t < n``: the list names ``K_{1,n-1}`` itself,
    the one star whose reduction contracts nothing.
    """
    red = reduce(g)
    n = g.n
    flags = []
    printed = []
    shape = None
    if red.reduced.n == 1:
        flags.append("i")
        printed.append("i")
    else:
        shape = star_shape(g, red)
        if shape is not None and shape.structural() and (named is None or shape.t < n):
            flags.append("ii")
        if shape is not None and shape.as_printed(n):
            printed.append("ii")
    if named is None:
        if _is_family(g, Family.COMPLETE_BIPARTITE_2):
            flags.append("iii")
            printed.append("iii")
    else:
        tag = named(g)
        if tag is not None:
            flags.append(f"iii:{tag.family.value}")
            printed.append(f"iii:{tag.family.value}")
    detail = {"reduced": graph6_encode(red.reduced)}
    if shape is not None:
        detail.update(t=shape.t, leaves_trivial=shape.leaves_trivial,
                      same_neighbor=shape.same_neighbor, t_le_half=shape.t <= n / 2)
        if shape.t == 2:
            detail["removal_collapsible"] = shape.removal_collapsible
    return flags, printed, detail


def _trichotomy(g: Graph, named) -> dict:
    flags, printed, detail = _classify_reduction(g, named)
    key = "+".join(flags) or "none"
    return _record(g, {key: 1}, len(flags) == 1, detail=detail,
                   as_printed={"+".join(printed) or "none": 1},
                   as_printed_status="PASS" if len(printed) == 1 else "FAIL")


def check_t2(g: Graph, ks) -> dict:
    return _trichotomy(g, None)


def check_t6(g: Graph, ks) -> dict:
    return _trichotomy(g, theorem6_named)


def check_t3(g: Graph, ks) -> dict:
    """Dominating closed trail in g versus a Hamilton cycle in L(g)."""
    cert = has_dominating_closed_trail(g)
    cycle = is_hamiltonian(line_graph(g).lg) if g.m else None
    cert_ok = cert is None or bool(verify_certificate(g, cert, dominating=True))
    key = {(True, True): "both", (False, False): "neither"}.get((cert is not None, cycle is not None), "mismatch")
    return _record(g, {key: 1}, key != "mismatch" and cert_ok, edges=g.m)


def check_t5(g: Graph, ks) -> dict:
    cycle = is_hamiltonian(line_graph(g).lg)
    key = "line_graph_hamiltonian" if cycle is not None else "line_graph_not_hamiltonian"
    return _record(g, {key: 1}, cycle is not None)


def _applicable_k(g: Graph, ks) -> int:
    return max(k for k in ks if xi(g) >= g.n + k)


def check_t7(g: Graph, ks) -> dict:
    """Spanning closed trail through every X with |X| <= k, or the K*2,n-2 exception."""
    k = _applicable_k(g, ks)
    edges = g.edges()
    failing, bad_cert, mismatch = [], [], []
    count = 0
    for size in range(k + 1):
        for xs in combinations(edges, size):
            count += 1
            try:
                cert = trail_through_X(g, xs)
            except InconsistentRoutesError:
                mismatch.append([list(e) for e in xs])
                continue
            if cert is None:
                failing.append([list(e) for e in xs])
            elif not verify_certificate(g, cert, spanning=True, contains=xs):
                bad_cert.append([list(e) for e in xs])
    if not failing:
        key, ok = "trail_for_every_X", True
    elif g.n % 2 == 0 and k == 1 and _is_family(g, Family.K2N2_STAR):
        key, ok = "exception_K*2,n-2", True
    else:
        key, ok = "no_trail", False
    return _record(g, {key: 1}, ok and not bad_cert and not mismatch, k=k, subsets=count,
                   failing=failing, certificate_failures=bad_cert, route_mismatches=mismatch)


def check_t9(g: Graph, ks) -> dict:
    """Properties of reduced graphs, idempotence, and collapsible => supereulerian."""
    red = reduce(g)
    h = red.reduced
    problems = []
    if girth(h) < 4:
        problems.append("girth<4")
    slack = 2 * h.n - h.m
    if h.m >= 3 and (h.min_degree() > 3 or slack < 4):
        problems.append("dense-reduced-graph")
    if slack < 4 and not (h.n == 1 or (h.n == 2 and h.m == 1)):
        problems.append("small-violator-not-K1-K2")
    if not reduce(h).is_identity():
        problems.append("not-idempotent")
    for part in red.preimages:
        if len(part) > 1 and not is_collapsible(g.induced(sorted(part))):
            problems.append("preimage-not-collapsible")
    collapsible = h.n == 1
    if collapsible:
        cert = has_spanning_closed_trail(g)
        if cert is None or not verify_certificate(g, cert, spanning=True):
            problems.append("collapsible-not-supereulerian")
    key = "collapsible" if collapsible else "not_collapsible"
    return _record(g, {key: 1}, not problems, reduced=graph6_encode(h), problems=problems)


def check_l1(g: Graph, ks) -> dict:
    k = _applicable_k(g, ks)
    edges = g.edges()
    deg = g.degrees()
    worst = None
    for size in range(k + 1):
        for xs in combinations(edges, size):
            d = list(deg)
            for u, v in xs:
                d[u] -= 1
                d[v] -= 1
            gone = set(xs)
            values = [d[u] + d[v] for u, v in edges if (u, v) not in gone]
            if values:
                worst = min(values) if worst is None else min(worst, min(values))
    ok = worst is None or worst >= g.n
    return _record(g, {"holds" if ok else "violated": 1}, ok, k=k, min_xi_after_deletion=worst)


def check_l2(g: Graph, ks) -> dict:
    h = reduce(g).reduced
    if not h.m:
        return _record(g, {"reduction_edgeless": 1}, True, reduced_n=h.n)
    ok = xi(h) >= h.n
    return _record(g, {"holds" if ok else "violated": 1}, ok, reduced_n=h.n, reduced_xi=xi(h))


def check_c8(g: Graph, ks) -> dict:
    k = _applicable_k(g, ks)
    res = k_hamiltonian_check(g, k)
    ok = res.ok and not res.disagreements and not res.self_test_failures
    key = f"k_hamiltonian" if res.ok else "not_k_hamiltonian"
    return _record(g, {key: 1}, ok, k=k, deletions=res.checked,
                   failing=[list(e) for e in res.failing] if res.failing else None,
                   route_disagreements=res.disagreements,
                   outside_hypothesis=len(res.outside_hypothesis),
                   self_test_failures=res.self_test_failures)


CHECKERS: dict[str, Callable[[Graph, tuple], dict]] = {
    "T1": check_t1, "T2": check_t2, "T3": check_t3, "T5": check_t5, "T6": check_t6,
    "T7": check_t7, "T9": check_t9, "L1": check_l1, "L2": check_l2, "C8": check_c8,
}

# smallest n each statement covers
MIN_N = {"T2": 4, "T3": 4, "T5": 6, "T6": 4}


def hypothesis(theorem: str, ks) -> Callable[[int], int | None]:
    if theorem in ("T1", "T2", "L2"):
        return lambda n: n
    if theorem in ("T5", "T6"):
        return eq2_threshold
    if theorem in ("T7", "L1", "C8"):
        return lambda n: n + min(ks)
    return lambda n: None


def _run_one(args: tuple[str, str, tuple]) -> dict:
    theorem, g6, ks = args
    return CHECKERS[theorem](graph6_decode(g6), ks)


def check_theorem(
    theorem: str,
    n_min: int,
    n_max: int,
    k: int | Iterable[int] | None = None,
    source: Iterable[str] | None = None,
    workers: int = 1,
) -> VerificationReport:
    """Run one theorem check over all graphs in range; records sorted by canonical code."""
    theorem = theorem.upper()
    if theorem not in CHECKERS:
        raise UnknownTheoremError(f"unknown theorem id {theorem!r}; expected one of {', '.join(THEOREMS)}")
    if k is None:
        ks = DEFAULT_KS.get(theorem, ())
    elif isinstance(k, int):
        ks = (k,)
    else:
        ks = tuple(sorted(set(k)))
    if theorem in DEFAULT_KS and not ks:
        raise ValueError(f"{theorem} needs k >= 1")
    lo = max(n_min, MIN_N.get(theorem, 1))
    graphs = [g for g in graphs_from_source(lo, n_max, hypothesis(theorem, ks), source)]
    keyed = sorted(((canonical_form(g), graph6_encode(g)) for g in graphs))
    jobs = [(theorem, g6, ks) for _, g6 in keyed]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        records = [_run_one(job) for job in jobs]
    params = {"n_min": n_min, "n_max": n_max, "k": list(ks),
              "source": "enumeration" if source is None else "input"}
    return VerificationReport(theorem, params, records)


def emit_report(report: VerificationReport, fmt: str = "records") -> bytes:
    """Serialize deterministically: JSON lines (``records``) or a count table (``summary``)."""
    if fmt == "records":
        header = {"theorem": report.theorem, "params": report.params, "status": report.status,
                  "counterexamples": len(report.counterexamples), "graphs": len(report.records)}
        lines = [json.dumps(header, sort_keys=True)]
        lines += [json.dumps(r, sort_keys=True) for r in report.records]
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == "summary":
        out = [f"theorem: {report.theorem}",
               "params: " + json.dumps(report.params, sort_keys=True),
               f"graphs: {len(report.records)}"]
        counts = report.summary()
        printed = report.summary("as_printed")
        if counts:
            width = max(len(k) for k in list(counts) + list(printed) + ["outcome"])
            out.append(f"{'outcome'.ljust(width)}  count")
            out += [f"{k.ljust(width)}  {v}" for k, v in counts.items()]
            if printed:
                out.append("as printed:")
                out += [f"{k.ljust(width)}  {v}" for k, v in printed.items()]
                out.append(f"as-printed counterexamples: {len(report.as_printed_failures())}")
        out.append(f"counterexamples: {len(report.counterexamples)}")
        out.append(f"status: {report.status}")
        return ("\n".join(out) + "\n").encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")
