"""Minimal-obstruction engine: verification, enumeration, recursive
construction, fixed catalogs, and a claim-checking harness.

A graph is a minimal obstruction for a hereditary property when it lacks the
property but every one-vertex deletion has it (heredity makes single
deletions sufficient). The engine is property-agnostic: anything exposed as
a PolarSpec plugs in unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterable, Optional

from . import graphs as gr
from .classes import ClassId, generate_class, is_cograph, sigma_j, sigma_sep, tau_j
from .errors import BadParameter, UnknownClaim, UnknownId
from .graphs import (
    ENUM_CAP,
    Graph,
    catalog,
    complete_graph,
    contains_induced,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_graphs,
    graph6_encode,
    join,
    path_graph,
    union_all,
)
from .polarity import (
    MONOPOLAR,
    POLAR,
    SEARCH_CAP,
    PolarPartition,
    PolarSpec,
    find_polar_partition,
    satisfies,
    sk_polar,
)


@dataclass(frozen=True)
class ObstructionReport:
    """Minimality verdict plus per-vertex deletion witnesses.

    Witness partitions live in the deleted graph's own index space (vertex
    v removed, remaining vertices renumbered ascending).
    """

    graph: Graph
    spec: PolarSpec
    is_obstruction: bool
    is_minimal: bool
    deletion_witnesses: dict[int, PolarPartition] = field(default_factory=dict)

    @property
    def canonical(self) -> bytes:
        return self.graph.canonical_key()


def is_minimal_obstruction(
    g: Graph, spec: PolarSpec, search_cap: int = SEARCH_CAP
) -> ObstructionReport:
    """Check obstruction-ness and minimality, collecting deletion witnesses."""
    if satisfies(g, spec, search_cap):
        return ObstructionReport(g, spec, False, False)
    witnesses = {}
    for v in range(g.n):
        w = find_polar_partition(g.delete_vertex(v), spec, search_cap)
        if w is None:
            return ObstructionReport(g, spec, True, False)
        witnesses[v] = w
    return ObstructionReport(g, spec, True, True, witnesses)


def _minimality_task(payload) -> bool:
    g, spec = payload
    if satisfies(g, spec):
        return False
    return all(satisfies(g.delete_vertex(v), spec) for v in range(g.n))


def enumerate_minimal_obstructions(
    class_id: ClassId, spec: PolarSpec, n_max: int, cap: int = ENUM_CAP,
    workers: int = 1,
) -> list[Graph]:
    """All class members of order <= n_max that are minimal obstructions,
    sorted by (order, canonical key). ``workers`` > 1 fans the independent
    minimality checks over a process pool; the result is order-preserving,
    so output does not depend on the worker count."""
    members = list(generate_class(class_id, n_max, cap))
    if workers > 1 and len(members) > workers:
        from concurrent.futures import ProcessPoolExecutor

        chunk = max(1, len(members) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flags = list(
                pool.map(_minimality_task, ((g, spec) for g in members), chunksize=chunk)
            )
        return [g for g, flag in zip(members, flags) if flag]
    return [g for g in members if _minimality_task((g, spec))]


# ---------------------------------------------------------------------------
# fixed catalogs


def _essentials(class_id: ClassId) -> tuple[Graph, ...]:
    names = ("e1", "e2", "e3", "e7")
    if class_id == "p4extendible":
        names += ("e10", "e11", "e12")
    return tuple(catalog(n) for n in names)


def s1_fixed_family(s: int) -> tuple[Graph, Graph, Graph]:
    """The three disconnected minimal (s,1)-polar obstructions that exist
    only at parameter s: 2K_{s+1}, K2 + (K_s join 2K1), K1 + (K_{s-1} join C4)."""
    if s < 2:
        raise BadParameter(f"s={s} < 2")
    return (
        disjoint_union(complete_graph(s + 1), complete_graph(s + 1)),
        disjoint_union(complete_graph(2), join(complete_graph(s), empty_graph(2))),
        disjoint_union(complete_graph(1), join(complete_graph(s - 1), cycle_graph(4))),
    )


@lru_cache(maxsize=None)
def _pool(class_id: ClassId, k: int) -> tuple[Graph, ...]:
    """Connected minimal (1,k)-polar obstructions that are (1,k+1)-polar.

    These are the complements of the disconnected minimal (k,1)-polar
    obstructions that are ((k+1),1)-polar; the seven essentials drop out
    because they obstruct every (s,1). C5 joins the P4-extendible pool at
    k=1 as the only extension-graph obstruction.
    """
    if k == 0:
        return (complete_graph(2),)
    if k == 1:
        pool = [cycle_graph(4)]
        if class_id == "p4extendible":
            pool.append(cycle_graph(5))
        return tuple(pool)
    return tuple(g.complement() for g in s1_fixed_family(k))


def _length_partitions(total: int, length: int, maximum: Optional[int] = None):
    """Non-increasing integer sequences of the given length summing to total."""
    if maximum is None:
        maximum = total
    if length == 0:
        if total == 0:
            yield ()
        return
    for head in range(min(total, maximum), -1, -1):
        if head * length < total:
            break
        for rest in _length_partitions(total - head, length - 1, head):
            yield (head,) + rest


def construct_s1_obstructions(class_id: ClassId, s: int) -> list[Graph]:
    """Every minimal (s,1)-polar obstruction in the class, built recursively.

    Union of the class's essential graphs, the three parametric disconnected
    families at s, and complements of disjoint unions G_1 + ... + G_t where
    each G_i is drawn from _pool(class_id, s_i) and s = t - 1 + sum(s_i).
    """
    if class_id not in ("p4sparse", "p4extendible"):
        raise BadParameter(f"no (s,1) construction for class {class_id!r}")
    if s < 2:
        raise BadParameter(f"s={s} < 2")
    found: dict[bytes, Graph] = {}

    def add(g: Graph) -> None:
        found.setdefault(g.canonical_key(), g)

    for g in _essentials(class_id):
        add(g)
    for g in s1_fixed_family(s):
        add(g)
    for t in range(2, s + 2):
        for parts in _length_partitions(s - t + 1, t):
            groups = []
            seen = {}
            for v in parts:
                seen[v] = seen.get(v, 0) + 1
            for value, count in sorted(seen.items()):
                groups.append(
                    list(combinations_with_replacement(_pool(class_id, value), count))
                )
            for pick in product(*groups):
                components = [g for grp in pick for g in grp]
                add(union_all(*components).complement())
    return sorted(found.values(), key=lambda g: (g.n, g.canonical_key()))


def catalog_list(list_id: str, s: Optional[int] = None) -> list[Graph]:
    """A published finite obstruction list by id.

    Ids: unipolar-sparse, unipolar-extendible, comonopolar-sparse,
    comonopolar-extendible, monopolar-sparse, monopolar-extendible,
    s1fixed (requires s), polar-sparse, polar-extendible, egraphs.
    """
    key = list_id.strip().lower().replace("-", "").replace("_", "")
    if key == "unipolarsparse":
        return [catalog("k2,3"), union_all(path_graph(3), path_graph(3))]
    if key == "unipolarextendible":
        return [cycle_graph(5), catalog("k2,3"), union_all(path_graph(3), path_graph(3))]
    if key == "comonopolarsparse":
        return list(_essentials("p4sparse"))
    if key == "comonopolarextendible":
        return list(_essentials("p4extendible"))
    if key == "monopolarsparse":
        return [g.complement() for g in _essentials("p4sparse")]
    if key == "monopolarextendible":
        return [g.complement() for g in _essentials("p4extendible")]
    if key == "s1fixed":
        if s is None:
            raise BadParameter("s1fixed needs the parameter s")
        return list(s1_fixed_family(s))
    if key in ("polarsparse", "polarextendible"):
        cls: ClassId = "p4sparse" if key == "polarsparse" else "p4extendible"
        p3 = path_graph(3)
        out = []
        for e in _essentials(cls):
            g = disjoint_union(p3, e.complement())
            out.extend((g, g.complement()))
        return sorted(out, key=lambda g: (g.n, g.canonical_key()))
    if key == "egraphs":
        return [catalog(f"e{i}") for i in range(1, 14)]
    raise UnknownId(f"unknown obstruction list {list_id!r}")


def is_antichain(graphs: Iterable[Graph]) -> tuple[bool, Optional[tuple[Graph, Graph]]]:
    """True when no member induces into another; otherwise an offending pair."""
    items = list(graphs)
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            small, big = (a, b) if a.n <= b.n else (b, a)
            if small.n == big.n:
                continue  # equal orders embed only when isomorphic
            if contains_induced(big, small) is not None:
                return False, (small, big)
    return True, None


# ---------------------------------------------------------------------------
# serialization


def obstruction_record(g: Graph, spec: Optional[PolarSpec] = None) -> dict:
    """JSON-ready sidecar entry for one obstruction-list member.

    The graph6 field uses the canonical labeling, so isomorphic results are
    byte-identical however they were produced (golden-file stability).
    """
    rec = {
        "graph6": graph6_encode(gr.canonical_form(g)),
        "canonical": g.canonical_key().hex(),
        "order": g.n,
    }
    if spec is not None:
        rec["property"] = spec.label()
        report = is_minimal_obstruction(g, spec)
        rec["minimal"] = report.is_minimal
        rec["witnesses"] = {
            str(v): {"a": list(w.a), "b": list(w.b)}
            for v, w in sorted(report.deletion_witnesses.items())
        }
    return rec


# ---------------------------------------------------------------------------
# claim harness


@dataclass
class ClaimReport:
    claim: str
    n_max: int
    passed: bool
    counterexamples: list[str]
    details: dict


def verify_claim(claim_id: str, n_max: int, cap: int = ENUM_CAP,
                 workers: int = 1) -> ClaimReport:
    """Run one decidable theorem instance at scale n_max.

    Claims: sparse_cog (P4-sparse (s,1) obstructions are cographs, s in
    {2,3}); bound ((s+1)(k+1) order bound for P4-sparse (s,k) obstructions,
    s,k in {1,2}); disc_polar (disconnected minimal polar obstructions are
    P3 plus a monopolar obstruction that is not a polar one); spider_not_obs
    (spiders with nonempty head obstruct no (1,k), and class-restricted
    (k,1) obstructions are never connected with connected complement except
    C5).
    """
    key = claim_id.strip().lower()
    if key == "sparse_cog":
        return _claim_sparse_cog(n_max, cap, workers)
    if key == "bound":
        return _claim_bound(n_max, cap, workers)
    if key == "disc_polar":
        return _claim_disc_polar(n_max, cap, workers)
    if key == "spider_not_obs":
        return _claim_spider_not_obs(n_max, cap, workers)
    raise UnknownClaim(f"unknown claim {claim_id!r}")


def _claim_sparse_cog(n_max: int, cap: int, workers: int = 1) -> ClaimReport:
    bad = []
    counts = {}
    for s in (2, 3):
        obs = enumerate_minimal_obstructions("p4sparse", sk_polar(s, 1), n_max, cap, workers)
        counts[f"s={s}"] = len(obs)
        bad.extend(g for g in obs if not is_cograph(g))
    return ClaimReport(
        "sparse_cog", n_max, not bad, [graph6_encode(g) for g in bad],
        {"obstructions": counts},
    )


def _claim_bound(n_max: int, cap: int, workers: int = 1) -> ClaimReport:
    bad = []
    counts = {}
    for s in (1, 2):
        for k in (1, 2):
            obs = enumerate_minimal_obstructions("p4sparse", sk_polar(s, k), n_max, cap, workers)
            counts[f"({s},{k})"] = len(obs)
            bad.extend(g for g in obs if g.n > (s + 1) * (k + 1))
    return ClaimReport(
        "bound", n_max, not bad, [graph6_encode(g) for g in bad],
        {"obstructions": counts},
    )


def _claim_disc_polar(n_max: int, cap: int, workers: int = 1) -> ClaimReport:
    details = {}
    bad = []
    p3 = path_graph(3)
    for class_id in ("p4sparse", "p4extendible"):
        monopolar_min = [e.complement() for e in _essentials(class_id)]
        also_polar_min = [
            graph6_encode(h)
            for h in monopolar_min
            if is_minimal_obstruction(h, POLAR).is_minimal
        ]
        expected = {
            disjoint_union(p3, h).canonical_key()
            for h in monopolar_min
            if h.n + 3 <= n_max
            and graph6_encode(h) not in also_polar_min
        }
        got = {
            g.canonical_key()
            for g in enumerate_minimal_obstructions(class_id, POLAR, n_max, cap, workers)
            if not g.is_connected()
        }
        details[class_id] = {
            "disconnected_found": len(got),
            "expected": len(expected),
            "monopolar_members_filtered_out": also_polar_min,
        }
        if got != expected:
            bad.append(class_id)
    return ClaimReport("disc_polar", n_max, not bad, bad, details)


def _claim_spider_not_obs(n_max: int, cap: int, workers: int = 1) -> ClaimReport:
    bad = []
    checked = 0
    specs = [sk_polar(1, k) for k in (1, 2, 3)]
    heads = [h for h in enumerate_graphs(max(n_max - 4, 0), cap) if h.n <= n_max - 4]
    for head in heads:
        spiders = []
        for j in (2, 3, 4):
            if 2 * j + head.n <= n_max:
                spiders.append(sigma_j(head, j))
                if j >= 3:
                    spiders.append(tau_j(head, j))
        for kind in ("p4", "banner", "cobanner", "fork", "kite"):
            base = 4 if kind == "p4" else 5
            if base + head.n <= n_max:
                spiders.append(sigma_sep(kind, head))
        for g in spiders:
            for spec in specs:
                checked += 1
                if is_minimal_obstruction(g, spec).is_minimal:
                    bad.append(graph6_encode(g))
    connected_bad = []
    c5_key = cycle_graph(5).canonical_key()
    for class_id in ("p4sparse", "p4extendible"):
        for k in (1, 2, 3):
            for g in enumerate_minimal_obstructions(class_id, sk_polar(k, 1), n_max, cap, workers):
                if (
                    g.is_connected()
                    and g.complement().is_connected()
                    and g.canonical_key() != c5_key
                ):
                    connected_bad.append(graph6_encode(g))
    bad.extend(connected_bad)
    return ClaimReport(
        "spider_not_obs", n_max, not bad, bad,
        {"spiders_checked": checked, "connected_counterexamples": connected_bad},
    )
