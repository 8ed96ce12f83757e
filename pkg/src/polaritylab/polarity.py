"""Exact deciders and witness constructors for polar-type partitions.

An (s,k)-polar partition splits the vertices into a side A inducing a
complete multipartite graph with at most s parts and a side B inducing at
most k disjoint cliques. Unbounded s or k is written None (the CLI token is
"inf") and is replaced by the graph's order at evaluation time. A unipolar
partition instead requires A to be a clique.

The solver enumerates candidate A-sides in increasing size and then
lexicographic order and returns the first valid split, so witnesses are
deterministic. All acceptance-scale inputs have at most ten vertices;
clarity and certainty win over cleverness here.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .classes import _has_c5
from .errors import BadParameter, CapExceeded
from .graphs import Graph, _bits_to_tuple

SEARCH_CAP = 20  # exponential A-side search guard


@dataclass(frozen=True)
class PolarSpec:
    """Partition requirement: s parts on the multipartite side, k cliques on
    the cluster side; ``clique_side`` switches side A to a single clique
    (unipolarity), in which case s is ignored."""

    s: Optional[int]
    k: Optional[int]
    clique_side: bool = False

    def label(self) -> str:
        if self.clique_side:
            return "unipolar"
        s = "inf" if self.s is None else str(self.s)
        k = "inf" if self.k is None else str(self.k)
        return f"sk:{s},{k}"


def sk_polar(s: Optional[int], k: Optional[int]) -> PolarSpec:
    if (s is not None and s < 0) or (k is not None and k < 0):
        raise BadParameter(f"negative polarity parameters ({s},{k})")
    return PolarSpec(s, k)


UNIPOLAR = PolarSpec(None, None, clique_side=True)
MONOPOLAR = sk_polar(1, None)
POLAR = sk_polar(None, None)
SPLIT = sk_polar(1, 1)

_NAMED_SPECS = {
    "unipolar": UNIPOLAR,
    "monopolar": MONOPOLAR,
    "polar": POLAR,
    "split": SPLIT,
}


def parse_spec(text: str) -> PolarSpec:
    """Parse "sk:S,K" (S, K numeric or "inf"), or a named spec kind."""
    key = text.strip().lower()
    if key in _NAMED_SPECS:
        return _NAMED_SPECS[key]
    if key.startswith("sk:"):
        parts = key[3:].split(",")
        if len(parts) == 2:
            try:
                s = None if parts[0] == "inf" else int(parts[0])
                k = None if parts[1] == "inf" else int(parts[1])
            except ValueError:
                raise BadParameter(f"bad spec {text!r}") from None
            return sk_polar(s, k)
    raise BadParameter(f"bad spec {text!r}")


@dataclass(frozen=True)
class PolarPartition:
    """Witness split (A, B); A is the multipartite (or clique) side."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def validate(self, g: Graph, spec: PolarSpec) -> bool:
        amask = 0
        for v in self.a:
            amask |= 1 << v
        bmask = 0
        for v in self.b:
            bmask |= 1 << v
        if amask & bmask or amask | bmask != (1 << g.n) - 1:
            return False
        if spec.clique_side:
            if not _is_clique_mask(g.adj, amask):
                return False
        elif not _is_cm_mask(g.adj, amask, _eff(spec.s, g.n)):
            return False
        return _is_cluster_mask(g.adj, bmask, _eff(spec.k, g.n))


def _eff(bound: Optional[int], n: int) -> int:
    return n if bound is None else bound


# ---------------------------------------------------------------------------
# mask predicates


def _is_clique_mask(adj, mask: int) -> bool:
    rest = mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        if adj[v] & mask != mask ^ (1 << v):
            return False
    return True


def _is_cluster_mask(adj, mask: int, kmax: int) -> bool:
    parts = 0
    rest = mask
    while rest:
        seed = (rest & -rest).bit_length() - 1
        comp = adj[seed] & mask | (1 << seed)
        # a component that is a clique is exactly the closed neighborhood
        sub = comp
        while sub:
            v = (sub & -sub).bit_length() - 1
            sub &= sub - 1
            if adj[v] & mask != comp ^ (1 << v):
                return False
        parts += 1
        if parts > kmax:
            return False
        rest &= ~comp
    return True


def _is_cm_mask(adj, mask: int, smax: int) -> bool:
    parts = 0
    rest = mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        part = mask & ~adj[v]  # non-neighbors within the mask, v included
        sub = part
        while sub:
            u = (sub & -sub).bit_length() - 1
            sub &= sub - 1
            if mask & ~adj[u] != part:
                return False
        parts += 1
        if parts > smax:
            return False
        rest &= ~part
    return True


# ---------------------------------------------------------------------------
# public predicates


def is_cluster(g: Graph, k: Optional[int] = None) -> bool:
    """At most k disjoint cliques (P3-free with at most k components)."""
    return _is_cluster_mask(g.adj, (1 << g.n) - 1, _eff(k, g.n))


def is_complete_multipartite(g: Graph, s: Optional[int] = None) -> bool:
    """Complete multipartite with at most s parts (complement is a cluster)."""
    return _is_cm_mask(g.adj, (1 << g.n) - 1, _eff(s, g.n))


def is_split(g: Graph) -> bool:
    """Split graphs are the {2K2, C4, C5}-free graphs."""
    adj = g.adj
    for quad in combinations(range(g.n), 4):
        mask = 0
        for v in quad:
            mask |= 1 << v
        degs = sorted((adj[v] & mask).bit_count() for v in quad)
        if degs == [1, 1, 1, 1] or degs == [2, 2, 2, 2]:  # 2K2 or C4
            return False
    return not _has_c5(g)


@lru_cache(maxsize=32)
def _masks_by_size(n: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for size in range(n + 1):
        row = []
        for combo in combinations(range(n), size):
            m = 0
            for v in combo:
                m |= 1 << v
            row.append(m)
        out.append(tuple(row))
    return tuple(out)


def find_polar_partition(
    g: Graph, spec: PolarSpec, search_cap: int = SEARCH_CAP
) -> Optional[PolarPartition]:
    """First valid partition in (|A|, lexicographic A) order, or None."""
    n = g.n
    if n > search_cap:
        raise CapExceeded(f"order {n} exceeds search cap {search_cap}")
    adj = g.adj
    full = (1 << n) - 1
    smax = _eff(spec.s, n)
    kmax = _eff(spec.k, n)
    for row in _masks_by_size(n):
        for amask in row:
            if spec.clique_side:
                if not _is_clique_mask(adj, amask):
                    continue
            elif not _is_cm_mask(adj, amask, smax):
                continue
            if _is_cluster_mask(adj, full ^ amask, kmax):
                return PolarPartition(
                    _bits_to_tuple(amask), _bits_to_tuple(full ^ amask)
                )
    return None


def satisfies(g: Graph, spec: PolarSpec, search_cap: int = SEARCH_CAP) -> bool:
    """Predicate form of find_polar_partition (the obstruction engine's handle)."""
    return find_polar_partition(g, spec, search_cap) is not None
