"""Recognition, decomposition, and generation of four cograph superclasses.

Covered families: cographs (P4-free), P4-sparse graphs (no five vertices
induce two P4s), P4-extendible graphs (every P4 has at most one outside
vertex on a P4 meeting it), and C5-free P4-extendible graphs ("62").

Each recognizer comes in two independent flavors. The definitional one
checks the forbidden-structure condition directly; the structural one runs
the connectedness recursion (components / co-components / spider nodes) and
is also what the decomposition trees are built from.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Literal, Optional, Union

from . import graphs as gr
from .errors import BadParameter, CapExceeded, NotAP4, NotInClass
from .graphs import (
    ENUM_CAP,
    VERTEX_CAP,
    Graph,
    _bits_to_tuple,
    _co_component_masks,
    _component_masks,
    catalog,
    complete_graph,
    disjoint_union,
    join,
    p4_masks,
)

ClassId = Literal["cograph", "p4sparse", "p4extendible", "62"]
CLASS_IDS: tuple[ClassId, ...] = ("cograph", "p4sparse", "p4extendible", "62")

ExtKind = Literal["p4", "c5", "p5", "house", "banner", "cobanner", "fork", "kite"]
EXT_KINDS: tuple[ExtKind, ...] = (
    "p4", "c5", "p5", "house", "banner", "cobanner", "fork", "kite",
)
SEPARABLE_KINDS: tuple[ExtKind, ...] = ("p4", "banner", "cobanner", "fork", "kite")


# ---------------------------------------------------------------------------
# spiders


@dataclass(frozen=True)
class SpiderPartition:
    """(S, K, R) spider structure: independent legs matched onto a clique body.

    ``pairing`` lists (leg, body partner) pairs; a thin leg sees exactly its
    partner, a thick leg sees the rest of the body. The head is completely
    adjacent to the body and completely nonadjacent to the legs.
    """

    legs: tuple[int, ...]
    body: tuple[int, ...]
    head: tuple[int, ...]
    thin: bool
    pairing: tuple[tuple[int, int], ...]

    def validate(self, g: Graph) -> bool:
        s = _mask_of(self.legs)
        k = _mask_of(self.body)
        r = _mask_of(self.head)
        n_mask = (1 << g.n) - 1
        if s | k | r != n_mask or (s & k) or (s & r) or (k & r):
            return False
        if len(self.legs) != len(self.body) or len(self.legs) < 2:
            return False
        if dict(self.pairing).keys() != set(self.legs):
            return False
        if set(dict(self.pairing).values()) != set(self.body):
            return False
        for b in self.body:
            if g.adj[b] & k != k ^ (1 << b):  # body is a clique
                return False
        for leg, partner in self.pairing:
            inside = g.adj[leg] & (s | k)
            want = (1 << partner) if self.thin else k ^ (1 << partner)
            if inside != want:
                return False
        for h in self.head:
            if g.adj[h] & k != k or g.adj[h] & s:
                return False
        return True


def _mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _find_thin_masked(rows, mask):
    """Thin-spider structure of the graph induced on ``mask``, or None.

    ``rows`` may be complement rows, which is how thick spiders are found.
    Returns (legs_mask, body_mask, head_mask, pairing).
    """
    if mask.bit_count() < 4:
        return None
    legs = 0
    pairing = []
    rest = mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        if (rows[v] & mask).bit_count() == 1:
            legs |= 1 << v
            pairing.append((v, (rows[v] & mask).bit_length() - 1))
    if legs.bit_count() < 2:
        return None
    body = 0
    for _, b in pairing:
        body |= 1 << b
    if body.bit_count() != legs.bit_count() or body & legs:
        return None
    rest = body
    while rest:
        b = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        if rows[b] & body != body ^ (1 << b):
            return None
    head = mask & ~legs & ~body
    rest = head
    while rest:
        r = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        if rows[r] & body != body:
            return None
    return legs, body, head, tuple(sorted(pairing))


def _find_spider_masked(g: Graph, mask: int):
    """(legs, body, head, thin, pairing) masks for G[mask], or None."""
    found = _find_thin_masked(g.adj, mask)
    if found is not None:
        legs, body, head, pairing = found
        return legs, body, head, True, pairing
    co = [mask & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    found = _find_thin_masked(co, mask)
    if found is not None:
        co_legs, co_body, head, co_pairing = found
        # complementing swaps the leg and body roles and inverts the pairing
        pairing = tuple(sorted((b, s) for s, b in co_pairing))
        return co_body, co_legs, head, False, pairing
    return None


def find_spider(g: Graph) -> Optional[SpiderPartition]:
    """Detect whether ``g`` is a spider; thin is preferred (sigma2 = tau2)."""
    found = _find_spider_masked(g, (1 << g.n) - 1)
    if found is None:
        return None
    legs, body, head, thin, pairing = found
    return SpiderPartition(
        _bits_to_tuple(legs), _bits_to_tuple(body), _bits_to_tuple(head), thin, pairing
    )


def sigma_j(head: Graph, j: int, cap: int = VERTEX_CAP) -> Graph:
    """Thin spider with |S| = |K| = j over the given head graph."""
    return _spider_over(head, j, thick=False, cap=cap)


def tau_j(head: Graph, j: int, cap: int = VERTEX_CAP) -> Graph:
    """Thick spider with |S| = |K| = j over the given head graph."""
    return _spider_over(head, j, thick=True, cap=cap)


def _spider_over(head: Graph, j: int, thick: bool, cap: int) -> Graph:
    if j < 2:
        raise BadParameter(f"spider parameter j={j} < 2")
    n = head.n + 2 * j
    if n > cap:
        raise CapExceeded(f"spider order {n} exceeds cap {cap}")
    # body 0..j-1, legs j..2j-1, head occupies 2j..
    edges = [(a, b) for a in range(j) for b in range(a + 1, j)]
    for i in range(j):
        if thick:
            edges.extend((b, j + i) for b in range(j) if b != i)
        else:
            edges.append((i, j + i))
    base = 2 * j
    edges.extend((base + u, base + v) for u, v in head.edges())
    edges.extend((b, base + u) for b in range(j) for u in range(head.n))
    return gr.from_edges(n, edges, cap=cap)


# ---------------------------------------------------------------------------
# extension graphs and extension spiders


@lru_cache(maxsize=None)
def _ext_graphs() -> dict[str, Graph]:
    return {kind: catalog(kind) for kind in EXT_KINDS}


@lru_cache(maxsize=None)
def _ext_key_table() -> dict[bytes, str]:
    return {g.canonical_key(): kind for kind, g in _ext_graphs().items()}


@lru_cache(maxsize=None)
def _separable_parts(kind: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(midpoints, endpoints) of a separable extension graph's catalog copy."""
    g = _ext_graphs()[kind]
    mids = 0
    ends = 0
    for m in p4_masks(g):
        for v in _bits_to_tuple(m):
            if (g.adj[v] & m).bit_count() == 2:
                mids |= 1 << v
            else:
                ends |= 1 << v
    return _bits_to_tuple(mids), _bits_to_tuple(ends)


def _ext_kind_of(g: Graph, mask: int) -> Optional[str]:
    if mask.bit_count() not in (4, 5):
        return None
    return _ext_key_table().get(g.induced_mask(mask).canonical_key())


@dataclass(frozen=True)
class ExtSpiderPartition:
    """Extension-graph spider: head joined to the midpoints of the base."""

    kind: str
    endpoints: tuple[int, ...]
    midpoints: tuple[int, ...]
    head: tuple[int, ...]


def _p4_masks_in(g: Graph, mask: int) -> tuple[int, ...]:
    if mask == (1 << g.n) - 1:
        return p4_masks(g)
    adj = g.adj
    out = []
    for quad in combinations(_bits_to_tuple(mask), 4):
        m = 0
        for v in quad:
            m |= 1 << v
        degs = [(adj[v] & m).bit_count() for v in quad]
        if sum(degs) == 6 and min(degs) == 1 and max(degs) == 2:
            out.append(m)
    return tuple(out)


def _find_ext_spider_masked(g: Graph, mask: int):
    """(kind, ends_mask, mids_mask, head_mask) of G[mask], or None.

    Tries every induced P4 as the seed W: the extension set of a P4 inside
    the head never validates, so a single arbitrary seed is not sound.
    """
    p4s = _p4_masks_in(g, mask)
    adj = g.adj
    for w in p4s:
        d = w
        for m in p4s:
            if m & w:
                d |= m
        if d.bit_count() > 5 or d == mask:
            continue
        kind = _ext_kind_of(g, d)
        if kind is None or kind not in SEPARABLE_KINDS:
            continue
        mids = 0
        ends = 0
        for m in p4s:
            if m & ~d:
                continue
            for v in _bits_to_tuple(m):
                if (adj[v] & m).bit_count() == 2:
                    mids |= 1 << v
                else:
                    ends |= 1 << v
        if mids & ends or (mids | ends) != d:
            continue
        rest = mask & ~d
        ok = True
        r = rest
        while r:
            v = (r & -r).bit_length() - 1
            r &= r - 1
            if adj[v] & d != mids:
                ok = False
                break
        if not ok:
            continue
        if any(m & d and m & rest for m in p4s):
            continue
        return kind, ends, mids, rest
    return None


def find_ext_spider(g: Graph) -> Optional[ExtSpiderPartition]:
    """Detect whether ``g`` is an extension-graph spider with nonempty head."""
    found = _find_ext_spider_masked(g, (1 << g.n) - 1)
    if found is None:
        return None
    kind, ends, mids, head = found
    return ExtSpiderPartition(
        kind, _bits_to_tuple(ends), _bits_to_tuple(mids), _bits_to_tuple(head)
    )


def sigma_sep(kind: str, head: Graph, cap: int = VERTEX_CAP) -> Graph:
    """Separable extension operation: base graph with head joined to its
    midpoints and nothing joined to its endpoints."""
    if kind not in SEPARABLE_KINDS:
        raise BadParameter(f"{kind!r} is not a separable extension graph")
    base = _ext_graphs()[kind]
    n = base.n + head.n
    if n > cap:
        raise CapExceeded(f"extension spider order {n} exceeds cap {cap}")
    mids, _ends = _separable_parts(kind)
    edges = base.edges()
    edges.extend((base.n + u, base.n + v) for u, v in head.edges())
    edges.extend((x, base.n + u) for x in mids for u in range(head.n))
    return gr.from_edges(n, edges, cap=cap)


def extension_set(g: Graph, w) -> tuple[int, ...]:
    """S(W): vertices outside W lying on a P4 that shares a vertex with W."""
    wmask = _mask_of(w)
    if wmask not in p4_masks(g):
        raise NotAP4(f"{tuple(sorted(w))} does not induce a P4")
    acc = 0
    for m in p4_masks(g):
        if m & wmask:
            acc |= m
    return _bits_to_tuple(acc & ~wmask)


# ---------------------------------------------------------------------------
# definitional recognizers

# Fingerprints of the seven forbidden 5-vertex graphs for P4-sparseness
# ({C5, P5, P, F} in the graph and in its complement). Two fingerprints are
# shared with innocent graphs and need a triangle count to split:
# (4,(1,1,2,2,2)) is P5 or K3+K2, and (6,(2,2,2,3,3)) is the house or K_{2,3}.
_FORBIDDEN_ALWAYS = {
    (4, (1, 1, 1, 2, 3)),  # fork
    (5, (2, 2, 2, 2, 2)),  # C5
    (5, (1, 2, 2, 2, 3)),  # banner (0 triangles) or co-banner (1); both forbidden
    (6, (1, 2, 3, 3, 3)),  # kite
}
_FORBIDDEN_NO_TRIANGLE = (4, (1, 1, 2, 2, 2))  # P5
_FORBIDDEN_ONE_TRIANGLE = (6, (2, 2, 2, 3, 3))  # house


def _triangles_in(adj, mask: int, verts) -> int:
    count = 0
    for v in verts:
        nv = adj[v] & mask
        row = nv >> (v + 1) << (v + 1)  # neighbors above v
        while row:
            u = (row & -row).bit_length() - 1
            row &= row - 1
            count += (adj[u] & nv >> (u + 1) << (u + 1)).bit_count()
    return count


def p4_sparse_certificate(g: Graph) -> Optional[tuple[int, ...]]:
    """A 5-vertex set inducing two P4s, or None when the graph is P4-sparse."""
    adj = g.adj
    for quint in combinations(range(g.n), 5):
        mask = 0
        for v in quint:
            mask |= 1 << v
        degs = tuple(sorted((adj[v] & mask).bit_count() for v in quint))
        fp = (sum(degs) // 2, degs)
        if fp in _FORBIDDEN_ALWAYS:
            return quint
        if fp == _FORBIDDEN_NO_TRIANGLE and _triangles_in(adj, mask, quint) == 0:
            return quint
        if fp == _FORBIDDEN_ONE_TRIANGLE and _triangles_in(adj, mask, quint) == 1:
            return quint
    return None


def p4_extendible_certificate(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(W, S(W)) with |S(W)| >= 2, or None when the graph is P4-extendible."""
    masks = p4_masks(g)
    for w in masks:
        acc = 0
        for m in masks:
            if m & w:
                acc |= m
        acc &= ~w
        if acc.bit_count() >= 2:
            return _bits_to_tuple(w), _bits_to_tuple(acc)
    return None


def _has_c5(g: Graph) -> bool:
    adj = g.adj
    for quint in combinations(range(g.n), 5):
        mask = 0
        for v in quint:
            mask |= 1 << v
        if all((adj[v] & mask).bit_count() == 2 for v in quint):
            if _triangles_in(adj, mask, quint) == 0:
                return True
    return False


# ---------------------------------------------------------------------------
# structural recognizers


def _sparse_structural(g: Graph, mask: int) -> bool:
    if mask.bit_count() <= 1:
        return True
    comps = _component_masks(g.adj, mask)
    if len(comps) > 1:
        return all(_sparse_structural(g, c) for c in comps)
    cocomps = _co_component_masks(g.adj, mask, g.n)
    if len(cocomps) > 1:
        return all(_sparse_structural(g, c) for c in cocomps)
    found = _find_spider_masked(g, mask)
    if found is None:
        return False
    head = found[2]
    return head == 0 or _sparse_structural(g, head)


def _ext_structural(g: Graph, mask: int) -> bool:
    if mask.bit_count() <= 1:
        return True
    comps = _component_masks(g.adj, mask)
    if len(comps) > 1:
        return all(_ext_structural(g, c) for c in comps)
    cocomps = _co_component_masks(g.adj, mask, g.n)
    if len(cocomps) > 1:
        return all(_ext_structural(g, c) for c in cocomps)
    if _ext_kind_of(g, mask) is not None:
        return True
    found = _find_ext_spider_masked(g, mask)
    if found is None:
        return False
    return _ext_structural(g, found[3])


Mode = Literal["definitional", "structural"]


def is_cograph(g: Graph) -> bool:
    """P4-free test."""
    return not p4_masks(g)


def is_p4_sparse(g: Graph, mode: Mode = "definitional") -> bool:
    if mode == "structural":
        return _sparse_structural(g, (1 << g.n) - 1)
    return p4_sparse_certificate(g) is None


def is_p4_extendible(g: Graph, mode: Mode = "definitional") -> bool:
    if mode == "structural":
        return _ext_structural(g, (1 << g.n) - 1)
    return p4_extendible_certificate(g) is None


def is_62_graph(g: Graph) -> bool:
    """C5-free P4-extendible test."""
    return not _has_c5(g) and is_p4_extendible(g)


def recognizer(class_id: ClassId):
    """Membership predicate for a class id."""
    table = {
        "cograph": is_cograph,
        "p4sparse": is_p4_sparse,
        "p4extendible": is_p4_extendible,
        "62": is_62_graph,
    }
    try:
        return table[class_id]
    except KeyError:
        raise BadParameter(f"unknown class id {class_id!r}") from None


# ---------------------------------------------------------------------------
# decomposition trees


@dataclass(frozen=True)
class Leaf:
    vertex: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.vertex,)


@dataclass(frozen=True)
class UnionNode:
    children: tuple["DecompTree", ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for c in self.children for v in c.vertices))


@dataclass(frozen=True)
class JoinNode:
    children: tuple["DecompTree", ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for c in self.children for v in c.vertices))


@dataclass(frozen=True)
class SpiderNode:
    partition: SpiderPartition
    head: Optional["DecompTree"]

    @property
    def vertices(self) -> tuple[int, ...]:
        p = self.partition
        return tuple(sorted(p.legs + p.body + p.head))


@dataclass(frozen=True)
class ExtGraphNode:
    kind: str
    members: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.members


@dataclass(frozen=True)
class ExtSpiderNode:
    kind: str
    endpoints: tuple[int, ...]
    midpoints: tuple[int, ...]
    base_edges: tuple[tuple[int, int], ...]
    head: "DecompTree"

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.endpoints + self.midpoints + self.head.vertices))


DecompTree = Union[Leaf, UnionNode, JoinNode, SpiderNode, ExtGraphNode, ExtSpiderNode]


def _edges_within(g: Graph, mask: int) -> tuple[tuple[int, int], ...]:
    vs = _bits_to_tuple(mask)
    return tuple(
        (u, v) for i, u in enumerate(vs) for v in vs[i + 1:] if g.has_edge(u, v)
    )


def build_decomposition(g: Graph, class_id: ClassId) -> DecompTree:
    """Decomposition tree for a P4-sparse or P4-extendible graph.

    Raises NotInClass (with a certificate) for non-members, and BadParameter
    for the empty graph, which has no tree.
    """
    if class_id == "p4sparse":
        cert = p4_sparse_certificate(g)
        if cert is not None:
            raise NotInClass("not P4-sparse", certificate=("five_vertex_set", cert))
    elif class_id == "p4extendible":
        cert = p4_extendible_certificate(g)
        if cert is not None:
            raise NotInClass(
                "not P4-extendible", certificate=("extension_set",) + cert
            )
    else:
        raise BadParameter(f"no decomposition mode for class {class_id!r}")
    if g.n == 0:
        raise BadParameter("the empty graph has no decomposition tree")
    return _decompose(g, (1 << g.n) - 1, class_id)


def _decompose(g: Graph, mask: int, class_id: ClassId) -> DecompTree:
    if mask.bit_count() == 1:
        return Leaf(mask.bit_length() - 1)
    comps = _component_masks(g.adj, mask)
    if len(comps) > 1:
        return UnionNode(tuple(_decompose(g, c, class_id) for c in comps))
    cocomps = _co_component_masks(g.adj, mask, g.n)
    if len(cocomps) > 1:
        return JoinNode(tuple(_decompose(g, c, class_id) for c in cocomps))
    if class_id == "p4sparse":
        found = _find_spider_masked(g, mask)
        if found is None:
            raise NotInClass("spider case failed", certificate=None)
        legs, body, head, thin, pairing = found
        part = SpiderPartition(
            _bits_to_tuple(legs), _bits_to_tuple(body), _bits_to_tuple(head),
            thin, pairing,
        )
        subtree = _decompose(g, head, class_id) if head else None
        return SpiderNode(part, subtree)
    kind = _ext_kind_of(g, mask)
    if kind is not None:
        return ExtGraphNode(kind, _bits_to_tuple(mask), _edges_within(g, mask))
    found = _find_ext_spider_masked(g, mask)
    if found is None:
        raise NotInClass("extension spider case failed", certificate=None)
    kind, ends, mids, head = found
    return ExtSpiderNode(
        kind,
        _bits_to_tuple(ends),
        _bits_to_tuple(mids),
        _edges_within(g, ends | mids),
        _decompose(g, head, class_id),
    )


def _collect_edges(node: DecompTree) -> list[tuple[int, int]]:
    if isinstance(node, Leaf):
        return []
    if isinstance(node, (UnionNode, JoinNode)):
        edges = [e for c in node.children for e in _collect_edges(c)]
        if isinstance(node, JoinNode):
            sets = [c.vertices for c in node.children]
            for i, a in enumerate(sets):
                for b in sets[i + 1:]:
                    edges.extend((u, v) for u in a for v in b)
        return edges
    if isinstance(node, SpiderNode):
        p = node.partition
        edges = list(_collect_edges(node.head)) if node.head else []
        edges.extend(
            (a, b) for i, a in enumerate(p.body) for b in p.body[i + 1:]
        )
        for leg, partner in p.pairing:
            if p.thin:
                edges.append((leg, partner))
            else:
                edges.extend((leg, b) for b in p.body if b != partner)
        edges.extend((h, b) for h in p.head for b in p.body)
        return edges
    if isinstance(node, ExtGraphNode):
        return list(node.edges)
    edges = list(node.base_edges)
    edges.extend(_collect_edges(node.head))
    edges.extend((h, m) for h in node.head.vertices for m in node.midpoints)
    return edges


def rebuild(tree: DecompTree) -> Graph:
    """Reconstruct the exact graph a full decomposition tree was built from."""
    verts = tree.vertices
    if verts != tuple(range(len(verts))):
        raise BadParameter("tree does not cover a contiguous vertex range")
    return gr.from_edges(len(verts), _collect_edges(tree))


# ---------------------------------------------------------------------------
# constructive generation


def generate_class(class_id: ClassId, n_max: int, cap: int = ENUM_CAP) -> Iterator[Graph]:
    """One member per isomorphism class, orders 1..n_max, by closure.

    Base graphs and operations per class: cographs close {K1} under disjoint
    union and join; P4-sparse adds headless spiders and the sigma/tau spider
    builders; P4-extendible starts from K1 plus the eight extension graphs
    and closes under the five separable extension operations as well; the
    C5-free variant drops C5 from the base (the operations cannot create an
    induced C5 across a boundary, since that would entail a crossing P4).
    """
    if n_max > cap:
        raise CapExceeded(f"n_max={n_max} exceeds generation cap {cap}")
    if class_id not in CLASS_IDS:
        raise BadParameter(f"unknown class id {class_id!r}")
    levels: dict[int, dict[bytes, Graph]] = {m: {} for m in range(1, n_max + 1)}

    def add(g: Graph) -> None:
        if 1 <= g.n <= n_max:
            levels[g.n].setdefault(g.canonical_key(), g)

    add(complete_graph(1))
    if class_id == "p4sparse":
        for j in range(2, n_max // 2 + 1):
            add(gr.headless_spider(j))
            if j >= 3:
                add(gr.headless_spider(j, thick=True))
    elif class_id in ("p4extendible", "62"):
        for kind in EXT_KINDS:
            if class_id == "62" and kind == "c5":
                continue
            add(_ext_graphs()[kind])

    for m in range(2, n_max + 1):
        if class_id == "p4sparse":
            for j in range(2, (m - 1) // 2 + 1):
                for h in levels[m - 2 * j].values():
                    add(sigma_j(h, j))
                    if j >= 3:
                        add(tau_j(h, j))
        elif class_id in ("p4extendible", "62"):
            for kind in SEPARABLE_KINDS:
                base = _ext_graphs()[kind].n
                if 1 <= m - base:
                    for h in levels[m - base].values():
                        add(sigma_sep(kind, h))
        for a in range(1, m // 2 + 1):
            b = m - a
            for x in levels[a].values():
                for y in levels[b].values():
                    add(disjoint_union(x, y))
                    add(join(x, y))

    for m in range(1, n_max + 1):
        for key in sorted(levels[m]):
            yield levels[m][key]
