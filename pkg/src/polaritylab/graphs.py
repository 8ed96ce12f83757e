"""Small-graph kernel: bitset adjacency, isomorphism, graph6, enumeration.

A :class:`Graph` is an immutable value: a vertex count ``n`` plus one integer
bitmask per vertex holding that vertex's neighborhood. Every operation
returns a new graph, so values can be shared freely across workers. The
vertex cap (default 32) keeps each row inside one machine word.

Canonical forms are exact: the key of a graph is its order followed by the
lexicographically minimal upper-triangle bit string over all vertex
relabelings, found by a pruned search. Two graphs are isomorphic iff their
keys are equal. Non-isomorphic enumeration uses canonical augmentation (a
one-vertex extension is kept iff the new vertex can sit last in a minimal
labeling), which keeps memory flat and parallelizes by parent.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Iterator

from .errors import (
    CapExceeded,
    LoopRejected,
    MalformedHeader,
    TrailingGarbage,
    TruncatedBody,
    UnknownName,
    VertexOutOfRange,
)

VERTEX_CAP = 32
ENUM_CAP = 10  # guard for exhaustive non-isomorphic enumeration


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighborhood of ``v`` as a bitmask. Construction
    validates symmetry, absence of loops, and that no bit index reaches n.
    """

    __slots__ = ("n", "adj", "_bits", "_p4s")

    def __init__(self, n: int, adj: tuple[int, ...]):
        if n < 0 or len(adj) != n:
            raise VertexOutOfRange(f"adjacency has {len(adj)} rows for n={n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise VertexOutOfRange(f"row {v} has a bit >= n={n}")
            if (row >> v) & 1:
                raise LoopRejected(f"loop at vertex {v}")
        for v in range(n):
            row = adj[v]
            while row:
                u = (row & -row).bit_length() - 1
                row &= row - 1
                if not (adj[u] >> v) & 1:
                    raise VertexOutOfRange(f"asymmetric edge ({v},{u})")
        self.n = n
        self.adj = tuple(adj)
        self._bits = None
        self._p4s = None

    # -- basic accessors ---------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return _bits_to_tuple(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ascending pairs, in lexicographic order."""
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            u = v + 1
            while row:
                if row & 1:
                    out.append((v, u))
                row >>= 1
                u += 1
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    # -- derived graphs ----------------------------------------------------

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(
            self.n, tuple((full ^ row ^ (1 << v)) for v, row in enumerate(self.adj))
        )

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices``; new indices follow ascending order."""
        vs = sorted(set(vertices))
        if vs and (vs[0] < 0 or vs[-1] >= self.n):
            raise VertexOutOfRange(f"vertex set {vs} not within 0..{self.n - 1}")
        pos = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            row = 0
            r = self.adj[v]
            for u in vs:
                if (r >> u) & 1:
                    row |= 1 << pos[u]
            rows.append(row)
        return Graph(len(vs), tuple(rows))

    def induced_mask(self, mask: int) -> Graph:
        return self.induced(_bits_to_tuple(mask))

    def delete_vertex(self, v: int) -> Graph:
        return self.induced([u for u in range(self.n) if u != v])

    # -- connectivity ------------------------------------------------------

    def component_masks(self) -> list[int]:
        """Vertex masks of the connected components, by smallest member."""
        return _component_masks(self.adj, (1 << self.n) - 1)

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    # -- canonical form ----------------------------------------------------

    @property
    def canonical_bits(self) -> int:
        """Minimal upper-triangle bit string packed into an int (cached)."""
        if self._bits is None:
            self._bits = _min_bits(self.adj, range(self.n))[0]
        return self._bits

    def canonical_key(self) -> bytes:
        return _pack_key(self.n, self.canonical_bits)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()})"

    def __reduce__(self):
        return (Graph, (self.n, self.adj))


# ---------------------------------------------------------------------------
# construction


def from_edges(n: int, edges: Iterable[tuple[int, int]], cap: int = VERTEX_CAP) -> Graph:
    """Build a graph from an edge list; duplicate pairs collapse."""
    if n > cap:
        raise CapExceeded(f"n={n} exceeds cap {cap}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopRejected(f"loop ({u},{v})")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise VertexOutOfRange(f"cycle needs n >= 3, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(parts: Iterable[int]) -> Graph:
    """Complete multipartite graph; parts occupy consecutive index blocks."""
    sizes = list(parts)
    n = sum(sizes)
    rows = [0] * n
    full = (1 << n) - 1
    start = 0
    for size in sizes:
        block = ((1 << size) - 1) << start
        for v in range(start, start + size):
            rows[v] = full & ~block
        start += size
    return Graph(n, tuple(rows))


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite((a, b))


def headless_spider(j: int, thick: bool = False) -> Graph:
    """Headless spider: body clique 0..j-1, legs j..2j-1 matched to the body.

    Thin legs see exactly their partner; thick legs see everything but it.
    """
    from .errors import BadParameter

    if j < 2:
        raise BadParameter(f"spider parameter j={j} < 2")
    edges = [(a, b) for a in range(j) for b in range(a + 1, j)]
    for i in range(j):
        if thick:
            edges.extend((b, j + i) for b in range(j) if b != i)
        else:
            edges.append((i, j + i))
    return from_edges(2 * j, edges)


def disjoint_union(g: Graph, h: Graph, cap: int = VERTEX_CAP) -> Graph:
    """Disjoint union; g keeps its indices, h is shifted by |V_g|."""
    n = g.n + h.n
    if n > cap:
        raise CapExceeded(f"union order {n} exceeds cap {cap}")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, tuple(rows))


def join(g: Graph, h: Graph, cap: int = VERTEX_CAP) -> Graph:
    """Join: disjoint union plus all cross edges."""
    n = g.n + h.n
    if n > cap:
        raise CapExceeded(f"join order {n} exceeds cap {cap}")
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    rows = [row | hmask for row in g.adj] + [(row << g.n) | gmask for row in h.adj]
    return Graph(n, tuple(rows))


def union_all(*graphs: Graph) -> Graph:
    out = graphs[0]
    for g in graphs[1:]:
        out = disjoint_union(out, g)
    return out


def join_all(*graphs: Graph) -> Graph:
    out = graphs[0]
    for g in graphs[1:]:
        out = join(out, g)
    return out


# ---------------------------------------------------------------------------
# mask helpers (shared with the recognizers)


def _bits_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def _component_masks(adj, mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & mask & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def _co_component_masks(adj, mask: int, n: int) -> list[int]:
    co = [mask & ~adj[v] & ~(1 << v) for v in range(n)]
    return _component_masks(co, mask)


# ---------------------------------------------------------------------------
# canonical labeling

# The search places vertices one position at a time, always extending only
# the partial labelings whose bit-string prefix is minimal. Bit order is the
# graph6 column order (0,1),(0,2),(1,2),(0,3),..., so all bits among placed
# vertices form a prefix. States with identical futures are merged: the key
# is (placed set, adjacency vector of every unplaced vertex to the placed
# sequence), which collapses the factorial blowup on symmetric graphs.


_PLACED = 1 << 60  # sentinel larger than any column (columns have < cap bits)


def _min_bits(adj, verts) -> tuple[int, list]:
    """Return (bits, final states); a state is (perm, vecs).

    ``perm`` holds original vertex ids in placement order; ``vecs`` is
    position-indexed bookkeeping (placed positions hold a huge sentinel, so
    the minimal next column is just min(vecs)).
    """
    order = list(verts)
    m = len(order)
    if m == 0:
        return 0, [((), [])]
    rowbit = [[(adj[u] >> v) & 1 for v in order] for u in order]
    states = [((), [0] * m)]
    bits = 0
    rng = range(m)
    for k in range(m):
        best = min(map(min, (s[1] for s in states)))
        bits = (bits << k) | best
        nxt = {}
        for perm, vecs in states:
            if best not in vecs:
                continue
            for i in rng:
                if vecs[i] != best:
                    continue
                rb = rowbit[i]
                vecs2 = [
                    w if (w := vecs[u]) == _PLACED else (w << 1) | rb[u]
                    for u in rng
                ]
                vecs2[i] = _PLACED
                key = tuple(vecs2)
                if key not in nxt:
                    nxt[key] = (perm + (order[i],), vecs2)
        states = list(nxt.values())
    return bits, states


def _pinned_bits(g: Graph, pin: int) -> int:
    """Minimal bit string over labelings forced to place ``pin`` last."""
    adj = g.adj
    rest = [v for v in range(g.n) if v != pin]
    bits, states = _min_bits(adj, rest)
    return (bits << len(rest)) | _best_final_column(adj[pin], states)


def _best_final_column(pin_row: int, states: list) -> int:
    best = None
    for perm, _vecs in states:
        col = 0
        for w in perm:
            col = (col << 1) | ((pin_row >> w) & 1)
        if best is None or col < best:
            best = col
    return best


def _pack_key(n: int, bits: int) -> bytes:
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    return bytes([n]) + (bits << (8 * nbytes - nbits)).to_bytes(nbytes, "big")


def canonical_key(g: Graph) -> bytes:
    """Byte string identifying the isomorphism class of ``g``."""
    return g.canonical_key()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.canonical_bits == h.canonical_bits


def canonical_form(g: Graph) -> Graph:
    """The canonically relabeled copy of ``g`` (same key, fixed labels)."""
    _bits, states = _min_bits(g.adj, range(g.n))
    perm = states[0][0]
    pos = {v: i for i, v in enumerate(perm)}
    rows = [0] * g.n
    for i, v in enumerate(perm):
        row = g.adj[v]
        while row:
            u = (row & -row).bit_length() - 1
            row &= row - 1
            rows[i] |= 1 << pos[u]
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# induced subgraph search


def contains_induced(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """First injective map (in lexicographic order) embedding h induced in g.

    Returns a tuple ``t`` with ``t[i]`` the image of h-vertex ``i``, or None
    when no vertex subset of g induces a copy of h. The search is exhaustive.
    """
    if h.n > g.n:
        return None
    gadj, hadj = g.adj, h.adj
    image = []
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == h.n:
            return True
        want = hadj[i]
        for v in range(g.n):
            if (used >> v) & 1:
                continue
            ok = True
            for j in range(i):
                if ((want >> j) & 1) != ((gadj[v] >> image[j]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            image.append(v)
            used |= 1 << v
            if extend(i + 1):
                return True
            image.pop()
            used ^= 1 << v
        return False

    if extend(0):
        return tuple(image)
    return None


def p4_masks(g: Graph) -> tuple[int, ...]:
    """Masks of all vertex sets inducing a P4, ascending (cached on g)."""
    if g._p4s is None:
        adj = g.adj
        found = []
        for quad in combinations(range(g.n), 4):
            mask = 0
            for v in quad:
                mask |= 1 << v
            degs = [(adj[v] & mask).bit_count() for v in quad]
            if sum(degs) != 6:  # 3 edges
                continue
            if min(degs) == 1 and max(degs) == 2:
                found.append(mask)
        g._p4s = tuple(found)
    return g._p4s


def list_induced_p4s(g: Graph) -> list[tuple[int, int, int, int]]:
    """All 4-sets inducing a P4, each once, ascending."""
    return [_bits_to_tuple(m) for m in p4_masks(g)]


# ---------------------------------------------------------------------------
# graph6 codec (single-byte header, n <= 62)


def graph6_encode(g: Graph) -> str:
    if g.n > 62:
        raise CapExceeded(f"graph6 single-byte header caps n at 62, got {g.n}")
    chunks = [chr(63 + g.n)]
    buf = 0
    fill = 0
    for j in range(1, g.n):
        for i in range(j):
            buf = (buf << 1) | ((g.adj[i] >> j) & 1)
            fill += 1
            if fill == 6:
                chunks.append(chr(63 + buf))
                buf = 0
                fill = 0
    if fill:
        chunks.append(chr(63 + (buf << (6 - fill))))
    return "".join(chunks)


def graph6_decode(text: str, cap: int = VERTEX_CAP) -> Graph:
    """Decode one graph6 line; strict about length and zero padding."""
    if not text:
        raise MalformedHeader("empty graph6 string")
    head = ord(text[0])
    if text[0] in ":;&":
        raise MalformedHeader(f"unsupported format header {text[0]!r}")
    if head == 126:
        raise CapExceeded("multi-byte graph6 header (n > 62) not supported")
    if not 63 <= head <= 125:
        raise MalformedHeader(f"header byte {head} outside 63..125")
    n = head - 63
    if n > cap:
        raise CapExceeded(f"decoded order {n} exceeds cap {cap}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = text[1:]
    if len(body) < need:
        raise TruncatedBody(f"need {need} body bytes, got {len(body)}")
    if len(body) > need:
        raise TrailingGarbage(f"{len(body) - need} extra bytes")
    rows = [0] * n
    idx = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise MalformedHeader(f"body byte {ord(ch)} outside 63..126")
        for b in range(5, -1, -1):
            bit = (val >> b) & 1
            if idx < nbits:
                if bit:
                    i, j = _triangle_coords(idx)
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            elif bit:
                raise TrailingGarbage("nonzero padding bits")
            idx += 1
    return Graph(n, tuple(rows))


def _triangle_coords(idx: int) -> tuple[int, int]:
    # column order: (0,1),(0,2),(1,2),(0,3),...; column j holds j bits
    j = 1
    while idx >= j:
        idx -= j
        j += 1
    return idx, j


# ---------------------------------------------------------------------------
# exhaustive non-isomorphic enumeration


def enumerate_graphs(n_max: int, cap: int = ENUM_CAP) -> Iterator[Graph]:
    """One representative per isomorphism class, orders 1..n_max.

    Canonical augmentation: a child of an order-m representative (new vertex
    m attached by an arbitrary neighborhood mask) is kept iff some minimal
    labeling of the child places the new vertex last; isomorphic children of
    the same parent are deduplicated by key. Output per order is sorted by
    canonical key.
    """
    if n_max > cap:
        raise CapExceeded(f"n_max={n_max} exceeds enumeration cap {cap}")
    if n_max < 1:
        return
    level = [complete_graph(1)]
    yield level[0]
    for m in range(1, n_max):
        nxt = []
        for parent in level:
            rows = parent.adj
            # the pinned search over the old vertices never reads the new
            # vertex's bits, so it is shared by all 2^m extensions
            pbits, pstates = _min_bits(rows, range(m))
            pbase = pbits << m
            accepted = set()
            for mask in range(1 << m):
                child_rows = tuple(
                    rows[v] | (1 << m) if (mask >> v) & 1 else rows[v]
                    for v in range(m)
                ) + (mask,)
                child = Graph(m + 1, child_rows)
                free = child.canonical_bits
                if free in accepted:
                    continue
                if pbase | _best_final_column(mask, pstates) == free:
                    accepted.add(free)
                    nxt.append(child)
        nxt.sort(key=Graph.canonical_key)
        yield from nxt
        level = nxt


# ---------------------------------------------------------------------------
# named catalog

_PCK = re.compile(r"^([pck])(\d+(?:,\d+)*)$")
_SPIDER = re.compile(r"^(thin|thick)(\d+)$")
_EGRAPH = re.compile(r"^e(\d+)$")


def _named_fixed() -> dict[str, Graph]:
    k1, k2, k3 = complete_graph(1), complete_graph(2), complete_graph(3)
    p3 = path_graph(3)
    c4, c5 = cycle_graph(4), cycle_graph(5)
    house = from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (2, 4), (3, 4)])
    banner = from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (2, 4)])
    fork = from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    kite = from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4)])
    w4 = join(cycle_graph(4), k1)
    net = from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
    fixed = {
        "house": house,
        "banner": banner,
        "cobanner": banner.complement(),
        "fork": fork,
        "kite": kite,
        "w4": w4,
        "net": net,
        "e1": union_all(k1, k2, k2),
        "e2": union_all(p3, p3),
        "e3": union_all(c4, k1, k1),
        "e4": union_all(k2, k2, k2).complement(),
        "e5": disjoint_union(k2, c4).complement(),
        "e6": disjoint_union(k1, w4),
        "e7": disjoint_union(k1, disjoint_union(p3, k2).complement()),
        "e8": disjoint_union(k2, join(empty_graph(2), k2)),
        "e9": disjoint_union(k3, k3),
        "e10": disjoint_union(k1, c5),
        "e11": disjoint_union(k1, banner),
        "e12": disjoint_union(k1, house),
        "e13": disjoint_union(k2, c5).complement(),
    }
    return fixed


_FIXED_CACHE: dict[str, Graph] = {}


def catalog(name: str) -> Graph:
    """Look up a named graph: Pn, Cn, Kn, Ka,b,..., W4, house, banner,
    cobanner, fork, kite, net, thin<j>/thick<j> spiders, E1..E13."""
    key = name.strip().lower().replace(" ", "").replace("_", "").replace("-", "")
    if not _FIXED_CACHE:
        _FIXED_CACHE.update(_named_fixed())
    if key in _FIXED_CACHE:
        return _FIXED_CACHE[key]
    m = _EGRAPH.match(key)
    if m:
        raise UnknownName(f"no catalog graph named {name!r}")
    m = _SPIDER.match(key)
    if m:
        j = int(m.group(2))
        if 2 * j > VERTEX_CAP:
            raise CapExceeded(f"spider on {2 * j} vertices exceeds cap")
        return headless_spider(j, thick=(m.group(1) == "thick"))
    m = _PCK.match(key)
    if m:
        kind, nums = m.group(1), [int(x) for x in m.group(2).split(",")]
        if sum(nums) > VERTEX_CAP:
            raise CapExceeded(f"{name!r} exceeds vertex cap")
        if kind == "k":
            return complete_graph(nums[0]) if len(nums) == 1 else complete_multipartite(nums)
        if len(nums) != 1:
            raise UnknownName(f"no catalog graph named {name!r}")
        if kind == "p":
            return path_graph(nums[0])
        if nums[0] < 3:
            raise UnknownName(f"no catalog graph named {name!r}")
        return cycle_graph(nums[0])
    raise UnknownName(f"no catalog graph named {name!r}")
