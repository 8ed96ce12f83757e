"""Graph kernel tests: construction, boolean ops, isomorphism, graph6,
induced-subgraph search, and exhaustive enumeration, each checked against an
independent oracle where the expected value is not forced by definition."""

from itertools import combinations, permutations

import pytest

from polaritylab.errors import (
    CapExceeded,
    LoopRejected,
    MalformedHeader,
    TrailingGarbage,
    TruncatedBody,
    UnknownName,
    VertexOutOfRange,
)
from polaritylab.graphs import (
    Graph,
    canonical_form,
    canonical_key,
    catalog,
    complete_graph,
    contains_induced,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_graphs,
    from_edges,
    graph6_decode,
    graph6_encode,
    headless_spider,
    is_isomorphic,
    join,
    list_induced_p4s,
    path_graph,
    union_all,
)


def test_from_edges_examples():
    p3 = from_edges(3, [(0, 1), (1, 2)])
    assert p3 == path_graph(3)
    assert from_edges(1, []) == complete_graph(1)
    assert from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]) == cycle_graph(5)
    # duplicates collapse
    assert from_edges(2, [(0, 1), (1, 0), (0, 1)]) == complete_graph(2)


def test_from_edges_errors():
    with pytest.raises(VertexOutOfRange):
        from_edges(3, [(0, 3)])
    with pytest.raises(LoopRejected):
        from_edges(3, [(1, 1)])
    with pytest.raises(CapExceeded):
        from_edges(33, [])


def test_graph_validation():
    with pytest.raises(VertexOutOfRange):
        Graph(2, (2, 0))  # asymmetric
    with pytest.raises(LoopRejected):
        Graph(1, (1,))
    with pytest.raises(VertexOutOfRange):
        Graph(1, (2,))


def test_complement():
    assert complete_graph(3).complement() == empty_graph(3)
    c5 = cycle_graph(5)
    assert is_isomorphic(c5.complement(), c5)
    # E4 is the complement of 3K2
    assert is_isomorphic(catalog("e4"), union_all(*[complete_graph(2)] * 3).complement())


def test_complement_involution_bit_exact(graphs_to_7):
    for g in graphs_to_7:
        assert g.complement().complement() == g


def test_union_join():
    assert join(empty_graph(2), complete_graph(1)) == from_edges(3, [(0, 2), (1, 2)])
    assert is_isomorphic(
        disjoint_union(path_graph(3), path_graph(3)), catalog("e2")
    )
    # indices: left operand keeps its labels, right is shifted
    g = disjoint_union(path_graph(2), path_graph(2))
    assert g.edges() == [(0, 1), (2, 3)]
    with pytest.raises(CapExceeded):
        join(complete_graph(20), complete_graph(20))


def test_join_de_morgan(graphs_to_6):
    pool = [g for g in graphs_to_6 if g.n == 3]
    for g in pool:
        for h in pool:
            direct = join(g, h)
            dual = disjoint_union(g.complement(), h.complement()).complement()
            assert direct == dual


def test_induced_subgraph():
    c5 = cycle_graph(5)
    for quad in combinations(range(5), 4):
        assert is_isomorphic(c5.induced(quad), path_graph(4))
    g = catalog("e7")
    assert g.induced(range(g.n)) == g
    net = catalog("net")
    deg3 = [v for v in range(6) if net.degree(v) == 3]
    assert is_isomorphic(net.induced(deg3), complete_graph(3))
    with pytest.raises(VertexOutOfRange):
        c5.induced([0, 7])


def test_isomorphism_examples():
    p4 = path_graph(4)
    assert is_isomorphic(p4, p4.complement())
    assert not is_isomorphic(catalog("k1,3"), p4)
    assert is_isomorphic(cycle_graph(5), cycle_graph(5).complement())
    assert canonical_form(p4).canonical_key() == p4.canonical_key()
    assert is_isomorphic(canonical_form(p4), p4)


def _brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    for perm in permutations(range(g.n)):
        if all(
            g.has_edge(u, v) == h.has_edge(perm[u], perm[v])
            for u in range(g.n)
            for v in range(u + 1, g.n)
        ):
            return True
    return False


def test_canonical_key_vs_exhaustive_permutations():
    graphs = [g for g in enumerate_graphs(5)]
    # within each order, keys agree with brute-force isomorphism on all pairs
    for i, g in enumerate(graphs):
        for h in graphs[i:]:
            if g.n != h.n:
                continue
            same_key = canonical_key(g) == canonical_key(h)
            assert same_key == _brute_isomorphic(g, h)
    # and relabelings never change the key
    for g in graphs:
        if g.n < 2:
            continue
        perm = tuple(reversed(range(g.n)))
        rows = [0] * g.n
        for u, v in g.edges():
            rows[perm[u]] |= 1 << perm[v]
            rows[perm[v]] |= 1 << perm[u]
        assert canonical_key(Graph(g.n, tuple(rows))) == canonical_key(g)


# --- graph6 ----------------------------------------------------------------


def _reference_graph6(g: Graph) -> str:
    """Independent re-encoding: explicit bit list, then 6-bit packing."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        out.append(chr(63 + int("".join(map(str, bits[i:i + 6])), 2)))
    return "".join(out)


def test_graph6_fixed_examples():
    assert graph6_encode(complete_graph(1)) == "@"
    assert graph6_decode("@") == complete_graph(1)
    assert graph6_encode(complete_graph(4)) == "C~"
    assert graph6_decode("C~") == complete_graph(4)
    assert graph6_encode(path_graph(4)) == "Ch"
    assert graph6_decode("Ch") == path_graph(4)


def test_graph6_matches_reference_and_roundtrips(graphs_to_7):
    for g in graphs_to_7:
        text = graph6_encode(g)
        assert text == _reference_graph6(g)
        assert graph6_decode(text) == g


def test_graph6_errors():
    with pytest.raises(MalformedHeader):
        graph6_decode("")
    with pytest.raises(MalformedHeader):
        graph6_decode(":Ch")  # sparse6
    with pytest.raises(MalformedHeader):
        graph6_decode("\x1fCh")
    with pytest.raises(CapExceeded):
        graph6_decode("~??")  # multi-byte header
    with pytest.raises(TruncatedBody):
        graph6_decode("C")
    with pytest.raises(TrailingGarbage):
        graph6_decode("Chh")
    with pytest.raises(TrailingGarbage):
        graph6_decode("BF")  # n=3 leaves 3 padding bits; they must be zero
    with pytest.raises(CapExceeded):
        graph6_decode(chr(63 + 40) + "?" * 130)  # order above the vertex cap


# --- induced subgraph search -------------------------------------------------


def test_contains_induced_examples():
    assert contains_induced(cycle_graph(5), path_graph(4)) is not None
    assert contains_induced(cycle_graph(4), path_graph(4)) is None
    two_k2 = union_all(complete_graph(2), complete_graph(2))
    emb = contains_induced(catalog("e1"), two_k2)
    assert emb is not None
    assert contains_induced(path_graph(3), complete_graph(4)) is None  # h bigger


def test_contains_induced_embedding_is_valid(graphs_to_6):
    h = path_graph(4)
    for g in graphs_to_6:
        emb = contains_induced(g, h)
        if emb is not None:
            assert len(set(emb)) == 4
            assert is_isomorphic(g.induced(emb), h)


def test_contains_induced_vs_naive(graphs_to_7):
    targets = [
        path_graph(3),
        path_graph(4),
        cycle_graph(4),
        union_all(complete_graph(2), complete_graph(2)),
        cycle_graph(5),
    ]
    keys = [canonical_key(t) for t in targets]
    for g in graphs_to_7:
        for h, hkey in zip(targets, keys):
            naive = any(
                canonical_key(g.induced(sub)) == hkey
                for sub in combinations(range(g.n), h.n)
            )
            assert (contains_induced(g, h) is not None) == naive


def test_list_induced_p4s(graphs_to_7):
    assert list_induced_p4s(cycle_graph(4)) == []
    assert list_induced_p4s(path_graph(4)) == [(0, 1, 2, 3)]
    assert len(list_induced_p4s(cycle_graph(5))) == 5
    p4key = canonical_key(path_graph(4))
    for g in graphs_to_7:
        naive = [
            quad
            for quad in combinations(range(g.n), 4)
            if canonical_key(g.induced(quad)) == p4key
        ]
        assert list_induced_p4s(g) == naive


# --- enumeration -------------------------------------------------------------


def test_enumeration_counts_vs_labeled_dedupe():
    for n in range(1, 7):
        labeled = set()
        for code in range(1 << (n * (n - 1) // 2)):
            rows = [0] * n
            idx = 0
            for j in range(1, n):
                for i in range(j):
                    if (code >> idx) & 1:
                        rows[i] |= 1 << j
                        rows[j] |= 1 << i
                    idx += 1
            labeled.add(canonical_key(Graph(n, tuple(rows))))
        ours = [g for g in enumerate_graphs(n) if g.n == n]
        assert len(ours) == len(labeled)
        assert {canonical_key(g) for g in ours} == labeled


def test_enumeration_known_counts(graphs_to_7):
    from collections import Counter

    counts = Counter(g.n for g in graphs_to_7)
    assert [counts[i] for i in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


def test_enumeration_deterministic():
    a = [graph6_encode(g) for g in enumerate_graphs(5)]
    b = [graph6_encode(g) for g in enumerate_graphs(5)]
    assert a == b
    with pytest.raises(CapExceeded):
        next(iter(enumerate_graphs(11)))


# --- catalog -----------------------------------------------------------------


def test_catalog_names():
    assert is_isomorphic(catalog("E9"), disjoint_union(complete_graph(3), complete_graph(3)))
    assert is_isomorphic(
        catalog("e13"), disjoint_union(complete_graph(2), cycle_graph(5)).complement()
    )
    assert is_isomorphic(catalog("net"), headless_spider(3))
    assert is_isomorphic(catalog("thick3"), headless_spider(3).complement())
    assert is_isomorphic(catalog("house"), catalog("p5").complement())
    assert is_isomorphic(catalog("kite"), catalog("fork").complement())
    assert is_isomorphic(catalog("cobanner"), catalog("banner").complement())
    assert catalog("K2,3").n == 5
    assert is_isomorphic(catalog("k2,2,2"), catalog("e4"))
    assert is_isomorphic(catalog("w4"), join(cycle_graph(4), complete_graph(1)))
    with pytest.raises(UnknownName):
        catalog("e14")
    with pytest.raises(UnknownName):
        catalog("blob")
    with pytest.raises(CapExceeded):
        catalog("k40")


def test_e_graph_fixed_forms():
    # each E-graph matches its published composition
    p3, k1, k2, k3 = path_graph(3), complete_graph(1), complete_graph(2), complete_graph(3)
    c4, c5 = cycle_graph(4), cycle_graph(5)
    compositions = {
        "e1": union_all(k1, k2, k2),
        "e2": union_all(p3, p3),
        "e3": union_all(c4, k1, k1),
        "e4": union_all(k2, k2, k2).complement(),
        "e5": disjoint_union(k2, c4).complement(),
        "e6": disjoint_union(k1, join(c4, k1)),
        "e7": disjoint_union(k1, disjoint_union(p3, k2).complement()),
        "e8": disjoint_union(k2, join(empty_graph(2), k2)),
        "e9": union_all(k3, k3),
        "e10": disjoint_union(k1, c5),
        "e11": disjoint_union(k1, catalog("banner")),
        "e12": disjoint_union(k1, catalog("house")),
        "e13": disjoint_union(k2, c5).complement(),
    }
    for name, g in compositions.items():
        assert is_isomorphic(catalog(name), g), name
