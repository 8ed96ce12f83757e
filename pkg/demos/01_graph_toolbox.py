#!/usr/bin/env python3
"""Tour of the small-graph kernel: building graphs, graph6, isomorphism,
induced-subgraph search, and exhaustive enumeration."""

from collections import Counter

from polaritylab import (
    catalog,
    complete_graph,
    contains_induced,
    cycle_graph,
    disjoint_union,
    enumerate_graphs,
    graph6_decode,
    graph6_encode,
    is_isomorphic,
    list_induced_p4s,
    path_graph,
)

p4 = path_graph(4)
c5 = cycle_graph(5)

print("P4 as graph6:", graph6_encode(p4))
print("K4 as graph6:", graph6_encode(complete_graph(4)))
print("round trip:", graph6_decode(graph6_encode(c5)) == c5)

print("\nP4 is self-complementary:", is_isomorphic(p4, p4.complement()))
print("C5 is self-complementary:", is_isomorphic(c5, c5.complement()))

print("\nC5 contains an induced P4 at:", contains_induced(c5, p4))
print("C4 contains an induced P4:", contains_induced(cycle_graph(4), p4) is not None)
print("induced P4s of C5:", list_induced_p4s(c5))

print("\nNamed catalog samples:")
for name in ("net", "banner", "kite", "e4", "e13", "k2,3", "thin3"):
    g = catalog(name)
    print(f"  {name:6s} -> n={g.n}, edges={g.edge_count()}, graph6={graph6_encode(g)}")

print("\nE4 is the complement of 3K2:",
      is_isomorphic(catalog("e4"),
                    disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)),
                                   complete_graph(2)).complement()))

counts = Counter(g.n for g in enumerate_graphs(7))
print("\nnon-isomorphic graphs per order:",
      [counts[n] for n in range(1, 8)])
