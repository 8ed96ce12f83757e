#!/usr/bin/env python3
"""Exact (s,k)-polar, monopolar, unipolar, and split partition search.

A partition puts a complete multipartite graph (at most s parts) on one
side and at most k disjoint cliques on the other; witnesses come back as
explicit vertex splits, always the same one for a given input.
"""

from polaritylab import (
    MONOPOLAR,
    POLAR,
    SPLIT,
    UNIPOLAR,
    catalog,
    cycle_graph,
    disjoint_union,
    find_polar_partition,
    is_split,
    path_graph,
    satisfies,
    sk_polar,
)

c5 = cycle_graph(5)
print("C5 under assorted partition specs:")
for spec in (SPLIT, sk_polar(2, 1), sk_polar(1, 2), MONOPOLAR, UNIPOLAR, POLAR):
    w = find_polar_partition(c5, spec)
    shown = f"A={list(w.a)} B={list(w.b)}" if w else "impossible"
    print(f"  {spec.label():10s} -> {shown}")

k23 = catalog("k2,3")
w = find_polar_partition(k23, MONOPOLAR)
print(f"\nK_2,3 is monopolar: A={list(w.a)} (independent), B={list(w.b)} (cliques)")

two_p3 = disjoint_union(path_graph(3), path_graph(3))
print("2P3 is unipolar:", satisfies(two_p3, UNIPOLAR))
print("2P3 minus any vertex is unipolar:",
      all(satisfies(two_p3.delete_vertex(v), UNIPOLAR) for v in range(6)))

print("\nsplit graphs are exactly the {2K2, C4, C5}-free graphs:")
for name in ("p4", "fork", "net", "c4", "c5"):
    g = catalog(name)
    print(f"  {name:5s} split={str(is_split(g)):5s} "
          f"search={find_polar_partition(g, SPLIT) is not None}")

e6 = catalog("e6")
print("\nE6 = K1 + W4 fails (2,1) but every deletion succeeds:")
print("  E6 (2,1)-polar:", satisfies(e6, sk_polar(2, 1)))
print("  all one-vertex deletions (2,1)-polar:",
      all(satisfies(e6.delete_vertex(v), sk_polar(2, 1)) for v in range(e6.n)))
