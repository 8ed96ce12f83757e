#!/usr/bin/env python3
"""Reproducing the finite minimal-obstruction lists.

Exhaustive search over generated class members and the recursive
constructor arrive at the same answers: two or three unipolar obstructions,
nine and thirteen minimal (2,1)-polar obstructions, four or seven minimal
(inf,1)-polar obstructions, and eight or fourteen minimal polar ones.
"""

from polaritylab import (
    UNIPOLAR,
    POLAR,
    canonical_key,
    catalog,
    construct_s1_obstructions,
    enumerate_minimal_obstructions,
    graph6_encode,
    is_antichain,
    sk_polar,
)

E_NAMES = {canonical_key(catalog(f"e{i}")): f"E{i}" for i in range(1, 14)}


def show(title, graphs):
    names = [E_NAMES.get(canonical_key(g), graph6_encode(g)) for g in graphs]
    print(f"{title}: {len(graphs)} graphs -> {', '.join(names)}")


show("P4-sparse minimal unipolar obstructions (n<=6)",
     enumerate_minimal_obstructions("p4sparse", UNIPOLAR, 6))
show("P4-extendible minimal unipolar obstructions (n<=6)",
     enumerate_minimal_obstructions("p4extendible", UNIPOLAR, 6))

print()
show("P4-sparse minimal (2,1)-polar obstructions (n<=8)",
     enumerate_minimal_obstructions("p4sparse", sk_polar(2, 1), 8))
show("P4-extendible minimal (2,1)-polar obstructions (n<=8)",
     enumerate_minimal_obstructions("p4extendible", sk_polar(2, 1), 8))

print()
show("P4-sparse minimal (inf,1)-polar obstructions (n<=7)",
     enumerate_minimal_obstructions("p4sparse", sk_polar(None, 1), 7))
show("P4-extendible minimal (inf,1)-polar obstructions (n<=7)",
     enumerate_minimal_obstructions("p4extendible", sk_polar(None, 1), 7))

print()
for s in (2, 3):
    built = construct_s1_obstructions("p4extendible", s)
    show(f"recursively constructed P4-extendible (s={s},1) obstructions", built)
    ok, _ = is_antichain(built)
    print(f"  pairwise incomparable under induced subgraphs: {ok}")

print()
show("P4-sparse minimal polar obstructions (n<=9)",
     enumerate_minimal_obstructions("p4sparse", POLAR, 9))
