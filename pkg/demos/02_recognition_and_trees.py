#!/usr/bin/env python3
"""Recognizing the four graph families and reading their decomposition trees.

Every graph in these families takes apart into disjoint unions, joins, and
spider-shaped pieces; rebuilding the tree returns the exact input graph.
"""

from polaritylab import (
    build_decomposition,
    catalog,
    cycle_graph,
    disjoint_union,
    extension_set,
    find_ext_spider,
    find_spider,
    is_62_graph,
    is_cograph,
    is_p4_extendible,
    is_p4_sparse,
    list_induced_p4s,
    path_graph,
    rebuild,
    sigma_j,
    sigma_sep,
)
from polaritylab.cli import _render_tree

samples = {
    "P4": path_graph(4),
    "C5": cycle_graph(5),
    "net": catalog("net"),
    "2P3": disjoint_union(path_graph(3), path_graph(3)),
    "E13": catalog("e13"),
}

print(f"{'graph':6s} {'cograph':>8s} {'sparse':>7s} {'extendible':>11s} {'(6,2)':>6s}")
for name, g in samples.items():
    print(f"{name:6s} {str(is_cograph(g)):>8s} {str(is_p4_sparse(g)):>7s} "
          f"{str(is_p4_extendible(g)):>11s} {str(is_62_graph(g)):>6s}")

net = catalog("net")
print("\nthe net is a thin headless spider:", find_spider(net))

bull = sigma_j(catalog("k1"), 2)
print("\nthe bull is a P4-spider over a single head vertex:", find_ext_spider(bull))

p5 = path_graph(5)
w = list_induced_p4s(p5)[0]
print(f"\nextension set of W={w} in P5:", extension_set(p5, w))

print("\ndecomposition trees:")
for name, class_id in (("2P3", "p4sparse"), ("net", "p4sparse"), ("C5", "p4extendible")):
    tree = build_decomposition(samples[name], class_id)
    print(f"  {name} [{class_id}]: {_render_tree(tree)}")
    assert rebuild(tree) == samples[name]

big = sigma_sep("kite", disjoint_union(path_graph(3), catalog("k2")))
tree = build_decomposition(big, "p4extendible")
print(f"  kite-spider over (P3+K2): {_render_tree(tree)}")
print("  rebuild reproduces the input:", rebuild(tree) == big)
