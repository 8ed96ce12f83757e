"""Obstruction-engine tests: minimality verdicts with witnesses, the fixed
catalogs, the recursive (s,1) constructor, antichain checks, and the claim
harness at small scale. The heavy exact-reproduction runs live in
test_acceptance.py."""

import pytest

from polaritylab.classes import sigma_j, sigma_sep, tau_j
from polaritylab.errors import BadParameter, UnknownClaim, UnknownId
from polaritylab.graphs import (
    canonical_key,
    catalog,
    complete_graph,
    cycle_graph,
    disjoint_union,
    graph6_decode,
    headless_spider,
    is_isomorphic,
    path_graph,
    union_all,
)
from polaritylab.obstructions import (
    catalog_list,
    construct_s1_obstructions,
    enumerate_minimal_obstructions,
    is_antichain,
    is_minimal_obstruction,
    obstruction_record,
    s1_fixed_family,
    verify_claim,
)
from polaritylab.polarity import MONOPOLAR, POLAR, UNIPOLAR, sk_polar


def keyset(graphs):
    return {canonical_key(g) for g in graphs}


def two_p3():
    return union_all(path_graph(3), path_graph(3))


def test_unipolar_minimal_examples():
    for g in (two_p3(), catalog("k2,3"), cycle_graph(7).complement()):
        report = is_minimal_obstruction(g, UNIPOLAR)
        assert report.is_obstruction and report.is_minimal
        for v, w in report.deletion_witnesses.items():
            assert w.validate(g.delete_vertex(v), UNIPOLAR)
    report = is_minimal_obstruction(path_graph(3), UNIPOLAR)
    assert not report.is_obstruction and not report.is_minimal


def test_headless_spiders_never_obstruct():
    for j in (2, 3, 4):
        for thick in (False, True):
            spider = headless_spider(j, thick)
            for s in (1, 2):
                for k in (1, 2):
                    assert not is_minimal_obstruction(spider, sk_polar(s, k)).is_obstruction


def test_e_graphs_are_minimal_21_obstructions():
    spec = sk_polar(2, 1)
    for i in range(1, 14):
        report = is_minimal_obstruction(catalog(f"e{i}"), spec)
        assert report.is_minimal, f"e{i}"


def test_non_minimal_obstruction():
    g = disjoint_union(two_p3(), complete_graph(1))
    report = is_minimal_obstruction(g, UNIPOLAR)
    assert report.is_obstruction and not report.is_minimal
    assert report.deletion_witnesses == {}


def test_enumerate_unipolar_small():
    got = enumerate_minimal_obstructions("p4sparse", UNIPOLAR, 6)
    assert keyset(got) == keyset([two_p3(), catalog("k2,3")])
    got = enumerate_minimal_obstructions("p4extendible", UNIPOLAR, 6)
    assert keyset(got) == keyset([two_p3(), catalog("k2,3"), cycle_graph(5)])
    # sorted by (order, canonical key)
    assert [g.n for g in got] == sorted(g.n for g in got)


def test_construction_matches_catalog_at_s2():
    nine = construct_s1_obstructions("p4sparse", 2)
    assert keyset(nine) == keyset(catalog(f"e{i}") for i in range(1, 10))
    thirteen = construct_s1_obstructions("p4extendible", 2)
    assert keyset(thirteen) == keyset(catalog(f"e{i}") for i in range(1, 14))


def test_construction_s3_contains_2k4():
    graphs = construct_s1_obstructions("p4sparse", 3)
    two_k4 = disjoint_union(complete_graph(4), complete_graph(4))
    assert canonical_key(two_k4) in keyset(graphs)
    with pytest.raises(BadParameter):
        construct_s1_obstructions("p4sparse", 1)
    with pytest.raises(BadParameter):
        construct_s1_obstructions("cograph", 2)


def test_s1_fixed_family():
    a, b, c = s1_fixed_family(2)
    assert is_isomorphic(a, catalog("e9"))
    assert is_isomorphic(b, catalog("e8"))
    assert is_isomorphic(c, catalog("e6"))
    with pytest.raises(BadParameter):
        s1_fixed_family(1)


def test_catalog_lists():
    assert keyset(catalog_list("unipolar-sparse")) == keyset([two_p3(), catalog("k2,3")])
    assert keyset(catalog_list("unipolar-extendible")) == keyset(
        [two_p3(), catalog("k2,3"), cycle_graph(5)]
    )
    assert keyset(catalog_list("comonopolar-sparse")) == keyset(
        catalog(n) for n in ("e1", "e2", "e3", "e7")
    )
    assert keyset(catalog_list("comonopolar-extendible")) == keyset(
        catalog(n) for n in ("e1", "e2", "e3", "e7", "e10", "e11", "e12")
    )
    assert keyset(catalog_list("monopolar-sparse")) == keyset(
        catalog(n).complement() for n in ("e1", "e2", "e3", "e7")
    )
    polar_sparse = catalog_list("polar-sparse")
    assert len(polar_sparse) == 8
    sample = disjoint_union(path_graph(3), catalog("e1").complement())
    assert canonical_key(sample) in keyset(polar_sparse)
    assert canonical_key(sample.complement()) in keyset(polar_sparse)
    assert len(catalog_list("polar-extendible")) == 14
    assert len(catalog_list("egraphs")) == 13
    assert keyset(catalog_list("s1fixed", 3)) == keyset(s1_fixed_family(3))
    with pytest.raises(BadParameter):
        catalog_list("s1fixed")
    with pytest.raises(UnknownId):
        catalog_list("mystery")


def test_catalog_members_are_minimal_in_their_class():
    from polaritylab.classes import is_p4_extendible, is_p4_sparse

    cases = [
        ("unipolar-sparse", UNIPOLAR, is_p4_sparse),
        ("unipolar-extendible", UNIPOLAR, is_p4_extendible),
        ("comonopolar-sparse", sk_polar(None, 1), is_p4_sparse),
        ("comonopolar-extendible", sk_polar(None, 1), is_p4_extendible),
        ("monopolar-sparse", MONOPOLAR, is_p4_sparse),
        ("monopolar-extendible", MONOPOLAR, is_p4_extendible),
        ("polar-sparse", POLAR, is_p4_sparse),
        ("polar-extendible", POLAR, is_p4_extendible),
    ]
    for list_id, spec, member in cases:
        for g in catalog_list(list_id):
            assert member(g), list_id
            assert is_minimal_obstruction(g, spec).is_minimal, list_id


def test_is_antichain():
    ok, pair = is_antichain([catalog(f"e{i}") for i in range(1, 14)])
    assert ok and pair is None
    ok, pair = is_antichain([path_graph(3), path_graph(4)])
    assert not ok and pair is not None
    small, big = pair
    assert small.n == 3 and big.n == 4
    assert is_antichain([]) == (True, None)
    assert is_antichain(catalog_list("polar-extendible"))[0]


def test_complement_transfer(graphs_to_6):
    from polaritylab.classes import is_p4_extendible, is_p4_sparse

    for g in graphs_to_6:
        if g.n > 5 or not is_p4_sparse(g):
            continue
        co = g.complement()
        for s in (1, 2):
            for k in (1, 2):
                fwd = is_minimal_obstruction(g, sk_polar(s, k)).is_minimal
                rev = is_minimal_obstruction(co, sk_polar(k, s)).is_minimal
                assert fwd == rev


def test_pool_unions_obstruct():
    # disjoint unions from the recursion pools land exactly at the composed k
    from polaritylab.obstructions import _pool

    k2 = complete_graph(2)
    c4 = cycle_graph(4)
    assert keyset(_pool("p4sparse", 0)) == keyset([k2])
    assert keyset(_pool("p4sparse", 1)) == keyset([c4])
    assert keyset(_pool("p4extendible", 1)) == keyset([c4, cycle_graph(5)])
    cases = [
        ([k2, k2], 1),
        ([k2, c4], 2),
        ([c4, c4], 3),
        ([k2, k2, k2], 2),
    ]
    for comps, k in cases:
        g = union_all(*comps)
        assert is_minimal_obstruction(g, sk_polar(1, k)).is_minimal
        assert not is_minimal_obstruction(g, sk_polar(1, k - 1)).is_minimal
        if g.n <= 9:
            assert satisfies_k_plus_one(g, k)


def satisfies_k_plus_one(g, k):
    from polaritylab.polarity import satisfies

    return satisfies(g, sk_polar(1, k + 1))


def test_spiders_with_head_never_minimal_1k():
    heads = [complete_graph(1), path_graph(3), cycle_graph(4)]
    for head in heads:
        builds = [sigma_j(head, 2), sigma_sep("p4", head)]
        if head.n <= 3:
            builds.append(tau_j(head, 3))
            builds.append(sigma_sep("kite", head))
        for g in builds:
            for k in (1, 2, 3):
                assert not is_minimal_obstruction(g, sk_polar(1, k)).is_minimal


def test_obstruction_record():
    rec = obstruction_record(catalog("e9"), sk_polar(2, 1))
    assert rec["order"] == 6 and rec["minimal"] is True
    assert rec["property"] == "sk:2,1"
    assert graph6_decode(rec["graph6"]).canonical_key().hex() == rec["canonical"]
    assert set(rec["witnesses"]) == {str(v) for v in range(6)}


def test_verify_claim_small():
    assert verify_claim("sparse_cog", 6).passed
    assert verify_claim("bound", 6).passed
    report = verify_claim("disc_polar", 8)
    assert report.passed
    assert report.details["p4sparse"]["monopolar_members_filtered_out"] == []
    assert verify_claim("spider_not_obs", 6).passed
    with pytest.raises(UnknownClaim):
        verify_claim("weird", 5)
