"""Finite spaces: interior/closure, regular opens, category algebras."""

import pytest

from latkit.lattice import check_jid, check_mid, classify, is_basis, lattice_view
from latkit.topology import (
    FiniteTopology,
    NotZeroDimensionalError,
    TopologyError,
    baire_property_sets,
    category_algebra,
    clopen_basis_check,
    clopen_sets,
    closure_of,
    enumerate_topologies,
    has_baire_property,
    interior,
    is_baire,
    is_meager,
    is_nowhere_dense,
    is_regular_open,
    is_zero_dimensional,
    largest_open_meager,
    meager_ideal,
    ro_algebra,
    subspace,
    topology,
    topology_from_json,
    topology_to_json,
)


def sierpinski():
    # point 1 open, point 0 not
    return topology(2, [0b10])


def discrete(n):
    return topology(n, [1 << i for i in range(n)])


def indiscrete(n):
    return topology(n, [])


def test_topology_axioms_enforced():
    with pytest.raises(TopologyError):
        FiniteTopology(2, frozenset({0b01}))
    with pytest.raises(TopologyError):
        FiniteTopology(2, frozenset({0, 0b01, 0b10, 0b11, 0b100}))


def test_generated_closure():
    t = topology(3, [0b011, 0b110])
    assert 0b010 in t.opens           # the intersection
    assert 0b111 in t.opens


def test_interior_closure():
    sp = sierpinski()
    assert interior(sp, 0b01) == 0
    assert closure_of(sp, 0b01) == 0b01
    assert closure_of(sp, 0b10) == 0b11
    d = discrete(3)
    for s in range(8):
        assert interior(d, s) == s == closure_of(d, s)


def test_interior_closure_laws():
    for t in enumerate_topologies(3):
        full = t.full_mask
        for s in range(1 << 3):
            i = interior(t, s)
            c = closure_of(t, s)
            assert i & ~s == 0 and s & ~c == 0
            assert interior(t, i) == i
            assert closure_of(t, c) == c
            assert full & ~closure_of(t, s) == interior(t, full & ~s)
        for s in range(1 << 3):
            for r in range(1 << 3):
                if s & ~r == 0:
                    assert interior(t, s) & ~interior(t, r) == 0
                    assert closure_of(t, s) & ~closure_of(t, r) == 0


def test_regular_open():
    sp = sierpinski()
    assert not is_regular_open(sp, 0b10)
    assert is_regular_open(sp, 0) and is_regular_open(sp, 0b11)
    assert all(is_regular_open(discrete(2), s) for s in range(4))


def test_ro_algebra_examples():
    assert ro_algebra(sierpinski()).members == (0, 3)
    rod = ro_algebra(discrete(3))
    assert len(rod.members) == 8
    # disjoint union of two Sierpinski spaces: four regular opens
    du = topology(4, [0b0010, 0b1000, 0b0011, 0b1100])
    assert len(ro_algebra(du).members) == 4


def test_ro_algebra_is_boolean_with_jid_mid():
    for t in enumerate_topologies(3):
        alg = ro_algebra(t)
        flags = classify(alg.order)
        assert flags["boolean"]
        lv = lattice_view(alg.order)
        assert check_jid(lv)["holds"] and check_mid(lv)["holds"]


def test_ro_double_complement():
    for t in enumerate_topologies(3):
        alg = ro_algebra(t)
        for g in alg.members:
            c = alg.complement(g)
            assert c in alg.members
            assert alg.complement(c) == g
            assert alg.meet(g, c) == 0
            assert alg.join(g, c) == t.full_mask & ~closure_of(t, 0)


def test_meager_is_an_ideal():
    for t in enumerate_topologies(3):
        meager = set(meager_ideal(t))
        for s in meager:
            for r in range(1 << 3):
                if r & ~s == 0:
                    assert r in meager
        for s in meager:
            for r in meager:
                assert (s | r) in meager


def test_meager_examples():
    assert meager_ideal(discrete(3)) == (0,)
    sp = sierpinski()
    assert is_nowhere_dense(sp, 0b01)
    assert not is_meager(sp, 0b10)
    assert set(meager_ideal(sp)) == {0, 0b01}


def test_largest_open_meager_and_baire():
    assert largest_open_meager(discrete(3)) == 0
    assert is_baire(sierpinski())
    # no finite space has a nonempty open meager set: open sets are their own
    # interiors, so an open meager set is empty; the sweep records this
    for n in (1, 2, 3, 4):
        for t in enumerate_topologies(n):
            u = largest_open_meager(t)
            assert u == 0
            assert is_baire(t) == (u == 0)


def test_baire_property():
    sp = sierpinski()
    assert baire_property_sets(sp) == (0, 1, 2, 3)
    t = indiscrete(2)
    assert set(baire_property_sets(t)) == {0, 0b11}
    assert not has_baire_property(t, 0b01)


def test_category_algebra_discrete():
    cat = category_algebra(discrete(3))
    assert cat.size == 8
    assert classify(cat.order)["boolean"]
    assert cat.baire and cat.largest_open_meager == 0


def test_category_algebra_sierpinski():
    cat = category_algebra(sierpinski())
    assert cat.size == 2
    assert sorted(cat.ro_iso.values()) == sorted(set(cat.class_map.values()))
    # class operations act setwise
    for a in (0, 1, 2, 3):
        for b in (0, 1, 2, 3):
            ca, cb = cat.class_map[a], cat.class_map[b]
            assert cat.join_class(ca, cb) == cat.class_map[cat.reps[ca] | cat.reps[cb]]


def test_category_algebra_class_operations():
    for t in enumerate_topologies(3):
        cat = category_algebra(t)
        bp = baire_property_sets(t)
        for a in bp:
            ca = cat.class_map[a]
            comp = cat.complement_class(ca)
            assert comp == cat.class_map[t.full_mask & ~cat.reps[ca]]
        for a in bp[:6]:
            for b in bp[:6]:
                assert cat.class_map[a | b] == cat.join_class(
                    cat.class_map[a], cat.class_map[b])
                assert cat.class_map[a & b] == cat.meet_class(
                    cat.class_map[a], cat.class_map[b])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_category_algebra_iso_with_residual_ro(n):
    for t in enumerate_topologies(n):
        cat = category_algebra(t)     # raises if the isomorphism breaks
        assert len(cat.ro_iso) == cat.size


def test_subspace():
    sp = sierpinski()
    sub, points = subspace(sp, 0b10)
    assert sub.points == 1 and points == (1,)
    t = topology(3, [0b011, 0b100])
    sub, points = subspace(t, 0b101)
    assert sub.points == 2


def test_clopen_basis_checks():
    assert clopen_basis_check(discrete(3))["basis"]
    assert clopen_basis_check(indiscrete(2))["basis"]
    with pytest.raises(NotZeroDimensionalError):
        clopen_basis_check(sierpinski())
    du = topology(4, [0b0011, 0b1100])  # two indiscrete clopen blobs
    assert is_zero_dimensional(du)
    assert clopen_basis_check(du)["basis"]


def test_clopen_classes_dense_in_zero_dimensional():
    for t in enumerate_topologies(3):
        if not is_zero_dimensional(t):
            continue
        cat = category_algebra(t)
        classes = 0
        for c in clopen_sets(t):
            classes |= 1 << cat.class_map[c]
        assert is_basis(cat.order, classes)


def test_enumerate_topologies_counts():
    assert [len(enumerate_topologies(n)) for n in range(5)] == [1, 1, 4, 29, 355]


def test_scan_guard():
    with pytest.raises(TopologyError):
        meager_ideal(indiscrete(13))


def test_json_round_trip():
    sp = sierpinski()
    again = topology_from_json(topology_to_json(sp))
    assert again.opens == sp.opens
    gen = topology_from_json({"points": 3, "opens": [[0, 1], [1, 2]]})
    assert 0b010 in gen.opens
    with pytest.raises(TopologyError):
        topology_from_json({"opens": []})
