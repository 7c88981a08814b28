"""Censuses, decompositions, continuity, and the extension machinery."""

import itertools

import pytest

from latkit.builders import (
    antichain,
    chain,
    chain_product,
    diamond,
    enumerate_lattices,
    enumerate_posets,
    powerset_lattice,
)
from latkit.embedding import (
    BudgetExceededError,
    HypothesisFailed,
    NotConvexRangeError,
    NotEmbeddingError,
    PreconditionFailedError,
    atom_image_check,
    boundedness_preservation,
    census_to_json_lines,
    chainprod_decompose,
    chainprod_embedding,
    chainprod_formula_census,
    continuity_checks,
    enumerate_continuous_extensions,
    enumerate_embeddings,
    extend_from_join_dense,
    naive_embedding_census,
    powerset_decompose,
    powerset_embedding,
    powerset_formula_census,
    range_property_checks,
    relative_atoms,
    verify_convexity_transfer,
    verify_preregular_continuity,
)
from latkit.lattice import classify, is_convex, is_preregular, lattice_view
from latkit.order import MonotoneMap, atoms, bits, minimal_elements, positive_part


def test_census_chain_into_chain():
    census = enumerate_embeddings(chain(2), chain(3))
    assert census.images() == ((0, 1), (0, 2), (1, 2))


def test_census_powerset_automorphisms():
    p3 = powerset_lattice(3)
    auto = enumerate_embeddings(p3, p3, convex_range=True)
    assert len(auto) == 6
    # each is the mask action of a ground permutation
    perms = set()
    for mm in auto.maps:
        dec = powerset_decompose(mm)
        assert dec.b == 0
        perms.add(dec.h)
    assert perms == set(itertools.permutations(range(3)))


def test_counterexample_map_flags():
    p2, p3 = powerset_lattice(2), powerset_lattice(3)
    mm = MonotoneMap(p2, p3, (0, 1, 2, 7))
    assert mm.is_embedding
    assert not is_convex(p3, mm.range_mask)
    with pytest.raises(NotConvexRangeError):
        powerset_decompose(mm)
    census = enumerate_embeddings(p2, p3)
    assert mm.image in census.images()
    flag = census.flags[census.images().index(mm.image)]
    assert flag["embedding"] and not flag["convex_range"]


@pytest.mark.parametrize("x,y", [(1, 1), (1, 2), (2, 2), (2, 3), (2, 4)])
def test_census_against_naive_enumeration(x, y):
    dom, cod = powerset_lattice(x), powerset_lattice(y)
    for filters in ({}, {"convex_range": True}, {"preregular_range": True},
                    {"downward_closed_range": True}):
        fast = enumerate_embeddings(dom, cod, **filters)
        slow = naive_embedding_census(dom, cod, **filters)
        assert fast.images() == slow


def test_census_soundness_recheck():
    dom, cod = powerset_lattice(2), powerset_lattice(3)
    census = enumerate_embeddings(dom, cod, convex_range=True)
    for mm, flags in zip(census.maps, census.flags):
        assert mm.is_embedding
        assert is_convex(cod, mm.range_mask) == flags["convex_range"] is True
        assert is_preregular(cod, mm.range_mask) == flags["preregular_range"]


def test_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_embeddings(powerset_lattice(2), powerset_lattice(3),
                             budget_nodes=5)


def test_census_json_lines():
    census = enumerate_embeddings(chain(2), chain(3))
    lines = census_to_json_lines(census)
    assert len(lines) == 3
    assert lines[0].startswith('{"flags"')


def test_continuity_of_isomorphisms():
    p2 = powerset_lattice(2)
    for mm in enumerate_embeddings(p2, p2, convex_range=True).maps:
        assert all(continuity_checks(mm).values())


def test_continuity_collapse_witness():
    col = MonotoneMap(diamond(), chain(2), (0, 0, 0, 1))
    rep = continuity_checks(col)
    assert not rep["preserves_nonempty_sups"]
    assert rep["scott_continuous"]  # finite directed sets contain their sup


def test_scott_continuity_always_holds_on_finite_posets():
    for q in enumerate_posets(4):
        for r in enumerate_posets(3):
            for img in itertools.product(range(r.size), repeat=q.size):
                ok = all(
                    r.leq[img[a], img[b]]
                    for a in range(q.size) for b in range(q.size)
                    if q.leq[a, b]
                )
                if not ok:
                    continue
                mm = MonotoneMap(q, r, img)
                rep = continuity_checks(mm)
                assert rep["scott_continuous"] and rep["co_continuous"]


def test_preregular_range_implies_sup_preservation_small():
    for n in (2, 3, 4):
        for p in enumerate_posets(n):
            for q in enumerate_posets(n):
                rep = verify_preregular_continuity(p, q)
                assert rep["holds"], rep


def test_range_properties_interval():
    p2, p3 = powerset_lattice(2), powerset_lattice(3)
    census = enumerate_embeddings(p2, p3, convex_range=True)
    for mm in census.maps:
        rp = range_property_checks(mm)
        assert rp["interval_range"] is True
        assert rp["up_boc_range"] and rp["down_oc_range"]


def test_up_boc_range_for_lattice_homomorphisms():
    # continuous lattice homomorphism that is not an embedding: first
    # projection of a square onto its chain
    cp = chain_product([2, 2])
    proj = MonotoneMap(cp.order, chain(2), tuple(cp.vector(i)[0] for i in range(4)))
    assert not proj.is_order_reflecting
    rep = range_property_checks(proj)
    assert rep["up_boc_range"]


def test_boundedness_preservation():
    d = diamond()
    incl = MonotoneMap(antichain(2), d, (1, 2))
    rep = boundedness_preservation(incl)
    assert rep["bounded_to_bounded"]
    assert not rep["unbounded_to_unbounded"]
    ident = MonotoneMap(d, d, (0, 1, 2, 3))
    rep = boundedness_preservation(ident)
    assert rep["bounded_to_bounded"] and rep["unbounded_to_unbounded"]


def test_preregular_range_from_complete_semilattice_is_boundedly_closed():
    # an embedding off a complete semilattice with preregular range has a
    # boundedly order closed range on both sides
    from latkit.lattice import order_closed_checks

    for n in (2, 3, 4):
        for p in enumerate_posets(n):
            if not classify(p)["complete_semilattice"]:
                continue
            for q in enumerate_posets(n):
                for mm in enumerate_embeddings(p, q, preregular_range=True).maps:
                    oc = order_closed_checks(mm.cod, mm.range_mask)
                    assert oc["up_boc"] and oc["down_boc"]


def test_unboundedness_preserving_embedding_has_order_closed_range():
    for n in (2, 3, 4):
        for p in enumerate_posets(n):
            if not classify(p)["complete_semilattice"]:
                continue
            for q in enumerate_posets(n):
                for mm in enumerate_embeddings(p, q, preregular_range=True).maps:
                    bp = boundedness_preservation(mm)
                    if bp["unbounded_to_unbounded"]:
                        rp = range_property_checks(mm)
                        assert rp["order_closed_range"]


def test_atom_image_law():
    p2, p3 = powerset_lattice(2), powerset_lattice(3)
    ident = MonotoneMap(p3, p3, tuple(range(8)))
    assert atom_image_check(ident)
    for mm in enumerate_embeddings(p2, p3).maps:
        assert atom_image_check(mm)


def test_atom_image_requires_embedding():
    col = MonotoneMap(diamond(), chain(2), (0, 0, 0, 1))
    with pytest.raises(PreconditionFailedError):
        atom_image_check(col)


def test_monotone_map_can_break_atom_law():
    # merely monotone: add the coordinates of the square, into a chain
    cp = chain_product([2, 2])
    add = MonotoneMap(cp.order, chain(3),
                      tuple(sum(cp.vector(i)) for i in range(4)))
    assert not add.is_order_reflecting
    img_atoms = add.image_mask(atoms(cp.order).mask)
    assert img_atoms != relative_atoms(chain(3), add.range_mask).mask


def test_minimal_and_positive_images():
    p2, p3 = powerset_lattice(2), powerset_lattice(3)
    for mm in enumerate_embeddings(p2, p3).maps:
        rng = mm.range_mask
        sub_min = 0
        for p in bits(rng):
            if not any(mm.cod.lt(r, p) for r in bits(mm.cod.down_masks[p] & rng)):
                sub_min |= 1 << p
        assert mm.image_mask(minimal_elements(p2).mask) == sub_min
        assert mm.image_mask(positive_part(p2).mask) == rng & ~sub_min


def test_embedding_iff_strictly_order_preserving_lattice_hom():
    lattices = [q for n in (1, 2, 3, 4, 5) for q in enumerate_lattices(n)]
    for dom in lattices:
        lv_dom = lattice_view(dom)
        for cod in lattices:
            lv_cod = lattice_view(cod)
            for img in itertools.product(range(cod.size), repeat=dom.size):
                hom = all(
                    img[lv_dom.join[a, b]] == lv_cod.join[img[a], img[b]]
                    and img[lv_dom.meet[a, b]] == lv_cod.meet[img[a], img[b]]
                    for a in range(dom.size) for b in range(dom.size)
                )
                if not hom:
                    continue
                mm = MonotoneMap(dom, cod, img)
                strict = all(
                    mm.cod.lt(img[a], img[b])
                    for a in range(dom.size) for b in range(dom.size)
                    if dom.lt(a, b)
                )
                assert mm.is_embedding == strict


# ---------------------------------------------------------------------------
# decompositions


def test_powerset_decompose_identity():
    p2 = powerset_lattice(2)
    ident = MonotoneMap(p2, p2, tuple(range(4)))
    dec = powerset_decompose(ident)
    assert dec.h == (0, 1) and dec.b == 0


def test_powerset_census_formula_counts():
    # injections times free baseline subsets
    expected = {(1, 1): 1, (1, 2): 4, (1, 3): 12, (2, 2): 2, (2, 3): 12}
    for (x, y), count in expected.items():
        assert len(powerset_formula_census(x, y)) == count


def test_powerset_round_trip():
    p2, p3 = powerset_lattice(2), powerset_lattice(3)
    census = enumerate_embeddings(p2, p3, convex_range=True)
    for mm in census.maps:
        dec = powerset_decompose(mm)
        assert dec.b & mm.cod.full_mask == dec.b
        again = powerset_embedding(dec.h, dec.b, p2, p3)
        assert again.image == mm.image


def test_powerset_embedding_validation():
    p2, p3 = powerset_lattice(2), powerset_lattice(3)
    with pytest.raises(ValueError):
        powerset_embedding((0, 0), 0, p2, p3)
    with pytest.raises(ValueError):
        powerset_embedding((0, 1), 0b001, p2, p3)
    with pytest.raises(NotEmbeddingError):
        powerset_decompose(MonotoneMap(p2, p2, (0, 3, 3, 3)))


def test_chainprod_decompose_identity():
    cp = chain_product([2, 2])
    ident = MonotoneMap(cp.order, cp.order, tuple(range(4)))
    dec = chainprod_decompose(ident, cp, cp)
    assert dec.g == ((0, 0), (1, 1)) and dec.y == (0, 0)


def test_chainprod_shifts_on_chains():
    c3, c5 = chain_product([3]), chain_product([5])
    census = enumerate_embeddings(c3.order, c5.order, convex_range=True)
    assert len(census) == 3
    shifts = set()
    for mm in census.maps:
        dec = chainprod_decompose(mm, c3, c5)
        assert dec.g == ((0, 0),)
        shifts.add(dec.y[0])
    assert shifts == {0, 1, 2}


def test_chainprod_census_matches_formula():
    shapes = [([2], [2, 2]), ([2, 2], [2, 2]), ([2, 2], [2, 2, 2])]
    for dom_dims, cod_dims in shapes:
        dom_cp, cod_cp = chain_product(dom_dims), chain_product(cod_dims)
        census = enumerate_embeddings(dom_cp.order, cod_cp.order,
                                      convex_range=True)
        assert census.images() == chainprod_formula_census(dom_cp, cod_cp)
        for mm in census.maps:
            dec = chainprod_decompose(mm, dom_cp, cod_cp)
            again = chainprod_embedding(dec.g, dec.y, dom_cp, cod_cp)
            assert again.image == mm.image


def test_chainprod_embedding_feasibility():
    c3, c2 = chain_product([3]), chain_product([2])
    with pytest.raises(ValueError):
        chainprod_embedding(((0, 0),), (0,), c3, c2)  # 3-chain cannot fit


# ---------------------------------------------------------------------------
# extension


def powerset_basis(n):
    return [0] + [1 << i for i in range(n)]


def test_extension_identity_when_dense_set_is_everything():
    p2, p3 = powerset_lattice(2), powerset_lattice(3)
    mm = enumerate_embeddings(p2, p3, convex_range=True).maps[0]
    sig = {d: mm.image[d] for d in range(4)}
    ext = extend_from_join_dense(p2, p2.full_mask, sig, p3)
    assert ext.image == mm.image


def test_extension_recovers_map_from_basis():
    p2, p3 = powerset_lattice(2), powerset_lattice(3)
    B = powerset_basis(2)
    for mm in enumerate_embeddings(p2, p3, convex_range=True).maps:
        sig = {b: mm.image[b] for b in B}
        ext = extend_from_join_dense(p2, B, sig, p3)
        assert ext.image == mm.image
        exts = enumerate_continuous_extensions(p2, B, sig, p3)
        assert {e.image for e in exts} == {mm.image}


def test_extension_is_embedding_from_strongly_predense_basis():
    # meet-embedding off a strongly interval predense basis extends to an
    # embedding of the whole lattice
    cp = chain_product([2, 2])
    p3 = powerset_lattice(3)
    B = [cp.index((0, 0)), cp.index((1, 0)), cp.index((0, 1))]
    sig = {B[0]: 0, B[1]: 1, B[2]: 2}
    ext = extend_from_join_dense(cp.order, B, sig, p3)
    assert ext.is_embedding
    assert ext.image[cp.index((1, 1))] == 3


def test_extension_lattice_hom_when_meet_preserving_and_jid():
    p2, p3 = powerset_lattice(2), powerset_lattice(3)
    B = powerset_basis(2)
    mm = enumerate_embeddings(p2, p3, convex_range=True).maps[0]
    sig = {b: mm.image[b] for b in B}
    ext = extend_from_join_dense(p2, B, sig, p3)
    lv2, lv3 = lattice_view(p2), lattice_view(p3)
    for a in range(4):
        for b in range(4):
            assert ext.image[lv2.meet[a, b]] == lv3.meet[ext.image[a], ext.image[b]]
            assert ext.image[lv2.join[a, b]] == lv3.join[ext.image[a], ext.image[b]]


def test_extension_hypothesis_failures_are_named():
    p2, p3 = powerset_lattice(2), powerset_lattice(3)
    with pytest.raises(HypothesisFailed) as err:
        extend_from_join_dense(p2, [1, 2], {1: 1, 2: 2}, p3)  # no meet closure
    assert err.value.hypothesis == "D-meet-subsemilattice"
    with pytest.raises(HypothesisFailed) as err:
        extend_from_join_dense(p2, [0, 1], {0: 0, 1: 1}, p3)  # not join dense
    assert err.value.hypothesis == "D-join-dense"
    with pytest.raises(HypothesisFailed) as err:
        # order reversal on the basis
        extend_from_join_dense(p2, [0, 1], {0: 1, 1: 0}, p3)
    assert err.value.hypothesis in ("D-join-dense", "sigma-order-preserving")
    with pytest.raises(HypothesisFailed) as err:
        extend_from_join_dense(p2, powerset_basis(2),
                               {0: 0, 1: 1, 2: 2}, antichain(2))
    assert err.value.hypothesis == "M-complete-semilattice"


def test_extension_uniqueness_needs_bottom():
    # off the positive part alone the bottom image can float
    c2 = chain(2)
    c3 = chain(3)
    sig = {1: 2}
    exts = enumerate_continuous_extensions(c2, [1], sig, c3)
    images = {e.image for e in exts}
    assert len(images) > 1                      # 0 may go to 0, 1, or 2
    assert len({img[1] for img in images}) == 1  # but the positive part is pinned


def test_convexity_transfer_powerset():
    p2, p3 = powerset_lattice(2), powerset_lattice(3)
    B = powerset_basis(2)
    for mm in enumerate_embeddings(p2, p3, convex_range=True).maps[:6]:
        sig = {b: mm.image[b] for b in B}
        rep = verify_convexity_transfer(p2, B, p3.full_mask, p3, sig)
        assert rep["holds"] and rep["unique"] and rep["convex_range"]
        assert tuple(rep["extension"]) == mm.image


def test_convexity_transfer_chain_product():
    cp = chain_product([2, 2])
    B = [cp.index(v) for v in ((0, 0), (1, 0), (0, 1))]
    cod = chain_product([2, 2, 2])
    census = enumerate_embeddings(cp.order, cod.order, convex_range=True)
    for mm in census.maps[:4]:
        sig = {b: mm.image[b] for b in B}
        rep = verify_convexity_transfer(cp.order, B, cod.order.full_mask,
                                        cod.order, sig)
        assert rep["holds"]
        assert tuple(rep["extension"]) == mm.image


def test_convexity_transfer_rejects_bad_hypotheses():
    p2, p3 = powerset_lattice(2), powerset_lattice(3)
    B = powerset_basis(2)
    # E not preregular: bottom, singletons, top of P(3)
    with pytest.raises(HypothesisFailed) as err:
        verify_convexity_transfer(p2, B, [0, 1, 2, 4, 7], p3,
                                  {0: 0, 1: 1, 2: 2})
    assert err.value.hypothesis == "E-preregular"
    with pytest.raises(HypothesisFailed) as err:
        verify_convexity_transfer(p2, [1, 2], p3.full_mask, p3, {1: 1, 2: 2})
    assert err.value.hypothesis == "B-contains-0"


def test_extension_uniqueness_sweep():
    # every valid partial map off a join-dense meet-closed subset of a small
    # lattice has all its continuous extensions agree off the minimals
    import itertools

    from latkit.lattice import is_join_dense, is_meet_closed
    from latkit.order import positive_part

    lats = [q for n in (2, 3, 4) for q in enumerate_lattices(n)]
    targets = [m for m in lats if classify(m)["complete_semilattice"]]
    cases = 0
    for L in lats:
        dense_sets = [d for d in range(1 << L.size)
                      if is_join_dense(L, d) and is_meet_closed(L, d)]
        pos = positive_part(L).mask
        for dmask in dense_sets:
            delems = list(bits(dmask))
            for M in targets:
                for values in itertools.product(range(M.size),
                                                repeat=len(delems)):
                    sig = dict(zip(delems, values))
                    if not all(M.leq[sig[a], sig[b]]
                               for a in delems for b in delems
                               if L.leq[a, b]):
                        continue
                    try:
                        ext = extend_from_join_dense(L, dmask, sig, M)
                    except HypothesisFailed:
                        continue
                    cases += 1
                    exts = enumerate_continuous_extensions(L, dmask, sig, M)
                    images = {e.image for e in exts}
                    assert ext.image in images
                    assert len({tuple(img[p] for p in bits(pos))
                                for img in images}) == 1
    assert cases == 397
