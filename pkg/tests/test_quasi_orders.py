"""Properties stated at quasi-order generality: quotients, atoms, and the
transitivity of preregularity."""

import itertools

import numpy as np
import pytest

from latkit.builders import enumerate_posets
from latkit.embedding import atom_image_check, relative_atoms
from latkit.lattice import is_preregular, sup_in_subset
from latkit.order import (
    MonotoneMap,
    OrderError,
    asym_quotient,
    atoms,
    bits,
    induced_suborder,
    sup,
)
from latkit.topology import enumerate_topologies


def all_quasi_orders(n):
    """Every reflexive-transitive relation on ``range(n)``, labeled."""
    out = []
    for flags in itertools.product((False, True), repeat=n * n - n):
        mat = np.eye(n, dtype=bool)
        it = iter(flags)
        for i in range(n):
            for j in range(n):
                if i != j:
                    mat[i, j] = next(it)
        if (np.matmul(mat, mat) & ~mat).any():
            continue
        out.append(mat)
    return out


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quasi_order_count_matches_alexandrov_topologies(n):
    # labeled preorders correspond to labeled topologies on the same points
    assert len(all_quasi_orders(n)) == len(enumerate_topologies(n))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quotient_map_is_an_embedding(n):
    from latkit.order import QuasiOrder

    for mat in all_quasi_orders(n):
        q = QuasiOrder(mat.copy())
        poset, classes = asym_quotient(q)
        mm = MonotoneMap(q, poset, classes)
        assert mm.is_embedding


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quotient_atoms_are_classes_of_atoms(n):
    from latkit.order import QuasiOrder

    for mat in all_quasi_orders(n):
        q = QuasiOrder(mat.copy())
        poset, classes = asym_quotient(q)
        quotient_atoms = atoms(poset).mask
        class_images = 0
        for a in bits(atoms(q).mask):
            class_images |= 1 << classes[a]
        assert class_images == quotient_atoms
        # and the quotient map respects the relative-atom law
        mm = MonotoneMap(q, poset, classes)
        assert atom_image_check(mm)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_preregularity_is_transitive(n):
    # A preregular in P and B preregular inside (A, <=) make B preregular in P
    for q in enumerate_posets(n):
        for amask in range(1 << n):
            if not is_preregular(q, amask):
                continue
            sub, elems = induced_suborder(q, amask)
            back = {i: e for i, e in enumerate(elems)}
            for bsub in range(1 << sub.size):
                if not is_preregular(sub, bsub):
                    continue
                bmask = 0
                for i in bits(bsub):
                    bmask |= 1 << back[i]
                assert is_preregular(q, bmask), (n, amask, bmask)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_inner_sup_agrees_when_ambient_sup_lands_inside(n):
    for q in enumerate_posets(n):
        for amask in range(1 << n):
            bmask = amask
            while bmask:
                s = sup(q, bmask)
                if s is not None and (amask >> s) & 1:
                    assert sup_in_subset(q, amask, bmask) == s
                bmask = (bmask - 1) & amask


def test_relative_atoms_of_full_carrier():
    for q in enumerate_posets(4):
        assert relative_atoms(q, q.full_mask).mask == atoms(q).mask
