"""Order-embedding censuses, continuity checks, and structure theorems.

The census enumerator backtracks over a linear extension of the domain,
pruning on order preservation, order reflection, and (when the filter is
requested) a necessary convexity condition on the partial range; every
emitted map is re-checked against the plain definitions.  Naive full
enumeration over all maps stays available as an independent oracle.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .builders import ChainProduct, is_powerset_order
from .order import (
    MonotoneMap,
    OrderError,
    QuasiOrder,
    SetLike,
    Subset,
    atoms,
    bits,
    induced_suborder,
    inf,
    is_bounded_above,
    is_directed,
    linear_extension,
    lower_closure,
    mask_of,
    sup,
)
from .lattice import (
    check_jid,
    classify,
    is_basis,
    is_convex,
    is_flat_complete,
    is_join_closed,
    is_join_dense,
    is_meet_closed,
    is_preregular,
    is_strongly_interval_predense,
    lattice_view,
)

__all__ = [
    "BudgetExceededError",
    "PreconditionFailedError",
    "NotEmbeddingError",
    "NotConvexRangeError",
    "DecompositionMismatchError",
    "HypothesisFailed",
    "EmbeddingCensus",
    "enumerate_embeddings",
    "enumerate_monotone_maps",
    "naive_embedding_census",
    "continuity_checks",
    "range_property_checks",
    "boundedness_preservation",
    "atom_image_check",
    "relative_atoms",
    "verify_preregular_continuity",
    "PowersetDecomposition",
    "powerset_embedding",
    "powerset_decompose",
    "powerset_formula_census",
    "ChainProdDecomposition",
    "chainprod_embedding",
    "chainprod_decompose",
    "chainprod_formula_census",
    "extend_from_join_dense",
    "enumerate_continuous_extensions",
    "verify_convexity_transfer",
    "census_to_json_lines",
]


class BudgetExceededError(RuntimeError):
    """The search exceeded its node-count cap."""


class PreconditionFailedError(ValueError):
    """An operation was applied to a map outside its stated precondition."""


class NotEmbeddingError(PreconditionFailedError):
    pass


class NotConvexRangeError(PreconditionFailedError):
    pass


class DecompositionMismatchError(RuntimeError):
    """A decomposition failed to reconstruct its map; this signals a theorem
    violation and must never occur on valid inputs."""


class HypothesisFailed(ValueError):
    """A named hypothesis of an extension theorem does not hold."""

    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        super().__init__(f"hypothesis {hypothesis!r} failed"
                         + (f": {detail}" if detail else ""))


# ---------------------------------------------------------------------------
# censuses


@dataclass(frozen=True, eq=False)
class EmbeddingCensus:
    """All order embeddings between two posets passing the selected filters,
    in lexicographic order of image tuples, with per-map range flags."""

    dom: QuasiOrder
    cod: QuasiOrder
    maps: tuple
    flags: tuple
    filters: dict
    nodes: int

    def __len__(self):
        return len(self.maps)

    def images(self) -> tuple:
        return tuple(m.image for m in self.maps)


def _preregular_range_cached(cod: QuasiOrder, mask: int) -> bool:
    cache = cod._subset_cache
    key = ("preregular", mask)
    v = cache.get(key)
    if v is None:
        v = is_preregular(cod, mask)
        cache[key] = v
    return v


def _range_flags(dom: QuasiOrder, cod: QuasiOrder, image: tuple) -> dict:
    rmask = 0
    for v in image:
        rmask |= 1 << v
    return {
        "embedding": True,
        "convex_range": is_convex(cod, rmask),
        "preregular_range": _preregular_range_cached(cod, rmask),
        "downward_closed_range": lower_closure(cod, rmask).mask == rmask,
    }


def enumerate_embeddings(dom: QuasiOrder, cod: QuasiOrder, *,
                         convex_range: bool = False,
                         preregular_range: bool = False,
                         downward_closed_range: bool = False,
                         budget_nodes: Optional[int] = None) -> EmbeddingCensus:
    """Backtracking census of order embeddings ``dom -> cod``.

    Keyword filters restrict the census to maps whose range is convex,
    preregular, or a lower set.  Raises :class:`BudgetExceededError` when
    the node cap is hit.
    """
    if not dom.is_poset or not cod.is_poset:
        raise OrderError("census requires partial orders")
    n, k = dom.size, cod.size
    order = linear_extension(dom)
    image = [-1] * n
    found = []
    nodes = 0
    up_c, down_c = cod.up_masks, cod.down_masks
    dom_leq = dom.leq

    def convex_hull_size(assigned_imgs) -> int:
        hull = 0
        for a in assigned_imgs:
            for b in assigned_imgs:
                hull |= up_c[a] & down_c[b]
        return hull.bit_count()

    def rec(depth: int, assigned_imgs: tuple):
        nonlocal nodes
        if depth == n:
            found.append(tuple(image))
            return
        p = order[depth]
        for cand in range(k):
            nodes += 1
            if budget_nodes is not None and nodes > budget_nodes:
                raise BudgetExceededError(
                    f"node budget {budget_nodes} exceeded")
            ok = True
            for d in range(depth):
                q = order[d]
                cq = image[q]
                if bool(cod.leq[cq, cand]) != bool(dom_leq[q, p]):
                    ok = False
                    break
                if bool(cod.leq[cand, cq]) != bool(dom_leq[p, q]):
                    ok = False
                    break
            if not ok:
                continue
            image[p] = cand
            nxt = assigned_imgs + (cand,)
            if convex_range and convex_hull_size(nxt) > n:
                image[p] = -1
                continue
            if downward_closed_range:
                low = 0
                for a in nxt:
                    low |= down_c[a]
                if low.bit_count() > n:
                    image[p] = -1
                    continue
            rec(depth + 1, nxt)
            image[p] = -1

    rec(0, ())

    maps = []
    flags = []
    for img in sorted(found):
        mm = MonotoneMap(dom, cod, img)
        if not mm.is_embedding:  # definition-level re-check
            continue
        f = _range_flags(dom, cod, img)
        if convex_range and not f["convex_range"]:
            continue
        if preregular_range and not f["preregular_range"]:
            continue
        if downward_closed_range and not f["downward_closed_range"]:
            continue
        maps.append(mm)
        flags.append(f)
    return EmbeddingCensus(
        dom, cod, tuple(maps), tuple(flags),
        {"convex_range": convex_range, "preregular_range": preregular_range,
         "downward_closed_range": downward_closed_range},
        nodes,
    )


def enumerate_monotone_maps(dom: QuasiOrder, cod: QuasiOrder) -> Iterator[tuple]:
    """Yield every order preserving image tuple, by raw product scan."""
    n, k = dom.size, cod.size
    strict = [
        (p, q) for p in range(n) for q in range(n) if p != q and dom.leq[p, q]
    ]
    for img in itertools.product(range(k), repeat=n):
        if all(cod.leq[img[p], img[q]] for p, q in strict):
            yield img


def naive_embedding_census(dom: QuasiOrder, cod: QuasiOrder, *,
                           convex_range: bool = False,
                           preregular_range: bool = False,
                           downward_closed_range: bool = False,
                           limit: int = 10 ** 6) -> tuple:
    """Reference census over all ``|cod| ** |dom|`` maps; the independent
    completeness oracle for :func:`enumerate_embeddings`."""
    if cod.size ** dom.size > limit:
        raise BudgetExceededError("naive census too large")
    out = []
    for img in enumerate_monotone_maps(dom, cod):
        mm = MonotoneMap(dom, cod, img)
        if not mm.is_embedding:
            continue
        f = _range_flags(dom, cod, img)
        if convex_range and not f["convex_range"]:
            continue
        if preregular_range and not f["preregular_range"]:
            continue
        if downward_closed_range and not f["downward_closed_range"]:
            continue
        out.append(img)
    return tuple(sorted(out))


def census_to_json_lines(census: EmbeddingCensus) -> list:
    """One JSON document per map: ``{"image": [...], "flags": {...}}``."""
    return [
        json.dumps({"image": list(m.image), "flags": f}, sort_keys=True)
        for m, f in zip(census.maps, census.flags)
    ]


# ---------------------------------------------------------------------------
# continuity and range structure


def continuity_checks(sigma: MonotoneMap) -> dict:
    """Preservation of nonempty suprema/infima and of directed bounds.

    A finite directed set contains its supremum, so monotone maps between
    finite posets are always Scott continuous; the scan still evaluates the
    definition literally.
    """
    dom, cod = sigma.dom, sigma.cod
    full = dom.full_mask
    sups = infs = scott = co_scott = True
    amask = full
    while amask:
        s = sup(dom, amask)
        if s is not None:
            target = sup(cod, sigma.image_mask(amask))
            if target != sigma.image[s]:
                sups = False
                if is_directed(dom, amask):
                    scott = False
        t = inf(dom, amask)
        if t is not None:
            target = inf(cod, sigma.image_mask(amask))
            if target != sigma.image[t]:
                infs = False
                if is_directed(dom.dual, amask):
                    co_scott = False
        amask = (amask - 1) & full
    return {
        "preserves_nonempty_sups": sups,
        "preserves_nonempty_infs": infs,
        "scott_continuous": scott,
        "co_continuous": co_scott,
    }


def range_property_checks(sigma: MonotoneMap) -> dict:
    """Order-closedness flags of the range, and whether the range is the
    interval between the images of the extrema (when the domain has them)."""
    from .lattice import order_closed_checks

    cod = sigma.cod
    rmask = sigma.range_mask
    oc = order_closed_checks(cod, rmask)
    out = {
        "up_boc_range": oc["up_boc"],
        "down_oc_range": oc["down_oc"],
        "order_closed_range": oc["up_oc"] and oc["down_oc"],
    }
    bottom = sup(sigma.dom, 0)
    top = inf(sigma.dom, 0)
    if bottom is None or top is None:
        out["interval_range"] = None
    else:
        lo, hi = sigma.image[bottom], sigma.image[top]
        out["interval_range"] = rmask == cod.up_masks[lo] & cod.down_masks[hi]
    return out


def boundedness_preservation(sigma: MonotoneMap) -> dict:
    """Whether bounded sets stay bounded and unbounded sets stay unbounded,
    over every subset of the domain."""
    dom, cod = sigma.dom, sigma.cod
    b2b = u2u = True
    amask = dom.full_mask
    while True:
        bounded = is_bounded_above(dom, amask)
        image_bounded = is_bounded_above(cod, sigma.image_mask(amask))
        if bounded and not image_bounded:
            b2b = False
        if not bounded and image_bounded:
            u2u = False
        if amask == 0:
            break
        amask = (amask - 1) & dom.full_mask
    return {"bounded_to_bounded": b2b, "unbounded_to_unbounded": u2u}


def relative_atoms(q: QuasiOrder, A: SetLike) -> Subset:
    """Atoms of the induced suborder on ``A``, as carrier indices."""
    sub, elems = induced_suborder(q, A)
    out = 0
    for i in atoms(sub):
        out |= 1 << elems[i]
    return Subset(q, out)


def atom_image_check(sigma: MonotoneMap) -> bool:
    """Image of the atoms equals the relative atoms of the range.

    Requires an order preserving and reflecting map.
    """
    if not sigma.is_embedding:
        raise PreconditionFailedError("map is not order reflecting")
    img_atoms = sigma.image_mask(atoms(sigma.dom).mask)
    return img_atoms == relative_atoms(sigma.cod, sigma.range_mask).mask


def verify_preregular_continuity(P: QuasiOrder, Q: QuasiOrder, *,
                                 budget_nodes: Optional[int] = None) -> dict:
    """Every embedding ``P -> Q`` with preregular range must preserve all
    nonempty suprema and infima; reports any violations (expected none)."""
    census = enumerate_embeddings(P, Q, preregular_range=True,
                                  budget_nodes=budget_nodes)
    violations = []
    for mm in census.maps:
        cont = continuity_checks(mm)
        if not (cont["preserves_nonempty_sups"] and cont["preserves_nonempty_infs"]):
            violations.append({"image": list(mm.image), "continuity": cont})
    return {
        "embeddings": len(census),
        "violations": violations,
        "holds": not violations,
    }


# ---------------------------------------------------------------------------
# power-set characterization


@dataclass(frozen=True)
class PowersetDecomposition:
    """``a -> h[a] | b`` with ``h`` injective on ground points and ``b``
    disjoint from the image of ``h``."""

    h: tuple   # ground point -> ground point
    b: int     # bitmask over the codomain ground set

    def apply(self, a_mask: int) -> int:
        out = self.b
        for x in bits(a_mask):
            out |= 1 << self.h[x]
        return out


def _require_powerset(q: QuasiOrder, who: str) -> int:
    cache = q._subset_cache
    flag = cache.get("is_powerset")
    if flag is None:
        flag = is_powerset_order(q)
        cache["is_powerset"] = flag
    if not flag:
        raise OrderError(f"{who} is not a power-set lattice in mask form")
    return q.size.bit_length() - 1


def powerset_embedding(h: Iterable[int], b: int,
                       dom: QuasiOrder, cod: QuasiOrder) -> MonotoneMap:
    """Build ``a -> h[a] | b``; validates injectivity and disjointness."""
    x = _require_powerset(dom, "domain")
    _require_powerset(cod, "codomain")
    h = tuple(h)
    if len(set(h)) != len(h) or len(h) != x:
        raise ValueError("h must be an injection on the ground set")
    hmask = 0
    for v in h:
        hmask |= 1 << v
    if hmask & b:
        raise ValueError("b must be disjoint from the image of h")
    dec = PowersetDecomposition(h, b)
    return MonotoneMap(dom, cod, tuple(dec.apply(a) for a in range(dom.size)))


def powerset_decompose(sigma: MonotoneMap) -> PowersetDecomposition:
    """Recover ``(h, b)`` from a convex-range embedding of power sets.

    ``b`` is the image of the empty set and ``h(x)`` the unique new point in
    the image of ``{x}``; any failure after the convexity check is a
    :class:`DecompositionMismatchError` (it would contradict the census law).
    """
    x = _require_powerset(sigma.dom, "domain")
    _require_powerset(sigma.cod, "codomain")
    if not sigma.is_embedding:
        raise NotEmbeddingError("map is not an order embedding")
    if not is_convex(sigma.cod, sigma.range_mask):
        raise NotConvexRangeError("range is not convex")
    b = sigma.image[0]
    h = []
    for i in range(x):
        delta = sigma.image[1 << i] & ~b
        if delta.bit_count() != 1:
            raise DecompositionMismatchError(
                f"image of singleton {i} does not add exactly one point")
        h.append(delta.bit_length() - 1)
    if len(set(h)) != x:
        raise DecompositionMismatchError("ground map is not injective")
    dec = PowersetDecomposition(tuple(h), b)
    for a in range(sigma.dom.size):
        if dec.apply(a) != sigma.image[a]:
            raise DecompositionMismatchError(f"reconstruction differs at {a}")
    return dec


def powerset_formula_census(x: int, y: int,
                            dom: Optional[QuasiOrder] = None,
                            cod: Optional[QuasiOrder] = None) -> tuple:
    """Image tuples of every map ``a -> h[a] | b`` with ``h`` injective and
    ``b`` in the complement of ``h``'s image; sorted."""
    from .builders import powerset_lattice

    dom = dom if dom is not None else powerset_lattice(x)
    cod = cod if cod is not None else powerset_lattice(y)
    full = cod.size - 1  # ground mask of the codomain
    out = []
    for h in itertools.permutations(range(y), x):
        hmask = 0
        for v in h:
            hmask |= 1 << v
        free = full & ~hmask
        b = free
        while True:
            dec = PowersetDecomposition(h, b)
            out.append(tuple(dec.apply(a) for a in range(1 << x)))
            if b == 0:
                break
            b = (b - 1) & free
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# chain-product characterization


@dataclass(frozen=True)
class ChainProdDecomposition:
    """Shifted partial projection: on claimed coordinates ``j`` the value is
    ``x(g(j)) + y(j)``, elsewhere the constant ``y(j)``."""

    g: tuple   # pairs (j, i): codomain coordinate j reads domain coordinate i
    y: tuple

    def apply(self, vec: tuple) -> tuple:
        out = list(self.y)
        for j, i in self.g:
            out[j] += vec[i]
        return tuple(out)


def chainprod_embedding(g, y, dom_cp: ChainProduct,
                        cod_cp: ChainProduct) -> MonotoneMap:
    g = tuple(sorted(tuple(p) for p in g))
    y = tuple(y)
    seen_j = [j for j, _ in g]
    seen_i = sorted(i for _, i in g)
    if len(set(seen_j)) != len(g) or seen_i != list(range(len(dom_cp.dims))):
        raise ValueError("g must be a bijection from codomain coordinates "
                         "onto all domain coordinates")
    for j, i in g:
        if dom_cp.dims[i] - 1 + y[j] > cod_cp.dims[j] - 1:
            raise ValueError(f"shift {y[j]} does not fit on coordinate {j}")
    dec = ChainProdDecomposition(g, y)
    image = tuple(
        cod_cp.index(dec.apply(dom_cp.vector(v))) for v in range(dom_cp.size)
    )
    return MonotoneMap(dom_cp.order, cod_cp.order, image)


def chainprod_decompose(sigma: MonotoneMap, dom_cp: ChainProduct,
                        cod_cp: ChainProduct) -> ChainProdDecomposition:
    """Recover the shifted-projection form of a convex-range embedding
    between products of finite chains."""
    if sigma.dom is not dom_cp.order or sigma.cod is not cod_cp.order:
        raise ValueError("map does not connect the given chain products")
    if any(d < 2 for d in dom_cp.dims):
        raise ValueError("domain chains must have height at least 2")
    if not sigma.is_embedding:
        raise NotEmbeddingError("map is not an order embedding")
    if not is_convex(sigma.cod, sigma.range_mask):
        raise NotConvexRangeError("range is not convex")
    dims = len(dom_cp.dims)
    y = cod_cp.vector(sigma.image[dom_cp.index((0,) * dims)])
    pairs = []
    for i in range(dims):
        unit = tuple(1 if t == i else 0 for t in range(dims))
        img = cod_cp.vector(sigma.image[dom_cp.index(unit)])
        delta = [a - b for a, b in zip(img, y)]
        hot = [j for j, d in enumerate(delta) if d != 0]
        if len(hot) != 1 or delta[hot[0]] != 1:
            raise DecompositionMismatchError(
                f"image of unit vector {i} is not a unit shift")
        pairs.append((hot[0], i))
    if len({j for j, _ in pairs}) != len(pairs):
        raise DecompositionMismatchError("coordinate map is not injective")
    dec = ChainProdDecomposition(tuple(sorted(pairs)), y)
    for v in range(dom_cp.size):
        if cod_cp.index(dec.apply(dom_cp.vector(v))) != sigma.image[v]:
            raise DecompositionMismatchError(f"reconstruction differs at {v}")
    return dec


def chainprod_formula_census(dom_cp: ChainProduct,
                             cod_cp: ChainProduct) -> tuple:
    """Image tuples of every feasible shifted partial projection; sorted."""
    I = len(dom_cp.dims)
    J = len(cod_cp.dims)
    out = []
    for K in itertools.combinations(range(J), I):
        for perm in itertools.permutations(range(I)):
            g = tuple(zip(K, perm))
            ranges = []
            feasible = True
            for j in range(J):
                match = [i for jj, i in g if jj == j]
                if match:
                    top = cod_cp.dims[j] - dom_cp.dims[match[0]]
                    if top < 0:
                        feasible = False
                        break
                    ranges.append(range(top + 1))
                else:
                    ranges.append(range(cod_cp.dims[j]))
            if not feasible:
                continue
            for y in itertools.product(*ranges):
                dec = ChainProdDecomposition(g, y)
                out.append(tuple(
                    cod_cp.index(dec.apply(dom_cp.vector(v)))
                    for v in range(dom_cp.size)
                ))
    return tuple(sorted(set(out)))


# ---------------------------------------------------------------------------
# extension from a join-dense subset


def _check_sigma_hypotheses(L: QuasiOrder, dmask: int, sigma: dict,
                            M: QuasiOrder):
    if set(sigma) != set(bits(dmask)):
        raise ValueError("sigma must be defined exactly on D")
    if not classify(M)["complete_semilattice"]:
        raise HypothesisFailed("M-complete-semilattice")
    if not is_join_dense(L, dmask):
        raise HypothesisFailed("D-join-dense")
    if not is_meet_closed(L, dmask):
        raise HypothesisFailed("D-meet-subsemilattice")
    for d in bits(dmask):
        for e in bits(dmask):
            if L.leq[d, e] and not M.leq[sigma[d], sigma[e]]:
                raise HypothesisFailed("sigma-order-preserving", f"({d},{e})")
    sub = dmask
    while sub:
        s = sup(L, sub)
        if s is not None and (dmask >> s) & 1:
            img = 0
            for d in bits(sub):
                img |= 1 << sigma[d]
            if sup(M, img) != sigma[s]:
                raise HypothesisFailed("sigma-preserves-sups-in-L",
                                       f"B={list(bits(sub))}")
        sub = (sub - 1) & dmask
    sub = dmask
    while sub:
        if is_bounded_above(L, sub):
            img = 0
            for d in bits(sub):
                img |= 1 << sigma[d]
            if not is_bounded_above(M, img):
                raise HypothesisFailed("sigma-preserves-boundedness-in-L",
                                       f"A={list(bits(sub))}")
        sub = (sub - 1) & dmask


def extend_from_join_dense(L: QuasiOrder, D: SetLike, sigma: dict,
                           M: QuasiOrder) -> MonotoneMap:
    """Extend a map off a join-dense meet subsemilattice to all of ``L``.

    Each hypothesis is checked, not assumed, and a failure raises
    :class:`HypothesisFailed` naming the violated clause.  The extension
    sends ``p`` to the supremum of the images of the members of ``D``
    below ``p``, which pins it down uniquely wherever that set is nonempty.
    """
    dmask = mask_of(L, D)
    sigma = {int(k): int(v) for k, v in sigma.items()}
    _check_sigma_hypotheses(L, dmask, sigma, M)
    image = []
    for p in range(L.size):
        img = 0
        for d in bits(dmask & L.down_masks[p]):
            img |= 1 << sigma[d]
        s = sup(M, img)
        assert s is not None, "bounded image lost its supremum"
        image.append(s)
    out = MonotoneMap(L, M, tuple(image))
    for d in bits(dmask):
        assert out.image[d] == sigma[d], "extension failed to extend"
    cont = continuity_checks(out)
    assert cont["preserves_nonempty_sups"], "extension lost continuity"
    return out


def enumerate_continuous_extensions(L: QuasiOrder, D: SetLike, sigma: dict,
                                    M: QuasiOrder) -> tuple:
    """All maps ``L -> M`` agreeing with ``sigma`` on ``D`` that preserve
    nonempty suprema, by constrained backtracking."""
    dmask = mask_of(L, D)
    sigma = {int(k): int(v) for k, v in sigma.items()}
    order = linear_extension(L)
    image = [-1] * L.size
    out = []

    def rec(depth: int):
        if depth == L.size:
            mm = MonotoneMap(L, M, tuple(image))
            if continuity_checks(mm)["preserves_nonempty_sups"]:
                out.append(mm)
            return
        p = order[depth]
        cands = ([sigma[p]] if (dmask >> p) & 1 else range(M.size))
        for cand in cands:
            ok = True
            for d in range(depth):
                q = order[d]
                if L.leq[q, p] and not M.leq[image[q], cand]:
                    ok = False
                    break
                if L.leq[p, q] and not M.leq[cand, image[q]]:
                    ok = False
                    break
            if ok:
                image[p] = cand
                rec(depth + 1)
                image[p] = -1

    rec(0)
    return tuple(out)


def _hypothesis(name: str, ok: bool, detail: str = ""):
    if not ok:
        raise HypothesisFailed(name, detail)


def verify_convexity_transfer(L: QuasiOrder, B: SetLike, E: SetLike,
                              M: QuasiOrder, sigma: dict) -> dict:
    """Extension of a convex-range embedding off a basis stays convex.

    Hypotheses: ``L`` and ``M`` complete semilattices with the join-infinite
    distributive law, ``M`` flat-complete, ``B`` a strongly interval
    predense basis containing the bottom, ``E`` a join-dense preregular
    sublattice of ``M``, and ``sigma`` an embedding of ``B`` into ``E``
    whose range is convex inside ``E``.  Verifies existence, uniqueness,
    and convex range of the extension.
    """
    bmask = mask_of(L, B)
    emask = mask_of(M, E)
    sigma = {int(k): int(v) for k, v in sigma.items()}
    _hypothesis("L-complete-semilattice", classify(L)["complete_semilattice"])
    _hypothesis("L-jid", check_jid(lattice_view(L))["holds"])
    _hypothesis("M-complete-semilattice", classify(M)["complete_semilattice"])
    _hypothesis("M-jid", check_jid(lattice_view(M))["holds"])
    _hypothesis("M-flat-complete", is_flat_complete(lattice_view(M)))
    bottom = sup(L, 0)
    _hypothesis("B-contains-0", bottom is not None and (bmask >> bottom) & 1)
    _hypothesis("B-meet-subsemilattice", is_meet_closed(L, bmask))
    _hypothesis("B-strongly-interval-predense",
                is_strongly_interval_predense(L, bmask))
    _hypothesis("B-basis", is_basis(L, bmask))
    _hypothesis("E-join-dense", is_join_dense(M, emask))
    _hypothesis("E-preregular", is_preregular(M, emask))
    _hypothesis("E-sublattice",
                is_meet_closed(M, emask) and is_join_closed(M, emask))
    _hypothesis("sigma-defined-on-B", set(sigma) == set(bits(bmask)))
    rng_mask = 0
    for v in sigma.values():
        rng_mask |= 1 << v
    _hypothesis("sigma-range-in-E", rng_mask & ~emask == 0)
    refl = all(
        bool(M.leq[sigma[a], sigma[b]]) == bool(L.leq[a, b])
        for a in bits(bmask) for b in bits(bmask)
    )
    _hypothesis("sigma-embedding", refl)
    convex_in_e = True
    for p in bits(rng_mask):
        for q in bits(rng_mask):
            if (M.up_masks[p] & M.down_masks[q] & emask) & ~rng_mask:
                convex_in_e = False
    _hypothesis("sigma-convex-in-E", convex_in_e)

    ext = extend_from_join_dense(L, bmask, sigma, M)
    exts = enumerate_continuous_extensions(L, bmask, sigma, M)
    unique = len({e.image for e in exts}) == 1
    convex = is_convex(M, ext.range_mask)
    embedding = ext.is_embedding
    holds = unique and convex and embedding and ext.image in {e.image for e in exts}
    return {
        "holds": holds,
        "extension": list(ext.image),
        "unique": unique,
        "convex_range": convex,
        "embedding": embedding,
        "extensions_found": len(exts),
    }
