"""Classification of finite posets and of their subsets.

Subset properties (convexity, preregularity, order closedness, density
variants) are all evaluated against an explicitly given ambient order;
suprema *inside* a subset are always computed on the induced suborder,
never by restricting a parent's join table.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from .order import (
    OrderError,
    QuasiOrder,
    SetLike,
    Subset,
    bits,
    inf,
    mask_of,
    positive_part,
    sup,
)

__all__ = [
    "LatticeView",
    "SubposetAnalysis",
    "lattice_view",
    "classify",
    "is_distributive",
    "check_jid",
    "check_mid",
    "is_convex",
    "convexity_witness",
    "sup_in_subset",
    "inf_in_subset",
    "is_upwards_preregular",
    "is_downwards_preregular",
    "is_preregular",
    "is_upwards_regular",
    "is_downwards_regular",
    "is_regular",
    "preregularity_witness",
    "order_closed_checks",
    "order_closure_up",
    "order_closure_down",
    "is_flat",
    "is_flat_complete",
    "is_dense",
    "is_join_dense",
    "is_interval_predense",
    "is_strongly_interval_predense",
    "is_meet_subsemilattice",
    "is_meet_closed",
    "is_join_closed",
    "is_sublattice",
    "is_basis",
    "density_checks",
    "covers_of_bottom",
    "subset_report",
]


@dataclass(frozen=True, eq=False)
class LatticeView:
    """Partial join/meet tables over a poset; ``-1`` marks a missing bound."""

    base: QuasiOrder
    join: np.ndarray
    meet: np.ndarray

    @property
    def size(self) -> int:
        return self.base.size

    @cached_property
    def is_lattice(self) -> bool:
        return self.size == 0 or bool((self.join >= 0).all() and (self.meet >= 0).all())

    def join_of(self, a: int, b: int) -> Optional[int]:
        v = int(self.join[a, b])
        return None if v < 0 else v

    def meet_of(self, a: int, b: int) -> Optional[int]:
        v = int(self.meet[a, b])
        return None if v < 0 else v


def lattice_view(q: QuasiOrder) -> LatticeView:
    cached = q._subset_cache.get("lattice_view")
    if cached is not None:
        return cached
    if not q.is_poset:
        raise OrderError("lattice view requires a partial order")
    n = q.size
    join = np.full((n, n), -1, dtype=int)
    meet = np.full((n, n), -1, dtype=int)
    for a in range(n):
        for b in range(a, n):
            s = sup(q, (1 << a) | (1 << b))
            if s is not None:
                join[a, b] = join[b, a] = s
            m = inf(q, (1 << a) | (1 << b))
            if m is not None:
                meet[a, b] = meet[b, a] = m
    join.flags.writeable = False
    meet.flags.writeable = False
    lv = LatticeView(q, join, meet)
    q._subset_cache["lattice_view"] = lv
    return lv


def classify(q: QuasiOrder) -> dict:
    """Structure flags for a finite partial order.

    A finite poset is a complete semilattice iff it is pointed and every
    pair with a common upper bound has a join (bounded sups then exist by
    induction); a finite complete lattice is a bounded lattice.
    """
    if not q.is_poset:
        raise OrderError("classification requires a partial order")
    n = q.size
    lv = lattice_view(q)
    bottom = sup(q, 0)
    top = inf(q, 0)
    pointed = bottom is not None
    bounded = pointed and top is not None
    lattice = lv.is_lattice
    csl = pointed
    if csl:
        for a in range(n):
            for b in range(a + 1, n):
                if q.up_masks[a] & q.up_masks[b] and lv.join[a, b] < 0:
                    csl = False
                    break
            if not csl:
                break
    boolean = bounded and lattice
    if boolean:
        for p in range(n):
            if not any(
                lv.meet[p, c] == bottom and lv.join[p, c] == top for c in range(n)
            ):
                boolean = False
                break
    return {
        "lattice": lattice,
        "complete_semilattice": csl,
        "complete_lattice": lattice and bounded,
        "bounded": bounded,
        "boolean": boolean,
        "pointed": pointed,
    }


def _require_lattice(lv: LatticeView):
    if not lv.is_lattice:
        raise OrderError("operation requires a lattice")


def is_distributive(lv: LatticeView) -> bool:
    """Both distributive identities over all triples."""
    _require_lattice(lv)
    n = lv.size
    J, M = lv.join, lv.meet
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if M[a, J[b, c]] != J[M[a, b], M[a, c]]:
                    return False
                if J[a, M[b, c]] != M[J[a, b], J[a, c]]:
                    return False
    return True


def _distributes_over_set(lv: LatticeView, a: int, bmask: int, dual: bool) -> bool:
    q = lv.base
    s = inf(q, bmask) if dual else sup(q, bmask)
    if s is None:
        return True
    op = lv.join if dual else lv.meet
    lhs = int(op[a, s])
    imgs = 0
    for b in bits(bmask):
        imgs |= 1 << int(op[a, b])
    rhs = inf(q, imgs) if dual else sup(q, imgs)
    return rhs is not None and lhs == rhs


def _infinite_distributive(lv: LatticeView, dual: bool, exhaustive_limit: int,
                           samples: int, seed: int) -> dict:
    _require_lattice(lv)
    n = lv.size
    q = lv.base
    if n <= exhaustive_limit:
        checked = 0
        for a in range(n):
            for bmask in range(1 << n):
                checked += 1
                if not _distributes_over_set(lv, a, bmask, dual):
                    return {
                        "holds": False,
                        "mode": "exhaustive",
                        "checked": checked,
                        "witness": {"a": a, "B": list(bits(bmask))},
                    }
        return {"holds": True, "mode": "exhaustive", "checked": checked, "witness": None}
    rng = random.Random(seed)
    cases = []
    small = [0]
    small += [1 << i for i in range(n)]
    small += [(1 << i) | (1 << j) for i in range(n) for j in range(i + 1, n)]
    small += [(1 << i) | (1 << j) | (1 << k)
              for i in range(n) for j in range(i + 1, n)
              for k in range(j + 1, n)]
    for a in range(n):
        for bmask in small:
            cases.append((a, bmask))
    for _ in range(samples):
        a = rng.randrange(n)
        bmask = rng.getrandbits(n)
        cases.append((a, bmask))
    for a, bmask in cases:
        if not _distributes_over_set(lv, a, bmask, dual):
            return {
                "holds": False,
                "mode": "sampled",
                "checked": len(cases),
                "seed": seed,
                "witness": {"a": a, "B": list(bits(bmask))},
            }
    return {
        "holds": True,
        "mode": "sampled",
        "checked": len(cases),
        "seed": seed,
        "witness": None,
    }


def check_jid(lv: LatticeView, exhaustive_limit: int = 14,
              samples: int = 10_000, seed: int = 0) -> dict:
    """Join-infinite distributivity: a ^ vB = v(a ^ B) for every B whose
    supremum exists.  Exhaustive up to ``exhaustive_limit`` elements,
    seeded sampling above it (mode is reported)."""
    return _infinite_distributive(lv, False, exhaustive_limit, samples, seed)


def check_mid(lv: LatticeView, exhaustive_limit: int = 14,
              samples: int = 10_000, seed: int = 0) -> dict:
    """Meet-infinite distributivity, the dual of :func:`check_jid`."""
    return _infinite_distributive(lv, True, exhaustive_limit, samples, seed)


# ---------------------------------------------------------------------------
# subset properties


def convexity_witness(q: QuasiOrder, A: SetLike) -> Optional[dict]:
    """A triple ``p <= r <= q`` with endpoints in ``A`` and ``r`` outside,
    or ``None`` when ``A`` is convex."""
    m = mask_of(q, A)
    for p in bits(m):
        for r in bits(m):
            gap = (q.up_masks[p] & q.down_masks[r]) & ~m
            if gap:
                missing = next(bits(gap))
                return {"p": p, "q": r, "missing": missing}
    return None


def is_convex(q: QuasiOrder, A: SetLike) -> bool:
    return convexity_witness(q, A) is None


def sup_in_subset(q: QuasiOrder, A: SetLike, B: SetLike) -> Optional[int]:
    """Supremum of ``B`` computed inside the induced suborder on ``A``."""
    amask = mask_of(q, A)
    bmask = mask_of(q, B)
    if bmask & ~amask:
        raise OrderError("B must be a subset of A")
    ub = amask
    for b in bits(bmask):
        ub &= q.up_masks[b]
        if not ub:
            return None
    for u in bits(ub):
        if ub & ~q.up_masks[u] == 0:
            return u
    return None


def inf_in_subset(q: QuasiOrder, A: SetLike, B: SetLike) -> Optional[int]:
    return sup_in_subset(q.dual, mask_of(q, A), mask_of(q, B))


def preregularity_witness(q: QuasiOrder, A: SetLike, upwards: bool) -> Optional[dict]:
    """A nonempty ``B`` whose bound inside ``A`` disagrees with the ambient
    one (including the case where the ambient bound does not exist)."""
    m = mask_of(q, A)
    if upwards:
        inner, outer = sup_in_subset, sup
    else:
        inner, outer = inf_in_subset, inf
    sub = m
    while True:
        if sub:
            a = inner(q, m, sub)
            if a is not None:
                p = outer(q, sub)
                if p != a:
                    return {"B": list(bits(sub)), "in_subset": a, "in_ambient": p}
        if sub == 0:
            return None
        sub = (sub - 1) & m


def is_upwards_preregular(q: QuasiOrder, A: SetLike) -> bool:
    return preregularity_witness(q, A, upwards=True) is None


def is_downwards_preregular(q: QuasiOrder, A: SetLike) -> bool:
    return preregularity_witness(q, A, upwards=False) is None


def is_preregular(q: QuasiOrder, A: SetLike) -> bool:
    m = mask_of(q, A)
    return is_upwards_preregular(q, m) and is_downwards_preregular(q, m)


def is_upwards_regular(q: QuasiOrder, A: SetLike) -> bool:
    """Upwards preregular, plus the empty supremum: a least element of ``A``
    must also be least in the ambient order."""
    m = mask_of(q, A)
    if not is_upwards_preregular(q, m):
        return False
    a0 = sup_in_subset(q, m, 0)
    return a0 is None or sup(q, 0) == a0


def is_downwards_regular(q: QuasiOrder, A: SetLike) -> bool:
    m = mask_of(q, A)
    if not is_downwards_preregular(q, m):
        return False
    a1 = inf_in_subset(q, m, 0)
    return a1 is None or inf(q, 0) == a1


def is_regular(q: QuasiOrder, A: SetLike) -> bool:
    m = mask_of(q, A)
    return is_upwards_regular(q, m) and is_downwards_regular(q, m)


def order_closed_checks(q: QuasiOrder, A: SetLike) -> dict:
    """Order-closedness verdicts for ``A``.

    ``up_boc``: ambient sups of nonempty subsets that are bounded inside
    ``A`` land in ``A``; ``up_oc`` drops the bound premise.  ``down_*`` are
    the duals.
    """
    m = mask_of(q, A)
    up_boc = up_oc = down_boc = down_oc = True
    sub = m
    while sub:
        s = sup(q, sub)
        if s is not None and not (m >> s) & 1:
            up_oc = False
            bounded_in_a = m
            for b in bits(sub):
                bounded_in_a &= q.up_masks[b]
            if bounded_in_a:
                up_boc = False
        t = inf(q, sub)
        if t is not None and not (m >> t) & 1:
            down_oc = False
            bounded_in_a = m
            for b in bits(sub):
                bounded_in_a &= q.down_masks[b]
            if bounded_in_a:
                down_boc = False
        sub = (sub - 1) & m
    return {"up_boc": up_boc, "down_boc": down_boc, "up_oc": up_oc, "down_oc": down_oc}


def order_closure_up(q: QuasiOrder, A: SetLike) -> Subset:
    """All ambient suprema of subsets of ``A`` (the empty supremum, i.e. the
    minimum, included when it exists).  ``order_closure_up(q, ()) = ()``."""
    m = mask_of(q, A)
    if not m:
        return Subset(q, 0)
    out = 0
    sub = m
    while True:
        s = sup(q, sub)
        if s is not None:
            out |= 1 << s
        if sub == 0:
            break
        sub = (sub - 1) & m
    return Subset(q, out)


def order_closure_down(q: QuasiOrder, A: SetLike) -> Subset:
    return Subset(q, order_closure_up(q.dual, mask_of(q, A)).mask)


def is_flat(q: QuasiOrder, A: SetLike) -> bool:
    """All pairwise meets of distinct members exist and coincide."""
    m = mask_of(q, A)
    items = list(bits(m))
    if len(items) <= 1:
        return q.size > 0
    base = None
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            v = inf(q, (1 << a) | (1 << b))
            if v is None or (base is not None and v != base):
                return False
            base = v
    return True


def is_flat_complete(lv: LatticeView) -> bool:
    """Every flat subset has a supremum.  Finite lattices always qualify,
    but the scan is performed literally."""
    _require_lattice(lv)
    q = lv.base
    for m in range(1 << q.size):
        if is_flat(q, m) and sup(q, m) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# density notions


def is_dense(q: QuasiOrder, D: SetLike) -> bool:
    """Every nonminimal element has a nonminimal member of ``D`` below it."""
    dmask = mask_of(q, D) & positive_part(q).mask
    return all(dmask & q.down_masks[p] for p in bits(positive_part(q).mask))


def is_join_dense(q: QuasiOrder, D: SetLike) -> bool:
    """Every element is the supremum of the members of ``D`` below it."""
    dmask = mask_of(q, D)
    return all(sup(q, dmask & q.down_masks[p]) == p for p in range(q.size))


def is_interval_predense(q: QuasiOrder, D: SetLike) -> bool:
    """Every strict pair ``p < q`` is separated: some ``d`` in ``D`` has
    ``d <= q`` but not ``d <= p``."""
    dmask = mask_of(q, D)
    for p in range(q.size):
        for r in range(q.size):
            if q.lt(p, r) and dmask & q.down_masks[r] & ~q.down_masks[p] == 0:
                return False
    return True


def is_strongly_interval_predense(q: QuasiOrder, D: SetLike) -> bool:
    """Interval predensity with the separating element's meet against ``p``
    required to fall back into ``D``."""
    lv = lattice_view(q)
    _require_lattice(lv)
    dmask = mask_of(q, D)
    for p in range(q.size):
        for r in range(q.size):
            if not q.lt(p, r):
                continue
            ok = False
            for d in bits(dmask & q.down_masks[r]):
                dp = int(lv.meet[d, p])
                if dp != d and (dmask >> dp) & 1:
                    ok = True
                    break
            if not ok:
                return False
    return True


def is_meet_closed(q: QuasiOrder, A: SetLike) -> bool:
    """Pairwise ambient meets of members exist and stay in ``A``."""
    m = mask_of(q, A)
    items = list(bits(m))
    for i, a in enumerate(items):
        for b in items[i:]:
            v = inf(q, (1 << a) | (1 << b))
            if v is None or not (m >> v) & 1:
                return False
    return True


def is_join_closed(q: QuasiOrder, A: SetLike) -> bool:
    return is_meet_closed(q.dual, mask_of(q, A))


def is_sublattice(q: QuasiOrder, A: SetLike) -> bool:
    m = mask_of(q, A)
    return is_meet_closed(q, m) and is_join_closed(q, m)


def is_meet_subsemilattice(q: QuasiOrder, A: SetLike) -> bool:
    """Meets computed inside ``A`` agree with ambient meets whenever both
    exist.  (Weaker than meet-closedness: pairs with no meet inside ``A``
    pass vacuously, so e.g. an antichain qualifies.)"""
    m = mask_of(q, A)
    items = list(bits(m))
    for i, a in enumerate(items):
        for b in items[i:]:
            inner = inf_in_subset(q, m, (1 << a) | (1 << b))
            if inner is None:
                continue
            outer = inf(q, (1 << a) | (1 << b))
            if outer != inner:
                return False
    return True


def _antichain_decomposition(lv: LatticeView, dmask: int, target: int,
                             bottom: int) -> bool:
    """Search a pairwise-incompatible family inside ``D`` below ``target``
    with supremum ``target``; the empty family covers the bottom."""
    q = lv.base
    if target == bottom:
        return True
    cands = [d for d in bits(dmask & q.down_masks[target])]

    def extend(start: int, chosen: tuple, current: Optional[int]) -> bool:
        if current == target:
            return True
        for k in range(start, len(cands)):
            d = cands[k]
            if any(lv.meet[d, c] != bottom for c in chosen):
                continue
            nxt = d if current is None else int(lv.join[current, d])
            if nxt < 0 or not q.leq[nxt, target]:
                continue
            if extend(k + 1, chosen + (d,), nxt):
                return True
        return False

    return extend(0, (), None)


def is_basis(q: QuasiOrder, D: SetLike) -> bool:
    """``D`` is a meet subsemilattice and every element is the supremum of a
    pairwise-incompatible family from ``D``.  Requires a pointed lattice."""
    lv = lattice_view(q)
    _require_lattice(lv)
    bottom = sup(q, 0)
    if bottom is None:
        raise OrderError("basis check requires a pointed lattice")
    dmask = mask_of(q, D)
    if not is_meet_subsemilattice(q, dmask):
        return False
    return all(
        _antichain_decomposition(lv, dmask, a, bottom) for a in range(q.size)
    )


def density_checks(q: QuasiOrder, D: SetLike) -> dict:
    """All five density verdicts for ``D`` inside a pointed lattice."""
    dmask = mask_of(q, D)
    return {
        "dense": is_dense(q, dmask),
        "join_dense": is_join_dense(q, dmask),
        "interval_predense": is_interval_predense(q, dmask),
        "strongly_interval_predense": is_strongly_interval_predense(q, dmask),
        "basis": is_basis(q, dmask),
    }


def covers_of_bottom(q: QuasiOrder) -> Subset:
    """Elements directly above the minimum (the classical atom notion for
    Boolean algebras: nonzero with nothing strictly between 0 and them)."""
    bottom = sup(q, 0)
    if bottom is None:
        raise OrderError("order has no minimum element")
    out = 0
    for p in range(q.size):
        if q.lt(bottom, p) and all(
            not q.lt(bottom, r) for r in bits(q.down_masks[p] & ~(1 << p))
        ):
            out |= 1 << p
    return Subset(q, out)


def subset_report(q: QuasiOrder, A: SetLike) -> dict:
    """JSON-ready verdicts ``{property: {holds, witness}}`` for a subset."""
    m = mask_of(q, A)
    report = {}
    w = convexity_witness(q, m)
    report["convex"] = {"holds": w is None, "witness": w}
    for name, upwards in (("preregular_up", True), ("preregular_down", False)):
        w = preregularity_witness(q, m, upwards)
        report[name] = {"holds": w is None, "witness": w}
    for name, holds in order_closed_checks(q, m).items():
        report[name] = {"holds": holds, "witness": None}
    report["flat"] = {"holds": is_flat(q, m), "witness": None}
    return report


@dataclass(frozen=True, eq=False)
class SubposetAnalysis:
    """A subset of an ambient order with verdicts cached on first access.

    Each verdict is recomputed from the definitions on demand and then
    memoized; analyses of distinct subsets are independent, so they can run
    in parallel.
    """

    parent: QuasiOrder
    subset: Subset

    def __post_init__(self):
        if self.subset.order is not self.parent:
            raise OrderError("subset does not live in the given order")
        object.__setattr__(self, "_verdicts", {})

    def _get(self, key, compute):
        if key not in self._verdicts:
            self._verdicts[key] = compute()
        return self._verdicts[key]

    @property
    def convex(self) -> bool:
        return self._get("convex", lambda: is_convex(self.parent, self.subset.mask))

    @property
    def preregular(self) -> bool:
        return self._get("preregular",
                         lambda: is_preregular(self.parent, self.subset.mask))

    @property
    def regular(self) -> bool:
        return self._get("regular", lambda: is_regular(self.parent, self.subset.mask))

    @property
    def order_closed(self) -> dict:
        return self._get("order_closed",
                         lambda: order_closed_checks(self.parent, self.subset.mask))

    @property
    def flat(self) -> bool:
        return self._get("flat", lambda: is_flat(self.parent, self.subset.mask))

    def report(self) -> dict:
        return self._get("report", lambda: subset_report(self.parent, self.subset.mask))
