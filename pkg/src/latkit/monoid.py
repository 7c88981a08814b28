"""Commutative monoids and their associated orders.

Two carriers: :class:`FiniteMonoid` (an explicit Cayley table) and
:class:`VectorMonoid` (nonnegative integer vectors under coordinatewise
addition, the stand-in for infinite pointed monoids at desk scale).  The
associated quasi order is ``x <= y`` iff ``x + a = y`` for some ``a``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Optional

import numpy as np

from .order import QuasiOrder, bits, inf, sup
from .lattice import lattice_view

__all__ = [
    "MonoidError",
    "NotCancellativeError",
    "FiniteMonoid",
    "VectorMonoid",
    "GroupCompletion",
    "VectorGroupCompletion",
    "associated_order",
    "monoid_class",
    "group_completion",
    "check_distributivity",
    "check_disjoint_sum_laws",
    "closed_under_subtraction",
    "truncated_addition_monoid",
    "cyclic_group",
    "enumerate_commutative_monoids",
    "monoid_to_json",
    "monoid_from_json",
]

DISTRIBUTIVITY_MODES = ("plus_join", "plus_meet", "plus_join_inf", "plus_meet_inf")


class MonoidError(ValueError):
    """A table or argument violates a monoid-theoretic contract."""


class NotCancellativeError(MonoidError):
    """Raised when a construction requires cancellativity and it fails."""


@dataclass(frozen=True, eq=False)
class FiniteMonoid:
    """A monoid on ``range(size)`` given by its Cayley table."""

    table: np.ndarray
    identity: int

    def __post_init__(self):
        t = np.array(self.table, dtype=int)
        n = t.shape[0]
        if t.ndim != 2 or t.shape != (n, n) or n == 0:
            raise MonoidError(f"table must be square and nonempty, got {t.shape}")
        if (t < 0).any() or (t >= n).any():
            raise MonoidError("table entries out of range")
        if not (np.array_equal(t[self.identity], np.arange(n))
                and np.array_equal(t[:, self.identity], np.arange(n))):
            raise MonoidError("identity law fails")
        # associativity: (a.b).c == a.(b.c) for all triples
        if not np.array_equal(t[t, :], t[:, t]):
            raise MonoidError("operation is not associative")
        t.flags.writeable = False
        object.__setattr__(self, "table", t)

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def op(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def is_cancellative(self) -> bool:
        n = self.size
        for a in range(n):
            if len(set(self.table[a])) != n or len(set(self.table[:, a])) != n:
                return False
        return True

    @cached_property
    def invertibles(self) -> tuple:
        e = self.identity
        return tuple(
            a for a in range(self.size)
            if any(self.table[a, b] == e and self.table[b, a] == e
                   for b in range(self.size))
        )

    def right_quotient(self, a: int, b: int):
        """The ``c`` with ``c + b = a``: ``(solution, multiplicity)`` where the
        solution is ``None`` unless exactly one exists."""
        sols = [c for c in range(self.size) if self.table[c, b] == a]
        return (sols[0] if len(sols) == 1 else None), len(sols)

    def __repr__(self):
        return f"FiniteMonoid(size={self.size})"


def associated_order(m: FiniteMonoid) -> QuasiOrder:
    """``x <= y`` iff ``x + a = y`` for some ``a``; always a quasi order."""
    n = m.size
    rel = np.zeros((n, n), dtype=bool)
    for x in range(n):
        rel[x, m.table[x]] = True
    return QuasiOrder(rel)


def monoid_class(m) -> dict:
    """Order-theoretic classification of a monoid.

    Vector monoids are classified intensionally: the associated order is
    the coordinatewise product order, with max/min as join/meet, addition
    is cancellative, and only the zero vector is invertible.
    """
    if isinstance(m, VectorMonoid):
        return {
            "poset_monoid": True,
            "semilattice_monoid": True,
            "lattice_monoid": True,
            "cancellative": True,
            "invertibles": (m.zero(),),
        }
    q = associated_order(m)
    poset = q.is_poset
    semilattice = lattice = False
    if poset:
        lv = lattice_view(q)
        semilattice = bool((lv.join >= 0).all())
        lattice = semilattice and bool((lv.meet >= 0).all())
    return {
        "poset_monoid": poset,
        "semilattice_monoid": semilattice,
        "lattice_monoid": lattice,
        "cancellative": m.is_cancellative,
        "invertibles": m.invertibles,
    }


# ---------------------------------------------------------------------------
# group completion


@dataclass(frozen=True, eq=False)
class GroupCompletion:
    """Abelian group of pair classes over a cancellative commutative monoid.

    Classes of ``M x N`` under ``(a,b) ~ (c,d)`` iff ``a+r = c+s`` and
    ``b+r = d+s`` for some ``r, s`` in ``N``; each class is named by its
    lexicographically least member.
    """

    source: FiniteMonoid
    group: FiniteMonoid
    reps: tuple            # class index -> least (a, b) pair
    embedding: tuple       # a -> class index of (a, identity)
    pair_class: dict       # (a, b) -> class index

    def class_of(self, a: int, b: int) -> int:
        return self.pair_class[(a, b)]


def group_completion(m: FiniteMonoid) -> GroupCompletion:
    """Embed a cancellative commutative monoid into an abelian group."""
    if not m.is_commutative:
        raise MonoidError("group completion requires commutativity")
    if not m.is_cancellative:
        raise NotCancellativeError("monoid is not cancellative")
    n = m.size
    e = m.identity
    inv = set(m.invertibles)
    carrier_n = sorted((set(range(n)) - inv) | {e})
    pairs = [(a, b) for a in range(n) for b in carrier_n]

    def related(p, q):
        a, b = p
        c, d = q
        return any(
            m.table[a, r] == m.table[c, s] and m.table[b, r] == m.table[d, s]
            for r in carrier_n for s in carrier_n
        )

    pair_class: dict = {}
    reps = []
    for p in pairs:
        if p in pair_class:
            continue
        idx = len(reps)
        reps.append(p)
        for q in pairs:
            if q not in pair_class and related(p, q):
                pair_class[q] = idx
    k = len(reps)
    table = np.zeros((k, k), dtype=int)
    for i, (a, b) in enumerate(reps):
        for j, (c, d) in enumerate(reps):
            table[i, j] = pair_class[(m.table[a, c], m.table[b, d])]
    identity = pair_class[(e, e)]
    group = FiniteMonoid(table, identity)
    # the construction guarantees an abelian group and a monomorphism
    assert group.is_commutative and len(group.invertibles) == k
    embedding = tuple(pair_class[(a, e)] for a in range(n))
    assert len(set(embedding)) == n, "embedding failed to be injective"
    return GroupCompletion(m, group, tuple(reps), embedding, pair_class)


# ---------------------------------------------------------------------------
# vector monoids (N^I, intensionally)


@dataclass(frozen=True)
class VectorMonoid:
    """Nonnegative integer vectors of a fixed length under addition.

    The associated order is the coordinatewise product order; joins and
    meets are coordinatewise max and min, so all finite suprema and infima
    exist (a complete semilattice in every bounded region).
    """

    dim: int

    def zero(self) -> tuple:
        return (0,) * self.dim

    def chi(self, i: int, value: int = 1) -> tuple:
        return tuple(value if j == i else 0 for j in range(self.dim))

    def add(self, x, y) -> tuple:
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x, y) -> Optional[tuple]:
        out = tuple(a - b for a, b in zip(x, y))
        return out if all(v >= 0 for v in out) else None

    def join(self, x, y) -> tuple:
        return tuple(max(a, b) for a, b in zip(x, y))

    def meet(self, x, y) -> tuple:
        return tuple(min(a, b) for a, b in zip(x, y))

    def leq(self, x, y) -> bool:
        return all(a <= b for a, b in zip(x, y))

    def sup_of(self, vectors) -> Optional[tuple]:
        vectors = list(vectors)
        if not vectors:
            return self.zero()
        out = vectors[0]
        for v in vectors[1:]:
            out = self.join(out, v)
        return out

    def inf_of(self, vectors) -> Optional[tuple]:
        vectors = list(vectors)
        if not vectors:
            return None  # no maximum element
        out = vectors[0]
        for v in vectors[1:]:
            out = self.meet(out, v)
        return out

    def sample(self, rng: random.Random, bound: int = 8) -> tuple:
        return tuple(rng.randint(0, bound) for _ in range(self.dim))


@dataclass(frozen=True)
class VectorGroupCompletion:
    """Integer-vector group receiving ``VectorMonoid`` by inclusion.

    A pair class ``[a, b]`` is the difference vector ``a - b``; the
    canonical pair representative splits it into positive and negative
    parts, which have disjoint supports.
    """

    dim: int

    def class_of(self, a, b) -> tuple:
        return tuple(x - y for x, y in zip(a, b))

    def canonical_pair(self, z) -> tuple:
        pos = tuple(max(v, 0) for v in z)
        neg = tuple(max(-v, 0) for v in z)
        return pos, neg

    def add(self, z, w) -> tuple:
        return tuple(a + b for a, b in zip(z, w))

    def neg(self, z) -> tuple:
        return tuple(-v for v in z)

    def embed(self, a) -> tuple:
        return tuple(a)


def vector_group_completion(m: VectorMonoid) -> VectorGroupCompletion:
    return VectorGroupCompletion(m.dim)


# ---------------------------------------------------------------------------
# distributive laws


def _finite_monoid_sets(m: FiniteMonoid):
    n = m.size
    for a in range(n):
        for bmask in range(1 << n):
            yield a, tuple(bits(bmask))


def _check_identity_finite(m: FiniteMonoid, q: QuasiOrder, a: int, B: tuple,
                           dual: bool) -> Optional[dict]:
    bound = inf(q, B) if dual else sup(q, B)
    if bound is None:
        return None
    lhs = m.op(a, bound)
    imgs = 0
    for b in B:
        imgs |= 1 << m.op(a, b)
    rhs = inf(q, imgs) if dual else sup(q, imgs)
    if rhs != lhs:
        return {"a": a, "B": list(B), "lhs": lhs, "rhs": rhs}
    return None


def check_distributivity(m, mode: str, instances=None, *, samples: int = 1000,
                         max_set_size: int = 4, bound: int = 8,
                         seed: int = 0) -> dict:
    """Verify a distributive law of addition over join or meet.

    ``plus_join``/``plus_meet`` are the binary laws (over triples);
    ``plus_join_inf``/``plus_meet_inf`` quantify over finite sets ``B``,
    asserting ``a + vB = v(a + B)`` whenever the bound exists.  Finite
    monoids are scanned exhaustively over every subset, the empty one
    included; sampled runs on vector monoids draw nonempty ``B``.
    """
    if mode not in DISTRIBUTIVITY_MODES:
        raise MonoidError(f"unknown mode {mode!r}")
    dual = mode.startswith("plus_meet")
    binary = not mode.endswith("_inf")
    report = {"mode": mode, "holds": True, "witness": None, "checked": 0,
              "sampling": None}

    if isinstance(m, FiniteMonoid):
        q = associated_order(m)
        if not q.is_poset:
            raise MonoidError("distributivity checks need a poset monoid")
        if instances is None:
            if binary:
                n = m.size
                instances = (
                    (a, (b, c)) for a in range(n)
                    for b in range(n) for c in range(n)
                )
            else:
                instances = _finite_monoid_sets(m)
        for a, B in instances:
            report["checked"] += 1
            w = _check_identity_finite(m, q, a, tuple(B), dual)
            if w is not None:
                report["holds"] = False
                report["witness"] = w
                return report
        return report

    # vector monoid: sampled instances, nonempty B
    rng = random.Random(seed)
    if instances is None:
        drawn = []
        for _ in range(samples):
            a = m.sample(rng, bound)
            if binary:
                B = (m.sample(rng, bound), m.sample(rng, bound))
            else:
                k = rng.randint(1, max(1, max_set_size))
                B = tuple(m.sample(rng, bound) for _ in range(k))
            drawn.append((a, B))
        instances = drawn
        report["sampling"] = {"seed": seed, "instance_count": len(drawn)}
    for a, B in instances:
        report["checked"] += 1
        agg = m.inf_of(B) if dual else m.sup_of(B)
        if agg is None:
            continue
        lhs = m.add(a, agg)
        imgs = [m.add(a, b) for b in B]
        rhs = m.inf_of(imgs) if dual else m.sup_of(imgs)
        if rhs != lhs:
            report["holds"] = False
            report["witness"] = {"a": list(a), "B": [list(b) for b in B],
                                 "lhs": list(lhs), "rhs": list(rhs)}
            return report
    return report


def check_disjoint_sum_laws(m, instances=None, *, samples: int = 1000,
                            bound: int = 8, seed: int = 0) -> dict:
    """Verify the two disjointness laws on triples ``(a, b, c)``:
    ``a ^ b = 0`` forces ``a v b = a + b``, and ``a ^ c = b ^ c = 0`` forces
    ``(a + b) ^ c = 0``."""
    report = {"holds": True, "witness": None, "checked": 0, "sampling": None}

    if isinstance(m, FiniteMonoid):
        q = associated_order(m)
        if not q.is_poset:
            raise MonoidError("disjoint-sum checks need a poset monoid")
        zero = sup(q, 0)
        if zero is None:
            raise MonoidError("associated order has no minimum")
        if instances is None:
            n = m.size
            instances = itertools.product(range(n), repeat=3)
        for a, b, c in instances:
            report["checked"] += 1
            mab = inf(q, (1 << a) | (1 << b))
            if mab == zero:
                if sup(q, (1 << a) | (1 << b)) != m.op(a, b):
                    report["holds"] = False
                    report["witness"] = {"law": "sum_is_join", "a": a, "b": b}
                    return report
            mac = inf(q, (1 << a) | (1 << c))
            mbc = inf(q, (1 << b) | (1 << c))
            if mac == zero and mbc == zero:
                if inf(q, (1 << m.op(a, b)) | (1 << c)) != zero:
                    report["holds"] = False
                    report["witness"] = {"law": "sum_stays_disjoint",
                                         "a": a, "b": b, "c": c}
                    return report
        return report

    rng = random.Random(seed)
    if instances is None:
        instances = [tuple(m.sample(rng, bound) for _ in range(3))
                     for _ in range(samples)]
        report["sampling"] = {"seed": seed, "instance_count": len(instances)}
    zero = m.zero()
    for a, b, c in instances:
        report["checked"] += 1
        if m.meet(a, b) == zero and m.join(a, b) != m.add(a, b):
            report["holds"] = False
            report["witness"] = {"law": "sum_is_join", "a": list(a), "b": list(b)}
            return report
        if (m.meet(a, c) == zero and m.meet(b, c) == zero
                and m.meet(m.add(a, b), c) != zero):
            report["holds"] = False
            report["witness"] = {"law": "sum_stays_disjoint",
                                 "a": list(a), "b": list(b), "c": list(c)}
            return report
    return report


def closed_under_subtraction(m, S, *, samples: int = 1000, bound: int = 8,
                             seed: int = 0) -> bool:
    """Whenever ``a, b`` lie in ``S`` and ``a - b`` exists, it lies in ``S``.

    For a finite monoid ``S`` is a set of elements and the scan is exact;
    for a vector monoid ``S`` is a membership predicate checked on seeded
    sample pairs.
    """
    if isinstance(m, FiniteMonoid):
        members = set(S)
        for a in members:
            for b in members:
                c, _count = m.right_quotient(a, b)
                if c is not None and c not in members:
                    return False
        return True
    rng = random.Random(seed)
    pred: Callable = S
    hits = 0
    while hits < samples:
        a = m.sample(rng, bound)
        b = tuple(rng.randint(0, v) for v in a)  # b <= a so a - b exists
        if not (pred(a) and pred(b)):
            continue
        hits += 1
        if not pred(m.sub(a, b)):
            return False
    return True


# ---------------------------------------------------------------------------
# stock examples and sweeps


def truncated_addition_monoid(n: int) -> FiniteMonoid:
    """``{0..n-1}`` with ``a + b`` capped at ``n - 1``."""
    table = [[min(a + b, n - 1) for b in range(n)] for a in range(n)]
    return FiniteMonoid(np.array(table), 0)


def cyclic_group(n: int) -> FiniteMonoid:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteMonoid(np.array(table), 0)


def enumerate_commutative_monoids(n: int):
    """All commutative monoid tables on ``range(n)`` with identity 0."""
    cells = [(a, b) for a in range(1, n) for b in range(a, n)]
    out = []
    for values in itertools.product(range(n), repeat=len(cells)):
        table = np.zeros((n, n), dtype=int)
        table[0] = np.arange(n)
        table[:, 0] = np.arange(n)
        for (a, b), v in zip(cells, values):
            table[a, b] = table[b, a] = v
        try:
            out.append(FiniteMonoid(table, 0))
        except MonoidError:
            continue
    return out


def monoid_to_json(m: FiniteMonoid) -> dict:
    return {"size": m.size, "table": m.table.tolist(), "identity": m.identity}


def monoid_from_json(obj: dict) -> FiniteMonoid:
    try:
        return FiniteMonoid(np.array(obj["table"], dtype=int), int(obj["identity"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise MonoidError(f"malformed monoid object: {exc}") from exc
