"""Constructors and enumerators for small orders.

Power sets use the mask convention: element ``i`` of ``powerset_lattice(n)``
is the subset of the ground set ``range(n)`` with bitmask ``i``, ordered by
inclusion.  Chain products index vectors in mixed radix, least significant
coordinate first.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .order import QuasiOrder, build_quasi_order, order_from_relation

__all__ = [
    "chain",
    "antichain",
    "diamond",
    "m3",
    "n5",
    "bowtie",
    "powerset_lattice",
    "product_order",
    "ChainProduct",
    "chain_product",
    "enumerate_posets",
    "enumerate_lattices",
    "random_lattice",
    "canonical_key",
]


def chain(n: int) -> QuasiOrder:
    """The linear order 0 < 1 < ... < n-1."""
    rel = np.fromfunction(lambda p, q: p <= q, (n, n))
    return order_from_relation(rel)


def antichain(n: int) -> QuasiOrder:
    return order_from_relation(np.eye(n, dtype=bool))


def diamond() -> QuasiOrder:
    """Bottom 0, incomparable 1 and 2, top 3."""
    return build_quasi_order(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def m3() -> QuasiOrder:
    """Bottom 0, three pairwise incomparable middles 1,2,3, top 4."""
    return build_quasi_order(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def n5() -> QuasiOrder:
    """The pentagon: 0 < 1 < 2 < 4 and 0 < 3 < 4."""
    return build_quasi_order(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def bowtie() -> QuasiOrder:
    """Two minimal elements 0,1 each below two maximal elements 2,3."""
    return build_quasi_order(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


def powerset_lattice(n: int) -> QuasiOrder:
    """Subset lattice of an ``n``-element ground set; element = bitmask."""
    size = 1 << n
    rel = np.zeros((size, size), dtype=bool)
    for a in range(size):
        for b in range(size):
            rel[a, b] = a & ~b == 0
    return order_from_relation(rel)


def is_powerset_order(q: QuasiOrder) -> bool:
    """Check that ``q`` is a power-set lattice in the mask convention."""
    n = q.size.bit_length() - 1
    if 1 << n != q.size:
        return False
    for a in range(q.size):
        for b in range(q.size):
            if bool(q.leq[a, b]) != (a & ~b == 0):
                return False
    return True


def product_order(p: QuasiOrder, q: QuasiOrder) -> QuasiOrder:
    """Componentwise order on pairs, index = ``i + p.size * j``."""
    rel = np.kron(q.leq, p.leq)
    return order_from_relation(rel)


@dataclass(frozen=True, eq=False)
class ChainProduct:
    """Product of finite chains ``C_{dims[0]} x ... x C_{dims[-1]}``."""

    dims: tuple

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if any(d < 1 for d in self.dims):
            raise ValueError("chain heights must be positive")

    @property
    def size(self) -> int:
        out = 1
        for d in self.dims:
            out *= d
        return out

    def index(self, vec) -> int:
        idx = 0
        stride = 1
        for v, d in zip(vec, self.dims):
            if not 0 <= v < d:
                raise ValueError(f"coordinate {v} out of range for height {d}")
            idx += v * stride
            stride *= d
        return idx

    def vector(self, idx: int) -> tuple:
        out = []
        for d in self.dims:
            out.append(idx % d)
            idx //= d
        return tuple(out)

    @cached_property
    def order(self) -> QuasiOrder:
        size = self.size
        vecs = [self.vector(i) for i in range(size)]
        rel = np.zeros((size, size), dtype=bool)
        for a in range(size):
            for b in range(size):
                rel[a, b] = all(x <= y for x, y in zip(vecs[a], vecs[b]))
        return order_from_relation(rel)


def chain_product(dims) -> ChainProduct:
    return ChainProduct(tuple(dims))


# ---------------------------------------------------------------------------
# enumeration of small posets up to isomorphism


def canonical_key(q: QuasiOrder) -> bytes:
    """Isomorphism-invariant canonical encoding of a poset.

    Minimizes the relation bytes over relabelings, restricted to permutations
    compatible with the (indegree, outdegree) profile to stay cheap.
    """
    n = q.size
    profile = [
        (q.down_masks[p].bit_count(), q.up_masks[p].bit_count()) for p in range(n)
    ]
    groups = {}
    for p in range(n):
        groups.setdefault(profile[p], []).append(p)
    keys = sorted(groups)
    best = None
    for parts in itertools.product(
        *(itertools.permutations(groups[k]) for k in keys)
    ):
        perm = [p for part in parts for p in part]
        enc = bytearray()
        for i in perm:
            row = 0
            for bit, j in enumerate(perm):
                if q.leq[i, j]:
                    row |= 1 << bit
            enc += row.to_bytes((n + 7) // 8, "little")
        enc = bytes(enc)
        if best is None or enc < best:
            best = enc
    return bytes([n]) + best


def _lower_sets(q: QuasiOrder):
    n = q.size
    out = []
    for mask in range(1 << n):
        ok = True
        for p in bits_of(mask):
            if q.down_masks[p] & ~mask:
                ok = False
                break
        if ok:
            out.append(mask)
    return out


def bits_of(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_posets(n: int):
    """All posets with exactly ``n`` elements, one per isomorphism class.

    Built by repeatedly adjoining a new maximal element above a lower set,
    which reaches every finite poset.
    """
    if n < 1:
        return []
    current = {canonical_key(chain(1)): chain(1)}
    for _ in range(n - 1):
        nxt = {}
        for q in current.values():
            k = q.size
            for low in _lower_sets(q):
                rel = np.zeros((k + 1, k + 1), dtype=bool)
                rel[:k, :k] = q.leq
                rel[k, k] = True
                for p in bits_of(low):
                    rel[p, k] = True
                cand = order_from_relation(rel)
                key = canonical_key(cand)
                if key not in nxt:
                    nxt[key] = cand
        current = nxt
    return sorted(current.values(), key=canonical_key)


def enumerate_lattices(n: int):
    """All lattices with exactly ``n`` elements, up to isomorphism."""
    from .lattice import classify

    return [q for q in enumerate_posets(n) if classify(q)["lattice"]]


def random_lattice(n: int, rng: random.Random, edge_prob: float = 0.4) -> QuasiOrder:
    """A random ``n``-element lattice: random mid-layer order glued between a
    fresh bottom and top, resampled until the result is a lattice."""
    from .lattice import classify

    if n < 2:
        raise ValueError("need at least bottom and top")
    mid = n - 2
    while True:
        pairs = []
        for a in range(mid):
            for b in range(a + 1, mid):
                if rng.random() < edge_prob:
                    pairs.append((a, b))
        for a in range(mid):
            pairs.append((mid, a))      # bottom below all
            pairs.append((a, mid + 1))  # all below top
        pairs.append((mid, mid + 1))
        q = build_quasi_order(n, pairs)
        if classify(q)["lattice"]:
            return q
