"""Exhaustive zip-group machinery over a small finite field: the group of
determinant-matched 2x2 tuples, the Frobenius-coupled Borel pairs acting on
it by (a, b) . g = a g b^(-1), orbit partition, and the Bruhat cell census.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import DEFAULT_ENUM_BOUND, BoundExceededError
from .field import FieldCtx
from .linalg import Matrix
from .schubert import GroupElem, bruhat_word, stratum_label
from .weyl import CocharDatum, WeylElem, all_weyl_elems


class OrbitLabelError(RuntimeError):
    """An orbit with a non-constant stratum label signals an implementation
    bug and is surfaced, never repaired."""


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


@dataclass(frozen=True)
class ZipGroupElem:
    """A pair (a, b): a with lower-triangular factors, b with upper, and the
    diagonal of each factor of b equal to the entrywise p-th power of the
    diagonal of the matching factor of a."""

    a: GroupElem
    b: GroupElem

    def __post_init__(self):
        if self.a.n != self.b.n:
            raise ValueError("factor count mismatch")
        for i, (fa, fb) in enumerate(zip(self.a.factors, self.b.factors)):
            if fa.entry(0, 1):
                raise ValueError(f"left factor {i} is not lower triangular")
            if fb.entry(1, 0):
                raise ValueError(f"right factor {i} is not upper triangular")
            if (fb.entry(0, 0) != fa.entry(0, 0).frobenius()
                    or fb.entry(1, 1) != fa.entry(1, 1).frobenius()):
                raise ValueError(f"diagonal of right factor {i} is not the "
                                 f"Frobenius of the left diagonal")


def zip_act(e: ZipGroupElem, g: GroupElem) -> GroupElem:
    """(a, b) . g = a g b^(-1)."""
    return e.a * g * e.b.inverse()


def _gl2_by_det(ctx: FieldCtx) -> dict[int, list[Matrix]]:
    """All invertible 2x2 matrices grouped by determinant index, each group
    in deterministic enumeration order."""
    groups: dict[int, list[Matrix]] = {}
    for a, b, c, d in product(ctx.elements(), repeat=4):
        det = a * d - b * c
        if det:
            groups.setdefault(det.index, []).append(Matrix(ctx, 2, 2, (a, b, c, d)))
    return dict(sorted(groups.items()))


def _borel_by_det(ctx: FieldCtx) -> dict[int, list[Matrix]]:
    """Invertible lower-triangular 2x2 matrices grouped by determinant index."""
    groups: dict[int, list[Matrix]] = {}
    zero = ctx.zero()
    for d0, d1, low in product(ctx.elements(), repeat=3):
        if d0 and d1:
            det = d0 * d1
            groups.setdefault(det.index, []).append(Matrix(ctx, 2, 2, (d0, zero, low, d1)))
    return dict(sorted(groups.items()))


def _equal_det_tuples(groups: dict[int, list[Matrix]], n: int):
    for det in groups:
        yield from product(groups[det], repeat=n)


def enumerate_G(ctx: FieldCtx, n: int, bound: int = DEFAULT_ENUM_BOUND) -> list[GroupElem]:
    """All n-tuples of invertible 2x2 matrices with pairwise equal
    determinants, in deterministic (determinant-major) order."""
    gl2_order = (ctx.q ** 2 - 1) * (ctx.q ** 2 - ctx.q)
    implied = gl2_order ** n
    if implied > bound:
        raise BoundExceededError(implied, bound, "group enumeration")
    return [GroupElem(fs) for fs in _equal_det_tuples(_gl2_by_det(ctx), n)]


def enumerate_E(ctx: FieldCtx, n: int, bound: int = DEFAULT_ENUM_BOUND) -> list[ZipGroupElem]:
    """All Frobenius-coupled Borel pairs: the left member runs over the
    lower-triangular subgroup (equal determinants across factors), the right
    member has the coupled diagonal and a free upper entry per factor."""
    borel = _borel_by_det(ctx)
    implied = sum(len(v) ** n for v in borel.values()) * ctx.q ** n
    if implied > bound:
        raise BoundExceededError(implied, bound, "zip-group enumeration")
    zero = ctx.zero()
    out = []
    for a_factors in _equal_det_tuples(borel, n):
        a = GroupElem(a_factors)
        diag = [(f.entry(0, 0).frobenius(), f.entry(1, 1).frobenius()) for f in a_factors]
        for uppers in product(ctx.elements(), repeat=n):
            b = GroupElem(tuple(Matrix(ctx, 2, 2, (d0, u, zero, d1))
                                for (d0, d1), u in zip(diag, uppers)))
            out.append(ZipGroupElem(a, b))
    return out


@dataclass(frozen=True)
class OrbitPartition:
    """Disjoint orbit classes covering the enumerated group, each with the
    common stratum label of its members."""

    classes: tuple[tuple[GroupElem, ...], ...]
    labels: tuple[WeylElem, ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def by_label(self) -> dict[WeylElem, list[tuple[GroupElem, ...]]]:
        out: dict[WeylElem, list[tuple[GroupElem, ...]]] = {}
        for cls, label in zip(self.classes, self.labels):
            out.setdefault(label, []).append(cls)
        return out


def _mat_key(m: Matrix) -> tuple[int, int, int, int]:
    e = m.entries
    return (e[0].index, e[1].index, e[2].index, e[3].index)


def _mm(x, y, mul, add):
    x00, x01, x10, x11 = x
    y00, y01, y10, y11 = y
    return (add[mul[x00][y00]][mul[x01][y10]],
            add[mul[x00][y01]][mul[x01][y11]],
            add[mul[x10][y00]][mul[x11][y10]],
            add[mul[x10][y01]][mul[x11][y11]])


def orbits(g_list: Sequence[GroupElem], e_list: Sequence[ZipGroupElem]) -> OrbitPartition:
    """Orbit partition of the enumerated group under the full list of acting
    pairs, by union-find over every (element, pair) combination.

    Every class is labeled by the stratum label shared by its members; a
    non-constant label raises OrbitLabelError.
    """
    if not g_list or not e_list:
        raise ValueError("need non-empty group and acting lists")
    ctx = g_list[0].ctx
    n = g_list[0].n
    g_keys = [tuple(_mat_key(f) for f in g.factors) for g in g_list]
    idx_of = {key: i for i, key in enumerate(g_keys)}
    uf = UnionFind(len(g_list))
    mul, add = ctx._mul, ctx._add
    factor_range = range(n)
    if mul is not None:
        e_pairs = [(tuple(_mat_key(f) for f in e.a.factors),
                    tuple(_mat_key(f.inverse()) for f in e.b.factors))
                   for e in e_list]
        union = uf.union
        for a_key, binv_key in e_pairs:
            for gi, gkey in enumerate(g_keys):
                out = tuple(_mm(_mm(a_key[f], gkey[f], mul, add), binv_key[f], mul, add)
                            for f in factor_range)
                union(gi, idx_of[out])
    else:  # contexts beyond the table limit: act with full objects
        for e in e_list:
            for gi, g in enumerate(g_list):
                out = tuple(_mat_key(f) for f in zip_act(e, g).factors)
                uf.union(gi, idx_of[out])
    members: dict[int, list[int]] = {}
    for i in range(len(g_list)):
        members.setdefault(uf.find(i), []).append(i)
    datum = CocharDatum.split(n, ctx.p)
    classes = []
    labels = []
    for root in sorted(members, key=lambda r: min(members[r])):
        idxs = sorted(members[root])
        class_labels = {stratum_label(g_list[i], datum) for i in idxs}
        if len(class_labels) != 1:
            raise OrbitLabelError(
                f"orbit of size {len(idxs)} carries labels "
                f"{sorted(w.to_string() for w in class_labels)}")
        classes.append(tuple(g_list[i] for i in idxs))
        labels.append(class_labels.pop())
    return OrbitPartition(tuple(classes), tuple(labels))


def bruhat_census(ctx: FieldCtx, n: int,
                  bound: int = DEFAULT_ENUM_BOUND) -> list[tuple[WeylElem, int]]:
    """Cell sizes of the Bruhat partition of the enumerated group, one row
    per sign vector in deterministic order."""
    counts = Counter(bruhat_word(g).signs for g in enumerate_G(ctx, n, bound))
    return [(w, counts.get(w.signs, 0)) for w in all_weyl_elems(n)]
