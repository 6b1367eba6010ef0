"""Sections of the (1, ..., 1) line bundle on a product of projective lines,
Bruhat words of invertible 2x2 factor tuples, and exact vanishing orders.

A point of the n-fold product of projective lines carries one coordinate
pair [x_i0 : x_i1] per factor.  The distinguished section is the product of
the first coordinates; its zero locus stratifies the space into cells
indexed by sign vectors, with an affine line at each -1 entry and the point
[0 : 1] at each +1 entry.  Vanishing orders are computed symbolically in
chart parameters, never by sampling, so they are exact over any finite
field.
"""

from __future__ import annotations

import math
from itertools import product
from typing import Sequence

from .field import FieldCtx, FieldElem
from .linalg import Matrix
from .weyl import Character, CocharDatum, WeylElem

#: Distinguished return value for a section restricting to the zero function
#: on the probed locus.  Not an error: callers may probe non-generic loci.
INFINITE_ORDER = math.inf

ExpKey = tuple[tuple[int, int], ...]


class MultiPoly:
    """A multihomogeneous-style polynomial in n projective coordinate pairs.

    Terms map an exponent record, one (d_i0, d_i1) pair per factor, to a
    nonzero field coefficient.  Sections of the (1, ..., 1) bundle have
    d_i0 + d_i1 = 1 in every factor of every term.
    """

    __slots__ = ("ctx", "n", "terms", "_items", "_h")

    def __init__(self, ctx: FieldCtx, n: int, terms: dict):
        self.ctx = ctx
        self.n = n
        clean: dict[ExpKey, FieldElem] = {}
        for exps, coeff in terms.items():
            exps = tuple((int(d0), int(d1)) for d0, d1 in exps)
            if len(exps) != n:
                raise ValueError(f"exponent record has {len(exps)} factors, expected {n}")
            if any(d0 < 0 or d1 < 0 for d0, d1 in exps):
                raise ValueError("negative exponent")
            coeff = ctx(coeff)
            if coeff:
                clean[exps] = clean.get(exps, ctx.zero()) + coeff
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean
        self._items = tuple(sorted(clean.items(), key=lambda kv: kv[0]))
        self._h = hash((ctx, n, self._items))

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ctx: FieldCtx, n: int) -> "MultiPoly":
        return cls(ctx, n, {})

    @classmethod
    def monomial(cls, ctx: FieldCtx, exps: Sequence[Sequence[int]], coeff=1) -> "MultiPoly":
        return cls(ctx, len(exps), {tuple(tuple(e) for e in exps): coeff})

    @classmethod
    def coordinate(cls, ctx: FieldCtx, n: int, factor: int, which: int) -> "MultiPoly":
        """The coordinate x_{factor, which} as a degree-one monomial."""
        if not 0 <= factor < n or which not in (0, 1):
            raise ValueError("coordinate out of range")
        exps = tuple((1, 0) if (i == factor and which == 0)
                     else (0, 1) if (i == factor and which == 1)
                     else (0, 0) for i in range(n))
        return cls(ctx, n, {exps: 1})

    # -- ring structure -------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.n != other.n or self.ctx != other.ctx:
            raise ValueError("polynomials live on different spaces")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        merged = dict(self.terms)
        for exps, coeff in other.terms.items():
            merged[exps] = merged.get(exps, self.ctx.zero()) + coeff
        return MultiPoly(self.ctx, self.n, merged)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.ctx, self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (FieldElem, int)):
            scalar = self.ctx(other)
            return MultiPoly(self.ctx, self.n,
                             {e: c * scalar for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        out: dict[ExpKey, FieldElem] = {}
        zero = self.ctx.zero()
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple((a0 + b0, a1 + b1) for (a0, a1), (b0, b1) in zip(e1, e2))
                out[key] = out.get(key, zero) + c1 * c2
        return MultiPoly(self.ctx, self.n, out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def bidegrees(self) -> tuple[int, ...] | None:
        """Per-factor total degree if the polynomial is multihomogeneous."""
        if not self.terms:
            return None
        totals = None
        for exps in self.terms:
            t = tuple(d0 + d1 for d0, d1 in exps)
            if totals is None:
                totals = t
            elif totals != t:
                return None
        return totals

    def evaluate(self, pt: "PointP1n") -> FieldElem:
        if pt.n != self.n:
            raise ValueError("point and polynomial factor counts differ")
        acc = self.ctx.zero()
        for exps, coeff in self.terms.items():
            val = coeff
            for (d0, d1), (u, v) in zip(exps, pt.coords):
                if d0:
                    val = val * u ** d0
                if d1:
                    val = val * v ** d1
                if not val:
                    break
            acc = acc + val
        return acc

    # -- serialization and display ---------------------------------------------

    def to_json_obj(self) -> dict:
        return {"n": self.n,
                "terms": [{"exps": [list(e) for e in exps], "coeff": coeff.to_list()}
                          for exps, coeff in self._items]}

    @classmethod
    def from_json_obj(cls, ctx: FieldCtx, obj: dict) -> "MultiPoly":
        terms = {tuple(tuple(e) for e in t["exps"]): ctx(t["coeff"]) for t in obj["terms"]}
        return cls(ctx, obj["n"], terms)

    def __str__(self) -> str:
        if not self._items:
            return "0"
        parts = []
        for exps, coeff in self._items:
            factors = []
            for i, (d0, d1) in enumerate(exps):
                if d0:
                    factors.append(f"x{i + 1}0" + (f"^{d0}" if d0 > 1 else ""))
                if d1:
                    factors.append(f"x{i + 1}1" + (f"^{d1}" if d1 > 1 else ""))
            body = "*".join(factors) if factors else "1"
            if coeff == self.ctx.one() and factors:
                parts.append(body)
            else:
                coeff_str = (str(coeff.coeffs[0]) if self.ctx.k == 1
                             else str(list(coeff.coeffs)))
                parts.append(f"{coeff_str}*{body}" if factors else coeff_str)
        return " + ".join(parts)

    def __eq__(self, other):
        return (isinstance(other, MultiPoly) and self.n == other.n
                and self.ctx == other.ctx and self._items == other._items)

    def __hash__(self):
        return self._h

    def __repr__(self):
        return f"MultiPoly({self})"


class PointP1n:
    """A point of the n-fold product of projective lines, one normalized
    pair per factor (first nonzero coordinate scaled to 1)."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: FieldCtx, pairs: Sequence[Sequence]):
        coords = []
        for i, (u, v) in enumerate(pairs):
            u, v = ctx(u), ctx(v)
            if u:
                inv = u.inverse()
                coords.append((ctx.one(), v * inv))
            elif v:
                coords.append((ctx.zero(), ctx.one()))
            else:
                raise ValueError(f"factor {i} has both coordinates zero")
        self.ctx = ctx
        self.coords = tuple(coords)

    @property
    def n(self) -> int:
        return len(self.coords)

    def __eq__(self, other):
        return (isinstance(other, PointP1n) and self.ctx == other.ctx
                and self.coords == other.coords)

    def __hash__(self):
        return hash((self.ctx, self.coords))

    def __repr__(self):
        body = "; ".join(f"[{u!r}:{v!r}]" for u, v in self.coords)
        return f"PointP1n({body})"


def projective_line_reps(ctx: FieldCtx) -> list[tuple[FieldElem, FieldElem]]:
    """The q+1 normalized coordinate pairs of a projective line, in the
    deterministic order (1, t) for t in element order, then (0, 1)."""
    one, zero = ctx.one(), ctx.zero()
    return [(one, t) for t in ctx.elements()] + [(zero, one)]


def all_points(ctx: FieldCtx, n: int) -> list[PointP1n]:
    """All (q+1)^n rational points of the n-fold product, lexicographic."""
    reps = projective_line_reps(ctx)
    return [PointP1n(ctx, combo) for combo in product(reps, repeat=n)]


class GroupElem:
    """A tuple of invertible 2x2 factors over one field context.

    With ``hilbert=True`` (the default) all factor determinants must agree,
    which is the determinant condition cutting the group of interest out of
    the plain product of 2x2 groups.
    """

    __slots__ = ("factors",)

    def __init__(self, factors: Sequence[Matrix], hilbert: bool = True):
        factors = tuple(factors)
        if not factors:
            raise ValueError("need at least one factor")
        dets = []
        for i, f in enumerate(factors):
            if f.rows != 2 or f.cols != 2:
                raise ValueError(f"factor {i} is not 2x2")
            d = f.entry(0, 0) * f.entry(1, 1) - f.entry(0, 1) * f.entry(1, 0)
            if not d:
                raise ValueError(f"factor {i} is singular")
            dets.append(d)
        if hilbert and any(d != dets[0] for d in dets):
            raise ValueError("factor determinants differ")
        self.factors = factors

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "GroupElem":
        return cls(tuple(Matrix.identity(ctx, 2) for _ in range(n)))

    @classmethod
    def weyl_lift(cls, ctx: FieldCtx, w: WeylElem) -> "GroupElem":
        """The standard lift: [[0, 1], [-1, 0]] at -1 entries, identity else."""
        s = Matrix.from_rows(ctx, [[0, 1], [-1, 0]])
        e = Matrix.identity(ctx, 2)
        return cls(tuple(s if sign == -1 else e for sign in w.signs))

    @property
    def n(self) -> int:
        return len(self.factors)

    @property
    def ctx(self) -> FieldCtx:
        return self.factors[0].ctx

    def __mul__(self, other: "GroupElem") -> "GroupElem":
        if not isinstance(other, GroupElem):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("factor count mismatch")
        return GroupElem(tuple(a * b for a, b in zip(self.factors, other.factors)))

    def inverse(self) -> "GroupElem":
        return GroupElem(tuple(f.inverse() for f in self.factors))

    def __eq__(self, other):
        return isinstance(other, GroupElem) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f"GroupElem({', '.join(repr(f) for f in self.factors)})"


# -- sections and weight spaces ------------------------------------------------


def hasse_section(ctx: FieldCtx, n: int) -> MultiPoly:
    """The product of the first coordinates over all n factors."""
    if n < 1:
        raise ValueError("need at least one factor")
    return MultiPoly(ctx, n, {((1, 0),) * n: 1})


def monomial_weight(n: int, eps: Sequence[int]) -> Character:
    """Torus weight of the degree-(1,...,1) monomial picking coordinate
    eps_i in factor i: each first coordinate contributes (-1) to its a-entry,
    each second coordinate (+1), and every factor contributes -1 to c."""
    return Character(tuple(-1 if e == 0 else 1 for e in eps), -n)


def torus_weight_space(ctx: FieldCtx, n: int, target) -> list[MultiPoly]:
    """Basis of the subspace of degree-(1, ..., 1) sections on which the
    torus acts through ``target``.

    Each of the 2^n coordinate-product monomials is a weight vector, so the
    computation is a symbolic match on the monomial basis.  ``target`` may be
    a Character or a raw pair (a-sequence, c), the latter allowing probes
    that violate the parity constraint (which simply match nothing).
    """
    if isinstance(target, Character):
        ta, tc = target.a, target.c
    else:
        ta, tc = tuple(target[0]), target[1]
    if len(ta) != n:
        raise ValueError("target rank mismatch")
    out = []
    for eps in product((0, 1), repeat=n):
        a = tuple(-1 if e == 0 else 1 for e in eps)
        if a == ta and tc == -n:
            exps = tuple((1, 0) if e == 0 else (0, 1) for e in eps)
            out.append(MultiPoly(ctx, n, {exps: 1}))
    return out


# -- Bruhat words and stratum labels --------------------------------------------


def bruhat_word(g: GroupElem) -> WeylElem:
    """The cell of g: factor i contributes +1 iff its top-right entry is 0.

    A zero top-right entry means the factor lies in the lower-triangular
    subgroup; otherwise it lies in the cell of the reflection.
    """
    return WeylElem(tuple(1 if not f.entry(0, 1) else -1 for f in g.factors))


def stratum_label(g: GroupElem, datum: CocharDatum) -> WeylElem:
    """Zip-side stratum of g: the Bruhat word of g translated on the right
    by the standard lift of z."""
    if datum.n != g.n:
        raise ValueError("rank mismatch")
    return bruhat_word(g * GroupElem.weyl_lift(g.ctx, datum.z))


# -- vanishing orders ------------------------------------------------------------


class _ChartPoly:
    """Polynomial in a fixed number of affine chart variables (internal)."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict):
        self.nvars = nvars
        self.terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def const(cls, nvars: int, c: FieldElem) -> "_ChartPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int, ctx: FieldCtx) -> "_ChartPoly":
        e = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {e: ctx.one()})

    def __add__(self, other: "_ChartPoly") -> "_ChartPoly":
        merged = dict(self.terms)
        for e, c in other.terms.items():
            if e in merged:
                merged[e] = merged[e] + c
            else:
                merged[e] = c
        return _ChartPoly(self.nvars, merged)

    def __mul__(self, other: "_ChartPoly") -> "_ChartPoly":
        out: dict[tuple[int, ...], FieldElem] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                if key in out:
                    out[key] = out[key] + c1 * c2
                else:
                    out[key] = c1 * c2
        return _ChartPoly(self.nvars, out)

    def __pow__(self, d: int) -> "_ChartPoly":
        if d < 1:
            raise ValueError("chart powers are only taken with d >= 1")
        acc = self
        for _ in range(d - 1):
            acc = acc * self
        return acc


def _restrict(f: MultiPoly, images: Sequence[tuple["_ChartPoly", "_ChartPoly"]],
              nvars: int) -> "_ChartPoly":
    """Substitute chart images for every coordinate pair of f."""
    acc = _ChartPoly(nvars, {})
    for exps, coeff in f.terms.items():
        term = _ChartPoly.const(nvars, coeff)
        for (d0, d1), (img0, img1) in zip(exps, images):
            if d0:
                term = term * img0 ** d0
            if d1:
                term = term * img1 ** d1
        acc = acc + term
    return acc


def vanishing_order_at_point(f: MultiPoly, pt: PointP1n):
    """Exact vanishing order of f at a rational point.

    The point is moved to the origin of the affine chart selected by its
    nonvanishing coordinate in each factor; the order is the least total
    degree of a surviving monomial of the restricted polynomial.  Returns
    INFINITE_ORDER when the restriction is identically zero, which cannot
    happen for a nonzero section of the (1, ..., 1) bundle.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no well-defined order")
    if pt.n != f.n or pt.ctx != f.ctx:
        raise ValueError("point and polynomial are incompatible")
    n = f.n
    ctx = f.ctx
    images = []
    for i, (u, v) in enumerate(pt.coords):
        w = _ChartPoly.variable(n, i, ctx)
        if u:
            # chart x0 != 0: x0 -> 1, x1 -> v + w
            images.append((_ChartPoly.const(n, ctx.one()),
                           _ChartPoly.const(n, v) + w))
        else:
            # chart x1 != 0: x0 -> w, x1 -> 1
            images.append((w, _ChartPoly.const(n, ctx.one())))
    restricted = _restrict(f, images, n)
    if not restricted.terms:
        return INFINITE_ORDER
    return min(sum(e) for e in restricted.terms)


def vanishing_order_on_stratum(f: MultiPoly, w: WeylElem):
    """Exact vanishing order of f at the generic point of the cell of w.

    The cell is parametrized by one affine variable per -1 entry (the chart
    [1 : t]); each +1 entry contributes a normal parameter s via the chart
    [s : 1].  The order is the least total s-degree over the surviving terms
    of the restriction, computed symbolically so the answer is valid over
    any coefficient field.
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no well-defined order")
    if w.n != f.n:
        raise ValueError("sign vector and polynomial are incompatible")
    n = f.n
    ctx = f.ctx
    images = []
    normal_vars = []
    for i, sign in enumerate(w.signs):
        var = _ChartPoly.variable(n, i, ctx)
        one = _ChartPoly.const(n, ctx.one())
        if sign == -1:
            images.append((one, var))
        else:
            normal_vars.append(i)
            images.append((var, one))
    restricted = _restrict(f, images, n)
    if not restricted.terms:
        return INFINITE_ORDER
    return min(sum(e[i] for i in normal_vars) for e in restricted.terms)
