"""Exact arithmetic in small finite fields F_{p^k} with the Frobenius map.

Elements are written on the polynomial basis 1, u, ..., u^(k-1), where u is a
root of a fixed monic irreducible modulus over F_p.  The modulus is chosen as
the lexicographically smallest irreducible candidate (coefficients compared
from the constant term up), so a context is reproducible across runs and two
contexts with the same (p, k) are interchangeable.

Contexts with at most ``TABLE_LIMIT`` elements intern all their elements and
precompute index tables for add/mul/neg/inv/frobenius; arithmetic is then a
couple of list lookups, which the exhaustive enumeration modules rely on.
Larger contexts fall back to per-operation polynomial arithmetic.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Sequence

TABLE_LIMIT = 256


class ContextMismatchError(ValueError):
    """Combining elements of different field contexts is a hard error."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_rem(a: Sequence[int], monic: Sequence[int], p: int) -> list[int]:
    """Remainder of a by a monic divisor, coefficients low-degree first."""
    a = _poly_trim(list(a))
    d = len(monic) - 1
    while len(a) - 1 >= d and a:
        lead = a[-1]
        shift = len(a) - 1 - d
        for i, c in enumerate(monic):
            a[shift + i] = (a[shift + i] - lead * c) % p
        _poly_trim(a)
    return a


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over F_p.

    Irreducibility is decided by trial division against every monic
    polynomial of degree 1 .. k//2, which is exhaustive at this scale.
    """
    divisors = []
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            divisors.append(list(low) + [1])
    for low in product(range(p), repeat=k):
        candidate = list(low) + [1]
        if all(_poly_rem(candidate, div, p) for div in divisors):
            return tuple(candidate)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldCtx:
    """The finite field F_{p^k}.

    A context owns its modulus and, for small fields, the interned element
    pool and arithmetic tables.  Contexts compare equal iff they describe the
    same field model (same p, k and modulus).
    """

    __slots__ = ("p", "k", "q", "modulus", "_key", "_hash", "_elems",
                 "_add", "_mul", "_neg", "_inv", "_frob")

    def __init__(self, p: int, k: int = 1):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"p must be a prime integer, got {p!r}")
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k!r}")
        self.p = p
        self.k = k
        self.q = p ** k
        self.modulus = _smallest_irreducible(p, k)
        self._key = (p, k, self.modulus)
        self._hash = hash(self._key)
        self._elems = None
        self._add = self._mul = self._neg = self._inv = self._frob = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- construction of elements ------------------------------------------

    def __call__(self, value) -> "FieldElem":
        """Coerce an int (prime-subfield value) or coefficient sequence."""
        if isinstance(value, FieldElem):
            if not self._same(value._ctx):
                raise ContextMismatchError("element belongs to a different field")
            return value
        if isinstance(value, int):
            coeffs = (value % self.p,) + (0,) * (self.k - 1)
        else:
            seq = list(value)
            if len(seq) > self.k:
                raise ValueError(f"expected at most {self.k} coefficients")
            seq += [0] * (self.k - len(seq))
            coeffs = tuple(c % self.p for c in seq)
        return self.from_index(self._index_of(coeffs))

    def from_index(self, idx: int) -> "FieldElem":
        if self._elems is not None:
            return self._elems[idx]
        return FieldElem(self, idx, self._coeffs_of(idx))

    def zero(self) -> "FieldElem":
        return self.from_index(0)

    def one(self) -> "FieldElem":
        return self.from_index(1)

    def gen(self) -> "FieldElem":
        """The polynomial generator u (only defined for k >= 2)."""
        if self.k < 2:
            raise ValueError("prime field has no polynomial generator")
        return self.from_index(self.p)

    def elements(self) -> Iterator["FieldElem"]:
        """All q elements, in index order (coefficients as base-p digits)."""
        for idx in range(self.q):
            yield self.from_index(idx)

    # -- index/coefficient encoding ----------------------------------------

    def _index_of(self, coeffs: Sequence[int]) -> int:
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self.p + c
        return idx

    def _coeffs_of(self, idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            idx, r = divmod(idx, self.p)
            out.append(r)
        return tuple(out)

    # -- table construction -------------------------------------------------

    def _build_tables(self):
        q, p = self.q, self.p
        self._elems = [FieldElem(self, i, self._coeffs_of(i)) for i in range(q)]
        coeffs = [list(e.coeffs) for e in self._elems]
        self._add = [[self._index_of([(x + y) % p for x, y in zip(a, b)])
                      for b in coeffs] for a in coeffs]
        self._neg = [self._index_of([(-x) % p for x in a]) for a in coeffs]
        mul = []
        for a in coeffs:
            row = []
            for b in coeffs:
                r = _poly_rem(_poly_mul(a, b, p), self.modulus, p)
                r += [0] * (self.k - len(r))
                row.append(self._index_of(r))
            mul.append(row)
        self._mul = mul
        inv: list[int | None] = [None] * q
        for i in range(1, q):
            if inv[i] is None:
                row = mul[i]
                j = row.index(1)
                inv[i], inv[j] = j, i
        self._inv = inv
        frob = []
        for i in range(q):
            acc = i
            for _ in range(p - 1):
                acc = mul[acc][i]
            frob.append(acc)
        self._frob = frob

    # -- slow-path polynomial arithmetic (large contexts) --------------------

    def _raw_add(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _raw_mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        r = _poly_rem(_poly_mul(a, b, self.p), self.modulus, self.p)
        return tuple(r) + (0,) * (self.k - len(r))

    def _same(self, other: "FieldCtx") -> bool:
        return other is self or other._key == self._key

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other._key == self._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.modulus):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                pre = "" if c == 1 else str(c) + "*"
                terms.append(f"{pre}x" + (f"^{i}" if i > 1 else ""))
        return f"FieldCtx(p={self.p}, k={self.k}, modulus={' + '.join(reversed(terms))})"


class FieldElem:
    """An element of a :class:`FieldCtx`, immutable and hashable.

    Serializes to/from a list of k residues, low-degree first (so u + 1 in
    F_4 is ``[1, 1]``).
    """

    __slots__ = ("_ctx", "_idx", "coeffs", "_h")

    def __init__(self, ctx: FieldCtx, idx: int, coeffs: tuple[int, ...]):
        self._ctx = ctx
        self._idx = idx
        self.coeffs = coeffs
        self._h = hash((ctx._hash, idx))

    @property
    def ctx(self) -> FieldCtx:
        return self._ctx

    @property
    def index(self) -> int:
        """Position of this element in ``ctx.elements()`` order."""
        return self._idx

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if not self._ctx._same(other._ctx):
                raise ContextMismatchError(
                    f"cannot combine elements of {self._ctx!r} and {other._ctx!r}")
            return other
        if isinstance(other, int):
            return self._ctx(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ctx = self._ctx
        if ctx._add is not None:
            return ctx._elems[ctx._add[self._idx][other._idx]]
        c = ctx._raw_add(self.coeffs, other.coeffs)
        return FieldElem(ctx, ctx._index_of(c), c)

    __radd__ = __add__

    def __neg__(self):
        ctx = self._ctx
        if ctx._neg is not None:
            return ctx._elems[ctx._neg[self._idx]]
        c = tuple((-x) % ctx.p for x in self.coeffs)
        return FieldElem(ctx, ctx._index_of(c), c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ctx = self._ctx
        if ctx._mul is not None:
            return ctx._elems[ctx._mul[self._idx][other._idx]]
        c = ctx._raw_mul(self.coeffs, other.coeffs)
        return FieldElem(ctx, ctx._index_of(c), c)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        if self._idx == 0:
            raise ZeroDivisionError("inverse of zero")
        ctx = self._ctx
        if ctx._inv is not None:
            return ctx._elems[ctx._inv[self._idx]]
        return self ** (ctx.q - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self._ctx.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def frobenius(self, times: int = 1) -> "FieldElem":
        """Apply x -> x^p the given number of times (identity every k steps)."""
        if times < 0:
            raise ValueError("Frobenius twist must be non-negative")
        times %= self._ctx.k
        ctx = self._ctx
        if ctx._frob is not None:
            idx = self._idx
            for _ in range(times):
                idx = ctx._frob[idx]
            return ctx._elems[idx]
        return self ** (ctx.p ** times)

    def __bool__(self):
        return self._idx != 0

    def __eq__(self, other):
        if other is self:
            return True
        if isinstance(other, FieldElem):
            return self._idx == other._idx and self._ctx._same(other._ctx)
        if isinstance(other, int):
            return self == self._ctx(other)
        return NotImplemented

    def __hash__(self):
        return self._h

    def __repr__(self):
        if self._ctx.k == 1:
            return f"F{self._ctx.q}({self.coeffs[0]})"
        return f"F{self._ctx.q}({list(self.coeffs)})"
