"""Hilbert-type zip data at a point and the two vanishing-order computations
it supports.

A zip here is the block-line datum extracted from the first de Rham
cohomology of a point: the ambient 2n-dimensional space splits into n blocks
of dimension 2, block i holding a Hodge line Omega_i and a conjugate line
C_i.  The partial Hasse flag at i records whether the two lines coincide;
the total Hasse order is the flag count.  Independently, the conjugate lines
wedge to a line of the n-th exterior power, whose largest filtration level
with respect to the induced filtration of Omega is the Hodge level.  The
consistency of the two numbers is the content of the equivalence check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .errors import DEFAULT_ENUM_BOUND, BoundExceededError
from .field import FieldCtx
from .linalg import Matrix, SemilinearMap, Subspace, induced_filtration, wedge_of_lines
from .schubert import projective_line_reps


class DegenerateZipError(ValueError):
    """Frobenius data producing a zero conjugate line is not a zip."""


def split_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def inert_perm(n: int) -> tuple[int, ...]:
    """The n-cycle feeding block i from block i-1 (indices mod n)."""
    return tuple((i - 1) % n for i in range(n))


def line_in_block(ctx: FieldCtx, n: int, block: int, local: Sequence) -> Subspace:
    """The line of F^(2n) spanned by a 2-vector placed in the given block."""
    if not 0 <= block < n:
        raise ValueError("block index out of range")
    a, b = (ctx(x) for x in local)
    zero = ctx.zero()
    vec = [zero] * (2 * n)
    vec[2 * block], vec[2 * block + 1] = a, b
    line = Subspace.from_vectors(ctx, 2 * n, [vec])
    if line.dim != 1:
        raise ValueError("local coordinates span no line")
    return line


def _block_coords(line: Subspace, block: int) -> tuple:
    row = line.basis[0]
    return row[2 * block], row[2 * block + 1]


@dataclass(frozen=True)
class HilbertZip:
    """Block-line zip datum: context, degree, index permutation, Hodge lines
    and conjugate lines (line i supported in coordinates {2i, 2i+1})."""

    ctx: FieldCtx
    n: int
    perm: tuple[int, ...]
    omega: tuple[Subspace, ...]
    conj: tuple[Subspace, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "omega", tuple(self.omega))
        object.__setattr__(self, "conj", tuple(self.conj))
        if sorted(self.perm) != list(range(self.n)):
            raise ValueError(f"perm is not a permutation of 0..{self.n - 1}")
        for name, lines in (("omega", self.omega), ("conj", self.conj)):
            if len(lines) != self.n:
                raise ValueError(f"{name} must hold {self.n} lines")
            for i, line in enumerate(lines):
                if line.ctx != self.ctx or line.ambient_dim != 2 * self.n or line.dim != 1:
                    raise ValueError(f"{name}[{i}] is not a line of the ambient space")
                row = line.basis[0]
                if any(row[j] for j in range(2 * self.n) if j // 2 != i):
                    raise ValueError(f"{name}[{i}] is not supported in block {i}")


def zip_from_frobenius(ctx: FieldCtx, n: int, perm: Sequence[int],
                       omega: Sequence[Subspace],
                       frob_matrices: Sequence[Matrix]) -> HilbertZip:
    """Build a zip whose conjugate lines are images of twist-1 semilinear
    maps applied to complements of the Hodge lines.

    Conjugate line i is the span of frob_matrices[i] applied (with one
    Frobenius twist) to the first standard vector of block perm[i] outside
    Omega_{perm[i]}, re-housed in block i.  A matrix that kills that
    generator yields no line and is rejected.
    """
    perm = tuple(perm)
    if len(omega) != n or len(frob_matrices) != n:
        raise ValueError(f"expected {n} lines and {n} matrices")
    conj = []
    for i in range(n):
        src = perm[i]
        a, b = _block_coords(omega[src], src)
        # first standard basis vector of the block not lying on the line
        generator = (ctx.zero(), ctx.one()) if (a == ctx.one() and not b) \
            else (ctx.one(), ctx.zero())
        image = SemilinearMap(frob_matrices[i], 1).apply(generator)
        if not any(image):
            raise DegenerateZipError(f"Frobenius matrix {i} kills the complement of "
                                     f"the Hodge line in block {src}")
        conj.append(line_in_block(ctx, n, i, image))
    return HilbertZip(ctx, n, perm, tuple(omega), tuple(conj))


def partial_hasse_flags(z: HilbertZip) -> tuple[bool, ...]:
    """Flag i is set iff the conjugate line equals the Hodge line in block i."""
    return tuple(c == o for c, o in zip(z.conj, z.omega))


def hasse_order(z: HilbertZip) -> int:
    """Total vanishing order: the number of set partial Hasse flags."""
    return sum(partial_hasse_flags(z))


def max_hodge_level(z: HilbertZip) -> int:
    """Largest m such that the wedge of the conjugate lines lies in the m-th
    induced filtration piece of the total Hodge subspace.

    Always >= 0 since piece 0 is the whole exterior power.
    """
    total_omega = Subspace.from_vectors(
        z.ctx, 2 * z.n, [row for line in z.omega for row in line.basis])
    conj_line = wedge_of_lines(z.conj)
    for m in range(z.n, -1, -1):
        if induced_filtration(total_omega, m).contains(conj_line):
            return m
    raise AssertionError("filtration piece 0 must contain everything")


@dataclass(frozen=True)
class ZipReport:
    """Per-index flags, the two order computations, and their agreement."""

    flags: tuple[bool, ...]
    hasse_order: int
    m_max: int
    consistent: bool

    def __post_init__(self):
        object.__setattr__(self, "flags", tuple(self.flags))
        if self.hasse_order != sum(self.flags):
            raise ValueError("hasse_order must equal the number of set flags")
        if self.consistent != (self.hasse_order == self.m_max):
            raise ValueError("consistent must mirror hasse_order == m_max")

    def to_json_obj(self) -> dict:
        return {"flags": list(self.flags), "hasse_order": self.hasse_order,
                "m_max": self.m_max, "consistent": self.consistent}

    def tsv_row(self) -> str:
        flag_str = "".join("1" if f else "0" for f in self.flags)
        return f"{flag_str}\t{self.hasse_order}\t{self.m_max}\t{int(self.consistent)}"


def check_equivalence(z: HilbertZip) -> ZipReport:
    """Run both order computations on one zip and compare them."""
    flags = partial_hasse_flags(z)
    order = sum(flags)
    level = max_hodge_level(z)
    return ZipReport(flags, order, level, order == level)


def block_line_reps(ctx: FieldCtx, n: int, block: int) -> list[Subspace]:
    """All q+1 lines of one block, in deterministic order."""
    return [line_in_block(ctx, n, block, pair) for pair in projective_line_reps(ctx)]


def enumerate_zips(ctx: FieldCtx, n: int, perm: Sequence[int],
                   bound: int = DEFAULT_ENUM_BOUND) -> Iterator[HilbertZip]:
    """Yield every (Omega, C) line configuration, (q+1)^(2n) in total, in
    lexicographic order over (Omega_1, ..., Omega_n, C_1, ..., C_n)."""
    perm = tuple(perm)
    implied = (ctx.q + 1) ** (2 * n)
    if implied > bound:
        raise BoundExceededError(implied, bound, "zip enumeration")
    per_block = [block_line_reps(ctx, n, i) for i in range(n)]
    for omega in product(*per_block):
        for conj in product(*per_block):
            yield HilbertZip(ctx, n, perm, omega, conj)


# -- serialization ---------------------------------------------------------------


def _line_to_json(line: Subspace, block: int) -> list:
    a, b = _block_coords(line, block)
    return [a.to_list(), b.to_list()]


def zip_to_json_obj(z: HilbertZip) -> dict:
    return {"p": z.ctx.p, "k": z.ctx.k, "n": z.n, "perm": list(z.perm),
            "omega": [_line_to_json(line, i) for i, line in enumerate(z.omega)],
            "conj": [_line_to_json(line, i) for i, line in enumerate(z.conj)]}


def zip_from_json_obj(obj: dict) -> HilbertZip:
    """Parse {"p", "k", "n", "perm", "omega", "conj"}; each line is a pair of
    field elements given as coefficient arrays (plain ints also accepted)."""
    ctx = FieldCtx(obj["p"], obj.get("k", 1))
    n = obj["n"]
    perm = tuple(obj.get("perm", split_perm(n)))
    omega = [line_in_block(ctx, n, i, pair) for i, pair in enumerate(obj["omega"])]
    conj = [line_in_block(ctx, n, i, pair) for i, pair in enumerate(obj["conj"])]
    return HilbertZip(ctx, n, perm, tuple(omega), tuple(conj))
