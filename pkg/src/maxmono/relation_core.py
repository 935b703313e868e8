"""Subspace arithmetic over R^{2n} and the symmetric duality pairing.

A point of the product space is a pair (x, x*) of length-n vectors, stored
concatenated as one length-2n vector.  The central bilinear form is

    pairing((x, x*), (y, y*)) = <x, y*> + <y, x*>,

whose annihilator ``vdash`` sends a subspace B to the set of pairs pairing
to zero against all of B: swap the two blocks of each basis row and take
the kernel of the resulting matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .arithmetic import Mode, Row
from .config import default_mode
from .errors import DimensionMismatchError, ModeMismatchError


@dataclass(frozen=True)
class PairedPoint:
    """A pair (x, x*) of equal-length vectors."""

    x: Row
    xstar: Row

    def __post_init__(self):
        if len(self.x) != len(self.xstar):
            raise DimensionMismatchError(
                f"x has length {len(self.x)}, x* has length {len(self.xstar)}"
            )

    @property
    def n(self) -> int:
        return len(self.x)

    def vector(self) -> Row:
        return self.x + self.xstar

    @staticmethod
    def from_vector(vec: Sequence) -> "PairedPoint":
        if len(vec) % 2 != 0:
            raise DimensionMismatchError(f"paired vector must have even length, got {len(vec)}")
        n = len(vec) // 2
        return PairedPoint(tuple(vec[:n]), tuple(vec[n:]))

    def __add__(self, other: "PairedPoint") -> "PairedPoint":
        _check_n(self, other)
        return PairedPoint(
            tuple(a + b for a, b in zip(self.x, other.x)),
            tuple(a + b for a, b in zip(self.xstar, other.xstar)),
        )

    def __sub__(self, other: "PairedPoint") -> "PairedPoint":
        _check_n(self, other)
        return PairedPoint(
            tuple(a - b for a, b in zip(self.x, other.x)),
            tuple(a - b for a, b in zip(self.xstar, other.xstar)),
        )

    def scale(self, factor) -> "PairedPoint":
        return PairedPoint(
            tuple(factor * a for a in self.x),
            tuple(factor * a for a in self.xstar),
        )

    def flip_star(self) -> "PairedPoint":
        """(x, x*) -> (x, -x*)."""
        return PairedPoint(self.x, tuple(-a for a in self.xstar))


def point(xs: Sequence, xstars: Sequence, mode: Mode | None = None) -> PairedPoint:
    mode = mode or default_mode()
    return PairedPoint(mode.vector(xs), mode.vector(xstars))


def zero_point(n: int, mode: Mode | None = None) -> PairedPoint:
    mode = mode or default_mode()
    z = mode.vector([0] * n)
    return PairedPoint(z, z)


def _check_n(p: PairedPoint, q: PairedPoint) -> None:
    if p.n != q.n:
        raise DimensionMismatchError(f"points of dimension {p.n} and {q.n}")


def duality(p: PairedPoint):
    """<x, x*>, the duality product of the pair with itself."""
    return sum(a * b for a, b in zip(p.x, p.xstar))


def pairing(p: PairedPoint, q: PairedPoint):
    """<p.x, q.x*> + <q.x, p.x*>; symmetric, and equal to duality(p+q) - duality(p) - duality(q)."""
    _check_n(p, q)
    return sum(a * b for a, b in zip(p.x, q.xstar)) + sum(
        a * b for a, b in zip(q.x, p.xstar)
    )


# ---------------------------------------------------------------------------
# Subspaces


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of R^{2n} held by a canonical basis.

    Exact mode: reduced row echelon rows, so structural equality is set
    equality.  Float mode: an orthonormal basis; set equality is mutual
    tolerance-containment (see subspace_equal).
    Construct through canonicalize()/span_of_points(), not directly.
    """

    n: int
    basis: tuple
    mode: Mode

    @property
    def dim(self) -> int:
        return len(self.basis)

    def points(self) -> tuple:
        return tuple(PairedPoint.from_vector(row) for row in self.basis)

    def __repr__(self) -> str:
        return f"Subspace(n={self.n}, dim={self.dim}, mode={self.mode.name})"


def canonicalize(vectors: Iterable[Sequence], n: int, mode: Mode | None = None) -> Subspace:
    """Span of the given length-2n vectors, in canonical form."""
    mode = mode or default_mode()
    rows = [mode.vector(v) for v in vectors]
    for row in rows:
        if len(row) != 2 * n:
            raise DimensionMismatchError(f"expected vectors of length {2 * n}, got {len(row)}")
    return Subspace(n, mode.canonical_basis(rows, 2 * n), mode)


def span_of_points(pts: Iterable[PairedPoint], n: int, mode: Mode | None = None) -> Subspace:
    return canonicalize([p.vector() for p in pts], n, mode)


def zero_subspace(n: int, mode: Mode | None = None) -> Subspace:
    return canonicalize([], n, mode)


def full_space(n: int, mode: Mode | None = None) -> Subspace:
    mode = mode or default_mode()
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(2 * n):
        rows[i][i] = 1
    return canonicalize(rows, n, mode)


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(f"subspaces over R^{2*a.n} and R^{2*b.n}")
    if a.mode is not b.mode:
        raise ModeMismatchError(f"mixing {a.mode.name} and {b.mode.name} subspaces")


def swap_blocks(row: Row) -> Row:
    n = len(row) // 2
    return row[n:] + row[:n]


def vdash(b: Subspace) -> Subspace:
    """The annihilator of b under the symmetric pairing.

    pairing((u, v), p) is the dot product of (v | u) with p's concatenated
    vector, so the annihilator is the kernel of the block-swapped basis.
    In finite dimension vdash(vdash(b)) == b and dim b + dim vdash(b) == 2n.
    """
    swapped = [swap_blocks(row) for row in b.basis]
    return Subspace(b.n, b.mode.kernel(swapped, 2 * b.n), b.mode)


def member(s: Subspace, p: PairedPoint) -> bool:
    if p.n != s.n:
        raise DimensionMismatchError(f"point of dimension {p.n} in subspace over R^{2*s.n}")
    return s.mode.in_rowspace(s.basis, 2 * s.n, p.vector())


def contains(outer: Subspace, inner: Subspace) -> bool:
    """True when every element of inner lies in outer."""
    _check_compatible(outer, inner)
    return all(outer.mode.in_rowspace(outer.basis, 2 * outer.n, row) for row in inner.basis)


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    _check_compatible(a, b)
    if a.mode.exact:
        return a.basis == b.basis
    return a.dim == b.dim and contains(a, b) and contains(b, a)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return canonicalize(list(a.basis) + list(b.basis), a.n, a.mode)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via coefficient matching: rows s^T A = t^T B.

    The pairs (s, t) with A^T s - B^T t = 0 form the kernel of the
    2n x (dim a + dim b) stacked column matrix; mapping s back through A's
    basis spans the intersection.
    """
    _check_compatible(a, b)
    ka, kb = a.dim, b.dim
    if ka == 0 or kb == 0:
        return zero_subspace(a.n, a.mode)
    width = ka + kb
    stacked = []
    for col in range(2 * a.n):
        stacked.append(
            tuple(a.basis[i][col] for i in range(ka))
            + tuple(-b.basis[j][col] for j in range(kb))
        )
    coeffs = a.mode.kernel(stacked, width)
    rows = []
    for st in coeffs:
        row = [0] * (2 * a.n)
        for i in range(ka):
            if st[i] != 0:
                row = [r + st[i] * v for r, v in zip(row, a.basis[i])]
        rows.append(tuple(row))
    return canonicalize(rows, a.n, a.mode)


def gram_matrix(s: Subspace) -> tuple:
    """Symmetric Gram form of the duality product restricted to s.

    Entry (i, j) is pairing(b_i, b_j) / 2 for basis rows b_i, b_j; the
    quadratic form t -> t^T G t equals the duality product of the
    combination sum t_i b_i.  G vanishes exactly on self-cancelling
    subspaces, and is PSD exactly on monotone ones.
    """
    pts = s.points()
    half = _half(s.mode)
    return tuple(
        tuple(half * pairing(pts[i], pts[j]) for j in range(s.dim)) for i in range(s.dim)
    )


def _half(mode: Mode):
    return mode.scalar(1) / mode.scalar(2)


def combination(s: Subspace, coeffs: Sequence) -> PairedPoint:
    """The point sum coeffs[i] * basis[i] of s."""
    row = list(s.mode.vector([0] * (2 * s.n)))
    for c, b in zip(coeffs, s.basis):
        if c != 0:
            row = [r + c * v for r, v in zip(row, b)]
    return PairedPoint.from_vector(tuple(row))
