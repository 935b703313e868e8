"""Operator representations and structural predicates.

An operator is a relation on R^n x R^n in one of three representations:
a finite sample of its graph, a linear subspace graph, or an affine graph
(linear part plus a translation point).  The predicates here decide
monotonicity, maximality (linear case), self-cancellation and skewness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .arithmetic import Mode
from .errors import DimensionMismatchError, ModeMismatchError
from .relation_core import (
    PairedPoint,
    Subspace,
    canonicalize,
    contains,
    duality,
    gram_matrix,
    member,
    pairing,
    subspace_equal,
    vdash,
)


@dataclass(frozen=True)
class FiniteOperator:
    """A finite, duplicate-free sample of graph points."""

    points: tuple
    mode: Mode

    def __post_init__(self):
        if not self.points:
            raise ValueError("finite operator needs at least one point")
        n = self.points[0].n
        for p in self.points:
            if p.n != n:
                raise DimensionMismatchError("finite operator mixes point dimensions")
        if len(set(self.points)) != len(self.points):
            object.__setattr__(self, "points", tuple(dict.fromkeys(self.points)))

    @property
    def n(self) -> int:
        return self.points[0].n


@dataclass(frozen=True)
class LinearRelation:
    """An operator whose graph is a linear subspace of R^{2n}."""

    graph: Subspace

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def mode(self) -> Mode:
        return self.graph.mode


@dataclass(frozen=True)
class AffineRelation:
    """A translated linear relation: graph = linear part + translation."""

    linear: Subspace
    translation: PairedPoint

    @property
    def n(self) -> int:
        return self.linear.n

    @property
    def mode(self) -> Mode:
        return self.linear.mode


OperatorRep = Union[FiniteOperator, LinearRelation, AffineRelation]


def affine(linear: Subspace, translation: PairedPoint) -> OperatorRep:
    """Affine operator, normalized to LinearRelation when the translation adds nothing."""
    if translation.n != linear.n:
        raise DimensionMismatchError("translation dimension does not match the subspace")
    if member(linear, translation):
        return LinearRelation(linear)
    return AffineRelation(linear, translation)


def from_matrix(matrix, mode: Mode, translation: PairedPoint | None = None) -> OperatorRep:
    """Graph of x -> M x (plus optional translation) as a relation."""
    n = len(matrix)
    rows = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        col = [matrix[j][i] for j in range(n)]
        rows.append(e + col)
    graph = canonicalize(rows, n, mode)
    if translation is None:
        return LinearRelation(graph)
    return affine(graph, translation)


def linear_part(op: OperatorRep) -> Subspace:
    if isinstance(op, LinearRelation):
        return op.graph
    if isinstance(op, AffineRelation):
        return op.linear
    raise TypeError("finite operators have no linear part")


def translation_of(op: OperatorRep) -> PairedPoint:
    from .relation_core import zero_point

    if isinstance(op, AffineRelation):
        return op.translation
    if isinstance(op, LinearRelation):
        return zero_point(op.n, op.mode)
    raise TypeError("finite operators have no translation")


def operator_contains(op: OperatorRep, p: PairedPoint) -> bool:
    """Graph membership in any representation."""
    if isinstance(op, FiniteOperator):
        if op.mode.exact:
            return p in op.points
        return any(
            op.mode.is_zero(_max_abs(p - q), scale=_max_abs(p) + _max_abs(q))
            for q in op.points
        )
    if isinstance(op, LinearRelation):
        return member(op.graph, p)
    return member(op.linear, p - op.translation)


def _max_abs(p: PairedPoint):
    return max((abs(v) for v in p.vector()), default=0)


def is_monotone(op: OperatorRep) -> bool:
    """Monotone: <x - y, x* - y*> >= 0 over all pairs of graph points.

    Finite samples are checked pairwise.  For subspace graphs the
    differences sweep the linear part, so the test is positive
    semidefiniteness of the restricted duality form (the Gram matrix);
    translations cancel.
    """
    if isinstance(op, FiniteOperator):
        pts = op.points
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                d = pts[i] - pts[j]
                gap = duality(d)
                if not op.mode.nonneg(gap, scale=_dot_scale(d)):
                    return False
        return True
    return linear_part(op).mode.is_psd(gram_matrix(linear_part(op)))


def _dot_scale(p: PairedPoint):
    # magnitude of the cancellation in <x, x*>, for float-mode slack
    return 1 + sum(abs(a * b) for a, b in zip(p.x, p.xstar))


def is_maximal_monotone_linear(op: OperatorRep) -> bool:
    """Monotone and of dimension n: no strictly larger monotone relation exists.

    The dimension criterion is standard linear-relation theory, validated
    against the brute-force extension search in the oracles module.
    """
    if isinstance(op, FiniteOperator):
        raise TypeError("maximality is undecidable from a finite sample")
    return is_monotone(op) and linear_part(op).dim == op.n


def negate(op: OperatorRep) -> OperatorRep:
    """(x, x*) -> (x, -x*) across the whole graph."""
    if isinstance(op, FiniteOperator):
        return FiniteOperator(tuple(p.flip_star() for p in op.points), op.mode)
    if isinstance(op, LinearRelation):
        return LinearRelation(negate_subspace(op.graph))
    return affine(negate_subspace(op.linear), op.translation.flip_star())


def negate_subspace(s: Subspace) -> Subspace:
    rows = [PairedPoint.from_vector(row).flip_star().vector() for row in s.basis]
    return canonicalize(rows, s.n, s.mode)


def translate(op: OperatorRep, p: PairedPoint) -> OperatorRep:
    """Pointwise shift of the graph by p."""
    if p.n != op.n:
        raise DimensionMismatchError("translation dimension mismatch")
    if isinstance(op, FiniteOperator):
        return FiniteOperator(tuple(q + p for q in op.points), op.mode)
    if isinstance(op, LinearRelation):
        return affine(op.graph, p)
    return affine(op.linear, op.translation + p)


def adjoint(op: LinearRelation | Subspace) -> Subspace:
    """Adjoint of a linear relation: vdash of its negation.

    For the graph of a full-domain matrix M this is the graph of M^T.
    """
    s = as_subspace(op)
    return vdash(negate_subspace(s))


def is_skew(op: LinearRelation | Subspace) -> bool:
    """Skew: the relation equals the negation of its adjoint."""
    s = as_subspace(op)
    return subspace_equal(s, negate_subspace(adjoint(s)))


def is_self_cancelling(op: LinearRelation | Subspace) -> bool:
    """The duality product vanishes identically on the subspace.

    By polarization it suffices that the Gram matrix of the basis is zero:
    diagonal entries are the basis dualities, off-diagonal entries the
    pairwise pairings.
    """
    s = as_subspace(op)
    g = gram_matrix(s)
    scale = _gram_scale(s)
    return all(s.mode.is_zero(v, scale=scale) for row in g for v in row)


def is_maximal_self_cancelling(op: LinearRelation | Subspace) -> bool:
    """Self-cancelling and containing its own annihilator (hence equal to it)."""
    s = as_subspace(op)
    return is_self_cancelling(s) and contains(s, vdash(s))


def as_subspace(op) -> Subspace:
    if isinstance(op, Subspace):
        return op
    if isinstance(op, LinearRelation):
        return op.graph
    raise TypeError(f"expected a linear relation or subspace, got {type(op).__name__}")


def _gram_scale(s: Subspace):
    if s.mode.exact:
        return 1
    return 1 + max(
        (
            sum(abs(a * b) for a, b in zip(p.x, q.xstar))
            + sum(abs(a * b) for a, b in zip(q.x, p.xstar))
            for p in s.points()
            for q in s.points()
        ),
        default=0,
    )


def check_same_mode(*ops) -> Mode:
    modes = {id(getattr(op, "mode")) for op in ops}
    if len(modes) > 1:
        raise ModeMismatchError("operators built under different arithmetic modes")
    return ops[0].mode
