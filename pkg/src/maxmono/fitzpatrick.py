"""Fitzpatrick-function evaluation, enlargement membership, and quadratic convex calculus.

For a subspace graph with basis points b_1..b_k the supremand of the
Fitzpatrick function at p,

    sup over graph points w of  pairing(p, w) - duality(w),

becomes a concave quadratic in the coordinates t of w = sum t_i b_i:

    c(p)^T t - t^T G t,   c_i(p) = pairing(b_i, p),   G = Gram form of duality.

For monotone relations G is PSD, so the sup is c^T y / 4 with G y = c when
c lies in range(G), and +infinity otherwise.  Enlargement membership is
offered through two routes: the definition's infimum and the Fitzpatrick
sublevel test; they must agree on subspace graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .arithmetic import MINUS_INF, PLUS_INF, ExtReal, Mode
from .config import postconditions_enabled
from .errors import DimensionMismatchError, NotMonotoneError
from .monotone_ops import (
    AffineRelation,
    FiniteOperator,
    LinearRelation,
    OperatorRep,
    affine,
    from_matrix,
    is_monotone,
    linear_part,
    translation_of,
)
from .relation_core import (
    PairedPoint,
    Subspace,
    contains,
    duality,
    gram_matrix,
    pairing,
    swap_blocks,
)


@dataclass(frozen=True)
class GramData:
    """Precomputed data for sup/inf of the duality form over a subspace graph."""

    subspace: Subspace
    gram: tuple

    @staticmethod
    def of(s: Subspace) -> "GramData":
        return GramData(s, gram_matrix(s))

    def c_vector(self, p: PairedPoint) -> tuple:
        return tuple(pairing(b, p) for b in self.subspace.points())

    def sup_value(self, p: PairedPoint) -> ExtReal:
        """sup over the subspace of pairing(p, .) - duality(.), assuming PSD Gram."""
        c = self.c_vector(p)
        y = self.subspace.mode.solve_symmetric(self.gram, c)
        if y is None:
            return PLUS_INF
        quarter = self.subspace.mode.scalar("1/4")
        return ExtReal.finite(quarter * sum(a * b for a, b in zip(c, y)))


def fitz_finite(samples: FiniteOperator, p: PairedPoint) -> ExtReal:
    """Max of the supremand over the sample points: a lower bound on the true value."""
    if p.n != samples.n:
        raise DimensionMismatchError("point dimension does not match the samples")
    return ExtReal.finite(max(pairing(p, q) - duality(q) for q in samples.points))


def fitz_linear(op: LinearRelation | AffineRelation, p: PairedPoint) -> ExtReal:
    """Fitzpatrick value of a monotone subspace graph at p.

    Affine graphs reduce to their linear part by the exact identity

        value(L + t, p) = value(L, p - t) + pairing(p, t) - duality(t),

    unit-tested against finite sampling rather than trusted.
    """
    if isinstance(op, FiniteOperator):
        raise TypeError("use fitz_finite for sampled operators")
    if not is_monotone(op):
        raise NotMonotoneError("Fitzpatrick reduction needs a monotone relation")
    if p.n != op.n:
        raise DimensionMismatchError("point dimension does not match the operator")
    if isinstance(op, AffineRelation):
        t = op.translation
        base = fitz_linear(LinearRelation(op.linear), p - t)
        return base + (pairing(p, t) - duality(t))
    return GramData.of(op.graph).sup_value(p)


def effective_domain_fitz(op: LinearRelation) -> Subspace:
    """The subspace of points where the Fitzpatrick value is finite.

    c(p) depends linearly on p (through the block-swapped basis), and
    finiteness means c(p) is orthogonal to the Gram kernel, so the domain
    is itself a kernel.  It always contains the graph; equality with the
    graph is exactly non-enlargeability.
    """
    if not is_monotone(op):
        raise NotMonotoneError("effective domain reduction needs a monotone relation")
    s = op.graph
    gram = gram_matrix(s)
    kernel_coeffs = s.mode.kernel(gram, s.dim)
    constraints = []
    for z in kernel_coeffs:
        row = list(s.mode.vector([0] * (2 * s.n)))
        for zi, b in zip(z, s.basis):
            if zi != 0:
                swapped = swap_blocks(b)
                row = [r + zi * v for r, v in zip(row, swapped)]
        constraints.append(tuple(row))
    domain = Subspace(s.n, s.mode.kernel(constraints, 2 * s.n), s.mode)
    if postconditions_enabled():
        assert contains(domain, s), "effective domain must contain the graph"
    return domain


# ---------------------------------------------------------------------------
# Enlargement membership, both routes


def _check_eps(mode: Mode, eps):
    eps = mode.scalar(eps)
    if eps < 0:
        raise ValueError(f"enlargement parameter must be nonnegative, got {eps}")
    return eps


def _inf_gap(op: LinearRelation | AffineRelation, p: PairedPoint) -> ExtReal:
    """inf over graph points w of duality(p - w), by direct quadratic minimization.

    In coordinates: duality(q) - c(q)^T t + t^T G t against the linear part,
    with q = p - translation.  Unbounded below unless G is PSD and c(q) is
    in range(G); otherwise the minimum is duality(q) - c^T y / 4, G y = c.
    """
    s = linear_part(op)
    q = p - translation_of(op)
    gram = gram_matrix(s)
    if not s.mode.is_psd(gram):
        return MINUS_INF
    c = tuple(pairing(b, q) for b in s.points())
    y = s.mode.solve_symmetric(gram, c)
    if y is None:
        return MINUS_INF
    quarter = s.mode.scalar("1/4")
    return ExtReal.finite(duality(q) - quarter * sum(a * b for a, b in zip(c, y)))


def in_enlargement_def(op: OperatorRep, p: PairedPoint, eps) -> bool:
    """Definition route: duality(p - w) >= -eps against every graph point w."""
    eps = _check_eps(op.mode, eps)
    if isinstance(op, FiniteOperator):
        for q in op.points:
            d = p - q
            gap = duality(d)
            scale = 1 + sum(abs(a * b) for a, b in zip(d.x, d.xstar)) + abs(eps)
            if not op.mode.ge(gap, -eps, scale=scale):
                return False
        return True
    inf = _inf_gap(op, p)
    if not inf.is_finite:
        return inf.sign > 0  # only reachable for empty graphs, which cannot occur
    return op.mode.ge(inf.value, -eps, scale=1 + abs(inf.value) + abs(eps))


def in_enlargement_fitz(op: OperatorRep, p: PairedPoint, eps) -> bool:
    """Fitzpatrick route: value at p is at most duality(p) + eps.

    Rejects finite samples: their sampled value underestimates the true
    one and would produce false positives.
    """
    if isinstance(op, FiniteOperator):
        raise TypeError("enlargement via Fitzpatrick values needs a subspace graph")
    eps = _check_eps(op.mode, eps)
    phi = fitz_linear(op, p)
    if not phi.is_finite:
        return phi.sign < 0
    bound = duality(p) + eps
    return op.mode.ge(bound, phi.value, scale=1 + abs(phi.value) + abs(bound))


# ---------------------------------------------------------------------------
# Quadratic functions: f(x) = x^T Q x / 2 + b^T x + c


@dataclass(frozen=True)
class QuadFunc:
    """A convex quadratic; Q symmetric PSD, so conjugates stay closed-form."""

    q: tuple
    b: tuple
    c: object
    mode: Mode

    @staticmethod
    def build(q, b, c, mode: Mode) -> "QuadFunc":
        qrows = tuple(mode.vector(row) for row in q)
        bvec = mode.vector(b)
        n = len(bvec)
        if len(qrows) != n or any(len(row) != n for row in qrows):
            raise DimensionMismatchError("quadratic matrix shape does not match b")
        scale = 1 + max((abs(v) for row in qrows for v in row), default=0)
        for i in range(n):
            for j in range(i + 1, n):
                if not mode.eq(qrows[i][j], qrows[j][i], scale=scale):
                    raise ValueError("quadratic matrix must be symmetric")
        if not mode.is_psd(qrows):
            raise ValueError("quadratic matrix must be positive semidefinite")
        return QuadFunc(qrows, bvec, mode.scalar(c), mode)

    @property
    def n(self) -> int:
        return len(self.b)

    def __call__(self, x):
        x = self.mode.vector(x)
        qx = [sum(r * v for r, v in zip(row, x)) for row in self.q]
        half = self.mode.scalar("1/2")
        return half * sum(a * b for a, b in zip(x, qx)) + sum(
            a * b for a, b in zip(self.b, x)
        ) + self.c

    def gradient(self, x) -> tuple:
        x = self.mode.vector(x)
        return tuple(
            sum(r * v for r, v in zip(row, x)) + bi for row, bi in zip(self.q, self.b)
        )


def conjugate_quad(f: QuadFunc, xstar) -> ExtReal:
    """sup_x <x, x*> - f(x): finite exactly when x* - b lies in range(Q)."""
    z = tuple(a - b for a, b in zip(f.mode.vector(xstar), f.b))
    y = f.mode.solve_symmetric(f.q, z)
    if y is None:
        return PLUS_INF
    half = f.mode.scalar("1/2")
    return ExtReal.finite(half * sum(a * b for a, b in zip(z, y)) - f.c)


def conjugate_quadfunc(f: QuadFunc) -> QuadFunc:
    """The conjugate as a quadratic, for nonsingular Q: (Q^-1, -Q^-1 b, b^T Q^-1 b / 2 - c)."""
    qinv = f.mode.invert(f.q)
    if qinv is None:
        raise ValueError("closed-form conjugate quadratic needs a nonsingular matrix")
    qinv_b = tuple(sum(r * v for r, v in zip(row, f.b)) for row in qinv)
    half = f.mode.scalar("1/2")
    cstar = half * sum(a * b for a, b in zip(f.b, qinv_b)) - f.c
    bstar = tuple(-v for v in qinv_b)
    return QuadFunc(qinv, bstar, cstar, f.mode)


def fenchel_young(f: QuadFunc, p: PairedPoint) -> ExtReal:
    """f(x) + f*(x*): at least the duality product everywhere."""
    return ExtReal.finite(f(p.x)) + conjugate_quad(f, p.xstar)


def in_eps_subdifferential(f: QuadFunc, p: PairedPoint, eps) -> bool:
    """Sublevel test: f(x) + f*(x*) <= <x, x*> + eps."""
    eps = _check_eps(f.mode, eps)
    h = fenchel_young(f, p)
    if not h.is_finite:
        return False
    bound = duality(p) + eps
    return f.mode.ge(bound, h.value, scale=1 + abs(h.value) + abs(bound))


def subdifferential(f: QuadFunc) -> OperatorRep:
    """The gradient graph {(x, Qx + b)} as an affine relation."""
    zero = f.mode.vector([0] * f.n)
    return from_matrix(f.q, f.mode, translation=PairedPoint(zero, f.b))


# ---------------------------------------------------------------------------
# Representation checking


def fenchel_young_functional(f: QuadFunc) -> Callable[[PairedPoint], ExtReal]:
    return lambda p: fenchel_young(f, p)


def fitz_functional(op: LinearRelation | AffineRelation) -> Callable[[PairedPoint], ExtReal]:
    return lambda p: fitz_linear(op, p)


def represents_check(
    h: Callable[[PairedPoint], ExtReal],
    samples: FiniteOperator | Iterable[PairedPoint],
    grid: Iterable[PairedPoint],
    mode: Mode,
) -> bool:
    """Necessary conditions for h to represent the sampled operator.

    h must dominate the duality product on the grid and match it on the
    samples.  Convexity and lower semicontinuity are not checked.
    """
    pts = samples.points if isinstance(samples, FiniteOperator) else tuple(samples)
    for g in grid:
        val = h(g)
        if val.sign < 0:
            return False
        if val.is_finite:
            d = duality(g)
            if not mode.ge(val.value, d, scale=1 + abs(val.value) + abs(d)):
                return False
    for s in pts:
        val = h(s)
        if not val.is_finite:
            return False
        d = duality(s)
        if not mode.eq(val.value, d, scale=1 + abs(val.value) + abs(d)):
            return False
    return True
