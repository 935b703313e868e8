"""Classification of affine maximal monotone operators by enlargeability.

A maximal monotone subspace graph T is non-enlargeable (its enlargements
add nothing for every parameter value) exactly when its annihilator A is
self-cancelling, in which case T = vdash(A) and A is the maximal
self-cancelling operator inside T.  Otherwise the effective domain of the
Fitzpatrick function strictly exceeds the graph, and any of its basis
vectors outside the graph is an explicit enlargement witness.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .config import postconditions_enabled
from .errors import (
    DualNotMonotoneError,
    NotMaximalMonotoneError,
    NotMaximalSelfCancellingError,
    NotSelfCancellingError,
)
from .fitzpatrick import effective_domain_fitz, fitz_linear, in_enlargement_def
from .monotone_ops import (
    AffineRelation,
    LinearRelation,
    OperatorRep,
    affine,
    as_subspace,
    is_maximal_monotone_linear,
    is_maximal_self_cancelling,
    is_monotone,
    is_self_cancelling,
    linear_part,
    negate_subspace,
    translation_of,
)
from .relation_core import (
    PairedPoint,
    Subspace,
    contains,
    duality,
    intersect,
    member,
    subspace_equal,
    vdash,
)


@dataclass(frozen=True)
class NonEnlargeable:
    """Certificate: the operator equals vdash(annihilator) + base_point."""

    annihilator: Subspace
    base_point: PairedPoint


@dataclass(frozen=True)
class Enlargeable:
    """Certificate: a point outside the graph that enters the enlargement.

    fitz_value / duality_value are the membership transcript; witness_eps
    is their gap, the least parameter admitting the witness.
    """

    witness: PairedPoint
    witness_eps: object
    fitz_value: object
    duality_value: object


Verdict = Union[NonEnlargeable, Enlargeable]


def _require_maximal(op: OperatorRep) -> None:
    if not is_maximal_monotone_linear(op):
        raise NotMaximalMonotoneError("operator is not maximal monotone")


def fitz_zero_on_annihilator(op: LinearRelation) -> bool:
    """The Fitzpatrick value vanishes on the annihilator of a maximal monotone subspace.

    Checks every annihilator basis vector and a sampled set of their
    combinations (pairwise sums and the total sum).
    """
    _require_maximal(op)
    ann = vdash(op.graph)
    probes = list(ann.points())
    for i in range(len(probes)):
        for j in range(i + 1, len(probes)):
            probes.append(probes[i] + probes[j])
    if len(ann.basis) > 1:
        total = probes[0]
        for q in ann.points()[1:]:
            total = total + q
        probes.append(total)
    for q in probes:
        val = fitz_linear(op, q)
        if not val.is_finite:
            return False
        if not op.mode.is_zero(val.value, scale=1 + abs(val.value)):
            return False
    return True


def max_self_cancelling_part(op: LinearRelation) -> Subspace:
    """The largest self-cancelling subspace inside the graph: T intersected with vdash(T).

    Coincides with the zero locus of the duality product on T.
    """
    _require_maximal(op)
    part = intersect(op.graph, vdash(op.graph))
    if postconditions_enabled():
        assert is_self_cancelling(part), "intersection with the annihilator must self-cancel"
    return part


def decide_non_enlargeable(op: LinearRelation | AffineRelation) -> Verdict:
    """Classify a maximal monotone subspace graph; always returns a certificate.

    Non-enlargeable branch: the annihilator A of the linear part is
    self-cancelling (then the linear part is vdash(A)).  Enlargeable
    branch: the effective domain of the Fitzpatrick function exceeds the
    linear part; the first canonical basis vector outside it, translated
    back, witnesses membership at exactly the value gap.
    """
    _require_maximal(op)
    t0 = linear_part(op)
    base = translation_of(op)
    ann = vdash(t0)
    if is_self_cancelling(ann):
        if postconditions_enabled():
            assert subspace_equal(vdash(ann), t0), "biduality must return the linear part"
        return NonEnlargeable(annihilator=ann, base_point=base)

    domain = effective_domain_fitz(LinearRelation(t0))
    witness0 = next(
        (p for p in domain.points() if not member(t0, p)),
        None,
    )
    if witness0 is None:
        raise AssertionError(
            "enlargeable operator with no domain direction outside the graph; "
            "arithmetic-mode inconsistency"
        )
    witness = witness0 + base
    phi = fitz_linear(op, witness)
    assert phi.is_finite, "witness was chosen inside the effective domain"
    dual = duality(witness)
    eps = phi.value - dual
    if postconditions_enabled():
        assert in_enlargement_def(op, witness, eps), "witness must verify by definition"
        assert not member(t0, witness - base), "witness must lie outside the graph"
    return Enlargeable(witness=witness, witness_eps=eps, fitz_value=phi.value, duality_value=dual)


def construct_from_self_cancelling(a: Subspace, t: PairedPoint) -> OperatorRep:
    """Build the non-enlargeable operator vdash(a) + t from a self-cancelling subspace.

    Fails with DualNotMonotoneError when vdash(a) is not monotone; the
    caller may retry with the negated subspace (sign disambiguation).
    """
    if not is_self_cancelling(a):
        raise NotSelfCancellingError("construction needs a self-cancelling subspace")
    dual = vdash(a)
    rel = LinearRelation(dual)
    if not is_monotone(rel):
        raise DualNotMonotoneError("vdash of the given subspace is not monotone")
    result = affine(dual, t)
    if postconditions_enabled():
        assert is_maximal_monotone_linear(result), "monotone annihilator-duals are maximal"
        assert isinstance(decide_non_enlargeable(result), NonEnlargeable)
    return result


class Sign(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"


def disambiguate_sign(a: LinearRelation | Subspace) -> Sign:
    """Which of vdash(a) and its negation is (maximal) monotone.

    For a maximal self-cancelling subspace one of the two must be; a
    neither outcome is an arithmetic-mode bug and raises AssertionError.
    """
    s = as_subspace(a)
    if not is_maximal_self_cancelling(s):
        raise NotMaximalSelfCancellingError("sign disambiguation needs maximal self-cancelling input")
    return _sign_unchecked(s)


def _sign_unchecked(s: Subspace) -> Sign:
    dual = vdash(s)
    if is_monotone(LinearRelation(dual)):
        return Sign.PLUS
    if is_monotone(LinearRelation(negate_subspace(dual))):
        return Sign.MINUS
    raise AssertionError("neither the dual nor its negation is monotone")


def annihilator_monotone(a: LinearRelation | Subspace) -> bool:
    """Whether vdash(a) is monotone, for self-cancelling a.

    When it is, it is automatically maximal monotone (asserted in the
    checking profile): adding any outside point breaks monotonicity.
    """
    s = as_subspace(a)
    if not is_self_cancelling(s):
        raise NotSelfCancellingError("monotone-dual check needs a self-cancelling subspace")
    rel = LinearRelation(vdash(s))
    result = is_monotone(rel)
    if result and postconditions_enabled():
        assert is_maximal_monotone_linear(rel), "monotone duals of self-cancelling subspaces are maximal"
    return result


def self_cancelling_part_is_maximal(a: Subspace) -> bool:
    """Reduced closure statement: self-cancelling a with monotone vdash(a) is maximal self-cancelling.

    In finite dimension every subspace is closed, so the closure refinements
    collapse to this check.
    """
    if not is_self_cancelling(a):
        raise NotSelfCancellingError("check needs a self-cancelling subspace")
    if not is_monotone(LinearRelation(vdash(a))):
        return False
    return is_maximal_self_cancelling(a)
