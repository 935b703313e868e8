"""Randomized property suite with a deterministic, seedable report.

Each property is a function of (rng, n, mode) returning None on success or
a short counterexample description.  The runner cycles the dimension
through 1..6 (properties may cap it lower), derives one rng per trial from
(seed, property, trial), and aggregates a SuiteReport whose content is
reproducible for a fixed seed up to the timing fields.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .arithmetic import EXACT, FLOAT, Mode
from .docio import emit_operator, parse_operator
from .enlargeability import (
    Enlargeable,
    NonEnlargeable,
    annihilator_monotone,
    construct_from_self_cancelling,
    decide_non_enlargeable,
    disambiguate_sign,
    fitz_zero_on_annihilator,
    max_self_cancelling_part,
)
from .fitzpatrick import (
    QuadFunc,
    conjugate_quad,
    conjugate_quadfunc,
    fitz_finite,
    fitz_linear,
    in_enlargement_def,
    in_enlargement_fitz,
    in_eps_subdifferential,
    subdifferential,
)
from .generators import (
    gen_max_self_cancelling,
    gen_maximal_monotone,
    gen_monotone_linear,
    gen_point,
    gen_psd,
    gen_self_cancelling,
    gen_skew,
    gen_subspace,
    graph_of,
    skew_matrix,
)
from .monotone_ops import (
    AffineRelation,
    FiniteOperator,
    LinearRelation,
    is_maximal_monotone_linear,
    is_monotone,
    is_self_cancelling,
    is_skew,
    is_maximal_self_cancelling,
    negate,
    negate_subspace,
    operator_contains,
    translate,
)
from .oracles import oracle_fitz_sampled, oracle_maximality_search
from .relation_core import (
    PairedPoint,
    canonicalize,
    combination,
    contains,
    duality,
    gram_matrix,
    intersect,
    member,
    pairing,
    span_of_points,
    subspace_equal,
    vdash,
    zero_point,
)


@dataclass
class PropertyResult:
    name: str
    trials: int
    failures: int
    first_counterexample: str | None
    elapsed: float


# ---------------------------------------------------------------------------
# relation_core properties


def _prop_annihilator_involution(rng, n, mode):
    b = gen_subspace(n, rng.random(), mode)
    if not subspace_equal(vdash(vdash(b)), b):
        return f"double annihilator differs: {b!r}"
    return None


def _prop_dimension_law(rng, n, mode):
    b = gen_subspace(n, rng.random(), mode)
    if b.dim + vdash(b).dim != 2 * n:
        return f"dim {b.dim} + dual dim {vdash(b).dim} != {2 * n}"
    return None


def _prop_containment_reversal(rng, n, mode):
    b = gen_subspace(n, rng.random(), mode)
    keep = rng.randint(0, b.dim)
    c = canonicalize(list(b.basis)[:keep], n, mode)
    if not contains(vdash(c), vdash(b)):
        return f"containment not reversed for dim {b.dim} over dim {c.dim}"
    return None


def _prop_pairing_polarization(rng, n, mode):
    p = gen_point(n, rng.random(), mode)
    q = gen_point(n, rng.random() + 1, mode)
    lhs = pairing(p, q)
    rhs = duality(p + q) - duality(p) - duality(q)
    if not mode.eq(lhs, rhs, scale=1 + abs(lhs) + abs(rhs)):
        return f"polarization broke: {lhs} vs {rhs}"
    return None


def _prop_canonical_idempotent(rng, n, mode):
    b = gen_subspace(n, rng.random(), mode)
    rows = [list(r) for r in b.basis]
    rng.shuffle(rows)
    scaled = [[mode.scalar(rng.choice([1, 2, 3, -1, -2])) * v for v in row] for row in rows]
    again = canonicalize(scaled, n, mode)
    if not subspace_equal(again, b):
        return "shuffle/scale changed the canonical span"
    return None


# ---------------------------------------------------------------------------
# monotone_ops properties


def _prop_self_cancelling_inside_annihilator(rng, n, mode):
    a = gen_self_cancelling(n, rng.randint(0, n), rng.random(), mode)
    if not contains(vdash(a), a):
        return f"self-cancelling subspace escapes its annihilator (dim {a.dim})"
    return None


def _prop_skew_iff_maximal_self_cancelling(rng, n, mode):
    if rng.random() < 0.5:
        s = gen_max_self_cancelling(n, rng.random(), mode)
    else:
        s = gen_subspace(n, rng.random(), mode)
    if is_skew(s) != is_maximal_self_cancelling(s):
        return f"skew={is_skew(s)} but maximal-self-cancelling={is_maximal_self_cancelling(s)}"
    return None


def _prop_negate_annihilator_commute(rng, n, mode):
    s = gen_subspace(n, rng.random(), mode)
    if not subspace_equal(vdash(negate_subspace(s)), negate_subspace(vdash(s))):
        return "negation does not commute with the annihilator"
    return None


def _prop_finite_sample_monotone(rng, n, mode):
    t = gen_maximal_monotone(n, rng.random(), mode)
    pts = [
        combination(t, [mode.scalar(rng.randint(-3, 3)) for _ in range(t.dim)])
        for _ in range(6)
    ]
    sample = FiniteOperator(tuple(dict.fromkeys(pts)), mode)
    if not is_monotone(sample):
        return "samples of a monotone graph tested non-monotone"
    return None


def _prop_maximality_matches_search(rng, n, mode):
    n = min(n, 2)
    s = gen_monotone_linear(n, rng.random(), FLOAT)
    rel = LinearRelation(s)
    expected = is_maximal_monotone_linear(rel)
    found = oracle_maximality_search(rel)
    if expected != found:
        return f"dim-criterion says {expected}, search says {found}: {emit_operator(rel)}"
    return None


# ---------------------------------------------------------------------------
# fitzpatrick properties


def _random_operator(rng, n, mode):
    s = gen_maximal_monotone(n, rng.random(), mode)
    if rng.random() < 0.5:
        return LinearRelation(s)
    return translate(LinearRelation(s), gen_point(n, rng.random(), mode, spread=3))


def _prop_route_agreement(rng, n, mode):
    op = _random_operator(rng, n, mode)
    p = gen_point(n, rng.random(), mode)
    eps = mode.scalar(Fraction(rng.randint(0, 40), 4))
    a = in_enlargement_def(op, p, eps)
    b = in_enlargement_fitz(op, p, eps)
    if a != b:
        return f"def route {a}, fitz route {b} at eps={eps}: {emit_operator(op)}"
    return None


def _prop_fitz_dominates_duality(rng, n, mode):
    op = LinearRelation(gen_maximal_monotone(n, rng.random(), mode))
    inside = rng.random() < 0.5
    if inside:
        p = combination(op.graph, [mode.scalar(rng.randint(-3, 3)) for _ in range(op.graph.dim)])
    else:
        p = gen_point(n, rng.random(), mode)
    phi = fitz_linear(op, p)
    d = duality(p)
    if phi.is_finite and not mode.ge(phi.value, d, scale=1 + abs(d) + abs(phi.value)):
        return f"value {phi.value} below duality {d}"
    is_member = member(op.graph, p)
    equal = phi.is_finite and mode.eq(phi.value, d, scale=1 + abs(d) + abs(phi.value))
    if is_member != equal:
        return f"membership {is_member} but equality-case {equal} at {p}"
    return None


def _prop_sampled_sup_lower_bound(rng, n, mode):
    op = LinearRelation(gen_maximal_monotone(n, rng.random(), mode))
    p = gen_point(n, rng.random(), mode)
    phi = fitz_linear(op, p)
    pts = [
        combination(op.graph, [mode.scalar(rng.randint(-2, 2)) for _ in range(op.graph.dim)])
        for _ in range(4)
    ]
    small = FiniteOperator(tuple(dict.fromkeys(pts)), mode)
    more = FiniteOperator(
        tuple(dict.fromkeys(pts + [combination(op.graph, [mode.scalar(rng.randint(-3, 3)) for _ in range(op.graph.dim)]) for _ in range(4)])),
        mode,
    )
    lo = fitz_finite(small, p)
    hi = fitz_finite(more, p)
    if not lo <= hi:
        return "sampled sup decreased when samples grew"
    if phi.is_finite and not mode.ge(phi.value, hi.value, scale=1 + abs(phi.value) + abs(hi.value)):
        return f"sampled sup {hi.value} above the true value {phi.value}"
    return None


def _prop_translation_equivariance(rng, n, mode):
    op = _random_operator(rng, n, mode)
    p = gen_point(n, rng.random(), mode)
    t = gen_point(n, rng.random() + 2, mode, spread=3)
    eps = mode.scalar(Fraction(rng.randint(0, 20), 4))
    before = in_enlargement_def(op, p, eps)
    after = in_enlargement_def(translate(op, t), p + t, eps)
    if before != after:
        return f"membership flipped under translation {t}"
    return None


def _prop_eps_subdiff_inside_enlargement(rng, n, mode):
    eye = [[mode.scalar(1 if i == j else 0) for j in range(n)] for i in range(n)]
    f = QuadFunc.build(eye, [0] * n, 0, mode)
    grad = subdifferential(f)
    p = gen_point(n, rng.random(), mode, spread=2)
    eps = mode.scalar(Fraction(rng.randint(0, 12), 4))
    if in_eps_subdifferential(f, p, eps) and not in_enlargement_def(grad, p, eps):
        return f"point {p} in the eps-subdifferential but not the enlargement"
    if eps > 0:
        # strict inclusion: radius 2 sqrt(eps) vs sqrt(2 eps) at the origin
        witness_len = mode.scalar(Fraction(3, 2)) * _sqrt_approx(eps, mode)
        w = PairedPoint(
            mode.vector([0] * n),
            mode.vector([witness_len] + [0] * (n - 1)),
        )
        if in_eps_subdifferential(f, w, eps):
            return f"gap witness {witness_len} landed inside the eps-subdifferential"
        if not in_enlargement_def(grad, w, eps):
            return f"gap witness {witness_len} missed the enlargement"
    return None


def _sqrt_approx(value, mode):
    root = float(value) ** 0.5
    return mode.scalar(Fraction(root).limit_denominator(10**6)) if mode.exact else root


def _prop_conjugate_involution(rng, n, mode):
    q = gen_psd(n, rng.random())
    for i in range(n):
        q[i][i] += 1  # force nonsingular
    b = [rng.randint(-3, 3) for _ in range(n)]
    f = QuadFunc.build(q, b, rng.randint(-3, 3), mode)
    g = conjugate_quadfunc(conjugate_quadfunc(f))
    for _ in range(3):
        x = mode.vector([rng.randint(-3, 3) for _ in range(n)])
        lhs, rhs = f(x), g(x)
        if not mode.eq(lhs, rhs, scale=1 + abs(lhs) + abs(rhs)):
            return f"double conjugate differs at {x}: {lhs} vs {rhs}"
        star = conjugate_quad(f, x)
        direct = conjugate_quadfunc(f)(x)
        if not (star.is_finite and mode.eq(star.value, direct, scale=1 + abs(direct))):
            return f"pointwise and closed-form conjugates differ at {x}"
    return None


def _prop_enlargement_monotone_in_eps(rng, n, mode):
    op = _random_operator(rng, n, mode)
    p = gen_point(n, rng.random(), mode)
    e1 = mode.scalar(Fraction(rng.randint(0, 16), 4))
    e2 = e1 + mode.scalar(Fraction(rng.randint(0, 16), 4))
    if in_enlargement_def(op, p, e1) and not in_enlargement_def(op, p, e2):
        return f"membership lost when eps grew from {e1} to {e2}"
    if mode.exact:
        inside = operator_contains(op, p)
        zero_member = in_enlargement_def(op, p, 0)
        if inside != zero_member:
            return f"zero-enlargement is not the operator itself at {p}"
    return None


# ---------------------------------------------------------------------------
# enlargeability properties


def _prop_skew_translates_non_enlargeable(rng, n, mode):
    a = gen_skew(n, rng.random(), mode)
    t = gen_point(n, rng.random(), mode, spread=4)
    op = construct_from_self_cancelling(a, t)
    verdict = decide_non_enlargeable(op)
    if not isinstance(verdict, NonEnlargeable):
        return f"skew graph judged enlargeable: {emit_operator(op)}"
    if not subspace_equal(verdict.annihilator, a):
        return "recovered pre-dual is not the skew graph"
    return None


def _prop_psd_graphs_enlargeable(rng, n, mode):
    q = gen_psd(n, rng.random())
    op = LinearRelation(graph_of(q, mode))
    verdict = decide_non_enlargeable(op)
    if not isinstance(verdict, Enlargeable):
        return f"PSD graph judged non-enlargeable: {emit_operator(op)}"
    if not in_enlargement_def(op, verdict.witness, verdict.witness_eps):
        return "witness fails the definition route"
    if operator_contains(op, verdict.witness):
        return "witness landed inside the graph"
    return None


def _prop_mixed_graph_part(rng, n, mode):
    s = skew_matrix(n, rng.random())
    q = gen_psd(n, rng.random())
    m = [[s[i][j] + q[i][j] for j in range(n)] for i in range(n)]
    op = LinearRelation(graph_of(m, mode))
    if not is_maximal_monotone_linear(op):
        return "mixed graph not maximal monotone"
    if not isinstance(decide_non_enlargeable(op), Enlargeable):
        return "mixed graph with nonzero symmetric part judged non-enlargeable"
    part = max_self_cancelling_part(op)
    kernel = EXACT.kernel([EXACT.vector(row) for row in q], n)
    rows = []
    for z in kernel:
        mz = [sum(Fraction(m[i][j]) * z[j] for j in range(n)) for i in range(n)]
        rows.append([mode.scalar(v) for v in list(z) + mz])
    expected = canonicalize(rows, n, mode)
    if not subspace_equal(part, expected):
        return "self-cancelling part is not the matrix kernel directions"
    return None


def _prop_fitz_vanishes_on_annihilator(rng, n, mode):
    op = LinearRelation(gen_maximal_monotone(n, rng.random(), mode))
    if not fitz_zero_on_annihilator(op):
        return f"nonzero value on the annihilator: {emit_operator(op)}"
    part = max_self_cancelling_part(op)
    gram = gram_matrix(op.graph)
    kernel = op.graph.mode.kernel(gram, op.graph.dim)
    locus = canonicalize(
        [combination(op.graph, z).vector() for z in kernel], n, mode
    )
    if not subspace_equal(part, locus):
        return "intersection route and Gram-kernel route disagree"
    return None


def _prop_witness_sound_both_routes(rng, n, mode):
    s = gen_maximal_monotone(n, rng.random(), mode)
    op = LinearRelation(s)
    verdict = decide_non_enlargeable(op)
    if isinstance(verdict, NonEnlargeable):
        return None
    ok_def = in_enlargement_def(op, verdict.witness, verdict.witness_eps)
    ok_fitz = in_enlargement_fitz(op, verdict.witness, verdict.witness_eps)
    if not (ok_def and ok_fitz):
        return f"witness routes disagree: def={ok_def} fitz={ok_fitz}"
    if member(s, verdict.witness):
        return "witness inside the graph"
    return None


def _prop_verdict_translation_invariant(rng, n, mode):
    s = gen_maximal_monotone(n, rng.random(), mode)
    op = LinearRelation(s)
    t = gen_point(n, rng.random(), mode, spread=4)
    if member(s, t):
        return None  # translation inside the graph leaves the operator unchanged
    v0 = decide_non_enlargeable(op)
    v1 = decide_non_enlargeable(translate(op, t))
    if type(v0) is not type(v1):
        return "verdict class changed under translation"
    if isinstance(v0, NonEnlargeable):
        if not subspace_equal(v0.annihilator, v1.annihilator):
            return "pre-dual changed under translation"
    else:
        shifted = v0.witness + t
        diff = v1.witness - shifted
        if not all(mode.is_zero(v, scale=1 + abs(v)) for v in diff.vector()):
            return f"witness did not shift by the translation: {diff}"
    return None


def _prop_monotone_dual_maximal(rng, n, mode):
    if rng.random() < 0.5:
        a = gen_max_self_cancelling(n, rng.random(), mode)
    else:
        a = gen_self_cancelling(n, rng.randint(0, n), rng.random(), mode)
    if annihilator_monotone(a) and not is_maximal_monotone_linear(LinearRelation(vdash(a))):
        return "monotone annihilator-dual is not maximal"
    return None


def _prop_sign_never_neither(rng, n, mode):
    a = gen_max_self_cancelling(n, rng.random(), mode)
    disambiguate_sign(a)  # raises AssertionError on a neither outcome
    return None


# ---------------------------------------------------------------------------
# cli_and_oracle properties


def _prop_document_round_trip(rng, n, mode):
    op = _random_operator(rng, n, mode)
    back = parse_operator(emit_operator(op), mode)
    if mode.exact:
        if back != op:
            return "document round trip changed the operator"
    else:
        if type(back) is not type(op):
            return "document round trip changed the representation"
    return None


def _prop_sampled_oracle_agreement(rng, n, mode):
    n = min(n, 4)
    s = gen_maximal_monotone(n, rng.random(), FLOAT)
    op = LinearRelation(s)
    p = gen_point(n, rng.random(), FLOAT, spread=2)
    phi = fitz_linear(op, p)
    sampled = oracle_fitz_sampled(op, p, budget=2048, seed=rng.randrange(2**31))
    if phi.is_finite != sampled.is_finite:
        return f"divergence flag mismatch: closed={phi!r} sampled={sampled!r}"
    if phi.is_finite:
        if sampled.value > phi.value + 1e-7 * (1 + abs(phi.value)):
            return f"sampled {sampled.value} above closed form {phi.value}"
        if phi.value - sampled.value > 1e-3 * (1 + abs(phi.value)):
            return f"sampled {sampled.value} too far below closed form {phi.value}"
    return None


PROPERTIES = (
    ("annihilator-involution", _prop_annihilator_involution, 6),
    ("dimension-law", _prop_dimension_law, 6),
    ("containment-reversal", _prop_containment_reversal, 6),
    ("pairing-polarization", _prop_pairing_polarization, 6),
    ("canonical-idempotent", _prop_canonical_idempotent, 6),
    ("self-cancelling-inside-annihilator", _prop_self_cancelling_inside_annihilator, 6),
    ("skew-iff-maximal-self-cancelling", _prop_skew_iff_maximal_self_cancelling, 6),
    ("negate-annihilator-commute", _prop_negate_annihilator_commute, 6),
    ("finite-sample-monotone", _prop_finite_sample_monotone, 6),
    ("maximality-matches-search", _prop_maximality_matches_search, 2),
    ("enlargement-route-agreement", _prop_route_agreement, 6),
    ("fitz-dominates-duality", _prop_fitz_dominates_duality, 6),
    ("sampled-sup-lower-bound", _prop_sampled_sup_lower_bound, 6),
    ("translation-equivariance", _prop_translation_equivariance, 6),
    ("eps-subdifferential-inside-enlargement", _prop_eps_subdiff_inside_enlargement, 6),
    ("conjugate-involution", _prop_conjugate_involution, 6),
    ("enlargement-monotone-in-eps", _prop_enlargement_monotone_in_eps, 6),
    ("skew-translates-non-enlargeable", _prop_skew_translates_non_enlargeable, 6),
    ("psd-graphs-enlargeable", _prop_psd_graphs_enlargeable, 6),
    ("mixed-graph-self-cancelling-part", _prop_mixed_graph_part, 6),
    ("fitz-vanishes-on-annihilator", _prop_fitz_vanishes_on_annihilator, 6),
    ("witness-sound-both-routes", _prop_witness_sound_both_routes, 6),
    ("verdict-translation-invariant", _prop_verdict_translation_invariant, 6),
    ("monotone-dual-maximal", _prop_monotone_dual_maximal, 6),
    ("sign-never-neither", _prop_sign_never_neither, 6),
    ("document-round-trip", _prop_document_round_trip, 6),
    ("sampled-oracle-agreement", _prop_sampled_oracle_agreement, 4),
)


def run_suite(trials: int = 200, seed: int = 0, exact: bool = False, out=None) -> list[PropertyResult]:
    mode = EXACT if exact else FLOAT
    emit = out if out is not None else (lambda line: None)
    emit(f"arithmetic mode: {mode.name}")
    emit(f"trials per property: {trials}  seed: {seed}")
    emit("")
    results = []
    for name, fn, n_cap in PROPERTIES:
        start = time.perf_counter()
        failures = 0
        first = None
        for trial in range(trials):
            rng = random.Random(f"{seed}/{name}/{trial}")
            n = trial % n_cap + 1
            try:
                counterexample = fn(rng, n, mode)
            except Exception as exc:  # a crash is a failure with the exception as witness
                counterexample = f"{type(exc).__name__}: {exc}"
            if counterexample is not None:
                failures += 1
                if first is None:
                    first = f"trial {trial} (n={n}): {counterexample}"
        elapsed = time.perf_counter() - start
        results.append(PropertyResult(name, trials, failures, first, elapsed))
        emit(f"property {name:<42} trials={trials} failures={failures} time={elapsed:.2f}s")
        if first is not None:
            emit(f"  first counterexample: {first}")
    total_failures = sum(r.failures for r in results)
    total_time = sum(r.elapsed for r in results)
    status = "PASS" if total_failures == 0 else "FAIL"
    emit("")
    emit(f"suite: {status}  ({len(results)} properties, {total_failures} failures, {total_time:.1f}s)")
    return results


def suite_passed(results: list[PropertyResult]) -> bool:
    return all(r.failures == 0 for r in results)
