"""Deterministic instance generators for tests, oracles and the property suite.

All entries are small integers, so the same instance is exactly
representable under both arithmetic modes.
"""

from __future__ import annotations

import math
import random

from .arithmetic import EXACT, Mode
from .config import default_mode
from .errors import MaxmonoError
from .monotone_ops import is_self_cancelling
from .relation_core import PairedPoint, Subspace, canonicalize


def _check_n(n: int, limit: int = 8) -> None:
    if not 1 <= n <= limit:
        raise MaxmonoError(f"dimension {n} outside the supported range 1..{limit}")


def _rng(seed) -> random.Random:
    return random.Random(repr(seed))


def skew_matrix(n: int, seed) -> list:
    """Random skew-symmetric integer matrix, entries in [-5, 5]."""
    _check_n(n)
    rng = _rng(("skew", n, seed))
    s = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(-5, 5)
            s[i][j] = v
            s[j][i] = -v
    return s


def gen_skew(n: int, seed, mode: Mode | None = None) -> Subspace:
    """Graph of a random skew matrix."""
    return graph_of(skew_matrix(n, seed), mode)


def gen_psd(n: int, seed) -> list:
    """A^T A for random integer A; symmetric PSD and nonzero."""
    _check_n(n)
    rng = _rng(("psd", n, seed))
    while True:
        a = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        q = [[sum(a[k][i] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        if any(v != 0 for row in q for v in row):
            return q


def gen_mixed(n: int, seed) -> list:
    """Skew plus symmetric PSD: monotone, generally enlargeable."""
    s = skew_matrix(n, ("mixed", seed))
    q = gen_psd(n, ("mixed", seed))
    return [[s[i][j] + q[i][j] for j in range(n)] for i in range(n)]


def gen_vertical(n: int, mode: Mode | None = None) -> Subspace:
    """{0} x R^n: the normal-cone relation of the origin."""
    _check_n(n)
    rows = []
    for i in range(n):
        row = [0] * (2 * n)
        row[n + i] = 1
        rows.append(row)
    return canonicalize(rows, n, mode)


def graph_of(matrix: list, mode: Mode | None = None) -> Subspace:
    """Graph subspace {(x, Mx)} of a square matrix."""
    n = len(matrix)
    rows = []
    for i in range(n):
        row = [0] * (2 * n)
        row[i] = 1
        for j in range(n):
            row[n + j] = matrix[j][i]
        rows.append(row)
    return canonicalize(rows, n, mode)


def _random_independent_rows(n: int, k: int, rng: random.Random) -> list:
    """k independent integer direction vectors in R^n (rank-checked exactly)."""
    while True:
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(k)]
        if EXACT.rank([EXACT.vector(r) for r in rows], n) == k:
            return rows


def _perp_basis(w_rows: list, n: int) -> list:
    """Integer basis of the Euclidean orthogonal complement of the given rows."""
    if not w_rows:
        eye = [[0] * n for _ in range(n)]
        for i in range(n):
            eye[i][i] = 1
        return eye
    kernel = EXACT.kernel([EXACT.vector(w) for w in w_rows], n)
    out = []
    for row in kernel:
        denom = 1
        for v in row:
            denom = denom * v.denominator // math.gcd(denom, v.denominator)
        out.append([int(v * denom) for v in row])
    return out


def gen_self_cancelling(n: int, k: int, seed, mode: Mode | None = None) -> Subspace:
    """A k-dimensional self-cancelling subspace: a skew graph restricted to k directions."""
    _check_n(n)
    if not 0 <= k <= n:
        raise MaxmonoError(f"self-cancelling dimension {k} outside 0..{n}")
    rng = _rng(("selfc", n, k, seed))
    s = skew_matrix(n, ("selfc", seed))
    rows = []
    if k > 0:
        for w in _random_independent_rows(n, k, rng):
            sw = [sum(s[i][j] * w[j] for j in range(n)) for i in range(n)]
            rows.append(list(w) + sw)
    out = canonicalize(rows, n, mode)
    assert is_self_cancelling(out), "generator invariant: restricted skew graphs self-cancel"
    return out


def gen_max_self_cancelling(n: int, seed, mode: Mode | None = None) -> Subspace:
    """A maximal self-cancelling subspace: skew action on W plus {0} x W-perp.

    Has dimension n, vanishing duality and pairwise pairing, and equals
    its own annihilator.
    """
    _check_n(n)
    rng = _rng(("maxselfc", n, seed))
    s = skew_matrix(n, ("maxselfc", seed))
    k = rng.randint(0, n)
    rows = []
    w_rows = _random_independent_rows(n, k, rng) if k else []
    for w in w_rows:
        sw = [sum(s[i][j] * w[j] for j in range(n)) for i in range(n)]
        rows.append(list(w) + sw)
    for z in _perp_basis(w_rows, n):
        rows.append([0] * n + list(z))
    out = canonicalize(rows, n, mode)
    assert is_self_cancelling(out)
    return out


def gen_maximal_monotone(n: int, seed, mode: Mode | None = None) -> Subspace:
    """A random maximal monotone subspace graph, not necessarily a matrix graph.

    Matrix action S + Q on a random subspace V of R^n plus all of V-perp
    in the second block: dimension n, monotone (normal directions pair to
    zero against V), maximal by the dimension criterion.
    """
    _check_n(n)
    rng = _rng(("maxmono", n, seed))
    m = gen_mixed(n, ("maxmono", n, seed))
    k = rng.randint(0, n)
    rows = []
    v_rows = _random_independent_rows(n, k, rng) if k else []
    for v in v_rows:
        mv = [sum(m[i][j] * v[j] for j in range(n)) for i in range(n)]
        rows.append(list(v) + mv)
    for z in _perp_basis(v_rows, n):
        rows.append([0] * n + list(z))
    return canonicalize(rows, n, mode)


def gen_monotone_linear(n: int, seed, mode: Mode | None = None) -> Subspace:
    """A random monotone (not necessarily maximal) subspace graph."""
    rng = _rng(("mono", n, seed))
    base = gen_maximal_monotone(n, ("mono", seed), mode)
    keep = rng.randint(0, base.dim)
    return canonicalize(list(base.basis)[:keep], n, base.mode)


def gen_subspace(n: int, seed, mode: Mode | None = None) -> Subspace:
    """A random subspace of R^{2n} with random dimension (structural tests)."""
    _check_n(n)
    rng = _rng(("subspace", n, seed))
    k = rng.randint(0, 2 * n)
    rows = [[rng.randint(-4, 4) for _ in range(2 * n)] for _ in range(k)]
    return canonicalize(rows, n, mode)


def gen_point(n: int, seed, mode: Mode | None = None, spread: int = 5) -> PairedPoint:
    mode = mode or default_mode()
    rng = _rng(("point", n, seed))
    return PairedPoint(
        mode.vector([rng.randint(-spread, spread) for _ in range(n)]),
        mode.vector([rng.randint(-spread, spread) for _ in range(n)]),
    )
