"""Dual-mode scalar and matrix arithmetic.

Every rank/zero/sign decision in the package goes through one of two modes:

* ``EXACT`` -- arbitrary-precision rationals (``fractions.Fraction``).  No
  rounding ever happens; equality is equality.
* ``FLOAT`` -- double precision with a relative tolerance ``tol`` (default
  1e-9).  Rank decisions keep singular values above ``tol * max(1, sigma_max)``;
  scalar comparisons are slackened by ``tol`` times a caller-supplied scale.

Matrices are passed around as sequences of row tuples, which keeps the two
modes interchangeable; the float mode converts to numpy internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .errors import UndefinedExtRealError

Scalar = Union[Fraction, float]
Row = tuple
Rows = tuple


def _parse_number(text: str) -> Fraction:
    # accepts "p/q", integers and decimal strings
    return Fraction(text.strip())


class ExactMode:
    """Exact rational arithmetic; canonical subspace form is reduced row echelon."""

    name = "exact"
    exact = True

    # -- scalars ---------------------------------------------------------

    def scalar(self, value) -> Fraction:
        if isinstance(value, float):
            # interpret floats by their decimal repr, not their binary expansion
            return Fraction(repr(value))
        if isinstance(value, str):
            return _parse_number(value)
        return Fraction(value)

    def vector(self, seq) -> Row:
        return tuple(self.scalar(v) for v in seq)

    def is_zero(self, x, scale=1) -> bool:
        return x == 0

    def eq(self, a, b, scale=1) -> bool:
        return a == b

    def ge(self, a, b, scale=1) -> bool:
        return a >= b

    def nonneg(self, x, scale=1) -> bool:
        return x >= 0

    # -- matrices --------------------------------------------------------

    def canonical_basis(self, rows: Sequence[Row], ncols: int) -> Rows:
        red, pivots = _rref([list(r) for r in rows], ncols)
        return tuple(tuple(r) for r in red[: len(pivots)])

    def rank(self, rows: Sequence[Row], ncols: int) -> int:
        _, pivots = _rref([list(r) for r in rows], ncols)
        return len(pivots)

    def kernel(self, rows: Sequence[Row], ncols: int) -> Rows:
        """Canonical basis of {v : R v = 0} for the row matrix R."""
        red, pivots = _rref([list(r) for r in rows], ncols)
        pivot_set = set(pivots)
        basis = []
        for free in range(ncols):
            if free in pivot_set:
                continue
            v = [Fraction(0)] * ncols
            v[free] = Fraction(1)
            for r, p in enumerate(pivots):
                v[p] = -red[r][free]
            basis.append(tuple(v))
        return self.canonical_basis(basis, ncols)

    def in_rowspace(self, canon_rows: Sequence[Row], ncols: int, vec: Row) -> bool:
        return all(r == 0 for r in _reduce_against(canon_rows, vec))

    def solve_symmetric(self, grows: Sequence[Row], rhs: Row):
        """A particular solution of G y = c, or None when c is not in range(G)."""
        return _exact_solve(grows, rhs)

    def is_psd(self, grows: Sequence[Row]) -> bool:
        return _exact_psd(grows)

    def invert(self, grows: Sequence[Row]):
        k = len(grows)
        cols = []
        for j in range(k):
            e = tuple(Fraction(1 if i == j else 0) for i in range(k))
            sol = _exact_solve(grows, e, require_unique=True)
            if sol is None:
                return None
            cols.append(sol)
        return tuple(tuple(cols[j][i] for j in range(k)) for i in range(k))


class FloatMode:
    """Double-precision arithmetic; canonical subspace form is an orthonormal basis."""

    name = "float"
    exact = False

    def __init__(self, tol: float = 1e-9):
        self.tol = float(tol)

    # -- scalars ---------------------------------------------------------

    def scalar(self, value) -> float:
        if isinstance(value, str):
            return float(_parse_number(value))
        return float(value)

    def vector(self, seq) -> Row:
        return tuple(self.scalar(v) for v in seq)

    def is_zero(self, x, scale=1) -> bool:
        return abs(x) <= self.tol * max(1.0, scale)

    def eq(self, a, b, scale=1) -> bool:
        return abs(a - b) <= self.tol * max(1.0, scale, abs(a), abs(b))

    def ge(self, a, b, scale=1) -> bool:
        return a >= b - self.tol * max(1.0, scale, abs(a), abs(b))

    def nonneg(self, x, scale=1) -> bool:
        return x >= -self.tol * max(1.0, scale)

    # -- matrices --------------------------------------------------------

    def _array(self, rows, ncols):
        if len(rows) == 0:
            return np.zeros((0, ncols))
        return np.asarray(rows, dtype=float).reshape(len(rows), ncols)

    def _svd_split(self, rows, ncols):
        a = self._array(rows, ncols)
        if a.shape[0] == 0:
            return np.zeros((0, ncols)), np.eye(ncols)
        _, s, vt = np.linalg.svd(a)
        cutoff = self.tol * max(1.0, s[0] if s.size else 0.0)
        r = int(np.sum(s > cutoff))
        return vt[:r], vt[r:]

    def canonical_basis(self, rows, ncols) -> Rows:
        row_basis, _ = self._svd_split(rows, ncols)
        return _sign_normalized(row_basis)

    def rank(self, rows, ncols) -> int:
        row_basis, _ = self._svd_split(rows, ncols)
        return row_basis.shape[0]

    def kernel(self, rows, ncols) -> Rows:
        _, null_basis = self._svd_split(rows, ncols)
        return _sign_normalized(null_basis)

    def in_rowspace(self, canon_rows, ncols, vec) -> bool:
        # canon_rows are orthonormal, so projection is two matmuls
        v = np.asarray(vec, dtype=float)
        if len(canon_rows) == 0:
            resid = v
        else:
            b = self._array(canon_rows, ncols)
            resid = v - b.T @ (b @ v)
        return float(np.linalg.norm(resid)) <= self.tol * (1.0 + float(np.linalg.norm(v)))

    def solve_symmetric(self, grows, rhs):
        k = len(grows)
        if k == 0:
            return ()
        g = self._array(grows, k)
        c = np.asarray(rhs, dtype=float)
        y, *_ = np.linalg.lstsq(g, c, rcond=None)
        # range test: residual relative to the right-hand side
        if float(np.linalg.norm(g @ y - c)) > self.tol * (1.0 + float(np.linalg.norm(c))):
            return None
        return tuple(float(v) for v in y)

    def is_psd(self, grows) -> bool:
        k = len(grows)
        if k == 0:
            return True
        g = self._array(grows, k)
        lam = np.linalg.eigvalsh(0.5 * (g + g.T))
        lam_max = float(np.max(np.abs(lam))) if lam.size else 0.0
        return float(lam.min()) >= -self.tol * (1.0 + lam_max)

    def invert(self, grows):
        k = len(grows)
        if k == 0:
            return ()
        g = self._array(grows, k)
        s = np.linalg.svd(g, compute_uv=False)
        if s.size == 0 or s[-1] <= self.tol * max(1.0, s[0]):
            return None
        inv = np.linalg.inv(g)
        return tuple(tuple(float(v) for v in row) for row in inv)


Mode = Union[ExactMode, FloatMode]

EXACT = ExactMode()
FLOAT = FloatMode()


def _sign_normalized(array) -> Rows:
    rows = []
    for row in array:
        if row.size and row[np.argmax(np.abs(row))] < 0:
            row = -row
        rows.append(tuple(float(v) for v in row))
    return tuple(rows)


def _rref(rows: list, pivot_cols: int):
    """In-place reduced row echelon form; pivots searched in the first pivot_cols columns.

    Returns (rows, pivots). Rows beyond len(pivots) have zeros in all pivot-search
    columns (they may carry nonzero tail entries when the matrix is augmented).
    """
    pivots = []
    r = 0
    for c in range(pivot_cols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _reduce_against(canon_rows: Sequence[Row], vec: Row) -> list:
    """Reduce vec by canonical RREF rows; the remainder is zero iff vec is in the span."""
    w = list(vec)
    for row in canon_rows:
        p = next((j for j, v in enumerate(row) if v != 0), None)
        if p is not None and w[p] != 0:
            f = w[p]
            w = [a - f * b for a, b in zip(w, row)]
    return w


def _exact_solve(grows: Sequence[Row], rhs: Row, require_unique: bool = False):
    k = len(grows)
    if k == 0:
        return ()
    aug = [list(row) + [rhs[i]] for i, row in enumerate(grows)]
    red, pivots = _rref(aug, k)
    for row in red[len(pivots):]:
        if row[k] != 0:
            return None
    if require_unique and len(pivots) < k:
        return None
    sol = [Fraction(0)] * k
    for r, p in enumerate(pivots):
        sol[p] = red[r][k]
    return tuple(sol)


def _exact_psd(grows: Sequence[Row]) -> bool:
    """PSD test by pivoted Schur complements, exact over the rationals."""
    k = len(grows)
    g = [[grows[i][j] for j in range(k)] for i in range(k)]
    active = list(range(k))
    while active:
        if any(g[i][i] < 0 for i in active):
            return False
        positive = [i for i in active if g[i][i] > 0]
        if not positive:
            # zero diagonal throughout: PSD iff the whole active block vanishes
            return all(g[i][j] == 0 for i in active for j in active)
        p = positive[0]
        d = g[p][p]
        active.remove(p)
        for i in active:
            f = g[i][p] / d
            if f == 0:
                continue
            for j in active:
                g[i][j] -= f * g[p][j]
    return True


# ---------------------------------------------------------------------------
# Extended reals


@dataclass(frozen=True)
class ExtReal:
    """A finite scalar or one of the two infinities.

    ``sign`` is 0 for finite values (then ``value`` holds the scalar) and
    +1/-1 for the infinities (then ``value`` is None).  Addition guards
    against the undefined form infinity - infinity.
    """

    value: Scalar | None
    sign: int = 0

    @staticmethod
    def finite(value: Scalar) -> "ExtReal":
        return ExtReal(value, 0)

    @property
    def is_finite(self) -> bool:
        return self.sign == 0

    def __add__(self, other) -> "ExtReal":
        if not isinstance(other, ExtReal):
            other = ExtReal.finite(other)
        if self.sign == 0 and other.sign == 0:
            return ExtReal.finite(self.value + other.value)
        if self.sign != 0 and other.sign != 0 and self.sign != other.sign:
            raise UndefinedExtRealError("infinity minus infinity")
        return PLUS_INF if max(self.sign, other.sign, key=abs) > 0 else MINUS_INF

    def __radd__(self, other) -> "ExtReal":
        return self.__add__(other)

    def __neg__(self) -> "ExtReal":
        if self.sign == 0:
            return ExtReal.finite(-self.value)
        return MINUS_INF if self.sign > 0 else PLUS_INF

    def __sub__(self, other) -> "ExtReal":
        if not isinstance(other, ExtReal):
            other = ExtReal.finite(other)
        return self + (-other)

    def __le__(self, other) -> bool:
        if not isinstance(other, ExtReal):
            other = ExtReal.finite(other)
        if self.sign != other.sign:
            return self.sign < other.sign
        if self.sign != 0:
            return True
        return self.value <= other.value

    def __lt__(self, other) -> bool:
        if not isinstance(other, ExtReal):
            other = ExtReal.finite(other)
        if self.sign != other.sign:
            return self.sign < other.sign
        if self.sign != 0:
            return False
        return self.value < other.value

    def __repr__(self) -> str:
        if self.sign > 0:
            return "+inf"
        if self.sign < 0:
            return "-inf"
        return repr(self.value)


PLUS_INF = ExtReal(None, 1)
MINUS_INF = ExtReal(None, -1)
