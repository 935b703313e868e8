"""Operator documents: a diffable, exact text format for operator graphs.

A document is JSON with one field per line.  Every number is a string:
"p/q" or a decimal in exact mode, the float repr in float mode, so
round-trips are bit-exact under rational arithmetic.

    {"kind": "linear", "n": 1, "basis": [["1", "1"]]}
    {"kind": "affine", "n": 1, "basis": [["0", "1"]], "translation": [["2"], ["0"]]}
    {"kind": "finite", "n": 2, "pairs": [[["0", "0"], ["0", "0"]]]}
"""

from __future__ import annotations

import json
import warnings
from fractions import Fraction

from .arithmetic import Mode
from .errors import DocumentError
from .monotone_ops import (
    AffineRelation,
    FiniteOperator,
    LinearRelation,
    OperatorRep,
    affine,
)
from .relation_core import PairedPoint, canonicalize

KINDS = ("finite", "linear", "affine")


class DependentRowsWarning(UserWarning):
    """Basis rows in a document were linearly dependent and got canonicalized."""


def _number(value, field: str, mode: Mode):
    if isinstance(value, bool):
        raise DocumentError(f"field {field}: booleans are not numbers")
    if isinstance(value, (int, float)):
        return mode.scalar(value)
    if isinstance(value, str):
        try:
            return mode.scalar(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"field {field}: malformed number {value!r}: {exc}") from None
    raise DocumentError(f"field {field}: expected a number, got {type(value).__name__}")


def _vector(value, field: str, length: int, mode: Mode) -> tuple:
    if not isinstance(value, list) or len(value) != length:
        raise DocumentError(f"field {field}: expected a list of {length} numbers")
    return tuple(_number(v, f"{field}[{i}]", mode) for i, v in enumerate(value))


def _paired(value, field: str, n: int, mode: Mode) -> PairedPoint:
    if not isinstance(value, list) or len(value) != 2:
        raise DocumentError(f"field {field}: expected [x-list, xstar-list]")
    return PairedPoint(
        _vector(value[0], f"{field}[0]", n, mode),
        _vector(value[1], f"{field}[1]", n, mode),
    )


def parse_operator(text: str, mode: Mode) -> OperatorRep:
    """Parse a document into an operator; diagnostics name the offending field."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document root must be an object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"field kind: expected one of {KINDS}, got {kind!r}")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError(f"field n: expected a positive integer, got {n!r}")

    if kind == "finite":
        pairs = doc.get("pairs")
        if not isinstance(pairs, list) or not pairs:
            raise DocumentError("field pairs: expected a non-empty list")
        points = tuple(_paired(p, f"pairs[{i}]", n, mode) for i, p in enumerate(pairs))
        return FiniteOperator(points, mode)

    basis = doc.get("basis")
    if not isinstance(basis, list):
        raise DocumentError("field basis: expected a list of rows")
    rows = [_vector(r, f"basis[{i}]", 2 * n, mode) for i, r in enumerate(basis)]
    graph = canonicalize(rows, n, mode)
    if graph.dim < len(rows):
        warnings.warn(
            f"basis had {len(rows)} rows but spans only {graph.dim} dimensions; canonicalized",
            DependentRowsWarning,
            stacklevel=2,
        )
    if kind == "linear":
        return LinearRelation(graph)
    translation = _paired(doc.get("translation"), "translation", n, mode)
    return affine(graph, translation)


def _format_number(value, mode: Mode) -> str:
    if mode.exact:
        f = Fraction(value)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    return repr(float(value))


def _format_vector(vec, mode: Mode) -> list:
    return [_format_number(v, mode) for v in vec]


def emit_operator(op: OperatorRep) -> str:
    """Serialize an operator; parse(emit(op)) == op bit-exactly in rational mode."""
    mode = op.mode
    if isinstance(op, FiniteOperator):
        doc = {
            "kind": "finite",
            "n": op.n,
            "pairs": [
                [_format_vector(p.x, mode), _format_vector(p.xstar, mode)]
                for p in op.points
            ],
        }
    elif isinstance(op, LinearRelation):
        doc = {
            "kind": "linear",
            "n": op.n,
            "basis": [_format_vector(row, mode) for row in op.graph.basis],
        }
    elif isinstance(op, AffineRelation):
        doc = {
            "kind": "affine",
            "n": op.n,
            "basis": [_format_vector(row, mode) for row in op.linear.basis],
            "translation": [
                _format_vector(op.translation.x, mode),
                _format_vector(op.translation.xstar, mode),
            ],
        }
    else:
        raise TypeError(f"cannot serialize {type(op).__name__}")
    return json.dumps(doc, indent=2)


def emit_point(p: PairedPoint, mode: Mode) -> str:
    return json.dumps(
        {"x": _format_vector(p.x, mode), "xstar": _format_vector(p.xstar, mode)}
    )
