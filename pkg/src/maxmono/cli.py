"""Command-line interface.

Subcommands: check, vdash, fitz, enlarge, decide, suite, generate.
Exit codes: 0 success / suite pass, 1 property failure, 2 input error.
The default arithmetic mode comes from --mode, falling back to the
MAXMONO_MODE environment variable (exact when unset); the suite defaults
to float with --exact switching identities to rationals.
"""

from __future__ import annotations

import argparse
import sys

from . import docio
from .config import default_mode, mode_from_name
from .enlargeability import Enlargeable, NonEnlargeable, decide_non_enlargeable
from .errors import MaxmonoError
from .fitzpatrick import fitz_finite, fitz_linear, in_enlargement_def, in_enlargement_fitz
from .generators import (
    gen_max_self_cancelling,
    gen_maximal_monotone,
    gen_mixed,
    gen_psd,
    gen_self_cancelling,
    gen_skew,
    gen_vertical,
    graph_of,
)
from .monotone_ops import (
    AffineRelation,
    FiniteOperator,
    LinearRelation,
    is_maximal_monotone_linear,
    is_maximal_self_cancelling,
    is_monotone,
    is_self_cancelling,
    is_skew,
    linear_part,
)
from .relation_core import PairedPoint, Subspace, vdash
from .suite import run_suite, suite_passed

GENERATOR_FAMILIES = (
    "skew",
    "psd",
    "mixed",
    "vertical",
    "self-cancelling",
    "max-self-cancelling",
    "maximal-monotone",
)


def _parse_point(text: str, n: int, mode) -> PairedPoint:
    """Point syntax: "x1,..,xn;s1,..,sn" with decimal or p/q entries."""
    halves = text.split(";")
    if len(halves) != 2:
        raise MaxmonoError(f"point must be 'x;xstar', got {text!r}")
    xs = [v for v in halves[0].split(",") if v.strip()]
    ss = [v for v in halves[1].split(",") if v.strip()]
    if len(xs) != n or len(ss) != n:
        raise MaxmonoError(f"point needs {n} + {n} entries, got {len(xs)} + {len(ss)}")
    return PairedPoint(mode.vector(xs), mode.vector(ss))


def _load(path: str, mode):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise MaxmonoError(f"cannot read {path}: {exc}") from None
    return docio.parse_operator(text, mode)


def _flag(label: str, value) -> str:
    return f"{label}: {'yes' if value else 'no'}"


def _cmd_check(args, mode) -> int:
    op = _load(args.file, mode)
    kind = type(op).__name__
    print(f"kind: {kind}  n: {op.n}  mode: {mode.name}")
    print(_flag("monotone", is_monotone(op)))
    if isinstance(op, FiniteOperator):
        print("maximal-monotone: undecidable from samples")
        return 0
    print(_flag("maximal-monotone", is_maximal_monotone_linear(op)))
    print(f"dim: {linear_part(op).dim}")
    if isinstance(op, LinearRelation):
        print(_flag("self-cancelling", is_self_cancelling(op.graph)))
        print(_flag("maximal-self-cancelling", is_maximal_self_cancelling(op.graph)))
        print(_flag("skew", is_skew(op.graph)))
    return 0


def _cmd_vdash(args, mode) -> int:
    op = _load(args.file, mode)
    if not isinstance(op, LinearRelation):
        raise MaxmonoError("the annihilator is defined for linear documents")
    print(docio.emit_operator(LinearRelation(vdash(op.graph))))
    return 0


def _cmd_fitz(args, mode) -> int:
    op = _load(args.file, mode)
    p = _parse_point(args.point, op.n, mode)
    if isinstance(op, FiniteOperator):
        value = fitz_finite(op, p)
        print(f"value (sampled lower bound): {value!r}")
    else:
        value = fitz_linear(op, p)
        print(f"value: {value!r}")
    return 0


def _cmd_enlarge(args, mode) -> int:
    op = _load(args.file, mode)
    p = _parse_point(args.point, op.n, mode)
    eps = mode.scalar(args.eps)
    by_def = in_enlargement_def(op, p, eps)
    if isinstance(op, FiniteOperator):
        print(f"definition route: {'member' if by_def else 'not a member'}")
        print("fitzpatrick route: unavailable for sampled operators")
        return 0
    by_fitz = in_enlargement_fitz(op, p, eps)
    if by_def and by_fitz:
        print("member (both routes)")
    elif not by_def and not by_fitz:
        print("not a member (both routes)")
    else:
        print(f"ROUTE DISAGREEMENT: definition={by_def} fitzpatrick={by_fitz}")
        return 1
    return 0


def _cmd_decide(args, mode) -> int:
    op = _load(args.file, mode)
    if isinstance(op, FiniteOperator):
        raise MaxmonoError("enlargeability is undecidable from samples; give a linear or affine document")
    verdict = decide_non_enlargeable(op)
    if isinstance(verdict, NonEnlargeable):
        print("verdict: non-enlargeable")
        print("pre-dual (self-cancelling, operator equals its annihilator + base point):")
        print(docio.emit_operator(LinearRelation(verdict.annihilator)))
        print(f"base point: {docio.emit_point(verdict.base_point, mode)}")
    else:
        print("verdict: enlargeable")
        print(f"witness: {docio.emit_point(verdict.witness, mode)}")
        print(f"witness eps: {docio._format_number(verdict.witness_eps, mode)}")
        print(
            f"transcript: fitzpatrick value {docio._format_number(verdict.fitz_value, mode)}, "
            f"duality {docio._format_number(verdict.duality_value, mode)}"
        )
    return 0


def _cmd_suite(args, _mode) -> int:
    results = run_suite(trials=args.trials, seed=args.seed, exact=args.exact, out=print)
    return 0 if suite_passed(results) else 1


def _cmd_generate(args, mode) -> int:
    n, seed = args.n, args.seed
    if args.family == "skew":
        op = LinearRelation(gen_skew(n, seed, mode))
    elif args.family == "psd":
        op = LinearRelation(graph_of(gen_psd(n, seed), mode))
    elif args.family == "mixed":
        op = LinearRelation(graph_of(gen_mixed(n, seed), mode))
    elif args.family == "vertical":
        op = LinearRelation(gen_vertical(n, mode))
    elif args.family == "self-cancelling":
        k = args.k if args.k is not None else max(1, n // 2)
        op = LinearRelation(gen_self_cancelling(n, k, seed, mode))
    elif args.family == "max-self-cancelling":
        op = LinearRelation(gen_max_self_cancelling(n, seed, mode))
    elif args.family == "maximal-monotone":
        op = LinearRelation(gen_maximal_monotone(n, seed, mode))
    else:
        raise MaxmonoError(f"unknown family {args.family!r}")
    print(docio.emit_operator(op))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxmono",
        description="Monotone operator calculus: enlargements, Fitzpatrick values, annihilators.",
    )
    parser.add_argument(
        "--mode",
        choices=("exact", "float"),
        default=None,
        help="arithmetic mode (default: MAXMONO_MODE env var, else exact)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="print structural flags of an operator document")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("vdash", help="print the annihilator of a linear document")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_vdash)

    p = sub.add_parser("fitz", help="evaluate the Fitzpatrick function at a point")
    p.add_argument("file")
    p.add_argument("--point", required=True, help="point as 'x1,..,xn;s1,..,sn'")
    p.set_defaults(fn=_cmd_fitz)

    p = sub.add_parser("enlarge", help="enlargement membership by both routes")
    p.add_argument("file")
    p.add_argument("--point", required=True)
    p.add_argument("--eps", required=True)
    p.set_defaults(fn=_cmd_enlarge)

    p = sub.add_parser("decide", help="classify an operator as enlargeable or not")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_decide)

    p = sub.add_parser("suite", help="run the randomized property suite")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exact", action="store_true", help="use rational arithmetic for identities")
    p.set_defaults(fn=_cmd_suite)

    p = sub.add_parser("generate", help="emit a generated operator document")
    p.add_argument("family", choices=GENERATOR_FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, default=None, help="dimension for self-cancelling family")
    p.set_defaults(fn=_cmd_generate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    mode = mode_from_name(args.mode) if args.mode else default_mode()
    try:
        return args.fn(args, mode)
    except MaxmonoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
