"""Command line front end.

Every command is a thin adapter over the library.  Output is
byte-deterministic for fixed inputs: text mode prints plain values, JSON
mode serializes big integers (orders, dimensions, multiplicities,
coefficients) as decimal strings.  Exit codes: 0 success, 1 domain error,
2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import counting, elements, modules, verify, words
from .errors import ParseError, TriRookError


class _UsageError(Exception):
    pass


def _parse_subset(text: str, n: int) -> modules.Subset:
    """Comma-separated strictly ascending integers; empty string is {}."""
    if text == "":
        return modules.Subset(n, 0)
    values = []
    for pos, token in enumerate(text.split(",")):
        if not token.isdigit():
            raise ParseError(f"bad subset entry {token!r}", pos)
        value = int(token)
        if values and value <= values[-1]:
            raise ParseError("subset entries must be strictly increasing", pos)
        values.append(value)
    return modules.Subset.from_elements(n, values)


def _parse_vector(text: str, n: int) -> modules.ModuleVector:
    """JSON array of {"subset": [...], "numerator": .., "denominator": ..}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"vector is not valid JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(data, list):
        raise ParseError("vector must be a JSON array of terms", 0)
    terms = []
    for i, term in enumerate(data):
        if not isinstance(term, dict) or "subset" not in term:
            raise ParseError(f"term {i} must be an object with a 'subset' key", 0)
        subset = modules.Subset.from_elements(n, term["subset"])
        num = int(term.get("numerator", 1))
        den = int(term.get("denominator", 1))
        terms.append((subset, Fraction(num, den)))
    return modules.ModuleVector.from_terms(n, terms)


def _subset_text(s: modules.Subset) -> str:
    return "{" + ",".join(map(str, s.elements)) + "}"


def _vector_json(v: modules.ModuleVector) -> list[dict]:
    return [
        {
            "subset": list(s.elements),
            "numerator": str(c.numerator),
            "denominator": str(c.denominator),
        }
        for s, c in v.terms()
    ]


def _vector_lines(v: modules.ModuleVector) -> list[str]:
    return [f"{c} {_subset_text(s)}" for s, c in v.terms()]


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


# ---------------------------------------------------------------- handlers


def _cmd_order(args: argparse.Namespace) -> int:
    if args.monoid == "planar":
        if args.method == "formula":
            value = counting.order_prn(args.n)
        elif args.method == "echelon":
            value = counting.count_planar(args.n)
        else:
            raise _UsageError("--monoid planar supports --method formula or echelon")
    else:
        if args.method == "formula":
            value = counting.order_bn(args.n)
        elif args.method == "recursive":
            value = counting.order_recursive(args.n)
        elif args.method == "enumerate":
            value = sum(1 for _ in counting.enumerate_bn(args.n))
        else:
            value = counting.count_echelon(args.n)
    payload = {
        "n": args.n,
        "monoid": args.monoid,
        "method": args.method,
        "order": str(value),
    }
    _emit(args, str(value), payload)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    members = list(counting.enumerate_bn(args.n))
    if args.format == "json":
        payload = {
            "n": args.n,
            "count": str(len(members)),
            "elements": [
                {"S": list(f.domain), "T": list(f.image)} for f in members
            ],
        }
        print(json.dumps(payload))
    else:
        for f in members:
            print(elements.print_element(f))
    return 0


def _cmd_ballot(args: argparse.Namespace) -> int:
    if args.encode is not None:
        if args.n is None:
            raise _UsageError("--encode requires --n")
        f = elements.parse_element(args.encode, args.n)
        seq = counting.ballot_encode(f)
    else:
        seq = counting.ballot_from_bits(args.decode)
        if args.n is not None and args.n != seq.n:
            raise ParseError(f"sequence length implies n={seq.n}, not {args.n}", 0)
    f = counting.ballot_decode(seq)
    payload = {
        "n": seq.n,
        "S": list(f.domain),
        "T": list(f.image),
        "sequence": seq.to_bits(),
    }
    text = seq.to_bits() if args.encode is not None else elements.print_element(f)
    _emit(args, text, payload)
    return 0


def _cmd_dim(args: argparse.Namespace) -> int:
    if args.subset is not None:
        s = _parse_subset(args.subset, args.n)
        value = modules.dim_single(s)
        payload = {"n": args.n, "S": list(s.elements), "dimension": str(value)}
    else:
        v = _parse_vector(args.vector, args.n)
        value = modules.dim_cyclic(v)
        payload = {"n": args.n, "vector": _vector_json(v), "dimension": str(value)}
    _emit(args, str(value), payload)
    return 0


def _cmd_span(args: argparse.Namespace) -> int:
    if args.subset is not None:
        basis = modules.down_set(_parse_subset(args.subset, args.n))
    else:
        basis = modules.cyclic_span(_parse_vector(args.vector, args.n))
    payload = {"n": args.n, "basis": [list(s.elements) for s in basis]}
    _emit(args, "\n".join(_subset_text(s) for s in basis), payload)
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    v = _parse_vector(args.vector, args.n)
    red = modules.reduced_support(v)
    form = modules.reduced_form(v)
    payload = {
        "n": args.n,
        "reduced_support": [list(s.elements) for s in red.sets],
        "reduced_form": _vector_json(form),
    }
    lines = ["reduced_support: " + ",".join(_subset_text(s) for s in red.sets)]
    lines.extend(_vector_lines(form))
    _emit(args, "\n".join(lines), payload)
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    v = _parse_vector(args.vector, args.n)
    parts = modules.decompose(v)
    summands = []
    lines = [f"indecomposable: {'yes' if modules.is_indecomposable(v) else 'no'}"]
    for part in parts:
        support = part.support()
        k = support[0].size if support else 0
        dim = modules.dim_cyclic(part)
        summands.append(
            {
                "k": k,
                "reduced_support": [list(s.elements) for s in support],
                "dimension": str(dim),
            }
        )
        lines.append(
            f"summand k={k} dimension={dim}: "
            + ",".join(_subset_text(s) for s in support)
        )
    payload = {
        "n": args.n,
        "indecomposable": modules.is_indecomposable(v),
        "summands": summands,
    }
    _emit(args, "\n".join(lines), payload)
    return 0


def _summands_output(args: argparse.Namespace, summands) -> int:
    total = sum(s.multiplicity * s.dimension for s in summands)
    payload = {
        "summands": [
            {
                "m": s.m,
                "k": s.k,
                "multiplicity": str(s.multiplicity),
                "dimension": str(s.dimension),
                "top": list(s.top),
            }
            for s in summands
        ],
        "total_dimension": str(total),
    }
    lines = [
        f"top={_subset_text_raw(s.top)} multiplicity={s.multiplicity} dimension={s.dimension}"
        for s in summands
    ]
    lines.append(f"total: {total}")
    _emit(args, "\n".join(lines), payload)
    return 0


def _subset_text_raw(elems: tuple[int, ...]) -> str:
    return "{" + ",".join(map(str, elems)) + "}"


def _cmd_branch(args: argparse.Namespace) -> int:
    if args.even:
        if args.m is not None or args.l is not None:
            raise _UsageError("--even takes only --k")
        return _summands_output(args, modules.branch_even(args.k))
    if args.m is None or args.l is None:
        raise _UsageError("block branching needs --m, --k and --l (or use --even)")
    if args.method == "compute":
        summands = modules.branch_compute(args.m, args.k, args.l)
    else:
        summands = modules.branch_predict(args.m, args.k, args.l)
    return _summands_output(args, summands)


def _cmd_rewrite(args: argparse.Namespace) -> int:
    w = words.parse_word(args.word, args.n)
    std = words.rewrite(w)
    payload = {"n": args.n, "S": list(std.s.elements), "T": list(std.t.elements)}
    _emit(args, elements.print_element(words.std_to_element(std)), payload)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verify.run_suite(
        args.suite,
        small=args.small,
        seed=args.seed,
        nmax=args.nmax,
        kmax=args.kmax,
        samples=args.samples,
    )
    failures = sum(r.failures for r in results)
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "ok": failures == 0,
            "results": [
                {
                    "name": r.name,
                    "checked": r.checked,
                    "failures": r.failures,
                    "detail": r.detail,
                }
                for r in results
            ],
        }
        print(json.dumps(payload))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            status = "PASS" if r.ok else "FAIL"
            line = f"{r.name:<{width}}  {r.checked:>7} checks  {r.failures:>4} failures  {status}"
            if r.detail:
                line += f"  [{r.detail}]"
            print(line)
        print(f"{'TOTAL':<{width}}  {sum(r.checked for r in results):>7} checks  {failures:>4} failures  {'PASS' if failures == 0 else 'FAIL'}")
    return 0 if failures == 0 else 1


# ------------------------------------------------------------------ parser


def _add_format(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trirook",
        description="Exact computations in the planar upper triangular rook monoid.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("order", help="order of the monoid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--monoid", choices=("triangular", "planar"), default="triangular")
    p.add_argument(
        "--method",
        choices=("formula", "recursive", "enumerate", "echelon"),
        default="formula",
        help="formula, window recursion, element count, or matrix brute force",
    )
    _add_format(p)
    p.set_defaults(handler=_cmd_order)

    p = subparsers.add_parser("enumerate", help="list all elements")
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = subparsers.add_parser("ballot", help="ballot-sequence encoding of elements")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--encode", metavar="ELEMENT", help="element text to encode")
    group.add_argument("--decode", metavar="BITS", help="'1'/'0' sequence to decode")
    p.add_argument("--n", type=int, help="dimension (required for --encode)")
    _add_format(p)
    p.set_defaults(handler=_cmd_ballot)

    p = subparsers.add_parser("dim", help="dimension of a cyclic span")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--subset", metavar="CSV", help="basis subset, e.g. 2,4,6")
    group.add_argument("--vector", metavar="JSON", help="module vector terms")
    _add_format(p)
    p.set_defaults(handler=_cmd_dim)

    p = subparsers.add_parser("span", help="basis of a cyclic span")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--subset", metavar="CSV")
    group.add_argument("--vector", metavar="JSON")
    _add_format(p)
    p.set_defaults(handler=_cmd_span)

    p = subparsers.add_parser("reduce", help="reduced support and reduced form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vector", metavar="JSON", required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_reduce)

    p = subparsers.add_parser("decompose", help="split a span into indecomposables")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vector", metavar="JSON", required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_decompose)

    p = subparsers.add_parser("branch", help="restriction to a smaller monoid")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--even", action="store_true", help="even-subset module, drop two points")
    p.add_argument("--method", choices=("predict", "compute"), default="predict")
    _add_format(p)
    p.set_defaults(handler=_cmd_branch)

    p = subparsers.add_parser("rewrite", help="normal form of a generator word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("word", help="tokens like 'e2 l1 e1' ('1' for the empty word)")
    _add_format(p)
    p.set_defaults(handler=_cmd_rewrite)

    p = subparsers.add_parser("verify", help="run cross-checking sweeps")
    p.add_argument("suite", choices=("all",) + verify.SUITES)
    p.add_argument("--nmax", type=int)
    p.add_argument("--kmax", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--small", action="store_true", help="reduced bounds, quick run")
    _add_format(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except TriRookError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
