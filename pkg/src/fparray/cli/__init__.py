"""Command-line front end: construct, transform, verify, bounds, search.

Exit codes are a stable contract: 0 success, 1 verification failure,
2 input or parameter error.  Array output goes to `-o/--out` or standard
output; the one-line parameter summary goes to standard output when a
file is written, to standard error otherwise, so piped output stays
machine-readable.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from ..bounds import BoundsReport, bounds_report, exact_max_size
from ..combinators import (
    SeparableArray,
    compose_columns,
    direct_product,
    expand_to_pa,
    juxtapose,
    pad,
    reduce_mod,
    refine,
    sep_product,
)
from ..constructions import (
    affine_classes_from_mols,
    fpa_from_ard,
    fpa_from_hadamard,
    fpa_from_linearized,
    fpa_from_mds,
    fpa_from_mofs,
    fpa_from_oa,
    fpa_steiner_848,
    hadamard_matrix,
    mofs_complete,
    mols_from_field,
    oa_from_mols,
    reed_solomon_generator,
)
from ..core import FrequencyPermutationArray, WorkLimitExceeded, verify
from ..gf import (
    field_of_order,
    linearized_monomial,
    linearized_subfield_kernel,
    linearized_trace,
)
from .formats import (
    FormatError,
    parse_design,
    parse_fpa,
    parse_hadamard,
    parse_oa,
    parse_squares,
    write_design,
    write_fpa,
    write_hadamard,
    write_oa,
    write_squares,
)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WorkLimitExceeded as exc:
        print(f"error: work limit exceeded: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


# ---------------------------------------------------------------------------
# shared output helpers


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _summary(line: str, to_file: bool) -> None:
    print(line, file=sys.stdout if to_file else sys.stderr)


def _check_one_based(args) -> None:
    if getattr(args, "one_based", False) and args.out is not None:
        raise ValueError("--one-based is a display flag; it cannot be combined with -o")


def _finish_array(array: FrequencyPermutationArray, args) -> int:
    """Verify, write, and summarize a finished array; the caller's result."""
    _check_one_based(args)
    report = verify(array)
    if not report.valid:
        for reason in report.reasons:
            print(f"verification failed: {reason}", file=sys.stderr)
        return 1
    offset = 1 if getattr(args, "one_based", False) else 0
    _emit(write_fpa(array, offset=offset), args.out)
    _summary(array.summary(), to_file=args.out is not None)
    return 0


def _load_fpa(path: str) -> FrequencyPermutationArray:
    return parse_fpa(Path(path).read_text())


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


# ---------------------------------------------------------------------------
# construct


def _cmd_construct_mols(args) -> int:
    squares = mols_from_field(args.q)
    _emit(write_squares(squares), args.out)
    first = squares[0]
    _summary(
        f"FSQ(n={first.n}, m={first.m}, lambda={first.lam}, count={len(squares)})",
        to_file=args.out is not None,
    )
    return 0


def _cmd_construct_mofs(args) -> int:
    squares = mofs_complete(args.q, args.i, max_work=args.max_work)
    _emit(write_squares(squares), args.out)
    first = squares[0]
    _summary(
        f"FSQ(n={first.n}, m={first.m}, lambda={first.lam}, count={len(squares)})",
        to_file=args.out is not None,
    )
    return 0


def _cmd_construct_fpa_from_mofs(args) -> int:
    squares = parse_squares(Path(args.squares).read_text())
    return _finish_array(fpa_from_mofs(squares), args)


def _cmd_construct_linearized(args) -> int:
    order = args.q**args.i
    field = field_of_order(order)
    if args.kind == "trace":
        poly = linearized_trace(field, args.q, args.h)
    elif args.kind == "subfield":
        if args.subfield_n is None:
            raise ValueError("--kind subfield requires --subfield-n")
        poly = linearized_subfield_kernel(field, args.q, args.subfield_n)
    else:
        poly = linearized_monomial(field, args.q)
    return _finish_array(fpa_from_linearized(poly, args.d), args)


def _cmd_construct_oa(args) -> int:
    sources = [s for s in (args.q, args.oa, args.squares) if s is not None]
    if len(sources) != 1:
        raise ValueError("give exactly one of --q, --oa, --squares")
    if args.oa is not None:
        oa = parse_oa(Path(args.oa).read_text())
    else:
        squares = (
            mols_from_field(args.q)
            if args.q is not None
            else parse_squares(Path(args.squares).read_text())
        )
        oa = oa_from_mols(squares)
    if args.ingredient_out is not None:
        Path(args.ingredient_out).write_text(write_oa(oa))
    return _finish_array(fpa_from_oa(oa), args)


def _cmd_construct_ard(args) -> int:
    sources = [s for s in (args.q, args.design) if s is not None]
    if len(sources) != 1:
        raise ValueError("give exactly one of --q, --design")
    if args.design is not None:
        design = parse_design(Path(args.design).read_text())
    else:
        design = affine_classes_from_mols(mols_from_field(args.q))
    if args.ingredient_out is not None:
        Path(args.ingredient_out).write_text(write_design(design))
    return _finish_array(fpa_from_ard(design), args)


def _cmd_construct_mds(args) -> int:
    if (args.gen is None) == (args.k is None):
        raise ValueError("give exactly one of --gen, --k")
    if args.gen is not None:
        field = field_of_order(args.q)
        rows = []
        for ln in Path(args.gen).read_text().splitlines():
            stripped = ln.strip()
            if not stripped or stripped.startswith("#"):
                continue
            rows.append([int(tok) for tok in stripped.split()])
        if not rows:
            raise ValueError(f"no generator rows found in {args.gen}")
        generator = rows
    else:
        length = args.n if args.n is not None else args.q
        field, generator = reed_solomon_generator(args.q, args.k, length)
    return _finish_array(fpa_from_mds(field, generator), args)


def _cmd_construct_hadamard(args) -> int:
    matrix = hadamard_matrix(args.order)
    if args.to_fpa:
        return _finish_array(fpa_from_hadamard(matrix), args)
    _emit(write_hadamard(matrix), args.out)
    _summary(f"HAD(n={matrix.n})", to_file=args.out is not None)
    return 0


def _cmd_construct_steiner(args) -> int:
    return _finish_array(fpa_steiner_848(), args)


# ---------------------------------------------------------------------------
# transform


def _cmd_transform(args) -> int:
    op = args.op
    inputs = [_load_fpa(p) for p in args.inputs]

    def need(count: int) -> None:
        if len(inputs) != count:
            raise ValueError(f"{op} takes exactly {count} input file(s), got {len(inputs)}")

    if op == "pad":
        need(1)
        result = pad(inputs[0])
    elif op == "juxtapose":
        need(2)
        result = juxtapose(inputs[0], inputs[1])
    elif op == "expand-to-pa":
        need(1)
        result = expand_to_pa(inputs[0])
    elif op == "refine":
        need(1)
        if args.l is None:
            raise ValueError("refine requires --l")
        result = refine(inputs[0], args.l)
    elif op == "reduce-mod":
        need(1)
        if args.r is None:
            raise ValueError("reduce-mod requires --r")
        result = reduce_mod(inputs[0], args.r)
    elif op == "compose":
        if args.c is None:
            raise ValueError("compose requires --c with the coarse array file")
        if not inputs:
            raise ValueError("compose needs at least one ingredient file")
        result = compose_columns(inputs, _load_fpa(args.c))
    elif op == "product":
        need(2)
        result = direct_product(inputs[0], inputs[1])
    elif op == "sep-product":
        if args.classes is None:
            raise ValueError("sep-product requires --classes")
        if not inputs:
            raise ValueError("sep-product needs at least one input file")
        separables = [SeparableArray.from_fpa(a, args.classes) for a in inputs]
        result = sep_product(separables)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown transform {op!r}")
    return _finish_array(result, args)


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    array = _load_fpa(args.file)
    report = verify(array, max_pairs=args.max_pairs)
    print(f"valid: {_bool(report.valid)}")
    print(f"size: {report.size}")
    print(f"actual_min_distance: {report.actual_min_distance}")
    print(f"equidistant: {_bool(report.equidistant)}")
    if report.pair_profile is None:
        print("pair_profile: none")
    else:
        cells = " ".join(
            f"({a},{b})={c}" for (a, b), c in sorted(report.pair_profile.items())
        )
        print(f"pair_profile: {cells}")
    failures = list(report.reasons)
    if args.expect_d is not None and report.actual_min_distance != args.expect_d:
        failures.append(
            f"expected min distance {args.expect_d}, measured {report.actual_min_distance}"
        )
    if args.expect_size is not None and report.size != args.expect_size:
        failures.append(f"expected size {args.expect_size}, found {report.size}")
    for reason in failures:
        print(f"reason: {reason}")
    expectations_met = len(failures) == len(report.reasons)
    return 0 if report.valid and expectations_met else 1


# ---------------------------------------------------------------------------
# bounds and search


def _format_exact(report: BoundsReport) -> str:
    if report.exact_value is None:
        return "unknown"
    if report.exact_proven:
        return f"{report.exact_value} (proven)"
    return f">= {report.exact_value} (search incomplete)"


def _cmd_bounds(args) -> int:
    report = bounds_report(
        args.n,
        args.lam,
        args.d,
        with_exact=args.exact,
        vertex_budget=args.vertex_budget,
        node_budget=args.budget,
    )
    rows = [
        ("parameters", f"n={report.n} m={report.m} lambda={report.lam} d={report.d}"),
        ("total", str(report.total)),
        ("gv_lower", str(report.gv_lower)),
        ("hamming_upper", str(report.hamming_upper)),
        (
            "plotkin_upper",
            "n/a" if report.plotkin_upper is None else str(report.plotkin_upper),
        ),
        ("trivial_upper", str(report.trivial_upper)),
        ("exact", _format_exact(report)),
    ]
    if report.pa_chain_upper is not None:
        rows.append(("pa_chain_upper", str(report.pa_chain_upper)))
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"{key:<{width}}  {value}")
    if args.machine:
        plotkin = "NA" if report.plotkin_upper is None else str(report.plotkin_upper)
        exact = (
            str(report.exact_value)
            if report.exact_value is not None and report.exact_proven
            else "?"
        )
        print(
            f"gv={report.gv_lower} hamming={report.hamming_upper} "
            f"plotkin={plotkin} trivial={report.trivial_upper} exact={exact}"
        )
    return 0


def _cmd_search(args) -> int:
    result = exact_max_size(
        args.n, args.lam, args.d, vertex_budget=args.vertex_budget, node_budget=args.budget
    )
    status = "proven" if result.proven else "search incomplete"
    print(f"M(n={args.n}, lambda={args.lam}, d={args.d}) = {result.value} ({status})")
    if args.out is not None:
        witness = FrequencyPermutationArray.from_rows(
            result.rows, args.n // args.lam, args.lam, args.d
        )
        report = verify(witness)
        if not report.valid:
            for reason in report.reasons:
                print(f"verification failed: {reason}", file=sys.stderr)
            return 1
        Path(args.out).write_text(write_fpa(witness))
        print(witness.summary())
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_out(p: argparse.ArgumentParser, with_one_based: bool = True) -> None:
    p.add_argument("-o", "--out", default=None, help="output file (default: stdout)")
    if with_one_based:
        p.add_argument(
            "--one-based",
            action="store_true",
            help="print symbols 1-based (stdout display only)",
        )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fparray",
        description="Construct, transform, verify, and bound frequency permutation arrays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    # construct -------------------------------------------------------------
    construct = sub.add_parser("construct", help="build arrays and ingredients")
    methods = construct.add_subparsers(dest="method", required=True)

    p = methods.add_parser("mols", help="latin squares from a finite field")
    p.add_argument("--q", type=int, required=True, help="prime power order, >= 3")
    _add_out(p, with_one_based=False)
    p.set_defaults(func=_cmd_construct_mols)

    p = methods.add_parser("mofs", help="complete set of orthogonal frequency squares")
    p.add_argument("--q", type=int, required=True, help="prime power base")
    p.add_argument("--i", type=int, required=True, help="extension degree; n = q^i")
    p.add_argument("--max-work", type=int, default=1_000_000)
    _add_out(p, with_one_based=False)
    p.set_defaults(func=_cmd_construct_mofs)

    p = methods.add_parser("fpa-from-mofs", help="array from an orthogonal square set")
    p.add_argument("--squares", required=True, help="fsq ingredient file")
    _add_out(p)
    p.set_defaults(func=_cmd_construct_fpa_from_mofs)

    p = methods.add_parser("linearized", help="array from a linearized polynomial kernel")
    p.add_argument("--q", type=int, required=True, help="base field order (prime power)")
    p.add_argument("--i", type=int, required=True, help="extension degree over the base")
    p.add_argument(
        "--kind", choices=("trace", "subfield", "monomial"), default="trace"
    )
    p.add_argument("--h", type=int, default=1, help="trace step (kind=trace)")
    p.add_argument(
        "--subfield-n", type=int, default=None, help="subfield degree (kind=subfield)"
    )
    p.add_argument("--d", type=int, required=True, help="distance parameter")
    _add_out(p)
    p.set_defaults(func=_cmd_construct_linearized)

    p = methods.add_parser("oa", help="array from a strength-2 orthogonal array")
    p.add_argument("--q", type=int, default=None, help="build the OA from field MOLS")
    p.add_argument("--oa", default=None, help="read an oa ingredient file")
    p.add_argument("--squares", default=None, help="build the OA from an fsq file")
    p.add_argument("--ingredient-out", default=None, help="also write the OA file here")
    _add_out(p)
    p.set_defaults(func=_cmd_construct_oa)

    p = methods.add_parser("ard", help="array from an affine resolvable design")
    p.add_argument("--q", type=int, default=None, help="build the design from field MOLS")
    p.add_argument("--design", default=None, help="read an ard ingredient file")
    p.add_argument("--ingredient-out", default=None, help="also write the design here")
    _add_out(p)
    p.set_defaults(func=_cmd_construct_ard)

    p = methods.add_parser("mds", help="array from an MDS code generator matrix")
    p.add_argument("--q", type=int, required=True, help="field order (prime power)")
    p.add_argument("--gen", default=None, help="generator matrix file (encoded entries)")
    p.add_argument("--k", type=int, default=None, help="Reed-Solomon dimension")
    p.add_argument("--n", type=int, default=None, help="Reed-Solomon length (default q)")
    _add_out(p)
    p.set_defaults(func=_cmd_construct_mds)

    p = methods.add_parser("hadamard", help="Hadamard matrix, optionally as an array")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--to-fpa", action="store_true", help="emit the distance-n/2 array")
    _add_out(p)
    p.set_defaults(func=_cmd_construct_hadamard)

    p = methods.add_parser("steiner-848", help="the 14-row array on 8 positions")
    _add_out(p)
    p.set_defaults(func=_cmd_construct_steiner)

    # transform ---------------------------------------------------------------
    transform = sub.add_parser("transform", help="apply a combinator to array files")
    transform.add_argument(
        "op",
        choices=(
            "pad",
            "juxtapose",
            "expand-to-pa",
            "refine",
            "reduce-mod",
            "compose",
            "product",
            "sep-product",
        ),
    )
    transform.add_argument("inputs", nargs="+", help="input array files")
    transform.add_argument("--l", type=int, default=None, help="refine: output frequency")
    transform.add_argument("--r", type=int, default=None, help="reduce-mod: modulus")
    transform.add_argument("--c", default=None, help="compose: coarse array file")
    transform.add_argument(
        "--classes", type=int, default=None, help="sep-product: classes per input"
    )
    _add_out(transform)
    transform.set_defaults(func=_cmd_transform)

    # verify ------------------------------------------------------------------
    ver = sub.add_parser("verify", help="re-derive an array file's parameters")
    ver.add_argument("file")
    ver.add_argument("--expect-d", type=int, default=None)
    ver.add_argument("--expect-size", type=int, default=None)
    ver.add_argument("--max-pairs", type=int, default=10_000_000)
    ver.set_defaults(func=_cmd_verify)

    # bounds ------------------------------------------------------------------
    bnd = sub.add_parser("bounds", help="print the bounds table for (n, lambda, d)")
    bnd.add_argument("--n", type=int, required=True)
    bnd.add_argument("--lambda", dest="lam", type=int, required=True)
    bnd.add_argument("--d", type=int, required=True)
    bnd.add_argument("--exact", action="store_true", help="run the clique search")
    bnd.add_argument(
        "--budget", type=int, default=200_000, help="search node budget (deterministic)"
    )
    bnd.add_argument("--vertex-budget", type=int, default=2000)
    bnd.add_argument(
        "--machine", action="store_true", help="append a machine-readable line"
    )
    bnd.set_defaults(func=_cmd_bounds)

    # search ------------------------------------------------------------------
    srch = sub.add_parser("search", help="exact maximum size with optional witness")
    srch.add_argument("--n", type=int, required=True)
    srch.add_argument("--lambda", dest="lam", type=int, required=True)
    srch.add_argument("--d", type=int, required=True)
    srch.add_argument(
        "--budget", type=int, default=200_000, help="search node budget (deterministic)"
    )
    srch.add_argument("--vertex-budget", type=int, default=2000)
    srch.add_argument("-o", "--out", default=None, help="write the witness array here")
    srch.set_defaults(func=_cmd_search)

    return parser
