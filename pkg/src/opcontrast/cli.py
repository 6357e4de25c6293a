"""Command-line interface.

Subcommands: ``delta`` (contrast of a Hermitian matrix file), ``blocks``
(block-operator measures), ``delta2`` (rectangular matrices), ``image``
(PNM files), ``cone`` (cone membership) and ``verify`` (the property
suites). Results go to stdout, diagnostics to stderr. Exit codes:
0 success, 1 domain error (for example non-PSD input), 2 I/O or parse
error. Output is deterministic: numbers are printed with 9 significant
digits and JSON reports use sorted keys.
"""

from __future__ import annotations

import argparse
import sys

from .blocks import delta_direct_sum_bound
from .contrast import ScanConfig, cone_member, delta, delta_scan, delta2
from .errors import ContrastError, ParseError
from .imaging import image_contrast_report, parse_pnm
from .matrixio import load_block_operator, load_hermitian_matrix, load_rect_matrix
from .report import Metric, ReportDocument, metric_from_report
from .verify import run_all


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".9g")
    return str(value)


def _print_metrics(doc: ReportDocument, as_json: bool) -> None:
    if as_json:
        print(doc.to_json())
        return
    for metric in doc.metrics:
        print(f"{metric.name} = {_fmt(metric.value)}")


def _cmd_delta(args) -> int:
    h = load_hermitian_matrix(args.matrix)
    rep = delta_scan(h, ScanConfig()) if args.scan else delta(h)
    name = "delta_scan" if args.scan else "delta"
    doc = ReportDocument(
        input={"source": args.matrix, "dim": h.dim,
               "field": "complex" if h.is_complex else "real"},
        metrics=(metric_from_report(name, rep),),
        config={"scan": bool(args.scan)},
    )
    if args.json:
        print(doc.to_json())
        return 0
    print(f"{name} = {_fmt(rep.value)}")
    print(f"path = {rep.path.value}")
    print(f"bounds = [{_fmt(rep.bounds.lo)}, {_fmt(rep.bounds.hi)}]")
    if rep.optimal_scale is not None:
        print(f"optimal_scale = {_fmt(rep.optimal_scale)}")
    print(f"singular = {_fmt(rep.singular)}")
    return 0


def _cmd_blocks(args) -> int:
    b = load_block_operator(args.blockfile)
    lhs, rhs = delta_direct_sum_bound(b)
    doc = ReportDocument(
        input={"source": args.blockfile, "blocks": list(b.block_dims())},
        metrics=(
            Metric(name="delta_prime", value=rhs, path="blockwise-sup"),
            Metric(name="delta_central", value=lhs, path="central-search"),
        ),
    )
    if args.json:
        print(doc.to_json())
        return 0
    print(f"n_blocks = {b.n_blocks}")
    print(f"delta_prime = {_fmt(rhs)}")
    print(f"delta_central = {_fmt(lhs)}")
    print(f"direct_sum_gap = {_fmt(rhs - lhs)}")
    return 0


def _cmd_delta2(args) -> int:
    m = load_rect_matrix(args.matrix)
    value = delta2(m)
    side = "cols" if m.n_cols <= m.n_rows else "rows"
    doc = ReportDocument(
        input={"source": args.matrix, "rows": m.n_rows, "cols": m.n_cols},
        metrics=(Metric(name="delta2", value=value, path="gram-spectral"),),
        config={"gram": side},
    )
    if args.json:
        print(doc.to_json())
        return 0
    print(f"shape = {m.n_rows}x{m.n_cols}")
    print(f"delta2 = {_fmt(value)}")
    print(f"gram = {side}")
    return 0


def _cmd_image(args) -> int:
    with open(args.image, "rb") as fh:
        img = parse_pnm(fh.read())
    doc = image_contrast_report(img, args.mode, source=args.image)
    if args.json:
        print(doc.to_json())
        return 0
    print(f"image = {img.width}x{img.height}, {img.channels} channel(s), "
          f"maxval {img.maxval}")
    _print_metrics(doc, as_json=False)
    return 0


def _cmd_cone(args) -> int:
    h = load_hermitian_matrix(args.matrix)
    rep = delta(h)
    member = cone_member(h, args.c)
    doc = ReportDocument(
        input={"source": args.matrix, "dim": h.dim},
        metrics=(
            metric_from_report("delta", rep),
            Metric(name="cone_member", value=1.0 if member else 0.0,
                   path="threshold"),
        ),
        config={"c": args.c},
    )
    if args.json:
        print(doc.to_json())
        return 0
    print(f"delta = {_fmt(rep.value)}")
    print(f"c = {_fmt(args.c)}")
    print(f"member = {_fmt(member)}")
    return 0


def _cmd_verify(args) -> int:
    results = run_all(args.seeds)
    for result in results:
        print(result.line())
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opcontrast",
        description="Contrast measures for positive operators and images",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delta", help="contrast of a Hermitian matrix file")
    p.add_argument("matrix")
    p.add_argument("--scan", action="store_true",
                   help="minimize the defining objective instead of the closed form")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("blocks", help="block-operator contrast measures")
    p.add_argument("blockfile")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_blocks)

    p = sub.add_parser("delta2", help="squared-singular-value contrast")
    p.add_argument("matrix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_delta2)

    p = sub.add_parser("image", help="contrast of a PNM image")
    p.add_argument("image")
    p.add_argument("--mode", choices=["michelson", "delta2"],
                   default="michelson")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_image)

    p = sub.add_parser("cone", help="membership in the contrast-c cone")
    p.add_argument("matrix")
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_cone)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--seeds", type=int, default=1000)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ContrastError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
