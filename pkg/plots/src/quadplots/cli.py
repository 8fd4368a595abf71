"""CLI: `plots fig1 --in DIR --out FILE` and `plots rates --in FILE --out FILE`."""

from __future__ import annotations

import argparse
import sys

from quadplots.render import render_fig1, render_rates


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plots", description="Render hermquad CSV output to figures."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fig1", help="three-panel |x|^p comparison figure")
    p.add_argument("--in", dest="in_dir", required=True, help="directory with the fig1 CSVs")
    p.add_argument("--out", required=True, help="output image path")
    p.add_argument("--format", choices=["svg", "png"], default="svg", help="image format (default: svg)")

    p = sub.add_parser("rates", help="fitted-slope bar chart from a fit CSV")
    p.add_argument("--in", dest="fit_csv", required=True, help="fit CSV path")
    p.add_argument("--out", required=True, help="output image path")
    p.add_argument("--format", choices=["svg", "png"], default="svg", help="image format (default: svg)")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "fig1":
            render_fig1(args.in_dir, args.out, args.format)
        else:
            render_rates(args.fit_csv, args.out, args.format)
    except (FileNotFoundError, ValueError, OSError) as exc:
        print(f"plots: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
