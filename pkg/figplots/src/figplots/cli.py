"""figplots <kind> --in <csv> --out <img>; exit 0 on success, 1 on bad input."""

from __future__ import annotations

import argparse
import sys

from .render import KINDS, FigureSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figplots", description="Render figures from gravent CSV output."
    )
    parser.add_argument("kind", choices=sorted(KINDS), help="which figure to draw")
    parser.add_argument("--in", dest="csv_path", required=True, help="input CSV from gravent")
    parser.add_argument("--out", dest="out_path", required=True, help="output .svg or .png")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = render(FigureSpec(kind=args.kind, csv_path=args.csv_path, out_path=args.out_path))
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
