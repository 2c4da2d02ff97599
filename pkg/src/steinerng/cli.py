"""Command-line entry point."""

from __future__ import annotations

import argparse
import logging
import sys

from .cache import CACHE_ENV, default_cache_path
from .harness import FORMATS, MODES, RunConfig, run


def parse_k_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return int(a), int(b)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected k or a..b, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steinerng",
        description="Exact Steiner tree packing and Nordhaus-Gaddum bound checks on small graphs.",
        epilog=f"The cache path defaults to ${CACHE_ENV} when set.")
    sub = parser.add_subparsers(dest="mode", required=True, metavar="MODE")
    for mode in MODES:
        p = sub.add_parser(mode)
        p.add_argument("graphs", nargs="*", help="inline graph6 strings")
        p.add_argument("--input", dest="input_path", help="graph6 file, one graph per line ('-' = stdin)")
        p.add_argument("--family", help="family spec, e.g. family=harary,n=8,d=4")
        p.add_argument("--n", type=int, help="use every graph of this order (or --sample random ones)")
        p.add_argument("--connected", action="store_true", help="keep connected graphs only")
        p.add_argument("--sample", type=int, default=0, help="number of random G(n,1/2) graphs")
        p.add_argument("--k", dest="k_range", type=parse_k_range, help="k or a..b")
        p.add_argument("--cap", type=int, default=10, help="largest order accepted by the solver")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--cache", dest="cache_path", default=default_cache_path())
        p.add_argument("--format", dest="fmt", choices=FORMATS)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    cfg = RunConfig(mode=args.mode, graphs=tuple(args.graphs), input_path=args.input_path,
                    family=args.family, n=args.n, connected=args.connected, sample=args.sample,
                    k_range=args.k_range, cap=args.cap, workers=args.workers,
                    cache_path=args.cache_path, fmt=args.fmt, seed=args.seed)
    _, code = run(cfg)
    return code


if __name__ == "__main__":
    sys.exit(main())
