"""Batch front end: read an instance config, run the analyses, print a report.

Exit codes: 0 = analyses completed (verdict content does not matter),
1 = usage or config error, 2 = internal oracle mismatch.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .config import ConfigError, parse_config
from .oracle import OracleMismatchError
from .report import run


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kleppner",
        description="Exact decisions on twisted group algebra simplicity and "
                    "irreducibility of subalgebra inclusions.")
    parser.add_argument("--input", required=True, help="instance config file")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=None,
                        help="override the config's sampling seed")
    parser.add_argument("--cap", type=int, default=None,
                        help="override the config's search cap")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    path = Path(args.input)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return 1
    try:
        config = parse_config(text, name=path.stem)
        if args.seed is not None:
            config = replace(config, seed=args.seed)
        if args.cap is not None:
            config = replace(config, cap=args.cap)
        report = run(config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except OracleMismatchError as exc:
        print(f"ORACLE MISMATCH: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    return 0


if __name__ == "__main__":
    sys.exit(main())
