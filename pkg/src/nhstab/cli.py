"""Command-line interface.

    nhstab analyze --space so7_g2 --format md
    nhstab analyze --config space.toml --jobs 4 --cache ~/.cache/nhstab
    nhstab verify-tables --table 4 --rank-limit 8
    nhstab list
    nhstab einstein --space family_IX_n7

Exit codes: 0 success, 1 golden mismatch, 2 unknown space or bad config,
3 standard metric not Einstein, 4 analysis cut short by --max-modes.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .cache import CACHE_ENV, DiskCache, default_cache_dir
from .catalog import UnknownSpace, catalog_names, g_type, get_space
from .embeddings import EmbeddingError
from .goldens import golden_tables
from .report import ReportDocument, markdown
from .spaces import ConfigError, NotEinstein, einstein_check, format_weight_key, load_space
from .stability import analyze
from .verify import check_row, rows_within

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_UNKNOWN = 2
EXIT_NOT_EINSTEIN = 3
EXIT_PARTIAL = 4

DEFAULT_RANK_LIMIT = 12
SLOW_SERIES = {"E": 7}


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _resolve_space(args):
    if args.config is not None:
        return load_space(Path(args.config).read_text(encoding="utf-8"))
    return get_space(args.space)


def _attach_cache(space, directory) -> DiskCache | None:
    if directory is None:
        directory = default_cache_dir()
    if directory is None:
        return None
    cache = DiskCache(directory)
    space.embedding.attach_disk_cache(cache)
    return cache


def cmd_analyze(args) -> int:
    try:
        space = _resolve_space(args)
    except UnknownSpace as exc:
        _err(str(exc))
        return EXIT_UNKNOWN
    except (ConfigError, EmbeddingError, OSError) as exc:
        _err(f"invalid space config: {exc}")
        return EXIT_UNKNOWN
    if space.g.rank > DEFAULT_RANK_LIMIT or space.g.rank >= SLOW_SERIES.get(space.g.series, 99):
        _err(f"note: {space.g} is large; the analysis may take a long time")
    _attach_cache(space, args.cache)
    t0 = time.perf_counter()
    try:
        report = analyze(space, max_modes=args.max_modes, jobs=args.jobs)
    except NotEinstein as exc:
        _err(str(exc))
        return EXIT_NOT_EINSTEIN
    except EmbeddingError as exc:
        _err(f"invalid embedding: {exc}")
        return EXIT_UNKNOWN
    timing = {"seconds": round(time.perf_counter() - t0, 3)}
    doc = ReportDocument.from_report(report, space, timing)
    if args.format == "md":
        sys.stdout.write(markdown(doc))
    else:
        sys.stdout.write(doc.to_json())
    if report.partial:
        _err(f"partial report: stopped after {args.max_modes} candidate modes")
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_verify_tables(args) -> int:
    tables = [args.table] if args.table is not None else sorted(golden_tables())
    status = EXIT_OK
    for table in tables:
        if table not in golden_tables():
            _err(f"no golden data for table {table}")
            return EXIT_UNKNOWN
        rows = rows_within(table, args.rank_limit)
        passed = 0
        for row in rows:
            space = get_space(row.space)
            _attach_cache(space, args.cache)
            t0 = time.perf_counter()
            check = check_row(row, jobs=args.jobs)
            dt = time.perf_counter() - t0
            if check.ok:
                passed += 1
                print(f"PASS table {table} {row.space} ({dt:.1f}s)")
            else:
                status = EXIT_MISMATCH
                print(f"FAIL table {table} {row.space} ({dt:.1f}s)")
                for d in check.diffs:
                    print(f"    {d}")
        print(f"table {table}: {passed}/{len(rows)} rows match (rank <= {args.rank_limit})")
    return status


def cmd_list(args) -> int:
    for name in catalog_names():
        if args.rank_limit is not None and g_type(name).rank > args.rank_limit:
            continue
        space = get_space(name)
        try:
            E = einstein_check(space).einstein_constant
        except NotEinstein:
            E = "not Einstein"
        print(f"{name}\t{space.family or '-'}\t{space.g}/{space.h}\tE = {E}")
    return EXIT_OK


def cmd_einstein(args) -> int:
    try:
        space = _resolve_space(args)
    except UnknownSpace as exc:
        _err(str(exc))
        return EXIT_UNKNOWN
    except (ConfigError, EmbeddingError, OSError) as exc:
        _err(f"invalid space config: {exc}")
        return EXIT_UNKNOWN
    try:
        data = einstein_check(space)
    except NotEinstein as exc:
        _err(str(exc))
        return EXIT_NOT_EINSTEIN
    print(f"space: {space.name}  ({space.g}/{space.h})")
    print(f"dim m = {data.dim_m}")
    for w, m in sorted(data.isotropy.items()):
        print(f"  summand {format_weight_key(w)} x{m}")
    print(f"Casimir constant c = {data.common_casimir}")
    print(f"E = {data.einstein_constant}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nhstab", description="Einstein-Hilbert stability of normal homogeneous spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--space", help="catalog name, e.g. so7_g2 or family_IV_n3")
        src.add_argument("--config", help="TOML space config file")

    def add_cache(p):
        p.add_argument("--cache", default=None,
                       help=f"directory for cached branching rules (default: ${CACHE_ENV})")

    p = sub.add_parser("analyze", help="run the stability analysis of one space")
    add_source(p)
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.add_argument("--max-modes", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    add_cache(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify-tables", help="compare against the embedded golden tables")
    p.add_argument("--table", type=int, default=None)
    p.add_argument("--rank-limit", type=int, default=DEFAULT_RANK_LIMIT)
    p.add_argument("--jobs", type=int, default=1)
    add_cache(p)
    p.set_defaults(func=cmd_verify_tables)

    p = sub.add_parser("list", help="list catalog spaces with their Einstein constants")
    p.add_argument("--rank-limit", type=int, default=None)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("einstein", help="print the isotropy summands and Einstein constant")
    add_source(p)
    p.set_defaults(func=cmd_einstein)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
