#!/usr/bin/env python3
"""
カタログ照合レポート - rank 上限までの全 (群, 類) で極小不安定層のカタログと探索を比較
"""

import argparse
from collections.abc import Iterable
from pathlib import Path

import pandas as pd

from abstrata.core.abpoints import ABPair
from abstrata.core.rootsystem import vertex_name
from abstrata.core.strata import CatalogCheck, catalog_check, catalog_contexts
from common.logging_utils import now_ns


def _names(pairs: Iterable[ABPair]) -> str:
    return " ".join(sorted(vertex_name(v) for pair in pairs for v in pair.support))


def build_report(max_rank: int) -> pd.DataFrame:
    """各 (群, 類) の照合結果を 1 行にまとめた表"""
    rows = []
    for context in catalog_contexts(max_rank):
        t_start = now_ns()
        check: CatalogCheck = catalog_check(context)
        elapsed_ms = (now_ns() - t_start) / 1_000_000
        rows.append(
            {
                "group": str(context),
                "family": context.data.spec.family,
                "rank": context.data.rank,
                "order": context.c.order,
                "catalog": _names(check.expected),
                "search": _names(check.found),
                "agree": check.agree,
                "elapsed_ms": elapsed_ms,
            }
        )
    return pd.DataFrame(rows)


def print_summary(df: pd.DataFrame) -> None:
    """型ごとの件数と不一致を表示"""
    print("\n=== Catalog Check ===")
    print(f"Contexts: {len(df)}")
    print(f"Agree:    {int(df['agree'].sum())}")

    by_family = df.groupby("family").agg(contexts=("group", "count"), agree=("agree", "sum"),
                                         elapsed_ms=("elapsed_ms", "sum"))
    print("\n" + by_family.to_string())

    mismatches = df[~df["agree"]]
    if not mismatches.empty:
        print("\nMismatches:")
        print(mismatches[["group", "catalog", "search"]].to_string(index=False))


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="Minimally unstable catalog report")
    parser.add_argument("--max-rank", type=int, default=8, help="largest rank to check (default: 8)")
    parser.add_argument("--output", "-o", type=str, help="CSV output path")
    args = parser.parse_args(argv)

    try:
        df = build_report(args.max_rank)
        print_summary(df)
        if args.output:
            df.to_csv(Path(args.output), index=False)
            print(f"\nSaved: {args.output}")
    except Exception as e:
        print(f"Error: {e}")
        return 1

    return 0 if bool(df["agree"].all()) else 1


if __name__ == "__main__":
    raise SystemExit(main())
