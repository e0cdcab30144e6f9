import argparse

from common.protocol import pack, pair_to_json

from abstrata.core.abpoints import ABPair
from abstrata.core.command_base import CommandLogger, CommandProcessor, CommandResult
from abstrata.core.strata import catalog, minimally_unstable


def _sorted(pairs: frozenset[ABPair]) -> list[ABPair]:
    return sorted(pairs, key=lambda p: sorted(p.support))


class MinimalProcessor(CommandProcessor):
    """極小不安定な Atiyah-Bott 点（探索、または --catalog で既知の分類）"""

    help = "minimally unstable Atiyah-Bott points"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        cls.add_group_argument(parser)
        parser.add_argument("--catalog", action="store_true", help="print the catalog answer instead of searching")

    def run(self, args: argparse.Namespace) -> CommandResult:
        context = self.context(args)
        pairs = catalog(context) if args.catalog else minimally_unstable(context)
        obj = {
            "group": str(context),
            "source": "catalog" if args.catalog else "search",
            "points": [pair_to_json(p) for p in _sorted(pairs)],
        }
        return CommandResult(pack(obj))


class MinimalLogger(CommandLogger):
    """minimal は実行ログのみ"""
