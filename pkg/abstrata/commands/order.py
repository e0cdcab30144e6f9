import argparse

from common.protocol import pack, parse_point, point_to_json

from abstrata.core.abpoints import ab_compare, dominant_representative
from abstrata.core.command_base import CommandLogger, CommandProcessor, CommandResult
from abstrata.core.errors import ConsistencyError
from abstrata.core.hull import hull_compare


class OrderProcessor(CommandProcessor):
    """2 点の Atiyah-Bott 順序（=, >, <, incomparable）"""

    help = "compare two points in the Atiyah-Bott order"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        cls.add_group_argument(parser)
        parser.add_argument("first", help='point JSON, e.g. \'["2","1"]\'')
        parser.add_argument("second", help="point JSON")
        parser.add_argument("--json", action="store_true", help="emit dominant representatives as JSON")
        parser.add_argument("--check-hull", action="store_true",
                            help="cross-check against convex hull membership of Weyl orbits")

    def run(self, args: argparse.Namespace) -> CommandResult:
        context = self.context(args)
        f = parse_point(context.data, args.first)
        g = parse_point(context.data, args.second)
        verdict = ab_compare(context, f, g)
        if args.check_hull:
            oracle = hull_compare(context.data, f, g)
            if oracle is not verdict:
                raise ConsistencyError(f"hull oracle says {oracle.value}, dominance says {verdict.value}")
        if not args.json:
            return CommandResult(verdict.value)

        df, word_f = dominant_representative(context.data, f)
        dg, word_g = dominant_representative(context.data, g)
        obj = {
            "order": verdict.value,
            "first": {"dominant": point_to_json(df), "word": [v + 1 for v in word_f]},
            "second": {"dominant": point_to_json(dg), "word": [v + 1 for v in word_g]},
        }
        return CommandResult(pack(obj))


class OrderLogger(CommandLogger):
    """order は実行ログのみ"""
