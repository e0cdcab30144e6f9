import argparse

from common.protocol import format_rational, pack, parse_point, point_to_json

from abstrata.core.abpoints import enumerate_between, minimal_support, sort_points
from abstrata.core.command_base import CommandLogger, CommandProcessor, CommandResult
from abstrata.core.rootsystem import vertex_name


class BetweenProcessor(CommandProcessor):
    """上下限に挟まれた Atiyah-Bott 点をすべて列挙"""

    help = "enumerate Atiyah-Bott points between two pointwise-comparable points"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        cls.add_group_argument(parser)
        parser.add_argument("upper", help="upper point JSON")
        parser.add_argument("lower", help="lower point JSON")

    def run(self, args: argparse.Namespace) -> CommandResult:
        context = self.context(args)
        upper = parse_point(context.data, args.upper)
        lower = parse_point(context.data, args.lower)
        points = sort_points(enumerate_between(context, upper, lower))
        items = []
        rows = []
        for f in points:
            support = [vertex_name(v) for v in sorted(minimal_support(context, f))]
            items.append(point_to_json(f) | {"support": support})
            rows.append([" ".join(format_rational(x) for x in f), " ".join(support)])
        return CommandResult(pack({"group": str(context), "count": len(items), "points": items}), rows=rows)


class BetweenLogger(CommandLogger):
    custom_headers = ["coords", "minimal_support"]
