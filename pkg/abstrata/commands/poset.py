import argparse

from common.protocol import pack, pair_to_json

from abstrata.core.command_base import CommandLogger, CommandProcessor, CommandResult
from abstrata.core.rootsystem import vertex_name
from abstrata.core.strata import mu_poset, poset_to_dot


class PosetProcessor(CommandProcessor):
    """μ_{c,α} の Hasse 図（JSON または DOT）"""

    help = "order among the single-vertex points mu_{c,alpha}"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        cls.add_group_argument(parser)
        parser.add_argument("--format", choices=("json", "dot"), default="json")

    def run(self, args: argparse.Namespace) -> CommandResult:
        poset = mu_poset(self.context(args))
        if args.format == "dot":
            return CommandResult(poset_to_dot(poset))
        obj = {
            "group": str(poset.context),
            "nodes": {vertex_name(v): pair_to_json(p) for v, p in enumerate(poset.nodes)},
            "relations": [[vertex_name(u), vertex_name(v)] for u, v in sorted(poset.relations)],
            "hasse": [[vertex_name(u), vertex_name(v)] for u, v in sorted(poset.hasse)],
            "minimal": [vertex_name(v) for v in poset.minimal],
        }
        return CommandResult(pack(obj))


class PosetLogger(CommandLogger):
    """poset は実行ログのみ"""
