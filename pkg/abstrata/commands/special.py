import argparse

from common.protocol import pack

from abstrata.core.command_base import CommandLogger, CommandProcessor, CommandResult
from abstrata.core.rootsystem import vertex_name
from abstrata.core.strata import special_roots


class SpecialProcessor(CommandProcessor):
    help = "special roots and the conditions the other roots fail"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        cls.add_group_argument(parser)

    def run(self, args: argparse.Namespace) -> CommandResult:
        data = self.context(args).data
        report = special_roots(data)
        obj = {
            "group": str(data.spec),
            "special": [vertex_name(v) for v in sorted(report.special)],
            "failures": {
                vertex_name(v): [c.value for c in failed] for v, failed in sorted(report.failures.items())
            },
        }
        return CommandResult(pack(obj))


class SpecialLogger(CommandLogger):
    """special は実行ログのみ"""
