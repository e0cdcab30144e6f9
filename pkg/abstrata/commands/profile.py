import argparse

from common.protocol import format_rational, pack, parse_point, profile_to_json

from abstrata.core.command_base import CommandLogger, CommandProcessor, CommandResult
from abstrata.core.harmonic import is_superharmonic, profile
from abstrata.core.rootsystem import coroot_to_epsilon


class ProfileProcessor(CommandProcessor):
    """区分線形プロファイルの折れ線データ（古典型では ε 座標も出力）"""

    help = "piecewise-linear profile of a function on the simple coroots"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        cls.add_group_argument(parser)
        parser.add_argument("point", help="point JSON")

    def run(self, args: argparse.Namespace) -> CommandResult:
        context = self.context(args)
        data = context.data
        f = parse_point(data, args.point)
        obj = profile_to_json(profile(data, f))
        obj["group"] = str(context)
        obj["superharmonic"] = bool(is_superharmonic(data, f))
        if data.spec.family in "ABCD":
            obj["epsilon"] = [format_rational(x) for x in coroot_to_epsilon(data, f.values)]
        return CommandResult(pack(obj))


class ProfileLogger(CommandLogger):
    """profile は実行ログのみ"""
