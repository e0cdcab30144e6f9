import argparse
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any

from .abpoints import GroupContext
from .base_logger import BaseLogger
from .rootsystem import parse_class


@dataclass
class CommandResult:
    """コマンドの出力（stdout へ書く文字列、終了コード、カスタムログ行）"""

    output: str
    status: int = 0
    rows: list[list[Any]] = field(default_factory=list)


class CommandProcessor(ABC):
    """サブコマンド処理の基底クラス"""

    help: str = ""

    @classmethod
    @abstractmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        """サブコマンドの引数を登録"""

    @abstractmethod
    def run(self, args: argparse.Namespace) -> CommandResult:
        """サブコマンドを実行"""

    @staticmethod
    def add_group_argument(parser: argparse.ArgumentParser) -> None:
        parser.add_argument("group", help='group spec, e.g. "A2", "D4/z1", "E6/ad"')
        parser.add_argument("--class", dest="central_class", default=None,
                            help='central class overriding the "/..." suffix, e.g. "z1^2"')

    @staticmethod
    def context(args: argparse.Namespace) -> GroupContext:
        """group と --class から GroupContext を生成"""
        context = GroupContext.parse(args.group)
        if args.central_class is None:
            return context
        c = parse_class(context.data, args.central_class)
        return GroupContext(data=context.data, c=c, name=f"{context.data.spec}/{args.central_class}")


class CommandLogger(BaseLogger):
    """コマンドログの基底クラス（実行ログ + カスタムログ）"""

    custom_headers: list[str] | None = None

    def __init__(self, name: str):
        super().__init__(name, self.custom_headers)

    def log_result(self, result: Any) -> None:
        """カスタムログ行を記録"""
        for row in getattr(result, "rows", []):
            self.log_custom(row)
