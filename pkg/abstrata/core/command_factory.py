"""
abstrata サブコマンド用ファクトリーモジュール

サブコマンド名に応じて Processor と Logger のペアを動的に生成します。
abstrata.commands.{module} を読み込み、命名規則
{Name}Processor / {Name}Logger に従ってクラスを取得します。
"""

import importlib
from typing import TYPE_CHECKING

# 型チェック時のみインポート（循環インポート回避）
if TYPE_CHECKING:
    from .command_base import CommandLogger, CommandProcessor

COMMANDS = (
    "info",
    "order",
    "plan",
    "between",
    "minimal",
    "special",
    "poset",
    "catalog-check",
    "profile",
)


def module_name(command: str) -> str:
    return command.replace("-", "_")


def class_prefix(command: str) -> str:
    """例: catalog-check → CatalogCheck"""
    return "".join(part.title() for part in module_name(command).split("_"))


class CommandFactory:
    """サブコマンド名から Processor/Logger を生成するファクトリー"""

    @staticmethod
    def processor_class(command: str) -> type["CommandProcessor"]:
        """
        サブコマンドの Processor クラスを取得

        Raises:
            ValueError: 未知のサブコマンドの場合
        """
        try:
            module = importlib.import_module(f"abstrata.commands.{module_name(command)}")
            cls: type[CommandProcessor] = getattr(module, f"{class_prefix(command)}Processor")
            return cls
        except (ImportError, AttributeError) as e:
            raise ValueError(f"Unknown command: {command}. Error: {e}") from e

    @staticmethod
    def create(command: str) -> tuple["CommandProcessor", "CommandLogger"]:
        """
        サブコマンドの (Processor, Logger) ペアを生成

        Args:
            command: サブコマンド名（"plan", "catalog-check" など）

        Returns:
            (CommandProcessor, CommandLogger) のタプル

        Raises:
            ValueError: 未知のサブコマンドの場合
        """
        processor_class = CommandFactory.processor_class(command)
        try:
            module = importlib.import_module(f"abstrata.commands.{module_name(command)}")
            logger_class = getattr(module, f"{class_prefix(command)}Logger")
        except (ImportError, AttributeError) as e:
            raise ValueError(f"Unknown command: {command}. Error: {e}") from e
        return processor_class(), logger_class(module_name(command))
