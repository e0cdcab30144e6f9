"""
abstrata コマンドラインアプリケーション

終了コード:
    0: 成功
    1: 予期しないエラー
    2: 入力の解析エラー
    3: 事前条件違反
    4: カタログと探索の不一致、またはカタログ外
    5: 内部整合性チェックの失敗
"""

import argparse
import sys

from common.logging_utils import debug, log, now_ns

from .command_factory import COMMANDS, CommandFactory
from .errors import ConsistencyError, NotCatalogedError, ParseError, PreconditionError

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_CATALOG = 4
EXIT_CONSISTENCY = 5


class _Parser(argparse.ArgumentParser):
    """引数エラーを ParseError として送出する ArgumentParser"""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="abstrata", description="Atiyah-Bott stratification combinatorics")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for command in COMMANDS:
        processor_class = CommandFactory.processor_class(command)
        sub = subparsers.add_parser(command, help=processor_class.help)
        processor_class.configure(sub)
    return parser


def main(argv: list[str] | None = None) -> int:
    """abstrata メイン"""
    t_start = now_ns()
    command = "?"
    group = ""
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        group = getattr(args, "group", None) or ""
        processor, logger = CommandFactory.create(command)
    except ParseError as e:
        log(f"error: {e}")
        return EXIT_PARSE

    debug(f"running {command} {group}")
    status = EXIT_UNEXPECTED
    note = ""
    try:
        result = processor.run(args)
        print(result.output)
        logger.log_result(result)
        status = result.status
    except ParseError as e:
        note, status = str(e), EXIT_PARSE
    except PreconditionError as e:
        note, status = str(e), EXIT_PRECONDITION
    except NotCatalogedError as e:
        note, status = str(e), EXIT_CATALOG
    except ConsistencyError as e:
        note, status = str(e), EXIT_CONSISTENCY
    except Exception as e:  # noqa: BLE001
        note, status = f"{type(e).__name__}: {e}", EXIT_UNEXPECTED
    finally:
        logger.log_run(command, group, t_start, now_ns(), status, note)
        logger.close()

    if note:
        log(f"error: {note}")
    debug(f"{command} finished with status {status}")
    return status


if __name__ == "__main__":
    sys.exit(main())
