"""
abstrata 用基底ログクラスモジュール

CLI の各コマンド実行を CSV に記録する基底クラスを定義します。
実行ログ（所要時間・終了状態）とカスタムログ（コマンド固有データ）を
別々の CSV ファイルに出力します。

ABSTRATA_LOG_DIR が未設定の場合はファイルを作らず、記録は何もしません。
"""

import csv
from abc import ABC, abstractmethod
from typing import IO, Any

from common.logging_utils import get_log_directory


class BaseLogger(ABC):
    """コマンド実行ログの基底クラス

    ログファイル構成:
    - {filename}_run.csv: 実行メトリクス
    - {filename}_custom.csv: コマンド固有データ
    """

    def __init__(self, log_filename: str, custom_headers: list[str] | None = None):
        """
        ログファイルを初期化し、ヘッダーを書き込む

        Args:
            log_filename: ログファイル名（拡張子なし）
                         例: "plan" → "plan_run.csv", "plan_custom.csv"
            custom_headers: カスタムログのヘッダーリスト
                          例: ["index", "move", "before", "after"]
        """
        log_dir = get_log_directory()
        self.run_log_file: IO[str] | None = None
        self.run_log: Any = None
        self.custom_log_file: IO[str] | None = None
        self.custom_log: Any = None
        if log_dir is None:
            return

        self.run_log_file = (log_dir / f"{log_filename}_run.csv").open("w", newline="")
        self.run_log = csv.writer(self.run_log_file)
        self.run_log.writerow([
            "command",      # サブコマンド名
            "group",        # 群指定
            "t_start_ns",   # 開始時刻（ns）
            "t_end_ns",     # 終了時刻（ns）
            "elapsed_us",   # 所要時間（μs）
            "status",       # 終了コード
            "note",         # エラーメッセージ等
        ])

        if custom_headers:
            self.custom_log_file = (log_dir / f"{log_filename}_custom.csv").open("w", newline="")
            self.custom_log = csv.writer(self.custom_log_file)
            self.custom_log.writerow(custom_headers)

    def log_run(self, command: str, group: str, t_start: int, t_end: int, status: int, note: str) -> None:
        """
        実行ログを 1 行記録

        Note:
            所要時間は自動計算され、μs 単位で記録されます
        """
        if self.run_log is None or self.run_log_file is None:
            return
        elapsed_us = (t_end - t_start) / 1000.0
        self.run_log.writerow([command, group, t_start, t_end, f"{elapsed_us:.1f}", status, note])
        self.run_log_file.flush()

    def log_custom(self, data: list[Any]) -> None:
        """カスタムログを 1 行記録（未設定なら何もしない）"""
        if self.custom_log is not None and self.custom_log_file is not None:
            self.custom_log.writerow(data)
            self.custom_log_file.flush()

    @abstractmethod
    def log_result(self, result: Any) -> None:
        """コマンド結果のカスタムログを記録（サブクラスで実装必須）"""

    def close(self) -> None:
        if self.run_log_file:
            self.run_log_file.close()
        if self.custom_log_file:
            self.custom_log_file.close()
