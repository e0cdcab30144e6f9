import os
import pathlib
import sys
import time
from datetime import datetime

# 高精度タイムスタンプ取得関数（単調時刻をナノ秒で取得）
now_ns = time.monotonic_ns


def get_log_directory() -> pathlib.Path | None:
    """実行時の日時でログディレクトリを取得（ABSTRATA_LOG_DIR 未設定なら None）"""
    base = os.environ.get("ABSTRATA_LOG_DIR")
    if not base:
        return None

    # 環境変数から共有タイムスタンプを取得（未設定なら現在時刻）
    timestamp_str = os.environ.get("LOG_TIMESTAMP")
    if not timestamp_str or timestamp_str.startswith("$("):
        timestamp_str = datetime.now().strftime("%Y%m%d_%H%M%S")

    log_dir = pathlib.Path(base) / timestamp_str
    log_dir.mkdir(parents=True, exist_ok=True)
    return log_dir


def is_verbose() -> bool:
    return os.environ.get("ABSTRATA_VERBOSE", "0") == "1"


def log(message: str) -> None:
    """[abstrata] 接頭辞付きで stderr に出力"""
    print(f"[abstrata] {message}", file=sys.stderr, flush=True)


def debug(message: str) -> None:
    if is_verbose():
        log(message)
