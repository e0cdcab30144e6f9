"""
abstrata 共通例外モジュール

すべての例外は ValueError の派生として定義します。CLI 側
(cli_app.main) は例外の型ごとに終了コードを割り当てます。
"""


class AbstrataError(ValueError):
    """abstrata の基底例外"""


class ParseError(AbstrataError):
    """入力文字列・JSON の解析失敗（有理数 "p/0"、未知の頂点名など）"""


class InvalidSpecError(ParseError):
    """ルート系の (family, rank) が不正"""


class PreconditionError(AbstrataError):
    """演算の事前条件違反（比較不能な上下限、台の外の頂点など）"""


class NotCatalogedError(AbstrataError):
    """カタログに載っていない群・中心類"""


class ConsistencyError(AbstrataError):
    """内部整合性チェックの失敗（定理と計算結果の食い違い）"""
