"""
abstrata 用 JSON 入出力プロトコルモジュール

CLI とライブラリの境界で使う JSON 形式を実装します。
有理数は精度を失わないよう常に文字列 "p/q"（整数は "p"）で表します。

点:  {"coords": ["p/q", ...], "basis": "fundamental-coweight"}
対:  点に "support": ["a1", ...] を加えたもの
"""

import json
from collections.abc import Iterable
from fractions import Fraction
from typing import Any

from abstrata.core.abpoints import ABPair, GroupContext
from abstrata.core.errors import ParseError
from abstrata.core.harmonic import CorootFunction, PiecewiseProfile, profile_superharmonic
from abstrata.core.rootsystem import RootSystemData, epsilon_to_coroot, vertex_name

BASIS = "fundamental-coweight"
EPSILON_BASIS = "epsilon"


def pack(obj: Any) -> str:
    """
    オブジェクトをコンパクトな JSON 文字列にパック

    Args:
        obj: JSON 化可能なオブジェクト

    Returns:
        区切り (",", ":")、非 ASCII をそのまま出力した JSON
    """
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def unpack(text: str) -> Any:
    """
    JSON 文字列をデコード

    Raises:
        ParseError: JSON として不正な場合
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from e


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str | int) -> Fraction:
    """
    "p/q" または "p" を有理数に変換

    Raises:
        ParseError: 形式不正、または q = 0 の場合
    """
    if isinstance(text, bool) or not isinstance(text, str | int):
        raise ParseError(f"rationals must be strings or integers, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    num, sep, den = text.strip().partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError as e:
        raise ParseError(f"malformed rational: {text!r}") from e
    if q == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def parse_vertex(data: RootSystemData, name: str) -> int:
    """
    頂点名 "a1".."an" を 0 始まりの番号に変換

    Raises:
        ParseError: 未知の頂点名
    """
    if not isinstance(name, str) or not name.startswith("a") or not name[1:].isdigit():
        raise ParseError(f"unknown vertex name: {name!r}")
    index = int(name[1:]) - 1
    if index not in data.vertices:
        raise ParseError(f"vertex {name} is not in {data.spec}")
    return index


def point_to_json(f: CorootFunction) -> dict[str, Any]:
    return {"coords": [format_rational(x) for x in f], "basis": BASIS}


def pair_to_json(pair: ABPair) -> dict[str, Any]:
    obj = point_to_json(pair.f)
    obj["support"] = pair.support_names
    return obj


def parse_point(data: RootSystemData, obj: Any) -> CorootFunction:
    """
    点の JSON（座標のリスト、または {"coords": ..., "basis": ...}）を解析

    basis が "epsilon" の場合は古典型の ε 座標として ϖ 座標に変換します。

    Raises:
        ParseError: 形式不正、長さ不一致、未知の基底
    """
    if isinstance(obj, str):
        obj = unpack(obj)
    basis = BASIS
    if isinstance(obj, dict):
        basis = obj.get("basis", BASIS)
        obj = obj.get("coords")
    if not isinstance(obj, list):
        raise ParseError("a point must be a list of rationals or an object with 'coords'")
    coords = [parse_rational(x) for x in obj]
    if basis == EPSILON_BASIS:
        return CorootFunction(epsilon_to_coroot(data, coords))
    if basis != BASIS:
        raise ParseError(f"unknown basis: {basis!r}")
    if len(coords) != data.rank:
        raise ParseError(f"expected {data.rank} coordinates, got {len(coords)}")
    return CorootFunction(tuple(coords))


def parse_pair(context: GroupContext, obj: Any) -> ABPair:
    """
    対の JSON を解析し、Atiyah-Bott 対として検証

    Raises:
        ParseError: 形式不正
        PreconditionError: Atiyah-Bott 対でない場合
    """
    if isinstance(obj, str):
        obj = unpack(obj)
    if not isinstance(obj, dict) or "support" not in obj:
        raise ParseError("a pair must be an object with 'coords' and 'support'")
    f = parse_point(context.data, obj)
    support = [parse_vertex(context.data, name) for name in obj["support"]]
    return ABPair.build(context, f, support)


def points_to_json(points: Iterable[CorootFunction]) -> list[dict[str, Any]]:
    return [point_to_json(f) for f in points]


def profile_to_json(prof: PiecewiseProfile) -> dict[str, Any]:
    """プロファイルを折れ線データ {shape, nodes, values, slopes, verdict} に変換"""
    obj: dict[str, Any] = {
        "shape": prof.shape.value,
        "nodes": [[vertex_name(v) if v is not None else "0" for v in s.nodes] for s in prof.segments],
        "values": [[format_rational(x) for x in s.values] for s in prof.segments],
        "slopes": [[format_rational(x) for x in s.slopes] for s in prof.segments],
        "verdict": "superharmonic" if profile_superharmonic(prof) else "not-superharmonic",
    }
    if prof.junction is not None:
        obj["junction"] = vertex_name(prof.junction)
        obj["junction_slopes"] = [format_rational(x) for x in prof.junction_slopes]
        obj["multiplicity"] = prof.multiplicity
    return obj
