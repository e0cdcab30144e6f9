"""
Atiyah-Bott 点・対のモジュール

位相的類 c に対する Atiyah-Bott 対 (μ, I) の判定、最小台、支配的代表元、
Atiyah-Bott 半順序、および 2 点に挟まれた Atiyah-Bott 点の列挙を提供します。

点はすべて ϖ 座標（CorootFunction）で保持します。
"""

import math
import os
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations

from .errors import ParseError, PreconditionError
from .harmonic import (
    CorootFunction,
    PointwiseOrder,
    compare_pointwise,
    dominates,
    extension_map,
    root_value,
)
from .linalg import matvec
from .rootsystem import (
    CentralElement,
    RootSystemData,
    is_central,
    parse_group_spec,
    vertex_name,
)


@dataclass(frozen=True)
class GroupContext:
    """
    群と位相的類の組

    Attributes:
        data: ルート系
        c: 中心類（単連結群・自明な類では剰余がすべて 0）
        central_label: 𝔷_G 成分を表すラベル（単純群では常に "0"）
        name: 表示名（"B3/z1" など）
    """

    data: RootSystemData
    c: CentralElement
    central_label: str = "0"
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if len(self.c.residues) != self.data.rank:
            raise ParseError(f"central class has rank {len(self.c.residues)}, expected {self.data.rank}")
        if not is_central(self.data, self.c):
            raise ParseError(f"class {self.c.label} is not in the center of {self.data.spec}")

    @classmethod
    def parse(cls, text: str) -> "GroupContext":
        """群指定文字列（"A2", "D4/z1", "E6/ad"）から生成"""
        data, c = parse_group_spec(text)
        return cls(data=data, c=c, name=text.strip())

    @classmethod
    def simply_connected(cls, data: RootSystemData) -> "GroupContext":
        return cls(data=data, c=CentralElement.trivial(data.rank), name=str(data.spec))

    def residue(self, vertex: int) -> Fraction:
        return self.c.residues[vertex]

    def __str__(self) -> str:
        return self.name or f"{self.data.spec}/{self.c.label}"


@dataclass(frozen=True)
class ABPair:
    """
    Atiyah-Bott 対 (μ, I)

    Attributes:
        f: 点 μ（ϖ 座標）
        support: 台 I
        context: 群と類
    """

    f: CorootFunction
    support: frozenset[int]
    context: GroupContext

    @classmethod
    def build(cls, context: GroupContext, f: CorootFunction, support: Iterable[int]) -> "ABPair":
        """
        検証付きで生成

        Raises:
            PreconditionError: (f, support) が Atiyah-Bott 対でない場合
        """
        pair = cls(f, frozenset(support), context)
        verdict = is_ab_pair(context, f, pair.support)
        if not verdict:
            raise PreconditionError(f"not an Atiyah-Bott pair: {verdict.describe()}")
        return pair

    @property
    def support_names(self) -> list[str]:
        return [vertex_name(v) for v in sorted(self.support)]

    def __str__(self) -> str:
        return f"({self.f}, {{{', '.join(self.support_names)}}})"


class ABCondition(Enum):
    HARMONIC = "harmonic outside the support"
    CONGRUENCE = "congruent to the central class on the support"
    LABEL = "central label"


@dataclass(frozen=True)
class ABVerdict:
    """is_ab_pair の判定結果（偽なら最初に破れた条件と頂点）"""

    ok: bool
    condition: ABCondition | None = None
    vertex: int | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        where = f" at {vertex_name(self.vertex)}" if self.vertex is not None else ""
        return f"fails '{self.condition.value if self.condition else '?'}'{where}"


def _congruent(value: Fraction, residue: Fraction) -> bool:
    return (value - residue).denominator == 1


def is_ab_pair(
    context: GroupContext, f: CorootFunction, support: Iterable[int], label: str = "0"
) -> ABVerdict:
    """
    (f, I) が類 c の Atiyah-Bott 対かを判定

    条件:
        (i) I の外の全頂点で調和（根値 0）
        (ii) I 上で f(α∨) ≡ ϖ_α(c) (mod 1)
        (iii) 中心ラベルの一致（単純群では自明）
    """
    on = frozenset(support)
    for v in context.data.vertices:
        if v in on:
            if not _congruent(f[v], context.residue(v)):
                return ABVerdict(False, ABCondition.CONGRUENCE, v)
        elif root_value(context.data, f, v) != 0:
            return ABVerdict(False, ABCondition.HARMONIC, v)
    if label != context.central_label:
        return ABVerdict(False, ABCondition.LABEL)
    return ABVerdict(True)


def minimal_support(context: GroupContext, f: CorootFunction) -> frozenset[int]:
    """
    (f, I) が Atiyah-Bott 対となる最小の I（根値が 0 でない頂点全体）

    Raises:
        PreconditionError: どの I に対しても Atiyah-Bott 対にならない場合
            （調和でなく、かつ合同条件も満たさない頂点を示す）
    """
    data = context.data
    support = frozenset(v for v in data.vertices if root_value(data, f, v) != 0)
    for v in sorted(support):
        if not _congruent(f[v], context.residue(v)):
            raise PreconditionError(
                f"{f} is not of Atiyah-Bott type for {context}: {vertex_name(v)} is neither "
                f"harmonic nor congruent to {context.residue(v)} mod 1"
            )
    return support


def semistable(context: GroupContext) -> ABPair:
    """半安定点（零点、空の台）"""
    return ABPair(CorootFunction.zero(context.data.rank), frozenset(), context)


def reflect(data: RootSystemData, f: CorootFunction, vertex: int) -> CorootFunction:
    """単純鏡映 s_α: α 成分のみ r_α → r_α - α(x) と変わる"""
    return f.replace(vertex, f[vertex] - root_value(data, f, vertex))


def dominant_representative(
    data: RootSystemData, f: CorootFunction
) -> tuple[CorootFunction, tuple[int, ...]]:
    """
    Weyl 軌道の支配的（優調和な）代表元

    根値が負となる最小番号の頂点で鏡映することを繰り返します。

    Returns:
        (代表元, 適用した鏡映の頂点列)
    """
    word: list[int] = []
    current = f
    while True:
        negative = next((a for a in data.vertices if root_value(data, current, a) < 0), None)
        if negative is None:
            return current, tuple(word)
        current = reflect(data, current, negative)
        word.append(negative)


class ABOrder(Enum):
    EQUAL = "="
    GREATER = ">"
    LESS = "<"
    INCOMPARABLE = "incomparable"


def ab_compare(context: GroupContext, f: CorootFunction, g: CorootFunction) -> ABOrder:
    """
    Atiyah-Bott 半順序での比較

    支配的代表元どうしの座標ごとの比較で判定します（同じ代表元なら等しい）。
    """
    if len(f) != context.data.rank or len(g) != context.data.rank:
        raise PreconditionError(f"points must have rank {context.data.rank}")
    df, _ = dominant_representative(context.data, f)
    dg, _ = dominant_representative(context.data, g)
    verdict = compare_pointwise(df.values, dg.values)
    return {
        PointwiseOrder.EQUAL: ABOrder.EQUAL,
        PointwiseOrder.GE: ABOrder.GREATER,
        PointwiseOrder.LE: ABOrder.LESS,
        PointwiseOrder.INCOMPARABLE: ABOrder.INCOMPARABLE,
    }[verdict]


def _candidate_limit() -> int:
    text = os.environ.get("ABSTRATA_MAX_CANDIDATES", "200000")
    try:
        limit = int(text)
    except ValueError as e:
        raise ParseError(f"ABSTRATA_MAX_CANDIDATES must be an integer, got {text!r}") from e
    if limit < 0:
        raise ParseError(f"ABSTRATA_MAX_CANDIDATES must be nonnegative, got {limit}")
    return limit


def _residue_values(residue: Fraction, low: Fraction, high: Fraction) -> list[Fraction]:
    """residue (mod 1) の類に属し [low, high] に入る値（昇順）"""
    first = math.ceil(low - residue)
    last = math.floor(high - residue)
    return [residue + k for k in range(first, last + 1)]


def _sandwiched_extensions(
    data: RootSystemData,
    support: tuple[int, ...],
    choices: list[list[Fraction]],
    upper: CorootFunction,
    lower: CorootFunction,
) -> Iterator[CorootFunction]:
    """
    台 support 上の値を choices から選んだ調和拡張のうち upper と lower に挟まれるもの

    拡張写像の成分は非負なので、台の外の値は台上の値について単調です。
    未決定の値を最小・最大にとった範囲が [lower, upper] から外れた時点で枝を刈ります。
    """
    outside = tuple(v for v in data.vertices if v not in support)
    m = extension_map(data, support) if outside else ()
    lows = [c[0] for c in choices]
    highs = [c[-1] for c in choices]

    def fits(prefix: tuple[Fraction, ...]) -> bool:
        k = len(prefix)
        f_min = matvec(m, prefix + tuple(lows[k:]))
        f_max = matvec(m, prefix + tuple(highs[k:]))
        return all(
            f_min[i] <= upper[u] and f_max[i] >= lower[u] for i, u in enumerate(outside)
        )

    def walk(prefix: tuple[Fraction, ...]) -> Iterator[CorootFunction]:
        if not fits(prefix):
            return
        if len(prefix) == len(support):
            values = [Fraction(0)] * data.rank
            for v, x in zip(support, prefix, strict=True):
                values[v] = x
            for v, x in zip(outside, matvec(m, prefix), strict=True):
                values[v] = x
            yield CorootFunction(tuple(values))
            return
        for x in choices[len(prefix)]:
            yield from walk(prefix + (x,))

    yield from walk(())


def enumerate_between(
    context: GroupContext, upper: CorootFunction, lower: CorootFunction
) -> frozenset[CorootFunction]:
    """
    upper ≥ f_ν ≥ lower（座標ごと）を満たす類 c の Atiyah-Bott 点 ν をすべて列挙

    各部分集合 I について、I 上の値を剰余類と区間の共通部分から選び、
    I の外へ調和拡張し、挟み込み条件を満たすものを残します。
    値の組は深さ優先で選び、挟み込みが不可能になった枝は展開しません。

    Raises:
        PreconditionError: upper ≥ lower でない場合、または候補数が
            ABSTRATA_MAX_CANDIDATES を超える場合
        ParseError: ABSTRATA_MAX_CANDIDATES が整数でない場合
    """
    data = context.data
    if not dominates(upper.values, lower.values):
        raise PreconditionError(f"upper {upper} is not pointwise >= lower {lower}")

    limit = _candidate_limit()
    ranges = [_residue_values(context.residue(v), lower[v], upper[v]) for v in data.vertices]
    found: set[CorootFunction] = set()
    generated = 0
    for size in range(data.rank + 1):
        for support in combinations(data.vertices, size):
            choices = [ranges[v] for v in support]
            if any(not c for c in choices):
                continue
            generated += math.prod(len(c) for c in choices)
            if generated > limit:
                raise PreconditionError(
                    f"more than {limit} candidates between {upper} and {lower}; "
                    "raise ABSTRATA_MAX_CANDIDATES to continue"
                )
            found.update(_sandwiched_extensions(data, support, choices, upper, lower))
    return frozenset(found)


def sort_points(points: Iterable[CorootFunction]) -> list[CorootFunction]:
    """決定的な出力順（辞書式降順）"""
    return sorted(points, key=lambda f: f.values, reverse=True)

