"""
Atiyah-Bott 対の降下計画モジュール

(μ, I) から f_μ ≥ f_μ' を満たす (μ', I') まで、3 種類の手
(Type1: 台に頂点を追加 / Type2: 台を縮小 / Type3: 1 頂点の値を下げる)
の列を構成し、再生して検証します。あわせて、1 頂点の値をちょうど 1
下げる基本変形 (reduce_by_one) を提供します。
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .abpoints import (
    ABPair,
    GroupContext,
    enumerate_between,
    is_ab_pair,
    minimal_support,
)
from .errors import ConsistencyError, PreconditionError
from .harmonic import (
    CorootFunction,
    PointwiseOrder,
    compare_pointwise,
    dominates,
    extend_harmonic,
    restrict,
    root_value,
)
from .rootsystem import vertex_name


class MoveKind(Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"
    TYPE3 = "type3"


@dataclass(frozen=True)
class Move:
    """
    降下の 1 手

    Attributes:
        kind: 手の種類
        vertex: Type1 で追加する頂点 / Type3 で値を下げる頂点
        value: Type1 での追加頂点の値 / Type3 での新しい値
        support: Type2 での新しい台
    """

    kind: MoveKind
    vertex: int | None = None
    value: Fraction | None = None
    support: frozenset[int] | None = None

    @classmethod
    def type1(cls, vertex: int, value: Fraction) -> "Move":
        return cls(MoveKind.TYPE1, vertex=vertex, value=Fraction(value))

    @classmethod
    def type2(cls, support: frozenset[int]) -> "Move":
        return cls(MoveKind.TYPE2, support=frozenset(support))

    @classmethod
    def type3(cls, vertex: int, value: Fraction) -> "Move":
        return cls(MoveKind.TYPE3, vertex=vertex, value=Fraction(value))

    def __str__(self) -> str:
        if self.kind is MoveKind.TYPE2:
            names = ", ".join(vertex_name(v) for v in sorted(self.support or ()))
            return f"Type2({{{names}}})"
        label = "Type1" if self.kind is MoveKind.TYPE1 else "Type3"
        return f"{label}({vertex_name(self.vertex or 0)}: {self.value})"


@dataclass(frozen=True)
class MoveStep:
    """再生された 1 手（適用前後の対と、前に対する後の座標順序）"""

    move: Move
    before: ABPair
    after: ABPair
    order: PointwiseOrder


@dataclass(frozen=True)
class MovePlan:
    """start から end への手の列"""

    start: ABPair
    end: ABPair
    moves: tuple[Move, ...]

    @property
    def steps(self) -> list[MoveStep]:
        return replay(self)


def _result(pair: ABPair, support: frozenset[int], boundary: dict[int, Fraction]) -> ABPair:
    f = extend_harmonic(pair.context.data, support, boundary)
    verdict = is_ab_pair(pair.context, f, support)
    if not verdict:
        raise PreconditionError(f"move leaves the Atiyah-Bott locus: {verdict.describe()}")
    return ABPair(f, support, pair.context)


def apply_move(pair: ABPair, move: Move, certify: bool = False) -> ABPair:
    """
    対に 1 手を適用

    Args:
        pair: 適用前の対
        move: 手
        certify: True なら Type1 の隣接条件（間に他の Atiyah-Bott 点がない）も検証

    Returns:
        適用後の対

    Raises:
        PreconditionError: 構造違反、合同条件違反、Type1 の劣調和条件・隣接条件違反
    """
    data = pair.context.data
    if move.kind is MoveKind.TYPE1:
        a = move.vertex
        if a is None or move.value is None or a in pair.support or a not in data.vertices:
            raise PreconditionError(f"{move} must add a vertex outside the support")
        support = pair.support | {a}
        boundary = restrict(pair.f, pair.support) | {a: move.value}
        after = _result(pair, support, boundary)
        if root_value(data, after.f, a) > 0:
            raise PreconditionError(f"{move}: result is not subharmonic at {vertex_name(a)}")
        if certify:
            _certify_adjacent(pair, after)
        return after

    if move.kind is MoveKind.TYPE2:
        if move.support is None or not move.support <= pair.support:
            raise PreconditionError(f"{move} must shrink the support")
        return _result(pair, move.support, restrict(pair.f, move.support))

    a = move.vertex
    if a is None or move.value is None or a not in pair.support:
        raise PreconditionError(f"{move} must act on a vertex of the support")
    if move.value >= pair.f[a]:
        raise PreconditionError(f"{move} must lower the value at {vertex_name(a)}")
    boundary = restrict(pair.f, pair.support) | {a: move.value}
    return _result(pair, pair.support, boundary)


def _certify_adjacent(before: ABPair, after: ABPair) -> None:
    if not dominates(before.f.values, after.f.values):
        raise PreconditionError(f"Type1 move increases the point: {before.f} -> {after.f}")
    between = enumerate_between(before.context, before.f, after.f)
    extra = between - {before.f, after.f}
    if extra:
        raise PreconditionError(
            f"Type1 move {before.f} -> {after.f} skips Atiyah-Bott points {sorted(str(p) for p in extra)}"
        )


def reduce_by_one(pair: ABPair, vertex: int) -> ABPair:
    """
    頂点 α の値をちょうど 1 下げる基本変形

    I - {α} 上の値は保たれ、I の外では調和に拡張されます。

    Raises:
        PreconditionError: α が台に含まれない場合
    """
    if vertex not in pair.support:
        raise PreconditionError(f"{vertex_name(vertex)} is not in the support {pair.support_names}")
    boundary = restrict(pair.f, pair.support) | {vertex: pair.f[vertex] - 1}
    return _result(pair, pair.support, boundary)


def type3_as_reductions(pair: ABPair, move: Move) -> list[ABPair]:
    """
    Type3 の手を reduce_by_one の繰り返しに分解

    Returns:
        各 reduce_by_one 後の対の列（最後は apply_move の結果に一致）

    Raises:
        ConsistencyError: 値の下げ幅が正の整数でない場合
    """
    if move.kind is not MoveKind.TYPE3 or move.vertex is None or move.value is None:
        raise PreconditionError(f"{move} is not a Type3 move")
    drop = pair.f[move.vertex] - move.value
    if drop.denominator != 1 or drop <= 0:
        raise ConsistencyError(f"{move}: value drop {drop} is not a positive integer")
    chain = []
    current = pair
    for _ in range(int(drop)):
        current = reduce_by_one(current, move.vertex)
        chain.append(current)
    return chain


# ---------------------------------------------------------------------------
# 計画の構成
# ---------------------------------------------------------------------------


def _maximal_chain(
    points: frozenset[CorootFunction], top: CorootFunction, bottom: CorootFunction
) -> list[CorootFunction]:
    """
    top から bottom への極大鎖（各段で current より真に小さい点のうち辞書式最大）

    辞書式最大の点は真に小さい点の中で極大です。current は単調に下がるので、
    ある段で飛ばした点は以降の段でも current 以下にならず、降順の 1 回の走査で足ります。
    """
    chain = [top]
    current = top
    for p in sorted(points, key=lambda q: q.values, reverse=True):
        if current == bottom:
            break
        if p != current and dominates(current.values, p.values) and dominates(p.values, bottom.values):
            chain.append(p)
            current = p
    if current != bottom:
        raise ConsistencyError(f"no chain from {top} reaches {bottom}")
    return chain


def _adjacent_moves(start: ABPair, end: ABPair) -> list[Move]:
    """
    間に Atiyah-Bott 点を持たない 2 つの対の間の手

    1. I' ⊄ I の間、b ∈ I' - I を選び Type1 で台に加える
       （f_μ との延長が f_μ' を下回る頂点があれば、その頂点で選び直す）
    2. 値の異なる I' の頂点で Type3
    3. 台が異なれば Type2 で I' に縮小
    """
    data = start.context.data
    moves: list[Move] = []
    current = start

    while not end.support <= current.support:
        b = min(end.support - current.support)
        while True:
            boundary = restrict(current.f, current.support) | {b: end.f[b]}
            f0 = extend_harmonic(data, current.support | {b}, boundary)
            below = sorted(
                v for v in end.support - current.support - {b} if f0[v] < end.f[v]
            )
            if dominates(f0.values, end.f.values) or not below:
                break
            b = below[0]
        move = Move.type1(b, end.f[b])
        moves.append(move)
        current = apply_move(current, move)

    for v in sorted(end.support):
        if current.f[v] > end.f[v]:
            move = Move.type3(v, end.f[v])
            moves.append(move)
            current = apply_move(current, move)

    if current.support != end.support:
        moves.append(Move.type2(end.support))
    return moves


def plan_moves(start: ABPair, end: ABPair) -> MovePlan:
    """
    (μ, I) から (μ', I') への降下計画

    enumerate_between の点から極大鎖を作り、隣接する各段で Type1 → Type3 → Type2
    の順に手を構成します。

    Raises:
        PreconditionError: 文脈が異なる、対が不正、または f_start ≥ f_end でない場合
    """
    if start.context != end.context:
        raise PreconditionError(f"context mismatch: {start.context} vs {end.context}")
    for pair in (start, end):
        verdict = is_ab_pair(pair.context, pair.f, pair.support)
        if not verdict:
            raise PreconditionError(f"{pair} is not an Atiyah-Bott pair: {verdict.describe()}")
    if not dominates(start.f.values, end.f.values):
        raise PreconditionError(f"start {start.f} is not pointwise >= end {end.f}")

    context: GroupContext = start.context
    points = enumerate_between(context, start.f, end.f)
    chain = _maximal_chain(points, start.f, end.f)

    pairs = [start]
    for f in chain[1:-1]:
        pairs.append(ABPair(f, minimal_support(context, f), context))
    if len(chain) > 1:
        pairs.append(end)
    elif start.support != end.support:
        pairs.append(end)

    moves: list[Move] = []
    for before, after in zip(pairs, pairs[1:], strict=False):
        moves.extend(_adjacent_moves(before, after))
    return MovePlan(start, end, tuple(moves))


def replay(plan: MovePlan) -> list[MoveStep]:
    """計画を apply_move で再生し、各手の前後を返す"""
    steps = []
    current = plan.start
    for move in plan.moves:
        after = apply_move(current, move)
        steps.append(MoveStep(move, current, after, compare_pointwise(after.f.values, current.f.values)))
        current = after
    return steps


def validate_plan(plan: MovePlan) -> list[MoveStep]:
    """
    計画の全不変条件を検証

    - 再生結果が end に一致
    - 各中間対が Atiyah-Bott 対で、f が座標ごとに単調非増加
    - Type1 の隣接条件（enumerate_between が両端点のみを返す）
    - Type3 の下げ幅が正の整数で、reduce_by_one の合成に一致

    Raises:
        ConsistencyError: いずれかの条件が破れた場合
    """
    try:
        steps = replay(plan)
    except PreconditionError as e:
        raise ConsistencyError(f"plan does not replay: {e}") from e

    final = steps[-1].after if steps else plan.start
    if final.f != plan.end.f or final.support != plan.end.support:
        raise ConsistencyError(f"plan ends at {final}, expected {plan.end}")

    for step in steps:
        if step.order not in (PointwiseOrder.EQUAL, PointwiseOrder.LE):
            raise ConsistencyError(f"{step.move} increases the point: {step.before.f} -> {step.after.f}")
        if not is_ab_pair(step.after.context, step.after.f, step.after.support):
            raise ConsistencyError(f"{step.move} leaves the Atiyah-Bott locus")
        if step.move.kind is MoveKind.TYPE1:
            try:
                _certify_adjacent(step.before, step.after)
            except PreconditionError as e:
                raise ConsistencyError(str(e)) from e
        elif step.move.kind is MoveKind.TYPE3:
            reductions = type3_as_reductions(step.before, step.move)
            if reductions[-1] != step.after:
                raise ConsistencyError(f"{step.move} is not a composition of unit reductions")
    return steps
