"""
Dynkin 図形上の調和関数計算モジュール

単純余ルート上の有理数値関数 f を、余ルートの実スパン上の点
x = Σ f(α∨) α∨ と同一視して扱います（f(α∨) = ϖ_α(x)）。

主な機能:
- 各頂点での根値 α(x) による優調和 / 調和 / 劣調和の判定
- 部分集合 A の外で調和となる一意な拡張
- 比較原理の検証
- 区分線形プロファイル（鎖・三叉・多重結合）による優調和性の特徴付け
"""

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .errors import ConsistencyError, PreconditionError
from .linalg import Matrix, inverse, matvec, submatrix, to_matrix
from .rootsystem import RootSystemData


@dataclass(frozen=True)
class CorootFunction:
    """
    単純余ルート上の有理数値関数

    Attributes:
        values: 頂点順の値 f(α∨) = ϖ_α(x)
    """

    values: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[int | str | Fraction]) -> "CorootFunction":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def zero(cls, rank: int) -> "CorootFunction":
        return cls((Fraction(0),) * rank)

    def __getitem__(self, vertex: int) -> Fraction:
        return self.values[vertex]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def replace(self, vertex: int, value: Fraction) -> "CorootFunction":
        values = list(self.values)
        values[vertex] = Fraction(value)
        return CorootFunction(tuple(values))


def root_value(data: RootSystemData, f: CorootFunction, vertex: int) -> Fraction:
    """
    頂点 α での根値 α(x) = Σ_β n(α, β) f(β∨)

    正なら優調和、0 なら調和、負なら劣調和。
    """
    row = data.cartan[vertex]
    return sum((row[b] * f[b] for b in data.vertices if row[b]), Fraction(0))


def root_values(data: RootSystemData, f: CorootFunction) -> tuple[Fraction, ...]:
    return tuple(root_value(data, f, a) for a in data.vertices)


@dataclass(frozen=True)
class SuperharmonicVerdict:
    """
    優調和性の判定結果

    Attributes:
        superharmonic: 全頂点で根値 ≥ 0 か
        root_values: 各頂点の根値
        cone_coordinates: 優調和なとき x = Σ c_α ϖ_α∨ となる c_α (= α(x) ≥ 0)
        failing_vertex: 優調和でないとき最初に根値が負となる頂点
    """

    superharmonic: bool
    root_values: tuple[Fraction, ...]
    cone_coordinates: tuple[Fraction, ...] | None = None
    failing_vertex: int | None = None

    def __bool__(self) -> bool:
        return self.superharmonic


def is_superharmonic(data: RootSystemData, f: CorootFunction) -> SuperharmonicVerdict:
    """
    f が優調和（x が正 Weyl 領域 C̄₀ に属する）かを判定

    Raises:
        ConsistencyError: 優調和なのに負の値を持つ場合（Cartan 逆行列の正値性に反する）
    """
    values = root_values(data, f)
    failing = next((a for a, v in enumerate(values) if v < 0), None)
    if failing is not None:
        return SuperharmonicVerdict(False, values, failing_vertex=failing)
    if any(v < 0 for v in f):
        raise ConsistencyError(f"superharmonic function with a negative value: {f}")
    return SuperharmonicVerdict(True, values, cone_coordinates=values)


@lru_cache(maxsize=None)
def extension_map(data: RootSystemData, support: tuple[int, ...]) -> Matrix:
    """
    A の外側の値を A 上の値から与える線形写像 M（f_U = M f_A）

    C[U][U] f_U + C[U][A] f_A = 0 より M = -C[U][U]⁻¹ C[U][A]
    有限型 Cartan 行列の逆は非負、C[U][A] は非正なので M の成分は非負です。
    """
    outside = [v for v in data.vertices if v not in support]
    if not outside:
        return ()
    cartan = to_matrix(data.cartan)
    inv_uu = inverse(submatrix(cartan, outside, outside))
    c_ua = submatrix(cartan, outside, support)
    return tuple(
        tuple(
            -sum((inv_uu[i][k] * c_ua[k][j] for k in range(len(outside))), Fraction(0))
            for j in range(len(support))
        )
        for i in range(len(outside))
    )


def extend_harmonic(
    data: RootSystemData, support: Iterable[int], boundary: Mapping[int, Fraction]
) -> CorootFunction:
    """
    A 上の値を保ち A の外で調和となる一意な拡張

    Args:
        data: ルート系
        support: 頂点集合 A（空集合なら零関数）
        boundary: A 上の値 {頂点: 値}

    Returns:
        拡張された CorootFunction

    Raises:
        PreconditionError: boundary のキーが A と一致しない場合
    """
    key = tuple(sorted(set(support)))
    if set(boundary) != set(key):
        raise PreconditionError(f"boundary keys {sorted(boundary)} do not match support {list(key)}")
    if not key:
        return CorootFunction.zero(data.rank)

    f_a = [Fraction(boundary[v]) for v in key]
    f_u = matvec(extension_map(data, key), f_a) if len(key) < data.rank else ()
    values: list[Fraction] = [Fraction(0)] * data.rank
    for v, x in zip(key, f_a, strict=True):
        values[v] = x
    outside = [v for v in data.vertices if v not in key]
    for v, x in zip(outside, f_u, strict=True):
        values[v] = x
    return CorootFunction(tuple(values))


def restrict(f: CorootFunction, support: Iterable[int]) -> dict[int, Fraction]:
    return {v: f[v] for v in support}


class PointwiseOrder(Enum):
    EQUAL = "="
    GE = ">="
    LE = "<="
    INCOMPARABLE = "incomparable"


def compare_pointwise(f: Sequence[Fraction], g: Sequence[Fraction]) -> PointwiseOrder:
    """
    座標ごとの比較

    Raises:
        PreconditionError: ランクが異なる場合
    """
    if len(f) != len(g):
        raise PreconditionError(f"rank mismatch: {len(f)} vs {len(g)}")
    ge = all(a >= b for a, b in zip(f, g, strict=True))
    le = all(a <= b for a, b in zip(f, g, strict=True))
    if ge and le:
        return PointwiseOrder.EQUAL
    if ge:
        return PointwiseOrder.GE
    if le:
        return PointwiseOrder.LE
    return PointwiseOrder.INCOMPARABLE


def dominates(f: Sequence[Fraction], g: Sequence[Fraction]) -> bool:
    return compare_pointwise(f, g) in (PointwiseOrder.EQUAL, PointwiseOrder.GE)


def comparison_principle_check(
    data: RootSystemData, support: Iterable[int], f: CorootFunction, g: CorootFunction
) -> bool:
    """
    比較原理: g が A の外で優調和、f が A の外で調和なら、A 上で g ≥ f のとき全体で g ≥ f

    Args:
        support: 頂点集合 A
        f: A の外で調和な関数
        g: A の外で優調和な関数

    Returns:
        A 上で g ≥ f か

    Raises:
        PreconditionError: f, g が前提を満たさない場合
        ConsistencyError: A 上では g ≥ f なのに全体では成り立たない場合
    """
    on = set(support)
    for v in data.vertices:
        if v in on:
            continue
        if root_value(data, f, v) != 0:
            raise PreconditionError(f"f is not harmonic at a{v + 1} outside the support")
        if root_value(data, g, v) < 0:
            raise PreconditionError(f"g is not superharmonic at a{v + 1} outside the support")

    holds_on_support = all(g[v] >= f[v] for v in on)
    if holds_on_support and not dominates(g.values, f.values):
        raise ConsistencyError(f"comparison principle violated: g={g} f={f} on {sorted(on)}")
    return holds_on_support


# ---------------------------------------------------------------------------
# 区分線形プロファイル
# ---------------------------------------------------------------------------


class ProfileShape(Enum):
    CHAIN = "chain"
    TRIPOD = "tripod"
    MULTIBOND = "multibond"


@dataclass(frozen=True)
class ProfileSegment:
    """
    プロファイルの 1 本の折れ線

    Attributes:
        nodes: 頂点番号の列（None は値 0 の境界点）
        values: 拡張値 f̂（境界点では 0）
    """

    nodes: tuple[int | None, ...]
    values: tuple[Fraction, ...]

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        return tuple(b - a for a, b in zip(self.values, self.values[1:], strict=False))


@dataclass(frozen=True)
class PiecewiseProfile:
    """
    f の区分線形な拡張 f̂

    Attributes:
        shape: 鎖 / 三叉 / 多重結合
        segments: 折れ線の列（鎖・多重結合は 1 本、三叉は腕ごとに 3 本）
        junction: 三価頂点または多重結合の長ルート側頂点 a
        junction_slopes: 三叉では s_i = f̂(a) - f̂(a の i 番目の隣)、
            多重結合では (s1, s2) = (f̂(a) - f̂(長側の隣), f̂(a) - f̂(短側の隣))
        multiplicity: 多重結合の多重度 m（それ以外は 1）
    """

    shape: ProfileShape
    segments: tuple[ProfileSegment, ...]
    junction: int | None = None
    junction_value: Fraction = Fraction(0)
    junction_slopes: tuple[Fraction, ...] = field(default_factory=tuple)
    multiplicity: int = 1


def _chain_order(data: RootSystemData) -> list[int]:
    """鎖型図形の頂点を端から順に並べる（多重結合型は a の短側の隣が a の直後に来る向き）"""
    ends = [v for v in data.vertices if data.degree(v) <= 1]
    start = min(ends)
    order = [start]
    while len(order) < data.rank:
        nxt = next(b for b in data.adjacency[order[-1]] if b not in order)
        order.append(nxt)
    multibond = next(((i, j) for (i, j), m in data.bonds if m > 1), None)
    if multibond is not None:
        a = _multibond_long_end(data)
        if order.index(a) > order.index(next(b for b in multibond if b != a)):
            order.reverse()
    return order


def _multibond_long_end(data: RootSystemData) -> int:
    (i, j), _ = next(item for item in data.bonds if item[1] > 1)
    return i if data.lengths[i] > data.lengths[j] else j


def trivalent_vertex(data: RootSystemData) -> int | None:
    return next((v for v in data.vertices if data.degree(v) == 3), None)


def _arm(data: RootSystemData, center: int, first: int) -> list[int]:
    """center から first 方向に伸びる腕の頂点列（center 側から）"""
    arm = [first]
    prev = center
    while True:
        nxt = [b for b in data.adjacency[arm[-1]] if b != prev]
        if not nxt:
            return arm
        prev = arm[-1]
        arm.append(nxt[0])


def arms(data: RootSystemData, center: int) -> list[list[int]]:
    """三価頂点から伸びる 3 本の腕（短い順、同長なら番号順）"""
    found = [_arm(data, center, b) for b in sorted(data.adjacency[center])]
    return sorted(found, key=lambda arm: (len(arm), arm))


def profile(data: RootSystemData, f: CorootFunction) -> PiecewiseProfile:
    """
    f の区分線形プロファイルを構成

    Args:
        data: 単純型のルート系
        f: 関数

    Returns:
        鎖（A 型）、三叉（D, E 型）、多重結合（B, C, F, G 型）のいずれかの PiecewiseProfile
    """
    zero = Fraction(0)
    center = trivalent_vertex(data)
    if center is not None:
        segments = []
        slopes = []
        for arm in arms(data, center):
            outward = list(reversed(arm))
            nodes: tuple[int | None, ...] = (None, *outward, center)
            segments.append(ProfileSegment(nodes, (zero, *(f[v] for v in outward), f[center])))
            slopes.append(f[center] - f[arm[0]])
        return PiecewiseProfile(
            ProfileShape.TRIPOD, tuple(segments), center, f[center], tuple(slopes)
        )

    order = _chain_order(data)
    segment = ProfileSegment((None, *order, None), (zero, *(f[v] for v in order), zero))
    if data.is_simply_laced:
        return PiecewiseProfile(ProfileShape.CHAIN, (segment,))

    a = _multibond_long_end(data)
    k = order.index(a) + 1
    s1 = segment.values[k] - segment.values[k - 1]
    s2 = segment.values[k] - segment.values[k + 1]
    m = max(mult for _, mult in data.bonds)
    return PiecewiseProfile(ProfileShape.MULTIBOND, (segment,), a, f[a], (s1, s2), m)


def _midpoint_ok(segment: ProfileSegment, k: int) -> bool:
    v = segment.values
    return 2 * v[k] >= v[k - 1] + v[k + 1]


def profile_superharmonic(prof: PiecewiseProfile) -> bool:
    """
    プロファイルによる優調和性の判定

    - 鎖: f̂ がすべての内点で中点不等式 f̂(k) ≥ (f̂(k-1) + f̂(k+1))/2 を満たす
    - 三叉: 各腕の内点で中点不等式、かつ Σ s_i ≥ f̂(a)
    - 多重結合: a 以外の内点で中点不等式、かつ (m-1) f̂(a) ≤ s1 + m·s2
    """
    for segment in prof.segments:
        for k in range(1, len(segment.nodes) - 1):
            if segment.nodes[k] == prof.junction:
                continue
            if not _midpoint_ok(segment, k):
                return False

    if prof.shape is ProfileShape.TRIPOD:
        return sum(prof.junction_slopes, Fraction(0)) >= prof.junction_value
    if prof.shape is ProfileShape.MULTIBOND:
        s1, s2 = prof.junction_slopes
        m = prof.multiplicity
        return (m - 1) * prof.junction_value <= s1 + m * s2
    return True


def profile_is_linear_at(prof: PiecewiseProfile, vertex: int) -> bool:
    """
    f̂ が頂点 vertex で線形（左右の傾きが等しい）か

    Raises:
        PreconditionError: vertex が三叉・多重結合の接合点、またはプロファイルにない場合
    """
    if vertex == prof.junction:
        raise PreconditionError(f"a{vertex + 1} is the junction of the profile")
    for segment in prof.segments:
        if vertex in segment.nodes:
            k = segment.nodes.index(vertex)
            v = segment.values
            return v[k] - v[k - 1] == v[k + 1] - v[k]
    raise PreconditionError(f"a{vertex + 1} is not on the profile")
