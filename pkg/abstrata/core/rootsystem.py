"""
単純ルート系の構成モジュール

このモジュールは A〜G 型すべての単純ルート系について、Cartan 行列、
その厳密な逆行列、正ルート、最高ルート係数、単連結群の中心
(余ウェイト格子 / 余ルート格子) を構成します。

頂点番号の規約（0 始まり、表示名は "a1".."an"）:
    - Bourbaki 式の鎖。B_n は α_n のみ短ルート、C_n は α_n のみ長ルート
    - D_n の「耳」は α_{n-1}, α_n、三価頂点は α_{n-2}
    - E_n は α1-α3-α4-...-α_n の鎖に α2 が α4 から枝分かれ（三価頂点 α4）
    - F_4 は α1, α2 が長ルート、α3, α4 が短ルート
    - G_2 は α1 が短ルート、α2 が長ルート

Cartan 行列の規約: C[α][β] = n(α, β) = α(β∨)（行は評価されるルート）
"""

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

import sympy
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from .errors import ConsistencyError, InvalidSpecError, ParseError
from .linalg import Matrix, Vector, inverse, to_matrix

# 有効な (family, rank) の範囲
_VALID_RANKS: dict[str, tuple[int, int | None]] = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True, order=True)
class RootSystemSpec:
    """ルート系の型 (family, rank)"""

    family: str
    rank: int

    def __post_init__(self) -> None:
        bounds = _VALID_RANKS.get(self.family)
        if bounds is None:
            raise InvalidSpecError(f"unknown family: {self.family!r}")
        low, high = bounds
        if self.rank < low or (high is not None and self.rank > high):
            raise InvalidSpecError(f"invalid rank for {self.family}: {self.rank}")

    @classmethod
    def parse(cls, text: str) -> "RootSystemSpec":
        """
        "A2", "e6", "D4" のような文字列を解析

        Raises:
            InvalidSpecError: 形式不正または (family, rank) が範囲外の場合
        """
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise InvalidSpecError(f"malformed root system spec: {text!r}")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def vertex_name(index: int) -> str:
    """0 始まりの頂点番号を表示名 "a1".."an" に変換"""
    return f"a{index + 1}"


def _edges(spec: RootSystemSpec) -> list[tuple[int, int]]:
    n = spec.rank
    if spec.family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if spec.family == "E":
        return [(0, 2)] + [(i, i + 1) for i in range(2, n - 1)] + [(1, 3)]
    return [(i, i + 1) for i in range(n - 1)]


def _cartan(spec: RootSystemSpec) -> list[list[int]]:
    n = spec.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(spec):
        c[i][j] = c[j][i] = -1

    # 多重結合: C[長][短] = -m, C[短][長] = -1
    if spec.family == "B":
        c[n - 2][n - 1] = -2
    elif spec.family == "C":
        c[n - 1][n - 2] = -2
    elif spec.family == "F":
        c[1][2] = -2
    elif spec.family == "G":
        c[1][0] = -3
    return c


def _squared_lengths(cartan: list[list[int]], adjacency: list[set[int]]) -> tuple[Fraction, ...]:
    """|β|²/|α|² = C[β][α]/C[α][β] を隣接関係に沿って伝播し、長ルートを 1 に正規化"""
    n = len(cartan)
    lengths: list[Fraction | None] = [None] * n
    lengths[0] = Fraction(1)
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b in adjacency[a]:
            if lengths[b] is None:
                lengths[b] = lengths[a] * Fraction(cartan[b][a], cartan[a][b])
                queue.append(b)
    top = max(x for x in lengths if x is not None)
    return tuple(x / top for x in lengths if x is not None)


@dataclass(frozen=True)
class RootSystemData:
    """
    単純ルート系のデータ一式

    等価性とハッシュは spec のみで判定します（他のフィールドは spec から一意に決まる）。

    Attributes:
        spec: ルート系の型
        cartan: Cartan 行列（整数）
        cartan_inverse: Cartan 行列の厳密な逆行列
        adjacency: 各頂点 α について n(α, β) < 0 となる β の集合
        bonds: 辺 (i, j) (i < j) と結合多重度 m = n(α,β)·n(β,α)
        lengths: 各単純ルートの長さの二乗（最長を 1 に正規化）
    """

    spec: RootSystemSpec
    cartan: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)
    cartan_inverse: Matrix = field(compare=False, repr=False)
    adjacency: tuple[frozenset[int], ...] = field(compare=False, repr=False)
    bonds: tuple[tuple[tuple[int, int], int], ...] = field(compare=False, repr=False)
    lengths: tuple[Fraction, ...] = field(compare=False, repr=False)

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def vertices(self) -> range:
        return range(self.spec.rank)

    @property
    def vertex_names(self) -> list[str]:
        return [vertex_name(i) for i in self.vertices]

    def is_long(self, vertex: int) -> bool:
        """長ルートかどうか（単純結合型ではすべての頂点が長ルート扱い）"""
        return self.lengths[vertex] == 1

    def bond(self, a: int, b: int) -> int:
        """辺 a-b の多重度（隣接していなければ 0）"""
        return self.cartan[a][b] * self.cartan[b][a]

    def degree(self, vertex: int) -> int:
        return len(self.adjacency[vertex])

    @property
    def is_simply_laced(self) -> bool:
        return all(m == 1 for _, m in self.bonds)


@lru_cache(maxsize=None)
def build_root_system(spec: RootSystemSpec) -> RootSystemData:
    """
    ルート系データを構成

    Args:
        spec: 検証済みの RootSystemSpec

    Returns:
        Cartan 行列・逆行列・隣接関係・結合多重度・長さを持つ RootSystemData
    """
    raw = _cartan(spec)
    n = spec.rank
    adjacency = [{j for j in range(n) if j != i and raw[i][j] < 0} for i in range(n)]
    bonds = tuple(
        ((i, j), raw[i][j] * raw[j][i]) for i in range(n) for j in range(i + 1, n) if raw[i][j] < 0
    )
    return RootSystemData(
        spec=spec,
        cartan=tuple(tuple(row) for row in raw),
        cartan_inverse=inverse(to_matrix(raw)),
        adjacency=tuple(frozenset(s) for s in adjacency),
        bonds=bonds,
        lengths=_squared_lengths(raw, adjacency),
    )


def cartan_inverse(data: RootSystemData) -> Matrix:
    """
    Cartan 行列の逆行列

    列 β は ϖ_β∨ の余ルート基底での座標、すなわち CorootFunction としての
    ϖ_β∨ を与えます。全成分は正。
    """
    return data.cartan_inverse


def fundamental_coweight(data: RootSystemData, vertex: int) -> Vector:
    return tuple(row[vertex] for row in data.cartan_inverse)


def cartan_determinant(data: RootSystemData) -> int:
    """sympy による Cartan 行列式（中心の位数の独立な検算用）"""
    return int(sympy.Matrix(data.cartan).det())


def center_invariant_factors(data: RootSystemData) -> list[int]:
    """Cartan 行列の Smith 標準形の 1 でない不変因子（中心の巡回分解）"""
    snf = smith_normal_form(sympy.Matrix(data.cartan), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(data.rank)]
    return [d for d in diag if d != 1]


# ---------------------------------------------------------------------------
# 正ルートと最高ルート
# ---------------------------------------------------------------------------


def coroot_pairing(data: RootSystemData, root: tuple[int, ...], vertex: int) -> int:
    """root(α_vertex∨) = Σ_γ k_γ C[γ][vertex]"""
    return sum(k * data.cartan[g][vertex] for g, k in enumerate(root))


@lru_cache(maxsize=None)
def positive_roots(data: RootSystemData) -> tuple[tuple[int, ...], ...]:
    """
    正ルートを単純ルート係数ベクトルとして高さ順に列挙

    α-列の性質を使います: β - pα が最後のルートとなる p に対して
    q = p - β(α∨) > 0 ならば β + α はルート。
    """
    n = data.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    known = set(simple)
    ordered = list(simple)
    layer = list(simple)
    while layer:
        next_layer: list[tuple[int, ...]] = []
        for beta in layer:
            for a in range(n):
                p = 0
                lowered = list(beta)
                while True:
                    lowered[a] -= 1
                    if tuple(lowered) in known:
                        p += 1
                    else:
                        break
                if p - coroot_pairing(data, beta, a) > 0:
                    raised = tuple(k + int(i == a) for i, k in enumerate(beta))
                    if raised not in known:
                        known.add(raised)
                        next_layer.append(raised)
        ordered.extend(sorted(next_layer))
        layer = next_layer
    return tuple(ordered)


@dataclass(frozen=True)
class HighestRootData:
    """
    最高ルートの係数

    Attributes:
        h: α̃ = Σ h_α α
        g: α̃∨ = Σ g_α α∨
    """

    h: tuple[int, ...]
    g: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.h)


@lru_cache(maxsize=None)
def highest_root(data: RootSystemData) -> HighestRootData:
    """
    最高ルート α̃ の係数 h と、その余ルート α̃∨ の係数 g

    g_α = h_α · |α|² / |α̃|²（α̃ は長ルートなので |α̃|² = 1）
    """
    h = max(positive_roots(data), key=sum)
    g = tuple(int(k * data.lengths[i]) for i, k in enumerate(h))
    return HighestRootData(h=h, g=g)


def highest_coroot_pairing(data: RootSystemData, vertex: int) -> int:
    """n(α, α̃) = α(α̃∨)"""
    g = highest_root(data).g
    return sum(g[b] * data.cartan[vertex][b] for b in data.vertices)


# ---------------------------------------------------------------------------
# 中心（余ウェイト格子 / 余ルート格子）
# ---------------------------------------------------------------------------


def _mod1(x: Fraction) -> Fraction:
    return x - math.floor(x)


def _order(residues: Vector) -> int:
    return math.lcm(*(r.denominator for r in residues)) if residues else 1


@dataclass(frozen=True)
class CentralElement:
    """
    単純連結群の中心の元 c

    Attributes:
        residues: (ϖ_α(c) mod 1)_α、各成分は [0, 1)
        order: d·residues が整数となる最小の d
        label: 表示用ラベル（"0", "z1", "z1^2", "z1+z2" など）
    """

    residues: Vector
    order: int
    label: str = field(default="0", compare=False)

    @classmethod
    def from_residues(cls, residues: Vector, label: str = "") -> "CentralElement":
        reduced = tuple(_mod1(Fraction(r)) for r in residues)
        return cls(residues=reduced, order=_order(reduced), label=label or "?")

    @classmethod
    def trivial(cls, rank: int) -> "CentralElement":
        return cls(residues=(Fraction(0),) * rank, order=1, label="0")

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def __add__(self, other: "CentralElement") -> "CentralElement":
        summed = tuple(a + b for a, b in zip(self.residues, other.residues, strict=True))
        return CentralElement.from_residues(summed, f"{self.label}+{other.label}")

    def __mul__(self, k: int) -> "CentralElement":
        return CentralElement.from_residues(tuple(k * r for r in self.residues), f"{self.label}^{k}")


def _closure(elements: list[Vector], rank: int) -> set[Vector]:
    zero = (Fraction(0),) * rank
    group = {zero}
    frontier = [zero]
    while frontier:
        x = frontier.pop()
        for e in elements:
            y = tuple(_mod1(a + b) for a, b in zip(x, e, strict=True))
            if y not in group:
                group.add(y)
                frontier.append(y)
    return group


@lru_cache(maxsize=None)
def center_elements(data: RootSystemData) -> frozenset[Vector]:
    """中心のすべての元（剰余ベクトル）。位数は |det C| に一致する"""
    columns = [tuple(_mod1(x) for x in fundamental_coweight(data, b)) for b in data.vertices]
    return frozenset(_closure(columns, data.rank))


@lru_cache(maxsize=None)
def center_generators(data: RootSystemData) -> tuple[CentralElement, ...]:
    """
    中心の生成元を貪欲に選ぶ

    まだ生成済み部分群に入っていない列（ϖ_β∨ mod 1）のうち位数最大のもの、
    同位数なら番号最小のものを採用します。ラベルは "z1", "z2", ...

    Note:
        D_{2n} では z1 = ベクトル類（列 α1）、z2 = 半スピン類（列 α_{2n-1}）

    Raises:
        ConsistencyError: 元の個数が |det C| と、生成元の位数が
            Smith 標準形の不変因子と一致しない場合
    """
    columns = [tuple(_mod1(x) for x in fundamental_coweight(data, b)) for b in data.vertices]
    target = center_elements(data)
    det = abs(cartan_determinant(data))
    if len(target) != det:
        raise ConsistencyError(f"{data.spec}: center has {len(target)} elements, |det C| = {det}")
    chosen: list[Vector] = []
    current = _closure(chosen, data.rank)
    while current != target:
        remaining = [(i, col) for i, col in enumerate(columns) if col not in current]
        _, col = min(remaining, key=lambda item: (-_order(item[1]), item[0]))
        chosen.append(col)
        current = _closure(chosen, data.rank)
    orders = sorted(_order(col) for col in chosen)
    factors = sorted(center_invariant_factors(data))
    if orders != factors:
        raise ConsistencyError(f"{data.spec}: generator orders {orders} differ from invariant factors {factors}")
    return tuple(
        CentralElement(residues=col, order=_order(col), label=f"z{k + 1}")
        for k, col in enumerate(chosen)
    )


def is_central(data: RootSystemData, element: CentralElement) -> bool:
    return element.residues in center_elements(data)


def _parse_class_term(term: str, generators: tuple[CentralElement, ...]) -> CentralElement:
    name, _, exponent = term.partition("^")
    if not name.startswith("z") or not name[1:].isdigit():
        raise ParseError(f"malformed central class term: {term!r}")
    index = int(name[1:]) - 1
    if not 0 <= index < len(generators):
        raise ParseError(f"no central generator {name} (center has {len(generators)})")
    if exponent and not exponent.lstrip("-").isdigit():
        raise ParseError(f"malformed exponent in {term!r}")
    power = int(exponent) if exponent else 1
    element = generators[index] * power if power != 1 else generators[index]
    return CentralElement(element.residues, element.order, term)


def parse_class(data: RootSystemData, text: str) -> CentralElement:
    """
    中心類の文字列を解析

    Args:
        data: ルート系
        text: "sc"（自明）, "ad"（巡回中心の生成元）, "z1", "z1^2", "z1+z2"

    Raises:
        ParseError: 未知の生成元、または D_{2n} での "ad"
    """
    text = text.strip()
    generators = center_generators(data)
    if text in ("", "sc", "0"):
        return CentralElement.trivial(data.rank)
    if text == "ad":
        if len(generators) > 1:
            raise ParseError(
                f"{data.spec} has a non-cyclic center; name the class with z1, z2 or z1+z2"
            )
        if not generators:
            return CentralElement.trivial(data.rank)
        return CentralElement(generators[0].residues, generators[0].order, "ad")

    total = CentralElement.trivial(data.rank)
    for term in text.split("+"):
        total = total + _parse_class_term(term.strip(), generators)
    return CentralElement(total.residues, total.order, text)


def parse_group_spec(text: str) -> tuple[RootSystemData, CentralElement]:
    """
    "A2", "D4/z1", "E6/ad", "A5/z1^2" 形式の群指定を解析

    Returns:
        (ルート系データ, 中心類 c)
    """
    base, _, quotient = text.strip().partition("/")
    data = build_root_system(RootSystemSpec.parse(base))
    return data, parse_class(data, quotient)


# ---------------------------------------------------------------------------
# ε 座標（古典型 A〜D）
# ---------------------------------------------------------------------------


def _simple_coroots_epsilon(data: RootSystemData) -> list[list[Fraction]]:
    family, n = data.spec.family, data.rank
    dim = n + 1 if family == "A" else n
    coroots: list[list[Fraction]] = []
    for i in range(n):
        v = [Fraction(0)] * dim
        if family == "A" or i < n - 1:
            v[i], v[i + 1] = Fraction(1), Fraction(-1)
        elif family == "B":
            v[n - 1] = Fraction(2)
        elif family == "C":
            v[n - 1] = Fraction(1)
        else:
            v[n - 2], v[n - 1] = Fraction(1), Fraction(1)
        coroots.append(v)
    return coroots


def _fundamental_weights_epsilon(data: RootSystemData) -> list[list[Fraction]]:
    family, n = data.spec.family, data.rank
    if family == "A":
        size = n + 1
        return [
            [Fraction(1) - Fraction(i + 1, size) if k <= i else -Fraction(i + 1, size) for k in range(size)]
            for i in range(n)
        ]
    weights = [[Fraction(int(k <= i)) for k in range(n)] for i in range(n)]
    half = Fraction(1, 2)
    if family == "B":
        weights[n - 1] = [half] * n
    elif family == "D":
        weights[n - 2] = [half] * (n - 1) + [-half]
        weights[n - 1] = [half] * n
    return weights


def epsilon_to_coroot(data: RootSystemData, epsilon: list[Fraction]) -> Vector:
    """
    ε 座標の点を CorootFunction の値 (ϖ_α(x))_α に変換（A〜D 型のみ）

    A_n ではトレース成分は捨てて (trace-zero 部分への射影) 評価します。

    Raises:
        ParseError: 型が A〜D でない、または次元が合わない場合
    """
    if data.spec.family not in "ABCD":
        raise ParseError(f"epsilon coordinates are not defined for {data.spec}")
    weights = _fundamental_weights_epsilon(data)
    if len(epsilon) != len(weights[0]):
        raise ParseError(f"expected {len(weights[0])} epsilon coordinates, got {len(epsilon)}")
    return tuple(sum((w * x for w, x in zip(row, epsilon, strict=True)), Fraction(0)) for row in weights)


def coroot_to_epsilon(data: RootSystemData, values: Vector) -> Vector:
    """x = Σ f(α∨) α∨ の ε 座標"""
    if data.spec.family not in "ABCD":
        raise ParseError(f"epsilon coordinates are not defined for {data.spec}")
    coroots = _simple_coroots_epsilon(data)
    dim = len(coroots[0])
    return tuple(
        sum((values[i] * coroots[i][k] for i in data.vertices), Fraction(0)) for k in range(dim)
    )


def all_specs(max_rank: int) -> list[RootSystemSpec]:
    """rank ≤ max_rank のすべての単純型"""
    specs = []
    for family, rank in product("ABCDEFG", range(1, max_rank + 1)):
        try:
            specs.append(RootSystemSpec(family, rank))
        except InvalidSpecError:
            continue
    return specs
