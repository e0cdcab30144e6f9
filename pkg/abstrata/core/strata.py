"""
極小不安定層の分類モジュール

特殊ルート、各単純ルート α に対する点 μ_{c,α}、それらの間の順序
（単一頂点台の比較定理）、Hasse 図、および極小不安定層のカタログと
その独立な探索を提供します。
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import graphviz
import networkx as nx

from .abpoints import ABOrder, ABPair, GroupContext, ab_compare
from .errors import ConsistencyError, NotCatalogedError, PreconditionError
from .harmonic import arms, extend_harmonic, is_superharmonic, trivalent_vertex
from .rootsystem import (
    CentralElement,
    RootSystemData,
    all_specs,
    build_root_system,
    center_generators,
    vertex_name,
)


class SpecialCondition(Enum):
    """特殊ルートの 3 条件"""

    SIMPLY_LACED_CHAINS = "complement is a union of simply laced chains"
    MEETS_AT_ENDS = "meets each component at an end"
    LONG = "is a long root"


@dataclass(frozen=True)
class SpecialRootReport:
    """
    特殊ルートの判定結果

    Attributes:
        special: 特殊ルートの集合（A 型は全頂点、それ以外はちょうど 1 つ）
        failures: 特殊でない頂点ごとに満たさない条件
    """

    special: frozenset[int]
    failures: dict[int, tuple[SpecialCondition, ...]]


def _dynkin_graph(data: RootSystemData) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(data.vertices)
    for (i, j), m in data.bonds:
        graph.add_edge(i, j, multiplicity=m)
    return graph


def _failed_conditions(data: RootSystemData, graph: nx.Graph, vertex: int) -> tuple[SpecialCondition, ...]:
    rest = graph.subgraph(v for v in data.vertices if v != vertex)
    failed: list[SpecialCondition] = []
    chains = True
    ends = True
    for component in nx.connected_components(rest):
        sub = rest.subgraph(component)
        if any(d > 2 for _, d in sub.degree()) or any(m > 1 for _, _, m in sub.edges(data="multiplicity")):
            chains = False
        touching = [v for v in component if v in data.adjacency[vertex]]
        if any(sub.degree(v) > 1 for v in touching):
            ends = False
    if not chains:
        failed.append(SpecialCondition.SIMPLY_LACED_CHAINS)
    if not ends:
        failed.append(SpecialCondition.MEETS_AT_ENDS)
    if not data.is_long(vertex):
        failed.append(SpecialCondition.LONG)
    return tuple(failed)


def special_roots(data: RootSystemData) -> SpecialRootReport:
    """
    特殊ルートを定義 (3 条件) から直接判定

    D, E 型では三価頂点、C_n と G_2 では長い単純ルート、B_n と F_4 では
    短ルートに直交しない唯一の長い単純ルートになります。
    """
    graph = _dynkin_graph(data)
    failures = {v: _failed_conditions(data, graph, v) for v in data.vertices}
    special = frozenset(v for v, failed in failures.items() if not failed)
    return SpecialRootReport(special, {v: f for v, f in failures.items() if f})


def special_vertex(data: RootSystemData) -> int:
    """
    A 型以外の唯一の特殊ルート

    Raises:
        PreconditionError: A 型の場合（全頂点が特殊）
    """
    report = special_roots(data)
    if len(report.special) != 1:
        raise PreconditionError(f"{data.spec} has {len(report.special)} special roots")
    return next(iter(report.special))


def chains_toward(data: RootSystemData, target: int) -> list[tuple[int, ...]]:
    """target で終わる Dynkin 図形上の単純道（長さ 2 以上）すべて"""
    graph = _dynkin_graph(data)
    return [
        tuple(path)
        for source in data.vertices
        if source != target
        for path in nx.all_simple_paths(graph, source, target)
    ]


def mu_c_alpha(context: GroupContext, vertex: int) -> ABPair:
    """
    台 {α} の点 μ_{c,α}

    α での値は ϖ_α(c) と合同な (0, 1] の最小値（剰余 0 なら 1）で、
    その外では調和に拡張します。
    """
    residue = context.residue(vertex)
    value = residue if residue != 0 else Fraction(1)
    f = extend_harmonic(context.data, {vertex}, {vertex: value})
    return ABPair(f, frozenset({vertex}), context)


def order1_compare(a: ABPair, b: ABPair) -> ABOrder:
    """
    単一頂点台の優調和な点どうしの比較

    台 {α} の f_a と台 {β} の f_b について f_a ≤ f_b ⇔ f_a(α∨) ≤ f_b(α∨)。
    結果は ab_compare と照合します。

    Raises:
        PreconditionError: 台が 1 点でない、または優調和でない場合
        ConsistencyError: ab_compare と食い違う場合
    """
    data = a.context.data
    for pair in (a, b):
        if len(pair.support) != 1:
            raise PreconditionError(f"{pair} does not have a singleton support")
        if not is_superharmonic(data, pair.f):
            raise PreconditionError(f"{pair} is not superharmonic")

    (alpha,) = a.support
    (beta,) = b.support
    a_le_b = a.f[alpha] <= b.f[alpha]
    b_le_a = b.f[beta] <= a.f[beta]
    if a_le_b and b_le_a:
        verdict = ABOrder.EQUAL
    elif a_le_b:
        verdict = ABOrder.LESS
    elif b_le_a:
        verdict = ABOrder.GREATER
    else:
        verdict = ABOrder.INCOMPARABLE

    check = ab_compare(a.context, a.f, b.f)
    if check is not verdict:
        raise ConsistencyError(
            f"single-vertex comparison {verdict.value} disagrees with the Atiyah-Bott order "
            f"{check.value} for {a} and {b}"
        )
    return verdict


@dataclass(frozen=True)
class MuPoset:
    """
    {μ_{c,α}} の半順序

    Attributes:
        context: 群と類
        nodes: 頂点番号順の μ_{c,α}
        relations: μ_u < μ_v となる (u, v) すべて
        hasse: Hasse 図の辺 (u, v)（被覆関係）
        minimal: 極小元の頂点
    """

    context: GroupContext
    nodes: tuple[ABPair, ...]
    relations: frozenset[tuple[int, int]]
    hasse: frozenset[tuple[int, int]]
    minimal: tuple[int, ...]

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.nodes)))
        g.add_edges_from(self.hasse)
        return g


def mu_poset(context: GroupContext) -> MuPoset:
    """
    μ_{c,α} 全体の順序関係、Hasse 図、極小元

    比較は order1_compare を全組に適用して求めます。
    """
    data = context.data
    nodes = tuple(mu_c_alpha(context, v) for v in data.vertices)
    graph = nx.DiGraph()
    graph.add_nodes_from(data.vertices)
    for u in data.vertices:
        for v in data.vertices:
            if u < v:
                verdict = order1_compare(nodes[u], nodes[v])
                if verdict is ABOrder.LESS:
                    graph.add_edge(u, v)
                elif verdict is ABOrder.GREATER:
                    graph.add_edge(v, u)
                elif verdict is ABOrder.EQUAL:
                    raise ConsistencyError(f"mu({vertex_name(u)}) and mu({vertex_name(v)}) coincide")

    hasse = nx.transitive_reduction(graph)
    minimal = tuple(v for v in data.vertices if graph.in_degree(v) == 0)
    return MuPoset(
        context=context,
        nodes=nodes,
        relations=frozenset(graph.edges()),
        hasse=frozenset(hasse.edges()),
        minimal=minimal,
    )


def minimally_unstable(context: GroupContext) -> frozenset[ABPair]:
    """極小不安定な Atiyah-Bott 点（μ_{c,α} 全体の極小元）の探索"""
    poset = mu_poset(context)
    return frozenset(poset.nodes[v] for v in poset.minimal)


# ---------------------------------------------------------------------------
# カタログ
# ---------------------------------------------------------------------------


def ears(data: RootSystemData) -> tuple[int, int]:
    """D_n の耳 α_{n-1}, α_n"""
    return data.rank - 2, data.rank - 1


def long_arm_neighbours(data: RootSystemData) -> list[int]:
    """三価頂点の隣のうち、最長の腕に属するもの"""
    center = trivalent_vertex(data)
    if center is None:
        raise PreconditionError(f"{data.spec} has no trivalent vertex")
    found = arms(data, center)
    longest = max(len(arm) for arm in found)
    return [arm[0] for arm in found if len(arm) == longest]


def _catalog_vertices(context: GroupContext) -> tuple[list[int], int]:
    """カタログの頂点リストと分母 d"""
    data = context.data
    c = context.c
    family, n = data.spec.family, data.rank
    residues = c.residues

    if c.is_trivial:
        if family == "A":
            return list(data.vertices), 1
        return [special_vertex(data)], 1

    d = c.order
    with_residue = [v for v in data.vertices if residues[v] == Fraction(1, d)]
    if family == "A":
        return with_residue, d
    if family == "B":
        return [n - 1], 2
    if family == "C":
        return ([n - 1] if n % 2 == 1 else [n - 2]), 2
    if family == "D":
        if d == 4:
            return [v for v in ears(data) if residues[v] == Fraction(1, 4)], 4
        if n == 4:
            return with_residue, 2
        if all(residues[v] == Fraction(1, 2) for v in ears(data)):
            return list(ears(data)), 2
        if n % 2 == 0:
            return long_arm_neighbours(data), 2
    if family == "E" and n == 6:
        center = trivalent_vertex(data)
        candidates = [
            arm[0] for arm in arms(data, center or 0) if len(arm) == 2 and residues[arm[0]] == Fraction(1, 3)
        ]
        return candidates, 3
    if family == "E" and n == 7:
        return long_arm_neighbours(data), 2
    raise NotCatalogedError(f"{context} is not in the catalog")


def catalog(context: GroupContext) -> frozenset[ABPair]:
    """
    極小不安定層の既知の分類（参照用フィクスチャ）

    - 単連結群: A 型は全 μ_α、それ以外は特殊ルートの μ_α
    - SL(n)/⟨c⟩（c の位数 d）: ϖ_α(c) ≡ 1/d となる α の μ_α/d
    - SO(2n+1): μ_{α_n}/2
    - PSp(2n): n が奇数なら μ_{α_n}/2、偶数なら μ_{α_{n-1}}/2
    - SO(2n): μ_{α_{n-1}}/2 と μ_{α_n}/2
    - Spin(4n+2)/(位数 4): 剰余 1/4 の耳 β の μ_β/4
    - Spin(4n) の半スピン商: 長い腕上で三価頂点の隣の頂点の μ/2
    - 随伴 E_6: 長い腕上の三価頂点の隣で剰余 1/3 の頂点の μ/3
    - 随伴 E_7: 長い腕上の三価頂点の隣の頂点の μ/2

    Raises:
        NotCatalogedError: 上記のいずれにも当たらない場合
    """
    vertices, d = _catalog_vertices(context)
    pairs = []
    for v in vertices:
        f = extend_harmonic(context.data, {v}, {v: Fraction(1, d)})
        pairs.append(ABPair(f, frozenset({v}), context))
    return frozenset(pairs)


@dataclass(frozen=True)
class CatalogCheck:
    """カタログと探索の照合結果"""

    context: GroupContext
    expected: frozenset[ABPair]
    found: frozenset[ABPair]

    @property
    def agree(self) -> bool:
        return self.expected == self.found

    @property
    def missing(self) -> frozenset[ABPair]:
        return self.expected - self.found

    @property
    def extra(self) -> frozenset[ABPair]:
        return self.found - self.expected


def catalog_check(context: GroupContext) -> CatalogCheck:
    return CatalogCheck(context, catalog(context), minimally_unstable(context))


def _named(element: CentralElement, label: str) -> CentralElement:
    return CentralElement(element.residues, element.order, label)


def _context(data: RootSystemData, element: CentralElement) -> GroupContext:
    label = element.label
    name = str(data.spec) if element.is_trivial else f"{data.spec}/{label}"
    return GroupContext(data=data, c=element, name=name)


def catalog_contexts(max_rank: int) -> list[GroupContext]:
    """
    rank ≤ max_rank のカタログ対象の (群, 類) すべて

    単連結群、A_n の n+1 の各約数 d に対する位数 d の類、B/C の非自明類、
    D_{2m} の 3 つの位数 2 の類、D_{2m+1} の位数 4 と位数 2 の類、E_6 と E_7 の非自明類。
    """
    contexts = []
    for spec in all_specs(max_rank):
        data = build_root_system(spec)
        contexts.append(_context(data, CentralElement.trivial(data.rank)))
        generators = center_generators(data)
        if not generators:
            continue
        z1 = generators[0]
        if spec.family == "A":
            size = spec.rank + 1
            for d in range(2, size + 1):
                if size % d == 0:
                    k = size // d
                    label = f"z1^{k}" if k != 1 else "z1"
                    contexts.append(_context(data, _named(z1 * k, label)))
        elif spec.family == "D" and len(generators) == 2:
            z2 = generators[1]
            contexts.append(_context(data, z1))
            contexts.append(_context(data, z2))
            contexts.append(_context(data, _named(z1 + z2, "z1+z2")))
        elif spec.family == "D":
            contexts.append(_context(data, z1))
            contexts.append(_context(data, _named(z1 * 2, "z1^2")))
        elif spec.family == "E" and spec.rank == 6:
            contexts.append(_context(data, z1))
            contexts.append(_context(data, _named(z1 * 2, "z1^2")))
        else:
            contexts.append(_context(data, z1))
    return contexts


def poset_to_dot(poset: MuPoset) -> str:
    """Hasse 図の DOT 表現（ノードラベル "mu(a_k)=p/q"、辺は小さい方から大きい方へ）"""
    dot = graphviz.Digraph(name=str(poset.context).replace("/", "_"))
    dot.attr(rankdir="BT")
    for v, pair in enumerate(poset.nodes):
        dot.node(vertex_name(v), f"mu(a_{v + 1})={pair.f[v]}")
    for u, v in sorted(poset.hasse):
        dot.edge(vertex_name(u), vertex_name(v))
    return dot.source
