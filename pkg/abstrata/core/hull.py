"""
Weyl 軌道の凸包による Atiyah-Bott 順序の独立検算

x ≥ y ⇔ y ∈ conv(W·x) という定義そのものを、軌道の総当たり生成と
有理数単体法（Bland の規則、第 1 段階）による実行可能性判定で計算します。
小ランク (≤ 3 程度) の検算用です。
"""

from collections.abc import Sequence
from fractions import Fraction

from .abpoints import ABOrder, reflect
from .harmonic import CorootFunction
from .rootsystem import RootSystemData


def weyl_orbit(data: RootSystemData, f: CorootFunction) -> frozenset[CorootFunction]:
    """単純鏡映で閉じるまで軌道を生成"""
    orbit = {f}
    frontier = [f]
    while frontier:
        x = frontier.pop()
        for a in data.vertices:
            y = reflect(data, x, a)
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return frozenset(orbit)


def _pivot(tableau: list[list[Fraction]], cost: list[Fraction], row: int, col: int) -> None:
    pivot = tableau[row][col]
    tableau[row] = [x / pivot for x in tableau[row]]
    for i, other in enumerate(tableau):
        if i != row and other[col] != 0:
            factor = other[col]
            tableau[i] = [x - factor * y for x, y in zip(other, tableau[row], strict=True)]
    factor = cost[col]
    if factor != 0:
        cost[:] = [x - factor * y for x, y in zip(cost, tableau[row], strict=True)]


def in_convex_hull(points: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> bool:
    """
    target が points の凸包に含まれるか

    λ ≥ 0, Σ λ_i p_i = target, Σ λ_i = 1 の実行可能性を、人工変数の和を
    最小化する第 1 段階単体法で厳密に判定します。

    Args:
        points: 有限点集合
        target: 判定する点

    Returns:
        最適値が 0（実行可能）なら True
    """
    if not points:
        return False
    n = len(points)
    dim = len(target)
    m = dim + 1

    rows: list[tuple[list[Fraction], Fraction]] = [
        ([Fraction(p[k]) for p in points], Fraction(target[k])) for k in range(dim)
    ]
    rows.append(([Fraction(1)] * n, Fraction(1)))

    tableau: list[list[Fraction]] = []
    for i, (coeffs, rhs) in enumerate(rows):
        sign = -1 if rhs < 0 else 1
        artificial = [Fraction(int(i == k)) for k in range(m)]
        tableau.append([sign * x for x in coeffs] + artificial + [sign * rhs])
    basis = [n + i for i in range(m)]

    # 被約費用（人工変数の和の最小化）
    cost = [-sum((tableau[i][j] for i in range(m)), Fraction(0)) for j in range(n)]
    cost += [Fraction(0)] * m
    cost.append(-sum((tableau[i][-1] for i in range(m)), Fraction(0)))

    while True:
        entering = next((j for j in range(n + m) if cost[j] < 0), None)
        if entering is None:
            break
        ratios = [
            (tableau[i][-1] / tableau[i][entering], basis[i], i)
            for i in range(m)
            if tableau[i][entering] > 0
        ]
        if not ratios:
            break
        _, _, leaving = min(ratios)
        _pivot(tableau, cost, leaving, entering)
        basis[leaving] = entering

    return cost[-1] == 0


def hull_compare(data: RootSystemData, f: CorootFunction, g: CorootFunction) -> ABOrder:
    """凸包の定義に基づく Atiyah-Bott 順序の比較（ab_compare の検算用）"""
    f_orbit = [x.values for x in weyl_orbit(data, f)]
    g_orbit = [x.values for x in weyl_orbit(data, g)]
    f_ge_g = in_convex_hull(f_orbit, g.values)
    g_ge_f = in_convex_hull(g_orbit, f.values)
    if f_ge_g and g_ge_f:
        return ABOrder.EQUAL
    if f_ge_g:
        return ABOrder.GREATER
    if g_ge_f:
        return ABOrder.LESS
    return ABOrder.INCOMPARABLE
