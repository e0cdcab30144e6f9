"""
乱数による有理数関数・Atiyah-Bott 対の生成（性質テスト・ファジング用）

分子は [-12, 12]、分母は {1, 2, 3, 4, 6, 12} から一様に選びます。
これで全単純型の中心に現れる剰余の分母をすべて含みます。
シードは ABSTRATA_SEED 環境変数（既定 0）で固定できます。
"""

import os
from fractions import Fraction

import numpy as np

from .abpoints import ABPair, GroupContext, enumerate_between, minimal_support
from .harmonic import CorootFunction, extend_harmonic
from .linalg import matvec
from .rootsystem import RootSystemData

DENOMINATORS = (1, 2, 3, 4, 6, 12)
NUMERATOR_BOUND = 12


def make_rng(seed: int | None = None) -> np.random.Generator:
    if seed is None:
        seed = int(os.environ.get("ABSTRATA_SEED", "0"))
    return np.random.default_rng(seed)


def random_rational(rng: np.random.Generator, nonnegative: bool = False) -> Fraction:
    low = 0 if nonnegative else -NUMERATOR_BOUND
    numerator = int(rng.integers(low, NUMERATOR_BOUND + 1))
    return Fraction(numerator, int(rng.choice(DENOMINATORS)))


def random_function(rng: np.random.Generator, data: RootSystemData) -> CorootFunction:
    return CorootFunction(tuple(random_rational(rng) for _ in data.vertices))


def random_superharmonic(rng: np.random.Generator, data: RootSystemData) -> CorootFunction:
    """非負の錐座標 c_α から x = Σ c_α ϖ_α∨ を作る"""
    cone = [random_rational(rng, nonnegative=True) for _ in data.vertices]
    return CorootFunction(matvec(data.cartan_inverse, cone))


def random_subset(rng: np.random.Generator, data: RootSystemData, max_size: int | None = None) -> frozenset[int]:
    size_cap = data.rank if max_size is None else min(max_size, data.rank)
    size = int(rng.integers(0, size_cap + 1))
    chosen = rng.choice(data.rank, size=size, replace=False)
    return frozenset(int(v) for v in chosen)


def random_ab_pair(rng: np.random.Generator, context: GroupContext, max_support: int = 2) -> ABPair:
    """
    非負の Atiyah-Bott 対をランダムに生成

    台は 1〜max_support 点、台上の値は剰余 + {0, 1}（剰余 0 なら {1, 2}）。
    """
    data = context.data
    size = int(rng.integers(1, min(max_support, data.rank) + 1))
    support = frozenset(int(v) for v in rng.choice(data.rank, size=size, replace=False))
    boundary = {}
    for v in support:
        residue = context.residue(v)
        base = residue if residue != 0 else Fraction(1)
        boundary[v] = base + int(rng.integers(0, 2))
    f = extend_harmonic(data, support, boundary)
    return ABPair(f, support, context)


def random_descent(rng: np.random.Generator, context: GroupContext) -> tuple[ABPair, ABPair]:
    """
    f_start ≥ f_end を満たす Atiyah-Bott 対の組

    start を random_ab_pair で作り、end を enumerate_between(start, 0) から選びます。
    end の台は最小台、ときどき start 側の頂点を加えたものにします。
    """
    start = random_ab_pair(rng, context)
    zero = CorootFunction.zero(context.data.rank)
    points = sorted(enumerate_between(context, start.f, zero), key=lambda f: f.values)
    f = points[int(rng.integers(0, len(points)))]
    support = minimal_support(context, f)
    extra = [
        v for v in start.support - support
        if (f[v] - context.residue(v)).denominator == 1
    ]
    if extra and rng.random() < 0.5:
        support = support | {extra[0]}
    return start, ABPair(f, support, context)
