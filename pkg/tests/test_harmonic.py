"""Test harmonic extension, superharmonicity and piecewise profiles"""
from fractions import Fraction

import pytest

from abstrata.core.errors import PreconditionError
from abstrata.core.harmonic import (
    CorootFunction,
    PointwiseOrder,
    ProfileShape,
    compare_pointwise,
    comparison_principle_check,
    extend_harmonic,
    is_superharmonic,
    profile,
    profile_is_linear_at,
    profile_superharmonic,
    restrict,
    root_value,
    root_values,
)
from abstrata.core.rootsystem import RootSystemSpec, all_specs, build_root_system
from abstrata.core.sampling import (
    make_rng,
    random_function,
    random_rational,
    random_subset,
    random_superharmonic,
)
from abstrata.core.strata import chains_toward, special_vertex

CASES = 500
SPECS = all_specs(8)
NON_A = [s for s in SPECS if s.family != "A"]


def data(text):
    return build_root_system(RootSystemSpec.parse(text))


def f(*values):
    return CorootFunction.of(values)


def test_root_value_examples():
    """Test root values on A2"""
    a2 = data("A2")
    assert root_value(a2, f(1, "1/2"), 1) == 0
    assert root_value(a2, f(1, "1/2"), 0) == Fraction(3, 2)
    assert root_values(data("E7"), CorootFunction.zero(7)) == (0,) * 7


def test_is_superharmonic_examples():
    """Test superharmonic verdicts and certificates"""
    a2 = data("A2")
    verdict = is_superharmonic(a2, f(1, "1/2"))
    assert verdict
    assert verdict.cone_coordinates == (Fraction(3, 2), 0)

    verdict = is_superharmonic(a2, f(-1, 0))
    assert not verdict
    assert verdict.failing_vertex == 0
    assert verdict.root_values[0] == -2

    verdict = is_superharmonic(a2, CorootFunction.zero(2))
    assert verdict
    assert verdict.cone_coordinates == (0, 0)


def test_extend_harmonic_examples():
    """Test harmonic extensions on A2 and B2"""
    assert extend_harmonic(data("A2"), {0}, {0: Fraction(1)}) == f(1, "1/2")
    assert extend_harmonic(data("B2"), {1}, {1: Fraction(1)}) == f(1, 1)

    d4 = data("D4")
    full = {v: Fraction(v + 1, 3) for v in d4.vertices}
    assert extend_harmonic(d4, set(d4.vertices), full) == CorootFunction(tuple(full[v] for v in d4.vertices))


def test_extend_harmonic_boundary_mismatch():
    """Test boundary keys must equal the support"""
    with pytest.raises(PreconditionError):
        extend_harmonic(data("A3"), {0, 1}, {0: Fraction(1)})


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_harmonic_is_zero(spec):
    """Test the extension from the empty set is the zero function"""
    d = build_root_system(spec)
    assert extend_harmonic(d, set(), {}).is_zero


def test_compare_pointwise_examples():
    """Test pointwise verdicts"""
    assert compare_pointwise(f(2, 1).values, f(1, 1).values) is PointwiseOrder.GE
    assert compare_pointwise(f(1, "1/2").values, f("1/2", 1).values) is PointwiseOrder.INCOMPARABLE
    assert compare_pointwise(f(1, 1).values, f(1, 1).values) is PointwiseOrder.EQUAL
    assert compare_pointwise(f(0, 1).values, f(1, 1).values) is PointwiseOrder.LE


def test_compare_pointwise_rank_mismatch():
    """Test comparing different ranks is a precondition error"""
    with pytest.raises(PreconditionError):
        compare_pointwise(f(1).values, f(1, 2).values)


def test_comparison_principle_examples():
    """Test the comparison principle on A2"""
    a2 = data("A2")
    assert comparison_principle_check(a2, {0}, f(1, "1/2"), f(2, 1))
    assert comparison_principle_check(a2, {0}, f(1, "1/2"), f(1, "1/2"))
    assert comparison_principle_check(a2, {0, 1}, f(3, 1), f(2, 1)) is False


def test_comparison_principle_preconditions():
    """Test non-harmonic f or non-superharmonic g is reported separately"""
    a2 = data("A2")
    with pytest.raises(PreconditionError):
        comparison_principle_check(a2, {0}, f(2, 2), f(2, 1))
    with pytest.raises(PreconditionError):
        comparison_principle_check(a2, {0}, f(1, "1/2"), f(2, 0))


def test_profile_chain_example():
    """Test the A2 chain profile"""
    prof = profile(data("A2"), f(1, "1/2"))
    assert prof.shape is ProfileShape.CHAIN
    (segment,) = prof.segments
    assert segment.values == (0, 1, Fraction(1, 2), 0)
    assert segment.slopes == (1, Fraction(-1, 2), Fraction(-1, 2))
    assert profile_superharmonic(prof)

    zero = profile(data("A2"), CorootFunction.zero(2))
    assert all(v == 0 for v in zero.segments[0].values)
    assert profile_superharmonic(zero)


def test_profile_multibond_example():
    """Test the B2 multibond profile"""
    b2 = data("B2")
    prof = profile(b2, f(1, 1))
    assert prof.shape is ProfileShape.MULTIBOND
    assert prof.multiplicity == 2
    assert prof.junction == 0
    assert prof.junction_slopes == (1, 0)
    assert profile_superharmonic(prof) == bool(is_superharmonic(b2, f(1, 1)))
    assert root_values(b2, f(1, 1)) == (0, 1)


def test_profile_g2_orientation():
    """Test G2 profiles start at the long root"""
    prof = profile(data("G2"), f(1, 2))
    assert prof.segments[0].nodes == (None, 1, 0, None)
    assert prof.multiplicity == 3
    assert profile_superharmonic(prof)


def test_profile_tripod_example():
    """Test the D4 tripod profile has three arms meeting at a2"""
    prof = profile(data("D4"), f(1, 2, 1, 1))
    assert prof.shape is ProfileShape.TRIPOD
    assert prof.junction == 1
    assert len(prof.segments) == 3
    assert all(s.nodes[-1] == 1 and s.nodes[0] is None for s in prof.segments)
    assert prof.junction_slopes == (1, 1, 1)
    assert profile_superharmonic(prof)


def test_profile_linear_at_rejects_junction():
    """Test linearity is undefined at the junction"""
    prof = profile(data("D4"), f(1, 2, 1, 1))
    with pytest.raises(PreconditionError):
        profile_is_linear_at(prof, 1)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_superharmonic_is_nonnegative(spec):
    """Test superharmonic functions never take negative values"""
    d = build_root_system(spec)
    rng = make_rng(1)
    for _ in range(CASES):
        g = random_function(rng, d)
        if all(v >= 0 for v in root_values(d, g)):
            assert all(v >= 0 for v in g)
        # raises on a violation
        is_superharmonic(d, g)
    for _ in range(CASES):
        g = random_superharmonic(rng, d)
        assert is_superharmonic(d, g)
        assert all(v >= 0 for v in g)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_extension_uniqueness(spec):
    """Test extensions keep their boundary and are determined by it"""
    d = build_root_system(spec)
    rng = make_rng(2)
    for _ in range(CASES):
        support = random_subset(rng, d)
        boundary = {v: random_rational(rng) for v in support}
        g = extend_harmonic(d, support, boundary)
        assert restrict(g, support) == boundary
        assert all(root_value(d, g, v) == 0 for v in d.vertices if v not in support)
        assert extend_harmonic(d, support, restrict(g, support)) == g


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_comparison_principle(spec):
    """Test the larger boundary data extends to the larger function"""
    d = build_root_system(spec)
    rng = make_rng(3)
    for _ in range(CASES):
        support = random_subset(rng, d) or frozenset({0})
        low = {v: random_rational(rng, nonnegative=True) for v in support}
        high = {v: low[v] + random_rational(rng, nonnegative=True) for v in support}
        lo = extend_harmonic(d, support, low)
        hi = extend_harmonic(d, support, high)
        assert all(v >= 0 for v in lo)
        assert comparison_principle_check(d, support, lo, hi)
        assert compare_pointwise(hi.values, lo.values) in (PointwiseOrder.GE, PointwiseOrder.EQUAL)


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_profile_equivalence(spec):
    """Test the profile check agrees with the Cartan-matrix definition"""
    d = build_root_system(spec)
    rng = make_rng(4)
    for _ in range(CASES):
        g = random_function(rng, d) if rng.random() < 0.5 else random_superharmonic(rng, d)
        assert profile_superharmonic(profile(d, g)) == bool(is_superharmonic(d, g))


@pytest.mark.parametrize("spec", [s for s in SPECS if s.family == "A"], ids=str)
def test_chain_linear_iff_harmonic(spec):
    """Test on A_n the profile is linear exactly at harmonic vertices"""
    d = build_root_system(spec)
    rng = make_rng(5)
    for _ in range(CASES):
        support = random_subset(rng, d)
        g = extend_harmonic(d, support, {v: random_rational(rng) for v in support})
        prof = profile(d, g)
        for v in d.vertices:
            assert profile_is_linear_at(prof, v) == (root_value(d, g, v) == 0)


@pytest.mark.parametrize("spec", NON_A, ids=str)
def test_monotone_toward_special(spec):
    """Test superharmonic functions weakly increase along chains into the special vertex"""
    d = build_root_system(spec)
    special = special_vertex(d)
    paths = chains_toward(d, special)
    rng = make_rng(6)
    for _ in range(CASES):
        g = random_superharmonic(rng, d)
        assert g[special] == max(g)
        for path in paths:
            assert all(g[a] <= g[b] for a, b in zip(path, path[1:]))
