"""Test move planning, replay and elementary decrements"""
from fractions import Fraction

import pytest

from abstrata.core.abpoints import ABPair, GroupContext, enumerate_between
from abstrata.core.errors import ConsistencyError, PreconditionError
from abstrata.core.harmonic import CorootFunction, PointwiseOrder
from abstrata.core.planner import (
    Move,
    MoveKind,
    MovePlan,
    apply_move,
    plan_moves,
    reduce_by_one,
    replay,
    type3_as_reductions,
    validate_plan,
)
from abstrata.core.rootsystem import all_specs
from abstrata.core.sampling import make_rng, random_descent

SL3 = GroupContext.parse("A2")
FUZZ_GROUPS = [str(spec) for spec in all_specs(6)] + [
    "A2/z1", "A3/z1^2", "A5/z1", "A5/z1^3", "B3/z1", "B5/z1", "C3/z1", "C6/z1",
    "D4/z1", "D5/z1", "D6/z2", "E6/z1",
]
FUZZ_CASES = 200


def pair(context, values, support):
    return ABPair.build(context, CorootFunction.of(values), support)


def test_apply_move_examples():
    """Test Type1, Type3 and Type2 moves on SL(3)"""
    start = pair(SL3, [2, 1], {0})
    widened = apply_move(start, Move.type1(1, Fraction(1)))
    assert widened == pair(SL3, [2, 1], {0, 1})

    lowered = apply_move(widened, Move.type3(0, Fraction(1)))
    assert lowered == pair(SL3, [1, 1], {0, 1})

    assert apply_move(lowered, Move.type2(frozenset({0, 1}))) == lowered


def test_apply_move_structural_errors():
    """Test malformed moves are rejected"""
    start = pair(SL3, [2, 1], {0})
    with pytest.raises(PreconditionError):
        apply_move(start, Move.type1(0, Fraction(2)))
    with pytest.raises(PreconditionError):
        apply_move(start, Move.type2(frozenset({1})))
    with pytest.raises(PreconditionError):
        apply_move(start, Move.type3(1, Fraction(0)))
    with pytest.raises(PreconditionError):
        apply_move(start, Move.type3(0, Fraction(3)))


def test_apply_move_congruence_error():
    """Test a Type3 move to a non-congruent value leaves the AB locus"""
    start = pair(SL3, [2, 1], {0})
    with pytest.raises(PreconditionError, match="Atiyah-Bott"):
        apply_move(start, Move.type3(0, Fraction(1, 2)))


def test_apply_move_type1_must_be_subharmonic():
    """Test Type1 rejects a result superharmonic at the added vertex"""
    start = pair(SL3, [2, 1], {0})
    with pytest.raises(PreconditionError, match="subharmonic"):
        apply_move(start, Move.type1(1, Fraction(2)))


def test_apply_move_certify_adjacency():
    """Test certify flags Type1 moves that skip AB points"""
    start = pair(SL3, [3, 2], {0, 1})
    start = apply_move(start, Move.type2(frozenset({0})))
    assert start.f == CorootFunction.of(["3", "3/2"])
    with pytest.raises(PreconditionError):
        apply_move(start, Move.type1(1, Fraction(0)), certify=True)


def test_move_str():
    """Test move labels"""
    assert str(Move.type1(1, Fraction(1))) == "Type1(a2: 1)"
    assert str(Move.type3(0, Fraction(1, 2))) == "Type3(a1: 1/2)"
    assert str(Move.type2(frozenset({1, 0}))) == "Type2({a1, a2})"


def test_plan_two_moves():
    """Test the SL(3) adjacent descent is a Type1 then a Type3 move"""
    start = pair(SL3, [2, 1], {0})
    end = pair(SL3, [1, 1], {0, 1})
    plan = plan_moves(start, end)

    assert plan.moves == (Move.type1(1, Fraction(1)), Move.type3(0, Fraction(1)))
    steps = validate_plan(plan)
    assert steps[-1].after == end
    assert [s.order for s in steps] == [PointwiseOrder.EQUAL, PointwiseOrder.LE]
    assert enumerate_between(SL3, start.f, end.f) == {start.f, end.f}


def test_plan_identity():
    """Test start = end gives an empty plan"""
    start = pair(SL3, [2, 1], {0})
    plan = plan_moves(start, start)
    assert plan.moves == ()
    assert validate_plan(plan) == []


def test_plan_to_semistable():
    """Test the descent to the semistable point passes only through enumerated points"""
    start = pair(SL3, [2, 1], {0})
    end = pair(SL3, [0, 0], set())
    plan = plan_moves(start, end)
    steps = validate_plan(plan)

    between = enumerate_between(SL3, start.f, end.f)
    assert all(step.after.f in between for step in steps)
    assert steps[-1].after == end
    assert plan.moves[-1].kind is MoveKind.TYPE2
    visited = [start.f] + [s.after.f for s in steps if s.order is PointwiseOrder.LE]
    assert visited == [CorootFunction.of(v) for v in ([2, 1], [2, 0], [1, 0], [0, 0])]


def test_plan_rejects_increase():
    """Test the end must lie below the start"""
    with pytest.raises(PreconditionError):
        plan_moves(pair(SL3, [1, 1], {0, 1}), pair(SL3, [2, 1], {0}))


def test_plan_rejects_context_mismatch():
    """Test pairs from different contexts cannot be planned"""
    other = GroupContext.parse("A2/z1")
    with pytest.raises(PreconditionError):
        plan_moves(pair(SL3, [2, 1], {0}), ABPair(CorootFunction.zero(2), frozenset(), other))


def test_validate_plan_detects_wrong_end():
    """Test a plan that does not reach its end is inconsistent"""
    start = pair(SL3, [2, 1], {0})
    end = pair(SL3, [1, 1], {0, 1})
    bogus = MovePlan(start, end, (Move.type1(1, Fraction(1)),))
    with pytest.raises(ConsistencyError):
        validate_plan(bogus)
    assert len(replay(bogus)) == 1


def test_reduce_by_one_examples():
    """Test elementary decrements"""
    start = pair(SL3, [2, 1], {0})
    once = reduce_by_one(start, 0)
    assert once == pair(SL3, [1, "1/2"], {0})
    assert reduce_by_one(once, 0) == pair(SL3, [0, 0], {0})

    b2 = GroupContext.parse("B2")
    assert reduce_by_one(pair(b2, [1, 1], {1}), 1) == pair(b2, [0, 0], {1})


def test_reduce_by_one_outside_support():
    """Test decrements only act on the support"""
    with pytest.raises(PreconditionError):
        reduce_by_one(pair(SL3, [2, 1], {0}), 1)


def test_type3_as_reductions():
    """Test a Type3 move factors into unit decrements"""
    start = pair(SL3, [3, 3], {0, 1})
    move = Move.type3(1, Fraction(1))
    chain = type3_as_reductions(start, move)
    assert len(chain) == 2
    assert chain[-1] == apply_move(start, move)

    with pytest.raises(ConsistencyError):
        type3_as_reductions(start, Move.type3(1, Fraction(5, 2)))


@pytest.mark.parametrize("group", FUZZ_GROUPS)
def test_plan_fuzz(group):
    """Test random descents replay to their end through valid pairs"""
    context = GroupContext.parse(group)
    rng = make_rng(13)
    for _ in range(FUZZ_CASES):
        start, end = random_descent(rng, context)
        plan = plan_moves(start, end)
        steps = validate_plan(plan)
        final = steps[-1].after if steps else start
        assert final == end
        for step in steps:
            assert step.order in (PointwiseOrder.EQUAL, PointwiseOrder.LE)
            if step.move.kind is MoveKind.TYPE3:
                drop = step.before.f[step.move.vertex] - step.move.value
                assert drop.denominator == 1 and drop > 0
