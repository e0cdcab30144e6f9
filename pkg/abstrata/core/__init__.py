from .abpoints import ABOrder, ABPair, GroupContext, ab_compare, enumerate_between
from .command_factory import CommandFactory
from .errors import AbstrataError, ConsistencyError, NotCatalogedError, ParseError, PreconditionError
from .planner import Move, MovePlan, apply_move, plan_moves
from .rootsystem import RootSystemData, RootSystemSpec, build_root_system, parse_group_spec
from .strata import catalog, minimally_unstable, mu_poset

__all__ = [
    "ABOrder", "ABPair", "GroupContext", "ab_compare", "enumerate_between",
    "CommandFactory",
    "AbstrataError", "ConsistencyError", "NotCatalogedError", "ParseError", "PreconditionError",
    "Move", "MovePlan", "apply_move", "plan_moves",
    "RootSystemData", "RootSystemSpec", "build_root_system", "parse_group_spec",
    "catalog", "minimally_unstable", "mu_poset",
]
