import argparse
from typing import Any

from common.protocol import format_rational, pack, pair_to_json, parse_pair, points_to_json

from abstrata.core.abpoints import enumerate_between, sort_points
from abstrata.core.command_base import CommandLogger, CommandProcessor, CommandResult
from abstrata.core.planner import Move, MoveKind, MoveStep, plan_moves, type3_as_reductions, validate_plan
from abstrata.core.rootsystem import vertex_name


def move_to_json(move: Move) -> dict[str, Any]:
    obj: dict[str, Any] = {"kind": move.kind.value}
    if move.vertex is not None:
        obj["vertex"] = vertex_name(move.vertex)
    if move.value is not None:
        obj["value"] = format_rational(move.value)
    if move.support is not None:
        obj["support"] = [vertex_name(v) for v in sorted(move.support)]
    return obj


def _certificate(step: MoveStep) -> dict[str, Any]:
    if step.move.kind is MoveKind.TYPE1:
        between = enumerate_between(step.before.context, step.before.f, step.after.f)
        return {"between": points_to_json(sort_points(between))}
    if step.move.kind is MoveKind.TYPE3:
        return {"reductions": [pair_to_json(p) for p in type3_as_reductions(step.before, step.move)]}
    return {}


class PlanProcessor(CommandProcessor):
    """(μ, I) から (μ', I') への降下計画を構成・検証"""

    help = "plan a Type1/Type2/Type3 move sequence between two Atiyah-Bott pairs"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        cls.add_group_argument(parser)
        parser.add_argument("--from", dest="start", required=True, help="start pair JSON")
        parser.add_argument("--to", dest="end", required=True, help="end pair JSON")

    def run(self, args: argparse.Namespace) -> CommandResult:
        context = self.context(args)
        start = parse_pair(context, args.start)
        end = parse_pair(context, args.end)
        plan = plan_moves(start, end)
        steps = validate_plan(plan)

        moves = []
        rows = []
        for index, step in enumerate(steps):
            moves.append(
                move_to_json(step.move)
                | {
                    "before": pair_to_json(step.before),
                    "after": pair_to_json(step.after),
                    "order": step.order.value,
                    "certificate": _certificate(step),
                }
            )
            rows.append([index, str(step.move), str(step.before), str(step.after)])
        obj = {
            "group": str(context),
            "start": pair_to_json(start),
            "end": pair_to_json(end),
            "moves": moves,
        }
        return CommandResult(pack(obj), rows=rows)


class PlanLogger(CommandLogger):
    custom_headers = ["index", "move", "before", "after"]
