import argparse

from common.protocol import format_rational, pack

from abstrata.core.command_base import CommandLogger, CommandProcessor, CommandResult
from abstrata.core.rootsystem import (
    cartan_determinant,
    center_generators,
    center_invariant_factors,
    coroot_pairing,
    highest_root,
    positive_roots,
    vertex_name,
)
from abstrata.core.strata import special_roots


class InfoProcessor(CommandProcessor):
    """ルート系と中心類の基本データを JSON で出力"""

    help = "root system data, highest root, center and vertex naming"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        cls.add_group_argument(parser)

    def run(self, args: argparse.Namespace) -> CommandResult:
        context = self.context(args)
        data = context.data
        top = highest_root(data)
        obj = {
            "group": str(context),
            "vertices": data.vertex_names,
            "numbering": "Bourbaki; cartan[a][b] = a(b^vee)",
            "cartan": [list(row) for row in data.cartan],
            "cartan_inverse": [[format_rational(x) for x in row] for row in data.cartan_inverse],
            "lengths": ["long" if data.is_long(v) else "short" for v in data.vertices],
            "bonds": [{"edge": [vertex_name(i), vertex_name(j)], "multiplicity": m} for (i, j), m in data.bonds],
            "positive_roots": len(positive_roots(data)),
            "highest_root": {
                "h": list(top.h),
                "g": list(top.g),
                "pairings": [coroot_pairing(data, top.h, v) for v in data.vertices],
            },
            "center": [
                {"label": z.label, "order": z.order, "residues": [format_rational(r) for r in z.residues]}
                for z in center_generators(data)
            ],
            "center_structure": {
                "order": abs(cartan_determinant(data)),
                "invariant_factors": center_invariant_factors(data),
            },
            "class": {
                "label": context.c.label,
                "order": context.c.order,
                "residues": [format_rational(r) for r in context.c.residues],
            },
            "special": [vertex_name(v) for v in sorted(special_roots(data).special)],
        }
        return CommandResult(pack(obj))


class InfoLogger(CommandLogger):
    """info は実行ログのみ"""
