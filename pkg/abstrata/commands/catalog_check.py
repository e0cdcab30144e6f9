import argparse

from common.protocol import pack, pair_to_json

from abstrata.core.command_base import CommandLogger, CommandProcessor, CommandResult
from abstrata.core.strata import CatalogCheck, catalog_check, catalog_contexts

EXIT_MISMATCH = 4


def _check_to_json(check: CatalogCheck) -> dict[str, object]:
    return {
        "group": str(check.context),
        "agree": check.agree,
        "expected": [pair_to_json(p) for p in sorted(check.expected, key=lambda p: sorted(p.support))],
        "found": [pair_to_json(p) for p in sorted(check.found, key=lambda p: sorted(p.support))],
    }


class CatalogCheckProcessor(CommandProcessor):
    """カタログと探索の一致を確認（不一致なら終了コード 4）"""

    help = "check the minimally unstable catalog against the search"

    @classmethod
    def configure(cls, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("group", nargs="?", default=None, help='group spec, e.g. "B3/z1"')
        parser.add_argument("--class", dest="central_class", default=None, help="central class override")
        parser.add_argument("--all", dest="max_rank", type=int, default=None,
                            help="check every cataloged context up to this rank")

    def run(self, args: argparse.Namespace) -> CommandResult:
        if args.max_rank is not None:
            checks = [catalog_check(ctx) for ctx in catalog_contexts(args.max_rank)]
        elif args.group is not None:
            checks = [catalog_check(self.context(args))]
        else:
            checks = []
        rows = [[str(c.context), c.context.c.order, c.agree] for c in checks]
        status = 0 if checks and all(c.agree for c in checks) else EXIT_MISMATCH
        obj = {"checked": len(checks), "agree": status == 0, "results": [_check_to_json(c) for c in checks]}
        return CommandResult(pack(obj), status=status, rows=rows)


class CatalogCheckLogger(CommandLogger):
    custom_headers = ["group", "order", "agree"]
