#!/usr/bin/env python3
"""
プロファイル描画スクリプト - 関数の区分線形プロファイル f̂ を折れ線で描く
"""

import argparse

import matplotlib.pyplot as plt

from abstrata.core.abpoints import GroupContext
from abstrata.core.harmonic import PiecewiseProfile, profile, profile_superharmonic
from abstrata.core.rootsystem import vertex_name
from common.protocol import parse_point


def create_profile_plot(prof: PiecewiseProfile, title: str, output_file: str) -> str:
    """
    各折れ線を横軸=位置、縦軸=f̂ で描画

    三叉の各腕は境界点 0 から三価頂点まで、鎖・多重結合は端から端まで。
    """
    plt.style.use("default")
    fig, ax = plt.subplots(figsize=(10, 5))

    for i, segment in enumerate(prof.segments):
        xs = list(range(len(segment.nodes)))
        ys = [float(y) for y in segment.values]
        label = f"arm {i + 1}" if len(prof.segments) > 1 else "profile"
        ax.plot(xs, ys, marker="o", linewidth=1.5, label=label)
        for x, y, node in zip(xs, ys, segment.nodes, strict=True):
            if node is not None:
                ax.annotate(vertex_name(node), (x, y), textcoords="offset points", xytext=(0, 6),
                            ha="center", fontsize=8)

    verdict = "superharmonic" if profile_superharmonic(prof) else "not superharmonic"
    ax.set_title(f"{title} ({prof.shape.value}, {verdict})")
    ax.set_xlabel("position")
    ax.set_ylabel("f")
    ax.axhline(0, color="gray", linewidth=0.8)
    ax.grid(True, alpha=0.3)
    ax.legend()

    plt.tight_layout()
    plt.savefig(output_file, dpi=150, bbox_inches="tight")
    print(f"Plot saved: {output_file}")
    plt.close(fig)

    return output_file


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description="Plot the piecewise-linear profile of a point")
    parser.add_argument("group", help='group spec, e.g. "D5"')
    parser.add_argument("point", help='point JSON, e.g. \'["1","2","2","1","1"]\'')
    parser.add_argument("--output", "-o", type=str, default="profile.png", help="output PNG path")
    parser.add_argument("--show", action="store_true", help="Show plot window")
    args = parser.parse_args(argv)

    try:
        context = GroupContext.parse(args.group)
        f = parse_point(context.data, args.point)
        create_profile_plot(profile(context.data, f), f"{context} {f}", args.output)
        if args.show:
            plt.show()
    except Exception as e:
        print(f"Error: {e}")
        return 1

    return 0


if __name__ == "__main__":
    raise SystemExit(main())
