"""Write the two figure graphs (power graph of Q_32 and of a dicyclic Q_4m) as DOT and JSON.

The figures are reproduced structurally; render with e.g. ``neato -Tpng``.
"""

import argparse
from pathlib import Path

from groupgraphs.export import graph_to_dot, graph_to_json
from groupgraphs.graphs import Structure, power_graph, render_expr, structure_expr_for
from groupgraphs.groups import dicyclic, generalized_quaternion


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--m", type=int, default=3, help="parameter of the dicyclic group for the second figure")
    parser.add_argument("--out", type=Path, default=Path("results/figures"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    cases = [
        (generalized_quaternion(4), Structure.POW_GEN_QUATERNION, 4),
        (dicyclic(args.m), Structure.POW_DICYCLIC, args.m),
    ]
    for group, which, param in cases:
        graph = power_graph(group)
        stem = f"{group.descriptor}_pow"
        (args.out / f"{stem}.dot").write_text(graph_to_dot(graph, stem))
        (args.out / f"{stem}.json").write_text(graph_to_json(graph, group.descriptor))
        print(f"{stem}: {len(graph)} vertices, {graph.edge_count} edges, {render_expr(structure_expr_for(which, param))}")


if __name__ == "__main__":
    main()
