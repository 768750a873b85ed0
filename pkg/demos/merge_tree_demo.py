"""Walk through merge trees of one embedded graph at several directions.

A merge tree records, for a direction omega, how connected components of the
sublevel sets of the height function f(x) = <x, (cos omega, sin omega)> are
born at extremal vertices and merge as the height grows. Run:

    python3 demos/merge_tree_demo.py
"""

import math

from lmtt import EmbeddedGraph, build_merge_tree, critical_angles, extremal_set
from lmtt.directions import DirectionPartition


def describe(tree, graph):
    children = tree.children()
    lines = []

    def walk(node, depth):
        h = tree.heights[node]
        label = "root (+inf)" if node == tree.root else (
            f"h={h:+.3f} from vertex {tree.sources[node]}"
        )
        kind = "leaf" if not children[node] else ("merge" if len(children[node]) > 1 else "node")
        lines.append("  " * depth + f"- {kind}: {label}")
        for c in sorted(children[node], key=lambda v: -tree.heights[v]):
            walk(c, depth + 1)

    walk(tree.root, 0)
    return "\n".join(lines)


def main():
    # A "W" shape: two valleys whose relative depth depends on the direction.
    graph = EmbeddedGraph(
        [[0, 2], [1, 0], [2, 1.2], [3, 0.3], [4, 2]],
        [[0, 1], [1, 2], [2, 3], [3, 4]],
    )
    print("W-shaped polyline with", graph.n_vertices, "vertices")
    print("extremal vertices:", extremal_set(graph))
    print("critical angles (deg):",
          [round(math.degrees(a), 1) for a in critical_angles(graph)])

    for omega in [3 * math.pi / 2, math.pi / 2, 0.3]:
        print(f"\nmerge tree at omega = {omega:.3f} rad "
              f"({math.degrees(omega):.0f} deg):")
        tree = build_merge_tree(graph, omega)
        print(describe(tree, graph))

    part = DirectionPartition.from_graphs(graph)
    print(f"\nthe circle splits into {part.n_arcs} arcs; within each arc the "
          "tree's combinatorics are constant, so one key angle per arc "
          "summarizes every direction.")


if __name__ == "__main__":
    main()
