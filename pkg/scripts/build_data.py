"""Regenerate the shipped data files under src/linegraph/data/.

atlas7.g6 lists every graph on at most 7 vertices (1253 graphs) in the order
of the Atlas of Graphs, taken from networkx; catalog.txt is written from the
hand-transcribed edge lists in linegraph.catalog.
"""

import sys
from pathlib import Path

import networkx as nx

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from linegraph.catalog import DATA_VERSION, entries  # noqa: E402
from linegraph.graph import Graph, emit_graph6  # noqa: E402

DATA = ROOT / "src" / "linegraph" / "data"


def main():
    lines = [f"# atlas of all graphs with at most 7 vertices, version {DATA_VERSION}"]
    for g in nx.graph_atlas_g():
        ours = Graph(g.number_of_nodes(), g.edges())
        lines.append(emit_graph6(ours))
    (DATA / "atlas7.g6").write_text("\n".join(lines) + "\n")

    lines = [f"# role index name graph6, version {DATA_VERSION}"]
    for e in entries():
        lines.append(f"{e.role} {e.index} {e.name} {emit_graph6(e.graph)}")
    (DATA / "catalog.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
