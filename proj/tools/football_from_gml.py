#!/usr/bin/env python3
"""Convert Newman's football.gml into data/football.edges and data/football.truth.

The conference of each team is its integer `value` attribute. Vertex labels
are the GML node ids, so both files share one label space.

    python3 tools/football_from_gml.py football.gml data/
"""
import argparse
import pathlib
import sys

import networkx as nx


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("gml", type=pathlib.Path)
    ap.add_argument("outdir", type=pathlib.Path)
    args = ap.parse_args()

    g = nx.read_gml(args.gml, label="id")
    if g.is_multigraph():
        g = nx.Graph(g)
    g.remove_edges_from(nx.selfloop_edges(g))

    args.outdir.mkdir(parents=True, exist_ok=True)
    with open(args.outdir / "football.edges", "w") as f:
        f.write("# football: %d vertices, %d edges\n" % (g.number_of_nodes(), g.number_of_edges()))
        for u, v in sorted((min(a, b), max(a, b)) for a, b in g.edges()):
            f.write("%s %s\n" % (u, v))
    with open(args.outdir / "football.truth", "w") as f:
        for v in sorted(g.nodes()):
            f.write("%s %s\n" % (v, g.nodes[v]["value"]))

    conferences = {g.nodes[v]["value"] for v in g.nodes()}
    print("%d vertices, %d edges, %d conferences" % (g.number_of_nodes(), g.number_of_edges(), len(conferences)),
          file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
