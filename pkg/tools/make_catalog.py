#!/usr/bin/env python3
"""Write a graph6 catalog of all non-isomorphic graphs on 8 vertices.

Every 8-vertex graph minus its last vertex is a 7-vertex graph, so
extending each graph of the networkx atlas (all graphs up to 7 vertices)
by a new vertex in all 128 ways covers every isomorphism class.
Duplicates are removed with a Weisfeiler-Lehman hash plus VF2.

    python tools/make_catalog.py catalogs/graphs8.g6
"""

import argparse
import sys
from collections import defaultdict

import networkx as nx

KNOWN_COUNTS = {8: 12346}  # OEIS A000088


def extend_all(base_graphs, n):
    for base in base_graphs:
        for subset in range(1 << (n - 1)):
            g = nx.Graph(base)
            g.add_node(n - 1)
            g.add_edges_from((i, n - 1) for i in range(n - 1) if subset >> i & 1)
            yield g


def dedupe(graphs):
    buckets = defaultdict(list)
    for g in graphs:
        key = (tuple(sorted(d for _, d in g.degree())), nx.weisfeiler_lehman_graph_hash(g, iterations=3))
        if not any(nx.is_isomorphic(g, h) for h in buckets[key]):
            buckets[key].append(g)
    return [g for bucket in buckets.values() for g in bucket]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("output")
    parser.add_argument("--order", type=int, default=8)
    args = parser.parse_args(argv)
    n = args.order
    if n != 8:
        parser.error("only order 8 is supported (built on the 7-vertex atlas)")
    base = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n - 1]
    graphs = dedupe(extend_all(base, n))
    if len(graphs) != KNOWN_COUNTS[n]:
        print(f"expected {KNOWN_COUNTS[n]} graphs, got {len(graphs)}", file=sys.stderr)
        return 1
    lines = sorted(nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs)
    with open(args.output, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {args.output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
