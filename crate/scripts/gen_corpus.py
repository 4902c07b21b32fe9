#!/usr/bin/env python3
"""Generate graph6 corpora of all non-isomorphic graphs of small order.

Orders up to 7 come from the networkx graph atlas. Order 8 is obtained by
adding one vertex, with every possible neighbourhood, to each order-7 graph
and removing isomorphic duplicates.

Writes, for each order n in 1..=8:
    all{n}.g6   every graph on n vertices
    conn{n}.g6  the connected ones
"""
import itertools
import sys
from collections import defaultdict
from pathlib import Path

import networkx as nx


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def extend(graphs, n):
    buckets = defaultdict(list)
    for base in graphs:
        for k in range(n):
            for nbrs in itertools.combinations(range(n - 1), k):
                h = base.copy()
                h.add_node(n - 1)
                h.add_edges_from((n - 1, u) for u in nbrs)
                key = (
                    h.number_of_edges(),
                    tuple(sorted(d for _, d in h.degree())),
                    nx.weisfeiler_lehman_graph_hash(h, iterations=3),
                )
                bucket = buckets[key]
                if not any(nx.is_isomorphic(h, other) for other in bucket):
                    bucket.append(h)
    return [h for bucket in buckets.values() for h in bucket]


def main(out):
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    by_order = defaultdict(list)
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() >= 1:
            by_order[g.number_of_nodes()].append(g)
    by_order[8] = extend(by_order[7], 8)
    for n in sorted(by_order):
        lines = sorted(g6(g) for g in by_order[n])
        conn = sorted(g6(g) for g in by_order[n] if nx.is_connected(g))
        (out / f"all{n}.g6").write_text("".join(l + "\n" for l in lines))
        (out / f"conn{n}.g6").write_text("".join(l + "\n" for l in conn))
        print(n, len(lines), len(conn))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "crates/core/tests/data")
