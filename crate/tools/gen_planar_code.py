#!/usr/bin/env python3
"""Write every plane triangulation of a given order to a planar_code file.

Independent of the Rust generator: classes are reached by breadth-first
search over diagonal flips starting from K2 + P(n-2) (the flip graph of
triangulations of fixed order is connected), isomorphism is decided by
networkx, and rotations come from networkx's planarity embedding.

Usage: gen_planar_code.py N OUT.pc
"""

import sys
from collections import defaultdict, deque

import networkx as nx


def start_graph(n):
    g = nx.Graph()
    g.add_edge(0, 1)
    for i in range(2, n):
        g.add_edge(0, i)
        g.add_edge(1, i)
        if i + 1 < n:
            g.add_edge(i, i + 1)
    return g


def flips(g):
    ok, emb = nx.check_planarity(g)
    assert ok
    for u, v in list(g.edges()):
        if g.degree(u) <= 3 or g.degree(v) <= 3:
            continue
        a = emb[u][v]["cw"]
        b = emb[u][v]["ccw"]
        if a == b or g.has_edge(a, b):
            continue
        h = g.copy()
        h.remove_edge(u, v)
        h.add_edge(a, b)
        yield h


def key(g):
    return nx.weisfeiler_lehman_graph_hash(g, iterations=4)


def enumerate_classes(n):
    first = start_graph(n)
    buckets = defaultdict(list)
    buckets[key(first)].append(first)
    order = [first]
    queue = deque([first])
    while queue:
        g = queue.popleft()
        for h in flips(g):
            bucket = buckets[key(h)]
            if any(nx.is_isomorphic(h, other) for other in bucket):
                continue
            bucket.append(h)
            order.append(h)
            queue.append(h)
    return order


def encode(graphs):
    out = bytearray(b">>planar_code<<")
    for g in graphs:
        ok, emb = nx.check_planarity(g)
        assert ok
        n = g.number_of_nodes()
        out.append(n)
        for v in range(n):
            out.extend(w + 1 for w in emb.neighbors_cw_order(v))
            out.append(0)
    return bytes(out)


def main():
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    n = int(sys.argv[1])
    graphs = enumerate_classes(n)
    for g in graphs:
        assert g.number_of_edges() == 3 * n - 6
    with open(sys.argv[2], "wb") as f:
        f.write(encode(graphs))
    print(f"n={n}: {len(graphs)} triangulations -> {sys.argv[2]}")


if __name__ == "__main__":
    main()
