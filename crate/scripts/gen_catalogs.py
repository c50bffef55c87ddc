#!/usr/bin/env python3
"""Generate isomorph-free graph6 catalogs of all graphs on 1..N vertices.

Graphs of order n are produced by attaching a new vertex to every graph of
order n-1 in every possible way and keeping one canonical representative per
isomorphism class (nauty canonical labelling via pynauty).

    pip install pynauty networkx
    python3 scripts/gen_catalogs.py 8 crates/factorspec/tests/data
"""
import sys
from pathlib import Path

import networkx as nx
import pynauty


def canonical(n, edges):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    g = pynauty.Graph(n, adjacency_dict=adj)
    lab = pynauty.canon_label(g)
    pos = {old: new for new, old in enumerate(lab)}
    return tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in edges))


def to_g6(n, edges):
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def is_connected(n, edges):
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return nx.is_connected(h)


def main():
    nmax = int(sys.argv[1])
    out = Path(sys.argv[2])
    out.mkdir(parents=True, exist_ok=True)
    level = [()]  # order 1: single vertex
    for n in range(1, nmax + 1):
        if n > 1:
            seen = set()
            for edges in level:
                for mask in range(1 << (n - 1)):
                    new = list(edges) + [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
                    seen.add(canonical(n, new))
            level = sorted(seen, key=lambda e: (len(e), e))
        lines = [to_g6(n, e) for e in level]
        (out / f"graphs{n}.g6").write_text("".join(l + "\n" for l in lines))
        conn = sum(1 for e in level if is_connected(n, e))
        print(n, len(level), conn)


if __name__ == "__main__":
    main()
