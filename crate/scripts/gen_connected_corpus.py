#!/usr/bin/env python3
"""Write every connected graph on 1..=N vertices (one per isomorphism class) as graph6.

Graphs on n vertices are grown from all graphs on n-1 vertices by adding a vertex
with every possible neighbourhood; classes are deduplicated by nauty certificates.

usage: gen_connected_corpus.py MAX_N > corpus.g6
       gen_connected_corpus.py --extend FILE N > corpus_n.g6

--extend grows only the connected graphs on N-1 vertices listed in FILE; every
connected graph has a vertex whose removal leaves it connected, so this reaches
every connected graph on N vertices.
"""
import sys

import networkx as nx
import pynauty


def certificate(g):
    n = g.number_of_nodes()
    adj = {v: list(g.neighbors(v)) for v in range(n)}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def canonical(g):
    n = g.number_of_nodes()
    adj = {v: list(g.neighbors(v)) for v in range(n)}
    lab = pynauty.canon_label(pynauty.Graph(n, adjacency_dict=adj))
    inverse = {old: new for new, old in enumerate(lab)}
    return nx.relabel_nodes(g, inverse)


def extend(path, n):
    seen = {}
    with open(path) as f:
        parents = [g for g in (nx.from_graph6_bytes(line.strip().encode()) for line in f if line.strip())
                   if g.number_of_nodes() == n - 1]
    for g in parents:
        base = {v: list(g.neighbors(v)) for v in range(n - 1)}
        for mask in range(1, 1 << (n - 1)):
            adj = {v: list(nb) for v, nb in base.items()}
            adj[n - 1] = [v for v in range(n - 1) if mask >> v & 1]
            for v in adj[n - 1]:
                adj[v].append(n - 1)
            pg = pynauty.Graph(n, adjacency_dict=adj)
            cert = pynauty.certificate(pg)
            if cert not in seen:
                seen[cert] = pynauty.canon_label(pg), adj
    lines = []
    for lab, adj in seen.values():
        inverse = {old: new for new, old in enumerate(lab)}
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from((inverse[u], inverse[v]) for u in adj for v in adj[u] if u < v)
        lines.append(nx.to_graph6_bytes(g, header=False).decode().strip())
    lines.sort()
    sys.stdout.write("\n".join(lines) + "\n")
    print("connected graphs on", n, "vertices:", len(lines), file=sys.stderr)


def main():
    if sys.argv[1] == "--extend":
        extend(sys.argv[2], int(sys.argv[3]))
        return
    max_n = int(sys.argv[1])
    level = [nx.empty_graph(1)]
    counts = []
    out = []
    for n in range(1, max_n + 1):
        if n > 1:
            seen = {}
            for g in level:
                for mask in range(1 << (n - 1)):
                    h = g.copy()
                    h.add_node(n - 1)
                    h.add_edges_from((v, n - 1) for v in range(n - 1) if mask >> v & 1)
                    cert = certificate(h)
                    if cert not in seen:
                        seen[cert] = canonical(h)
            level = list(seen.values())
        lines = sorted(
            nx.to_graph6_bytes(g, header=False).decode().strip()
            for g in level
            if nx.is_connected(g)
        )
        counts.append(len(lines))
        out.extend(lines)
    sys.stdout.write("\n".join(out) + "\n")
    print("connected counts per n:", counts, file=sys.stderr)


if __name__ == "__main__":
    main()
