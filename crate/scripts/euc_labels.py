"""Louvain and asynchronous label propagation labels for an edge list.

Usage: euc_labels.py EDGES OUTDIR

The graph is read as undirected with self-loops removed. Every vertex that
appears in the edge list gets a label.
"""

import sys
from pathlib import Path

import networkx as nx
from networkx.algorithms import community


def write(path, parts):
    with open(path, "w") as f:
        for c, part in enumerate(parts):
            for v in sorted(part):
                f.write(f"{v} {c}\n")


def main():
    edges, out = sys.argv[1], Path(sys.argv[2])
    g = nx.read_edgelist(edges, nodetype=int, create_using=nx.Graph)
    g.remove_edges_from(nx.selfloop_edges(g))
    write(out / "louvain.labels", community.louvain_communities(g, seed=0))
    write(out / "alp.labels", community.asyn_lpa_communities(g, seed=0))


if __name__ == "__main__":
    main()
