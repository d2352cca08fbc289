"""Regenerate src/subjoin/data/seed_pairs.json.

Searches the networkx graph atlas (all graphs up to 7 vertices) and a batch
of random regular graphs for cospectral, non-isomorphic pairs.  Needs
networkx; the package itself does not.

    python tools/find_seed_pairs.py
"""

import collections
import itertools
import json
from pathlib import Path

import networkx as nx
import numpy as np
from networkx.generators.atlas import graph_atlas_g

OUT = Path(__file__).resolve().parents[1] / "src" / "subjoin" / "data" / "seed_pairs.json"


def to_graph(G):
    nodes = sorted(G)
    idx = {v: i for i, v in enumerate(nodes)}
    edges = sorted(tuple(sorted((idx[u], idx[v]))) for u, v in G.edges())
    return {"n": len(nodes), "edges": [list(e) for e in edges]}


def matrix(G, kind):
    A = nx.to_numpy_array(G, nodelist=sorted(G))
    D = np.diag(A.sum(1))
    return {"A": A, "L": D - A, "Q": D + A}[kind]


def spectrum_key(G, kind):
    return tuple(np.round(np.linalg.eigvalsh(matrix(G, kind)), 8))


def coronal_key(G, kind):
    w, U = np.linalg.eigh(matrix(G, kind))
    c = U.sum(0) ** 2
    xs = np.linspace(-9.37, 11.13, 23)
    return tuple(np.round([np.sum(c / (x - w)) for x in xs], 8))


def has_isolated(G):
    return min(d for _, d in G.degree()) == 0


def atlas_pairs(kind, want_equal_coronal, connected, isolated=False):
    buckets = collections.defaultdict(list)
    for G in graph_atlas_g()[1:]:
        if connected and not nx.is_connected(G):
            continue
        buckets[G.number_of_nodes(), spectrum_key(G, kind)].append(G)
    for group in buckets.values():
        for G, H in itertools.combinations(group, 2):
            if nx.is_isomorphic(G, H):
                continue
            if isolated and not (has_isolated(G) or has_isolated(H)):
                continue
            if want_equal_coronal is None or (coronal_key(G, kind) == coronal_key(H, kind)) == want_equal_coronal:
                return G, H
    raise LookupError(kind)


def regular_pair(r, n, tries=4000):
    seen = collections.defaultdict(list)
    for s in range(tries):
        G = nx.random_regular_graph(r, n, seed=s)
        if not nx.is_connected(G):
            continue
        key = spectrum_key(G, "A")
        for H in seen[key]:
            if not nx.is_isomorphic(G, H):
                return H, G
        seen[key].append(G)
    raise LookupError((r, n))


def entry(G, H, kind, regular, note):
    return {"h1": to_graph(G), "h2": to_graph(H), "kind": kind, "regular": regular, "note": note}


def main():
    pairs = []
    G, H = regular_pair(4, 10)
    pairs.append(entry(G, H, "A", True, "connected 4-regular graphs on 10 vertices, cospectral for A, L and Q"))
    pairs.append(entry(nx.complement(G), nx.complement(H), "A", True,
                       "complements of the 4-regular pair: 5-regular on 10 vertices"))
    star = nx.star_graph(4)
    c4k1 = nx.disjoint_union(nx.cycle_graph(4), nx.empty_graph(1))
    pairs.append(entry(star, c4k1, "A", False,
                       "K_{1,4} and C4+K1: A-cospectral with different A-coronals"))
    G, H = atlas_pairs("A", True, connected=False)
    pairs.append(entry(G, H, "A", False, "A-cospectral pair with equal A-coronals (graph atlas)"))
    G, H = atlas_pairs("L", None, connected=True)
    pairs.append(entry(G, H, "L", False, "smallest connected L-cospectral pair (graph atlas)"))
    G, H = atlas_pairs("L", None, connected=False, isolated=True)
    pairs.append(entry(G, H, "L", False, "L-cospectral pair where a graph has an isolated vertex"))
    G, H = atlas_pairs("Q", True, connected=False)
    pairs.append(entry(G, H, "Q", False, "Q-cospectral pair with equal Q-coronals, has an isolated vertex"))
    G, H = atlas_pairs("Q", True, connected=True)
    pairs.append(entry(G, H, "Q", False, "connected Q-cospectral pair with equal Q-coronals"))
    OUT.write_text(json.dumps({"pairs": pairs}, indent=1) + "\n")
    print(f"wrote {len(pairs)} pairs to {OUT}")


if __name__ == "__main__":
    main()
