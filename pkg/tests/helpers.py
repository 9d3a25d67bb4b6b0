"""Independent oracles and corpus builders shared by the tests.

The girth oracle here intentionally uses a different algorithm from the
library (per-edge deletion plus shortest path, versus per-node BFS cycle
detection), so the two can disagree only if one of them is wrong.
"""

from __future__ import annotations

import math
import random

from ldpcbounds import Graph, TannerGraph, build_tanner_graph


def _distance_without_edge(g: Graph, src: int, dst: int):
    """Shortest src-dst path length avoiding the direct edge, None if disconnected."""
    seen = {src}
    frontier = [src]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            for y in g.adj[x]:
                if x == src and y == dst:
                    continue
                if y == dst:
                    return d
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return None


def girth_by_edge_deletion(g: Graph):
    """Oracle: min over edges of (shortest path around the edge) + 1."""
    best = math.inf
    for u, v in g.edges():
        around = _distance_without_edge(g, u, v)
        if around is not None and around + 1 < best:
            best = around + 1
    return best


def to_networkx(g: Graph):
    import networkx as nx

    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def random_simple_graph(rng: random.Random, n: int, edges: int) -> Graph:
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(n, rng.sample(pool, min(edges, len(pool))))


def random_tanner(rng: random.Random, n: int, m: int, edges: int) -> TannerGraph:
    pool = [(v, c) for v in range(n) for c in range(m)]
    return build_tanner_graph(rng.sample(pool, min(edges, len(pool))), n=n, m=m)


def graph_corpus(seed: int = 0, count: int = 30) -> list[Graph]:
    """Mixed random simple graphs, sizes 4..12, sparse through dense."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(4, 12)
        max_edges = n * (n - 1) // 2
        out.append(random_simple_graph(rng, n, rng.randint(n // 2, max_edges)))
    return out
