"""Structural transforms between simple graphs and Tanner graphs.

Four transforms used by the size/correction bound arguments:

* :func:`reduced_graph` drops degree-one checks (they never constrain the
  variables they hang off).
* :func:`augmented_graph` pads every variable up to a target degree with
  fresh pendant checks, the inverse direction of reduction.
* :func:`edge_vertex_incidence` subdivides every edge of a simple graph
  with a degree-two check, which exactly doubles the girth.
* :func:`inverse_edge_vertex_incidence` contracts degree-two (and higher)
  checks back to edges, halving the girth at worst.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .graphs import Graph, GraphError, TannerGraph, build_tanner_graph


def reduced_graph(t: TannerGraph) -> TannerGraph:
    """Remove checks of degree one (and zero), keeping all variables.

    Surviving checks are renumbered densely in their original order, so the
    result of reducing an already-reduced graph is identical to its input.
    """
    keep = [c for c in range(t.m) if t.check_degree(c) >= 2]
    relabel = {c: i for i, c in enumerate(keep)}
    edges = [(v, relabel[c]) for v, c in t.edges() if c in relabel]
    return build_tanner_graph(edges, n=t.n, m=len(keep))


def augmented_graph(t: TannerGraph, gamma: int) -> TannerGraph:
    """Pad every variable to degree ``gamma`` with fresh degree-one checks.

    Each new check is adjacent to exactly one variable, so no new cycles are
    created and the girth is unchanged. A variable already above ``gamma``
    is an error, reported by index.
    """
    if gamma < 1:
        raise ValueError(f"target degree must be positive, got {gamma}")
    edges = list(t.edges())
    next_check = t.m
    for v in range(t.n):
        deficit = gamma - t.var_degree(v)
        if deficit < 0:
            raise ValueError(
                f"variable {v} has degree {t.var_degree(v)}, above target {gamma}"
            )
        for _ in range(deficit):
            edges.append((v, next_check))
            next_check += 1
    return build_tanner_graph(edges, n=t.n, m=next_check)


def edge_vertex_incidence(g: Graph) -> TannerGraph:
    """Tanner graph whose variables are the nodes of ``g`` and whose checks are its edges.

    Check ``i`` joins the two endpoints of the ``i``-th edge in sorted edge
    order, so every check has degree two. Cycles of ``g`` map to cycles of
    twice the length and back, hence ``girth(result) == 2 * girth(g)``.
    """
    edges = []
    for i, (u, v) in enumerate(g.edges()):
        edges.append((u, i))
        edges.append((v, i))
    return build_tanner_graph(edges, n=g.n, m=g.edge_count)


@dataclass(frozen=True)
class InverseIncidenceResult:
    """A contracted simple graph plus how many parallel edges were merged.

    ``collapsed_edges`` counts edge slots lost to the simple-graph collapse:
    it is zero exactly when no two contracted checks produced the same node
    pair, which holds whenever the input girth is at least six.
    """

    graph: Graph
    collapsed_edges: int


def inverse_edge_vertex_incidence(
    t: TannerGraph,
    root_choice: Union[Callable[[int, tuple[int, ...]], int], None] = None,
) -> InverseIncidenceResult:
    """Contract every check to edges from a chosen root neighbour.

    Every check must have degree at least two. For each check a root
    variable is picked (``root_choice(check, neighbors)`` if given, else the
    lowest-numbered neighbour) and the check is replaced by edges from the
    root to each other neighbour. Node set and count are the variables of
    ``t``, unchanged. Any shortest cycle of ``t`` maps to a closed walk of
    half the length, so ``girth(result) >= girth(t) / 2`` when the result
    still has a cycle.
    """
    pair_seen: set[tuple[int, int]] = set()
    collapsed = 0
    edges: list[tuple[int, int]] = []
    for c in range(t.m):
        nbrs = t.check_adj[c]
        if len(nbrs) < 2:
            raise ValueError(f"check {c} has degree {len(nbrs)}, need at least 2")
        if root_choice is None:
            root = nbrs[0]
        else:
            root = root_choice(c, nbrs)
            if root not in nbrs:
                raise ValueError(f"root {root} is not a neighbour of check {c}")
        for v in nbrs:
            if v == root:
                continue
            key = (root, v) if root < v else (v, root)
            if key in pair_seen:
                collapsed += 1
            else:
                pair_seen.add(key)
                edges.append(key)
    return InverseIncidenceResult(Graph.from_edges(t.n, edges), collapsed)
