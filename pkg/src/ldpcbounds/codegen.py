"""Random (gamma, rho)-regular Tanner graph generation with girth repair.

Construction is socket matching: gamma stubs per variable, rho per check,
shuffled and paired. Parallel edges are repaired by swapping stubs; short
cycles are repaired by 2-opt edge swaps. A swap is accepted only when both
replacement edges close no cycle below the target girth, so the number of
offending cycles never increases and the repair loop cannot regress.
Everything is driven by one seeded generator, so output is a deterministic
function of the arguments.

Girth targets near the Moore limit for the chosen size are infeasible; the
generator gives up after a swap budget across a few restarts and suggests a
larger n rather than spinning forever.
"""

from __future__ import annotations

import random

from .graphs import TannerGraph, build_tanner_graph, girth


class GenerationError(RuntimeError):
    """The swap budget ran out before the target girth was reached."""


def _find_short_cycle(var_adj, check_adj, n, target, start=0):
    """Locate any cycle shorter than target, as a list of (var, check) edges.

    Breadth-first search from each variable (checks sit at odd depth, offset
    by n); a met frontier closes a cycle, reconstructed through parents up
    to the divergence point. Starts scanning at ``start`` so repair resumes
    near the previous offender.
    """
    depth_cap = target // 2
    for offset in range(n):
        s = (start + offset) % n
        dist = {s: 0}
        parent = {s: -1}
        frontier = [s]
        depth = 0
        while frontier and depth < depth_cap:
            depth += 1
            nxt = []
            for u in frontier:
                nbrs = var_adj[u] if u < n else check_adj[u - n]
                for raw in nbrs:
                    w = raw + n if u < n else raw
                    if w == parent[u]:
                        continue
                    if w in dist:
                        if dist[u] + dist[w] + 1 < target:
                            path_u, path_w = [u], [w]
                            x, y = u, w
                            while x != y:
                                if dist[x] >= dist[y]:
                                    x = parent[x]
                                    path_u.append(x)
                                else:
                                    y = parent[y]
                                    path_w.append(y)
                            nodes = path_u + path_w[::-1][1:]
                            nodes.append(u)
                            edges = []
                            for a, b in zip(nodes, nodes[1:]):
                                if a < n:
                                    edges.append((a, b - n))
                                else:
                                    edges.append((b, a - n))
                            return edges
                    else:
                        dist[w] = depth
                        parent[w] = u
                        nxt.append(w)
            frontier = nxt
    return None


def _edge_cycle_ok(var_adj, check_adj, n, v, c, target):
    """True when edge (v, c) lies on no cycle shorter than target.

    Equivalent to: the distance from v to c avoiding the edge itself is at
    least target - 1.
    """
    limit = target - 2
    dist = {v: 0}
    frontier = [v]
    depth = 0
    while frontier and depth <= limit:
        depth += 1
        nxt = []
        for u in frontier:
            if u < n:
                for j in var_adj[u]:
                    if u == v and j == c:
                        continue
                    w = n + j
                    if w not in dist:
                        if j == c:
                            return depth >= target - 1
                        dist[w] = depth
                        nxt.append(w)
            else:
                for i in check_adj[u - n]:
                    if i not in dist:
                        dist[i] = depth
                        nxt.append(i)
        frontier = nxt
    return True


def _try_repair(var_adj, check_adj, edge_list, n, target, rng, budget):
    """Swap edges until no short cycle remains; returns (success, attempts)."""
    attempts = 0
    start = 0
    while True:
        cycle = _find_short_cycle(var_adj, check_adj, n, target, start)
        if cycle is None:
            return True, attempts
        start = cycle[0][0]
        cycle = list(cycle)
        rng.shuffle(cycle)
        fixed = False
        for v, c in cycle:
            for _ in range(120):
                attempts += 1
                if attempts > budget:
                    return False, attempts
                v2, c2 = edge_list[rng.randrange(len(edge_list))]
                if v2 == v or c2 == c or c2 in var_adj[v] or c in var_adj[v2]:
                    continue
                var_adj[v].discard(c)
                check_adj[c].discard(v)
                var_adj[v2].discard(c2)
                check_adj[c2].discard(v2)
                var_adj[v].add(c2)
                check_adj[c2].add(v)
                var_adj[v2].add(c)
                check_adj[c].add(v2)
                if _edge_cycle_ok(var_adj, check_adj, n, v, c2, target) and _edge_cycle_ok(
                    var_adj, check_adj, n, v2, c, target
                ):
                    edge_list.remove((v, c))
                    edge_list.remove((v2, c2))
                    edge_list.append((v, c2))
                    edge_list.append((v2, c))
                    fixed = True
                    break
                var_adj[v].discard(c2)
                check_adj[c2].discard(v)
                var_adj[v2].discard(c)
                check_adj[c].discard(v2)
                var_adj[v].add(c)
                check_adj[c].add(v)
                var_adj[v2].add(c2)
                check_adj[c2].add(v2)
            if fixed:
                break
        if not fixed:
            return False, attempts


def generate_code(
    n: int,
    gamma: int,
    rho: int,
    min_girth: int,
    seed: int,
    swap_budget: int = 60_000,
    restarts: int = 64,
) -> TannerGraph:
    """Generate a random (gamma, rho)-regular Tanner graph of girth >= min_girth.

    ``n * gamma`` must be divisible by rho (the check count is
    ``n * gamma / rho``). Raises :class:`GenerationError` when the budget
    runs out, which at small n usually means the girth target is infeasible.
    """
    if n < 1 or gamma < 1 or rho < 1:
        raise ValueError(f"n, gamma, rho must be positive, got {n}, {gamma}, {rho}")
    if (n * gamma) % rho != 0:
        raise ValueError(
            f"n * gamma = {n * gamma} is not divisible by rho = {rho}; "
            "no regular check side exists"
        )
    if min_girth % 2 != 0 or min_girth < 4:
        raise ValueError(f"min_girth must be an even integer >= 4, got {min_girth}")
    m = n * gamma // rho
    if rho > n or gamma > m:
        raise ValueError(
            f"degrees need rho <= n and gamma <= m for a simple graph, "
            f"got rho={rho}, n={n}, gamma={gamma}, m={m}"
        )
    rng = random.Random(seed)
    spent = 0
    for _ in range(restarts):
        var_sockets = [v for v in range(n) for _ in range(gamma)]
        check_sockets = [c for c in range(m) for _ in range(rho)]
        rng.shuffle(check_sockets)
        for _ in range(500):
            seen = set()
            duplicate = None
            for idx in range(len(var_sockets)):
                e = (var_sockets[idx], check_sockets[idx])
                if e in seen:
                    duplicate = idx
                    break
                seen.add(e)
            if duplicate is None:
                break
            j = rng.randrange(len(check_sockets))
            check_sockets[duplicate], check_sockets[j] = (
                check_sockets[j],
                check_sockets[duplicate],
            )
        else:
            continue
        var_adj = [set() for _ in range(n)]
        check_adj = [set() for _ in range(m)]
        for v, c in zip(var_sockets, check_sockets):
            var_adj[v].add(c)
            check_adj[c].add(v)
        edge_list = list(zip(var_sockets, check_sockets))
        ok, attempts = _try_repair(
            var_adj, check_adj, edge_list, n, min_girth, rng, swap_budget - spent
        )
        spent += attempts
        if ok:
            t = build_tanner_graph(
                [(v, c) for v in range(n) for c in var_adj[v]], n=n, m=m
            )
            if t.gamma != gamma or t.rho != rho or girth(t) < min_girth:
                raise AssertionError("generator postcondition violated; repair logic bug")
            return t
        if spent >= swap_budget:
            break
    raise GenerationError(
        f"girth {min_girth} not reached for n={n}, gamma={gamma}, rho={rho} "
        f"after {spent} swap attempts; try a larger n"
    )
