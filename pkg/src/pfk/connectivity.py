"""Global edge connectivity with a minimum-cut shore as certificate."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, GraphError


@dataclass(frozen=True)
class CutCertificate:
    value: int
    side: frozenset[int]


def _capacities(g: Graph) -> list[dict[int, int]]:
    cap: list[dict[int, int]] = [{} for _ in range(g.n)]
    for (u, v), c in g.multiplicity.items():
        cap[u][v] = cap[u].get(v, 0) + c
        cap[v][u] = cap[v].get(u, 0) + c
    return cap


def max_flow_cut(g: Graph, s: int, t: int, limit: int | None = None) -> tuple[int, frozenset[int]]:
    """Unit-capacity max flow between ``s`` and ``t`` (Edmonds-Karp).

    Returns the flow value and the source side of a minimum s-t cut. With
    ``limit`` the search stops once the flow reaches it; the side is then
    meaningless.
    """
    residual = _capacities(g)
    flow = 0
    while limit is None or flow < limit:
        parent = {s: s}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for w in sorted(residual[u]):
                if residual[u][w] > 0 and w not in parent:
                    parent[w] = u
                    queue.append(w)
        if t not in parent:
            return flow, frozenset(parent)
        # unit augmentation: every path has bottleneck >= 1, parallel edges give more
        bottleneck = min(residual[parent[w]][w] for w in _path(parent, t))
        for w in _path(parent, t):
            u = parent[w]
            residual[u][w] -= bottleneck
            residual[w][u] = residual[w].get(u, 0) + bottleneck
        flow += bottleneck
    return flow, frozenset()


def _path(parent: dict[int, int], t: int):
    w = t
    while parent[w] != w:
        yield w
        w = parent[w]


def edge_connectivity(g: Graph) -> tuple[int, CutCertificate]:
    """lambda(G) as the minimum over t of maxflow(0, t).

    Disconnected graphs give 0 with the component of vertex 0 as the shore.
    Ties go to the lexicographically smallest shore (sorted vertex tuple).
    """
    if g.n < 2:
        raise GraphError("edge connectivity needs at least two vertices")
    best: tuple[int, tuple[int, ...]] | None = None
    for t in range(1, g.n):
        value, side = max_flow_cut(g, 0, t)
        key = (value, tuple(sorted(side)))
        if best is None or key < best:
            best = key
    assert best is not None
    return best[0], CutCertificate(best[0], frozenset(best[1]))


def is_k_edge_connected(g: Graph, k: int) -> bool:
    if g.n < 2:
        raise GraphError("edge connectivity needs at least two vertices")
    if k <= 0:
        return True
    if g.min_degree < k:
        return False
    return all(max_flow_cut(g, 0, t, limit=k)[0] >= k for t in range(1, g.n))


def brute_force_edge_connectivity(g: Graph) -> int:
    """Minimum over all 2^(n-1)-1 shores containing vertex 0 (test oracle)."""
    if g.n < 2:
        raise GraphError("edge connectivity needs at least two vertices")
    full = (1 << g.n) - 1
    best = None
    for mask in range(1, full, 2):
        cut = sum(1 for u, v in g.edges if ((mask >> u) ^ (mask >> v)) & 1)
        if best is None or cut < best:
            best = cut
    return best


def bridges(g: Graph) -> list[int]:
    """Indices into ``g.edges`` of every bridge (iterative lowlink DFS).

    A parallel copy is never a bridge: the DFS skips only the tree edge's own
    index, not every edge to the parent.
    """
    inc: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        inc[u].append((v, i))
        inc[v].append((u, i))
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    found = []
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(inc[root]))]
        while stack:
            u, via, it = stack[-1]
            for w, i in it:
                if i == via:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, i, iter(inc[w])))
                    break
                low[u] = min(low[u], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        found.append(via)
    return sorted(found)


def has_bridge(g: Graph) -> bool:
    return bool(bridges(g))
