"""Maximum-cardinality matching on general graphs (Edmonds' blossom algorithm)."""

from __future__ import annotations

from collections import deque

from .graph import Graph

BRUTE_FORCE_EDGE_CAP = 24


def _simple_adjacency(h: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(h.n)]
    for u, v in sorted(h.multiplicity):
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    return adj


def _augmenting_path_end(root: int, adj: list[list[int]], match: list[int]) -> tuple[int, list[int]]:
    n = len(adj)
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # odd cycle: contract the blossom onto its base
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def max_matching(h: Graph) -> list[tuple[int, int]]:
    """A maximum matching of ``h`` as a sorted list of ``(u, v)`` with u < v.

    Parallel edges are collapsed first. Vertices are scanned in increasing id
    order, so the result is reproducible.
    """
    adj = _simple_adjacency(h)
    match = [-1] * h.n
    for u in range(h.n):
        if match[u] == -1:
            for w in adj[u]:
                if match[w] == -1:
                    match[u], match[w] = w, u
                    break
    for root in range(h.n):
        if match[root] != -1:
            continue
        end, parent = _augmenting_path_end(root, adj, match)
        while end != -1:
            pv = parent[end]
            nxt = match[pv]
            match[end], match[pv] = pv, end
            end = nxt
    return sorted((u, w) for u, w in enumerate(match) if u < w)


def matching_size(h: Graph) -> int:
    return len(max_matching(h))


def has_perfect_matching(h: Graph) -> bool:
    return h.n % 2 == 0 and 2 * matching_size(h) == h.n


def is_matching(h: Graph, edges: list[tuple[int, int]]) -> bool:
    covered: set[int] = set()
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if key not in h.multiplicity or u in covered or v in covered or u == v:
            return False
        covered.update((u, v))
    return True


def brute_force_matching(h: Graph, cap: int = BRUTE_FORCE_EDGE_CAP) -> int:
    """Maximum matching size by exhaustive branching (test oracle)."""
    if h.m > cap:
        raise ValueError(f"brute-force matching capped at {cap} edges, graph has {h.m}")
    adj = _simple_adjacency(h)

    def best(free: frozenset[int]) -> int:
        for v in sorted(free):
            nbrs = [w for w in adj[v] if w in free]
            if nbrs:
                break
        else:
            return 0
        rest = free - {v}
        # v unmatched, or matched to each available neighbour in turn
        return max([best(rest)] + [1 + best(rest - {w}) for w in nbrs])

    return best(frozenset(range(h.n)))
