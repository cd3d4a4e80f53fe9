"""Named graphs, the tight even-factor family, random k-edge-connected graphs
and exhaustive small-graph streams."""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

from .connectivity import is_k_edge_connected
from .graph import Graph

ENUMERATION_CAP = 7


@dataclass(frozen=True)
class Remark1Instance:
    graph: Graph
    hubs: frozenset[int]
    m: int
    chosen: tuple[int, ...]  # one vertex per K_{2m} copy, joined to every hub
    copies: tuple[tuple[int, ...], ...]


def tight_family(m: int) -> Remark1Instance:
    """m+1 copies of K_{2m}, m+1 hubs, one chosen vertex per copy joined to all hubs.

    Copies take consecutive id blocks, hubs come last. Works for any m >= 1;
    :func:`remark1_family` enforces the even case.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    size = 2 * m
    copies = tuple(tuple(range(c * size, (c + 1) * size)) for c in range(m + 1))
    hub0 = (m + 1) * size
    hubs = tuple(range(hub0, hub0 + m + 1))
    edges = [e for block in copies for e in combinations(block, 2)]
    chosen = tuple(block[0] for block in copies)
    edges.extend((c, h) for c in chosen for h in hubs)
    return Remark1Instance(Graph(hub0 + m + 1, tuple(edges)), frozenset(hubs), m, chosen, copies)


def remark1_family(m: int) -> Remark1Instance:
    if m < 2 or m % 2:
        raise ValueError(f"the tight even-factor family needs an even m >= 2, got {m}")
    return tight_family(m)


def complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"a simple cycle needs n >= 3, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"a path needs n >= 1, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def star(k: int) -> Graph:
    if k < 0:
        raise ValueError(f"star needs k >= 0 leaves, got {k}")
    return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


_NAMED = {"complete": complete, "cycle": cycle, "path": path, "star": star}


def named_graph(name: str, param: int | None = None) -> Graph:
    """``petersen`` or one of ``complete``/``cycle``/``path``/``star`` with a size.

    ``name`` may also carry the size inline, e.g. ``"complete(4)"``.
    """
    name = name.strip().lower()
    if "(" in name and name.endswith(")"):
        name, arg = name[:-1].split("(", 1)
        param = int(arg)
    if name == "petersen":
        if param is not None:
            raise ValueError("petersen takes no parameter")
        return petersen()
    if name not in _NAMED:
        raise ValueError(f"unknown graph {name!r}; expected petersen, {', '.join(_NAMED)}")
    if param is None:
        raise ValueError(f"{name} needs a size parameter")
    return _NAMED[name](param)


def harary(k: int, n: int) -> Graph:
    """Harary graph H_{k,n}: k-connected with the minimum number of edges."""
    if not 1 <= k < n:
        raise ValueError(f"Harary graph needs 1 <= k < n, got k={k}, n={n}")
    if k == 1:
        return path(n)
    edges = set()
    r = k // 2
    for i in range(n):
        for j in range(1, r + 1):
            edges.add(tuple(sorted((i, (i + j) % n))))
    if k % 2:
        if n % 2 == 0:
            for i in range(n // 2):
                edges.add((i, i + n // 2))
        else:
            for i in range((n + 1) // 2):
                edges.add(tuple(sorted((i, (i + (n + 1) // 2) % n))))
    return Graph(n, tuple(sorted(edges)))


def random_k_edge_connected(
    n: int, k: int, seed: int, extra: float = 0.15, min_degree: int | None = None
) -> Graph:
    """Simple graph with lambda >= k, deterministic in ``seed``.

    A Harary backbone is randomly relabelled, each missing pair is added with
    probability ``extra``, then random edges go to vertices below
    ``min_degree`` until none remain.
    """
    if k < 1 or n < k + 1:
        raise ValueError(f"need 1 <= k <= n-1 for a simple k-edge-connected graph, got n={n}, k={k}")
    if min_degree is not None and min_degree > n - 1:
        raise ValueError(f"min degree {min_degree} impossible on {n} vertices")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {tuple(sorted((perm[u], perm[v]))) for u, v in harary(k, n).edges}
    for e in combinations(range(n), 2):
        if e not in edges and rng.random() < extra:
            edges.add(e)
    if min_degree is not None:
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        for v in range(n):
            while deg[v] < min_degree:
                w = rng.choice([w for w in range(n) if w != v and tuple(sorted((v, w))) not in edges])
                edges.add(tuple(sorted((v, w))))
                deg[v] += 1
                deg[w] += 1
    g = Graph(n, tuple(sorted(edges)))
    if not is_k_edge_connected(g, k):
        raise AssertionError(f"generated graph is not {k}-edge-connected (n={n}, seed={seed})")
    return g


def enumerate_small_graphs(n: int, cap: int = ENUMERATION_CAP) -> Iterator[Graph]:
    """All 2^(n choose 2) labelled simple graphs on n vertices, by bitmask.

    Bit i of the mask selects the i-th pair of ``combinations(range(n), 2)``.
    """
    if n > cap:
        raise ValueError(f"exhaustive enumeration capped at n <= {cap}, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
