"""Immutable undirected multigraph plus the degree, cut and component queries
every criterion in the package is built on."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

VertexSet = frozenset  # frozenset[int]; canonical, order-free


class GraphError(ValueError):
    pass


class GraphFormatError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Component:
    vertices: frozenset[int]
    edges_to_t: int = 0

    def __len__(self) -> int:
        return len(self.vertices)

    def sorted(self) -> list[int]:
        return sorted(self.vertices)


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph on vertices ``0..n-1``.

    ``edges`` keeps the input multiset, each pair normalized to ``(min, max)``.
    Parallel edges are kept; self-loops are rejected at construction.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        norm = []
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {u}-{v} has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            norm.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbour lists with multiplicity, each sorted ascending."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def multiplicity(self) -> dict[tuple[int, int], int]:
        mult: dict[tuple[int, int], int] = {}
        for e in self.edges:
            mult[e] = mult.get(e, 0) + 1
        return mult

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.degrees[v]

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def is_simple(self) -> bool:
        return all(c == 1 for c in self.multiplicity.values())

    def simple(self) -> Graph:
        """Same vertex set with parallel edges collapsed."""
        return Graph(self.n, tuple(sorted(self.multiplicity)))

    def edges_between(self, a: Iterable[int], b: Iterable[int]) -> int:
        a, b = self._vset(a), self._vset(b)
        if a & b:
            raise GraphError(f"vertex sets are not disjoint: {sorted(a & b)}")
        return sum(1 for u, v in self.edges if (u in a and v in b) or (u in b and v in a))

    def components_after_removal(
        self, removed: Iterable[int] = (), t: Iterable[int] | None = None
    ) -> list[Component]:
        """Connected components of ``G - removed`` ordered by smallest vertex.

        When ``t`` is given each component also records ``e_G(V(C), t)``.
        """
        x = self._vset(removed)
        tset = self._vset(t) if t is not None else frozenset()
        seen = set(x)
        out = []
        for s in range(self.n):
            if s in seen:
                continue
            seen.add(s)
            stack, comp = [s], [s]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
                        comp.append(w)
            cset = frozenset(comp)
            to_t = sum(1 for u in cset for w in self.adjacency[u] if w in tset)
            out.append(Component(cset, to_t))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components_after_removal()) == 1

    def to_text(self, comment: str | None = None) -> str:
        lines = [f"# {c}" for c in comment.splitlines()] if comment else []
        lines.append(f"{self.n} {self.m}")
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} outside 0..{self.n - 1}")

    def _vset(self, s: Iterable[int]) -> frozenset[int]:
        s = frozenset(s)
        for v in s:
            self._check_vertex(v)
        return s


def build_graph(n: int, edge_list: Iterable[Iterable[int]]) -> Graph:
    return Graph(n, tuple(tuple(e) for e in edge_list))


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def edges_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    return g.edges_between(a, b)


def components_after_removal(g: Graph, removed: Iterable[int]) -> list[Component]:
    return g.components_after_removal(removed)


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` lines format; ``#`` lines are comments."""
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative count in header", lineno)
            header = (a, b)
            continue
        if len(edges) == header[1]:
            raise GraphFormatError(f"more than the declared {header[1]} edges", lineno)
        try:
            edges.append(Graph(header[0], ((a, b),)).edges[0])
        except GraphError as exc:
            raise GraphFormatError(str(exc), lineno) from None
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"declared {header[1]} edges, found {len(edges)}")
    return Graph(header[0], tuple(edges))


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def relabel_from_labels(pairs: Iterable[tuple[str, str]]) -> tuple[Graph, list[str]]:
    """Map arbitrary vertex labels to dense ids in first-appearance order."""
    ids: dict[str, int] = {}
    edges = []
    for a, b in pairs:
        for lab in (a, b):
            if lab not in ids:
                ids[lab] = len(ids)
        edges.append((ids[a], ids[b]))
    return build_graph(len(ids), edges), list(ids)
