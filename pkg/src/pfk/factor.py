"""Parity factors via a per-vertex gadget reduction to perfect matching."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from .criteria import DegreeSpec, InvalidSpec, validate_spec
from .graph import Graph, GraphError
from .matching import max_matching

BRUTE_FORCE_EDGE_CAP = 22


@dataclass(frozen=True)
class VertexGadget:
    edge_vertices: tuple[int, ...]  # one per incident edge, in edge-index order
    core: tuple[int, ...]
    slack: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class GadgetGraph:
    h: Graph
    external_edge_map: dict[tuple[int, int], int]  # H edge -> index into G.edges
    gadgets: tuple[VertexGadget, ...]


@dataclass(frozen=True)
class ParityFactor:
    edges: tuple[tuple[int, int], ...]  # sorted; parallel copies repeat
    degrees: tuple[int, ...]

    def as_dict(self) -> dict:
        return {"exists": True, "edges": [list(e) for e in self.edges], "degrees": list(self.degrees)}


def _factor(g: Graph, edge_ids: Iterable[int]) -> ParityFactor:
    edges = sorted(g.edges[i] for i in edge_ids)
    deg = [0] * g.n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return ParityFactor(tuple(edges), tuple(deg))


def cap_f(g: Graph, gvec: Sequence[int]) -> DegreeSpec | None:
    """Largest f <= d_G(v) with f = g (mod 2); None when that falls below g."""
    if len(gvec) != g.n:
        raise InvalidSpec(f"g has {len(gvec)} entries for a graph on {g.n} vertices")
    f = []
    for v, lo in enumerate(gvec):
        d = g.degrees[v]
        top = d if (d - lo) % 2 == 0 else d - 1
        if top < lo:
            return None
        f.append(top)
    return DegreeSpec(tuple(gvec), tuple(f))


def build_gadget(g: Graph, spec: DegreeSpec) -> GadgetGraph:
    """H has a perfect matching iff G has a (g,f)-parity factor.

    Per vertex v of degree d: d edge-vertices, d - f(v) core vertices and
    (f(v) - g(v)) / 2 adjacent slack pairs, every core and slack vertex joined
    to all of v's edge-vertices. Edge-vertices of the two ends of each G-edge
    are joined; those are the external edges.
    """
    bad = validate_spec(g, spec)
    if bad:
        raise InvalidSpec("; ".join(bad))
    for v in range(g.n):
        if spec.f[v] > g.degrees[v]:
            raise InvalidSpec(f"vertex {v}: f={spec.f[v]} exceeds degree {g.degrees[v]}; apply cap_f first")

    counter = 0

    def fresh(k: int) -> tuple[int, ...]:
        nonlocal counter
        out = tuple(range(counter, counter + k))
        counter += k
        return out

    slot: dict[tuple[int, int], int] = {}  # (edge index, endpoint) -> edge-vertex
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)

    gadgets = []
    h_edges: list[tuple[int, int]] = []
    for v in range(g.n):
        d = g.degrees[v]
        ev = fresh(d)
        for i, x in zip(incident[v], ev):
            slot[(i, v)] = x
        core = fresh(d - spec.f[v])
        pairs = tuple((a, a + 1) for a in fresh(spec.f[v] - spec.g[v])[::2])
        for c in core:
            h_edges.extend((x, c) for x in ev)
        for a, b in pairs:
            h_edges.append((a, b))
            h_edges.extend((x, a) for x in ev)
            h_edges.extend((x, b) for x in ev)
        gadgets.append(VertexGadget(ev, core, pairs))

    external = {}
    for i, (u, v) in enumerate(g.edges):
        e = (slot[(i, u)], slot[(i, v)])
        h_edges.append(e)
        external[e] = i
    return GadgetGraph(Graph(counter, tuple(h_edges)), external, tuple(gadgets))


def _clamp_to_degree(g: Graph, spec: DegreeSpec) -> DegreeSpec | None:
    f = []
    for v in range(g.n):
        top = min(spec.f[v], g.degrees[v])
        if (top - spec.f[v]) % 2:
            top -= 1
        if top < spec.g[v]:
            return None
        f.append(top)
    return DegreeSpec(spec.g, tuple(f))


def find_parity_factor(g: Graph, spec: DegreeSpec) -> ParityFactor | None:
    """A (g,f)-parity factor from a maximum matching of the gadget, or None.

    f above the degree is lowered to the largest attainable value of the same
    parity first, which does not change existence.
    """
    bad = validate_spec(g, spec)
    if bad:
        raise InvalidSpec("; ".join(bad))
    capped = _clamp_to_degree(g, spec)
    if capped is None:
        return None
    gadget = build_gadget(g, capped)
    matching = max_matching(gadget.h)
    if 2 * len(matching) != gadget.h.n:
        return None
    factor = _factor(g, (gadget.external_edge_map[e] for e in matching if e in gadget.external_edge_map))
    assert not verify_factor(g, factor.edges, spec)
    return factor


def find_min_parity_factor(g: Graph, gvec: Sequence[int]) -> ParityFactor | None:
    """Factor with d_F >= g and d_F = g (mod 2), with no upper bound.

    An exact g-factor is tried first so that sparse answers are preferred.
    """
    spec = cap_f(g, gvec)
    if spec is None:
        return None
    if spec.f != spec.g:
        exact = find_parity_factor(g, DegreeSpec(spec.g, spec.g))
        if exact is not None:
            return exact
    return find_parity_factor(g, spec)


def verify_factor(g: Graph, edges: Iterable[Sequence[int]], spec: DegreeSpec) -> list[str]:
    """Every bound or parity violation of F; empty means F is a parity factor."""
    if len(spec) != g.n:
        raise InvalidSpec(f"spec has {len(spec)} entries for a graph on {g.n} vertices")
    have = Counter(g.edges)
    want = Counter((min(u, v), max(u, v)) for u, v in edges)
    for e, c in want.items():
        if c > have.get(e, 0):
            raise GraphError(f"edge {e[0]}-{e[1]} used {c} times but G has {have.get(e, 0)} copies")
    deg = [0] * g.n
    for (u, v), c in want.items():
        deg[u] += c
        deg[v] += c
    out = []
    for v in range(g.n):
        lo, hi, d = spec.g[v], spec.f[v], deg[v]
        if d < lo:
            out.append(f"vertex {v}: degree {d} below g={lo}")
        if d > hi:
            out.append(f"vertex {v}: degree {d} above f={hi}")
        if (d - hi) % 2:
            out.append(f"vertex {v}: degree {d} has the wrong parity (f={hi})")
    return out


def brute_force_factor(g: Graph, spec: DegreeSpec, cap: int = BRUTE_FORCE_EDGE_CAP) -> ParityFactor | None:
    """First valid factor over edge subsets by size, then lexicographically (test oracle)."""
    if g.m > cap:
        raise ValueError(f"brute-force factor search capped at {cap} edges, graph has {g.m}")
    for k in range(g.m + 1):
        for subset in combinations(range(g.m), k):
            deg = [0] * g.n
            for i in subset:
                u, v = g.edges[i]
                deg[u] += 1
                deg[v] += 1
            if all(lo <= d <= hi and (d - hi) % 2 == 0 for d, lo, hi in zip(deg, spec.g, spec.f)):
                return _factor(g, subset)
    return None
