"""Existence criteria for parity factors evaluated by exhaustive enumeration.

Two evaluation routes live here. ``tau``/``eta``/``theorem4_delta`` work on
vertex sets through :class:`~pfk.graph.Graph` queries and are used to build and
re-check certificates. The enumerators (``lovasz_exists``,
``min_parity_exists``) run on bitmasks for speed and never produce a
certificate without passing it back through the set route.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

from .graph import Component, Graph, GraphError

DEFAULT_LOVASZ_CAP = 16
DEFAULT_DELTA_CAP = 20


class InvalidSpec(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


def lovasz_cap() -> int:
    return int(os.environ.get("PFK_MAX_N", DEFAULT_LOVASZ_CAP))


def delta_cap() -> int:
    return int(os.environ.get("PFK_MAX_N", DEFAULT_DELTA_CAP))


@dataclass(frozen=True)
class DegreeSpec:
    g: tuple[int, ...]
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "g", tuple(int(x) for x in self.g))
        object.__setattr__(self, "f", tuple(int(x) for x in self.f))
        if len(self.g) != len(self.f):
            raise InvalidSpec(f"g has {len(self.g)} entries but f has {len(self.f)}")

    @classmethod
    def constant(cls, n: int, g: int, f: int | None = None) -> DegreeSpec:
        return cls((g,) * n, ((g if f is None else f),) * n)

    def __len__(self) -> int:
        return len(self.g)

    def violations(self) -> list[str]:
        out = []
        for v, (lo, hi) in enumerate(zip(self.g, self.f)):
            if lo < 0:
                out.append(f"vertex {v}: g={lo} is negative")
            if lo > hi:
                out.append(f"vertex {v}: g={lo} exceeds f={hi}")
            if (lo - hi) % 2:
                out.append(f"vertex {v}: g={lo} and f={hi} differ in parity")
        return out


@dataclass(frozen=True)
class DeficiencyCertificate:
    S: frozenset[int]
    T: frozenset[int]
    value: int
    odd_components: tuple[Component, ...] = ()

    def as_dict(self) -> dict:
        return {
            "S": sorted(self.S),
            "T": sorted(self.T),
            "value": self.value,
            "odd_components": [c.sorted() for c in self.odd_components],
        }


@dataclass(frozen=True)
class ExistenceVerdict:
    exists: bool
    certificate: DeficiencyCertificate | None = None
    # False when existence was decided exactly but the certificate came from a
    # restricted search and need not be a global maximizer.
    certificate_exact: bool = field(default=True, compare=False)

    def __post_init__(self) -> None:
        if self.certificate is not None:
            assert not self.exists and self.certificate.value > 0


def validate_spec(g: Graph, spec: DegreeSpec) -> list[str]:
    """Every vertex violating ``0 <= g <= f`` or ``g = f (mod 2)``; empty means ok."""
    if len(spec) != g.n:
        raise InvalidSpec(f"spec has {len(spec)} entries for a graph on {g.n} vertices")
    return spec.violations()


def _require_valid(g: Graph, spec: DegreeSpec) -> None:
    bad = validate_spec(g, spec)
    if bad:
        raise InvalidSpec("; ".join(bad))


def _check_disjoint(s: frozenset[int], t: frozenset[int]) -> None:
    if s & t:
        raise GraphError(f"S and T overlap on {sorted(s & t)}")


def odd_components(
    g: Graph, S: Iterable[int], T: Iterable[int], weight: Sequence[int]
) -> list[Component]:
    """Components C of G-(S u T) with ``e_G(C, T) + weight(C)`` odd."""
    S, T = frozenset(S), frozenset(T)
    _check_disjoint(S, T)
    comps = g.components_after_removal(S | T, t=T)
    return [c for c in comps if (c.edges_to_t + sum(weight[v] for v in c.vertices)) % 2]


def tau(g: Graph, S: Iterable[int], T: Iterable[int], spec: DegreeSpec, rule: str = "f") -> int:
    if rule not in ("f", "g"):
        raise ValueError(f"rule must be 'f' or 'g', got {rule!r}")
    return len(odd_components(g, S, T, spec.f if rule == "f" else spec.g))


def _degree_outside(g: Graph, x: int, removed: frozenset[int]) -> int:
    return sum(1 for w in g.adjacency[x] if w not in removed)


def eta(g: Graph, S: Iterable[int], T: Iterable[int], spec: DegreeSpec) -> int:
    """g(T) - sum_{x in T} d_{G-S}(x) - f(S) + tau(S, T)."""
    _require_valid(g, spec)
    S, T = frozenset(S), frozenset(T)
    return (
        sum(spec.g[x] for x in T)
        - sum(_degree_outside(g, x, S) for x in T)
        - sum(spec.f[v] for v in S)
        + tau(g, S, T, spec, rule="f")
    )


def theorem4_delta(g: Graph, T: Iterable[int], gvec: Sequence[int]) -> int:
    """g(T) - sum_{x in T} d_G(x) + tau(T) with the g-parity rule."""
    T = frozenset(T)
    odd = odd_components(g, (), T, gvec)
    return sum(gvec[x] for x in T) - sum(g.degrees[x] for x in T) + len(odd)


def corollary_tau(g: Graph, T: Iterable[int], m: int, mode: str) -> int:
    """tau(T) with the rule each corollary states for constant g = m.

    even: ``e_G(C, T)`` odd.  odd: ``e_G(C, T) + |C|`` odd.
    """
    T = frozenset(T)
    comps = g.components_after_removal(T, t=T)
    if mode == "even":
        return sum(1 for c in comps if c.edges_to_t % 2)
    if mode == "odd":
        return sum(1 for c in comps if (c.edges_to_t + len(c)) % 2)
    raise ValueError(f"mode must be 'even' or 'odd', got {mode!r}")


def eta_certificate(g: Graph, S: Iterable[int], T: Iterable[int], spec: DegreeSpec) -> DeficiencyCertificate:
    S, T = frozenset(S), frozenset(T)
    odd = odd_components(g, S, T, spec.f)
    assert len(odd) == len(odd_components(g, S, T, spec.g)), "tau rules disagree on a valid spec"
    return DeficiencyCertificate(S, T, eta(g, S, T, spec), tuple(odd))


def delta_certificate(g: Graph, T: Iterable[int], gvec: Sequence[int]) -> DeficiencyCertificate:
    T = frozenset(T)
    odd = odd_components(g, (), T, gvec)
    return DeficiencyCertificate(frozenset(), T, theorem4_delta(g, T, gvec), tuple(odd))


# -- bitmask route -----------------------------------------------------------


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vs: Iterable[int]) -> int:
    out = 0
    for v in vs:
        out |= 1 << v
    return out


def set_of(mask: int) -> frozenset[int]:
    return frozenset(_bits(mask))


class BitGraph:
    """Adjacency bitmasks for fast repeated component/parity queries."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.deg = g.degrees
        self.adj = [0] * g.n
        self.odd_adj = [0] * g.n
        self.mult: list[dict[int, int]] = [{} for _ in range(g.n)]
        for (u, v), c in g.multiplicity.items():
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
            self.mult[u][v] = c
            self.mult[v][u] = c
            if c % 2:
                self.odd_adj[u] |= 1 << v
                self.odd_adj[v] |= 1 << u

    def components(self, avail: int) -> Iterator[int]:
        adj = self.adj
        while avail:
            comp = frontier = avail & -avail
            while frontier:
                nb = 0
                for v in _bits(frontier):
                    nb |= adj[v]
                frontier = nb & avail & ~comp
                comp |= frontier
            avail &= ~comp
            yield comp

    def parity_to(self, T: int) -> int:
        """Mask of vertices with an odd number of edges into ``T``."""
        out = 0
        for v in range(self.n):
            if (self.odd_adj[v] & T).bit_count() & 1:
                out |= 1 << v
        return out

    def count_odd(self, avail: int, parity: int) -> int:
        return sum(1 for c in self.components(avail) if (c & parity).bit_count() & 1)

    def edges_into(self, T: int, S: int) -> int:
        total = 0
        for x in _bits(T):
            row = self.mult[x]
            for y in _bits(self.adj[x] & S):
                total += row[y]
        return total


def _submasks_ascending(mask: int) -> Iterator[int]:
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = ((sub | ~mask) + 1) & mask


def max_eta(g: Graph, spec: DegreeSpec, cap: int | None = None) -> tuple[int, int, int]:
    """Maximum eta over disjoint (S, T) as ``(value, S_mask, T_mask)``.

    Ties go to the smallest ``(S_mask, T_mask)``.
    """
    _require_valid(g, spec)
    cap = lovasz_cap() if cap is None else cap
    if g.n > cap:
        raise CapExceeded(f"3^n pair enumeration capped at n <= {cap}, graph has n = {g.n}")
    bg = BitGraph(g)
    fodd = mask_of(v for v in range(g.n) if spec.f[v] % 2)
    best = None
    for S in range(bg.full + 1):
        f_S = sum(spec.f[v] for v in _bits(S))
        rest = bg.full & ~S
        for T in _submasks_ascending(rest):
            base = sum(spec.g[x] - bg.deg[x] for x in _bits(T)) + bg.edges_into(T, S) - f_S
            value = base + bg.count_odd(rest & ~T, bg.parity_to(T) ^ fodd)
            if best is None or value > best[0]:
                best = (value, S, T)
    assert best is not None
    return best


def max_delta(
    g: Graph, gvec: Sequence[int], cap: int | None = None, universe: int | None = None
) -> tuple[int, int]:
    """Maximum of theorem4_delta over T as ``(value, T_mask)``; ties to smallest mask.

    ``universe`` restricts T to subsets of that mask; the cap then applies to
    its size rather than to n.
    """
    cap = delta_cap() if cap is None else cap
    if len(gvec) != g.n:
        raise InvalidSpec(f"g has {len(gvec)} entries for a graph on {g.n} vertices")
    bg = BitGraph(g)
    universe = bg.full if universe is None else universe
    size = universe.bit_count()
    if size > cap:
        raise CapExceeded(f"2^n subset enumeration capped at n <= {cap}, got {size}")
    godd = mask_of(v for v in range(g.n) if gvec[v] % 2)
    best = None
    for T in _submasks_ascending(universe):
        value = sum(gvec[x] - bg.deg[x] for x in _bits(T))
        value += bg.count_odd(bg.full & ~T, bg.parity_to(T) ^ godd)
        if best is None or value > best[0]:
            best = (value, T)
    assert best is not None
    return best


def lovasz_exists(g: Graph, spec: DegreeSpec, cap: int | None = None) -> ExistenceVerdict:
    """(g,f)-parity factor exists iff eta(S,T) <= 0 for every disjoint S, T."""
    value, S, T = max_eta(g, spec, cap)
    if value <= 0:
        return ExistenceVerdict(True)
    cert = eta_certificate(g, set_of(S), set_of(T), spec)
    assert cert.value == value
    return ExistenceVerdict(False, cert)


def min_parity_exists(g: Graph, gvec: Sequence[int], cap: int | None = None) -> ExistenceVerdict:
    """A factor with d_F >= g and d_F = g (mod 2) exists iff delta(T) <= 0 for all T."""
    value, T = max_delta(g, gvec, cap)
    if value <= 0:
        return ExistenceVerdict(True)
    cert = delta_certificate(g, set_of(T), gvec)
    assert cert.value == value
    return ExistenceVerdict(False, cert)


def corollary_mode(g: Graph, m: int, mode: str, cap: int | None = None) -> ExistenceVerdict:
    if m <= 0:
        raise InvalidSpec(f"m must be positive, got {m}")
    if mode == "even" and m % 2:
        raise InvalidSpec(f"even mode needs an even m, got {m}")
    if mode == "odd" and m % 2 == 0:
        raise InvalidSpec(f"odd mode needs an odd m, got {m}")
    if mode not in ("even", "odd"):
        raise ValueError(f"mode must be 'even' or 'odd', got {mode!r}")
    return min_parity_exists(g, (m,) * g.n, cap)


def candidate_pool(g: Graph, gvec: Sequence[int], limit: int) -> int:
    """Vertices that cannot reach their lower bound, then their neighbours.

    Ranked by shortfall ``g(v) - d(v)``; truncated to ``limit`` vertices.
    """
    short = sorted((v for v in range(g.n) if g.degrees[v] < gvec[v]),
                   key=lambda v: (g.degrees[v] - gvec[v], v))
    pool = list(short)
    if len(pool) < limit:
        seen = set(pool)
        for v in short:
            for w in g.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    pool.append(w)
    return mask_of(pool[:limit])


def search_delta_certificate(
    g: Graph, gvec: Sequence[int], limit: int | None = None
) -> DeficiencyCertificate | None:
    """Best delta over subsets of the shortfall pool; None if nothing positive.

    Restricted search for graphs beyond the full-enumeration cap: a returned
    certificate is sound but need not be the global maximizer.
    """
    limit = delta_cap() if limit is None else limit
    pool = candidate_pool(g, gvec, limit)
    value, T = max_delta(g, gvec, cap=limit, universe=pool)
    if value <= 0:
        return None
    return delta_certificate(g, set_of(T), gvec)
