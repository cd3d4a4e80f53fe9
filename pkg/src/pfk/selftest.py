"""Small-n oracle equivalence sweep behind ``pfk selftest``."""

from __future__ import annotations

import random

from .criteria import DegreeSpec, lovasz_exists, min_parity_exists
from .factor import brute_force_factor, build_gadget, find_min_parity_factor
from .generators import enumerate_small_graphs
from .graph import Graph
from .matching import brute_force_matching, has_perfect_matching, matching_size


def random_spec(g: Graph, rng: random.Random) -> DegreeSpec:
    """Valid (g, f) with f <= degree; g and f share parity."""
    lo, hi = [], []
    for d in g.degrees:
        f = rng.randint(0, d)
        lo.append(rng.choice(range(f % 2, f + 1, 2)))
        hi.append(f)
    return DegreeSpec(tuple(lo), tuple(hi))


def run_selftest(max_n: int = 4, specs_per_graph: int = 5, seed: int = 0) -> list[str]:
    rng = random.Random(seed)
    bad = []
    for n in range(1, max_n + 1):
        for g in enumerate_small_graphs(n):
            if matching_size(g) != brute_force_matching(g):
                bad.append(f"matching size mismatch on {g.edges} (n={n})")
            for _ in range(specs_per_graph):
                spec = random_spec(g, rng)
                a = lovasz_exists(g, spec).exists
                b = brute_force_factor(g, spec) is not None
                c = has_perfect_matching(build_gadget(g, spec).h)
                if not a == b == c:
                    bad.append(f"n={n} edges={g.edges} spec={spec}: lovasz={a} brute={b} gadget={c}")
                lower = [rng.randint(0, 3) for _ in range(n)]
                d = min_parity_exists(g, lower).exists
                e = find_min_parity_factor(g, lower) is not None
                if d != e:
                    bad.append(f"n={n} edges={g.edges} g={lower}: delta={d} factor={e}")
    return bad
