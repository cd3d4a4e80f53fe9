"""Exit criteria for the package, one test per criterion, exact tolerances."""

import json
import random

import pytest

from pfk.cli import main
from pfk.connectivity import edge_connectivity, has_bridge
from pfk.criteria import DegreeSpec, candidate_pool, eta, lovasz_exists, max_delta, min_parity_exists, set_of, theorem4_delta
from pfk.factor import brute_force_factor, build_gadget, cap_f, find_min_parity_factor, find_parity_factor, verify_factor
from pfk.generators import enumerate_small_graphs, petersen, random_k_edge_connected, remark1_family
from pfk.graph import Graph
from pfk.harness import CampaignConfig, run_campaign
from pfk.matching import brute_force_matching, has_perfect_matching, is_matching, max_matching
from pfk.selftest import random_spec


def random_graph(rng, n):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, tuple(p for p in pairs if rng.random() < 0.5))


def test_c1_oracle_equivalence(criterion):
    rng = random.Random(1)
    graphs = disagreements = 0
    for n in range(1, 6):
        for g in enumerate_small_graphs(n):
            graphs += 1
            for _ in range(20):
                spec = random_spec(g, rng)
                a = lovasz_exists(g, spec).exists
                b = brute_force_factor(g, spec) is not None
                c = has_perfect_matching(build_gadget(g, spec).h)
                disagreements += not (a == b == c)
    criterion("C1 oracle equivalence n<=5 x 20 specs", disagreements == 0,
              f"{graphs} graphs, {20 * graphs} specs, {disagreements} disagreements")


def test_c2_unbounded_equivalence(criterion):
    rng = random.Random(2)
    disagreements = 0
    for _ in range(2000):
        g = random_graph(rng, rng.randint(1, 6))
        lower = [rng.randint(0, 4) for _ in range(g.n)]
        spec = cap_f(g, lower)
        found = spec is not None and find_parity_factor(g, spec) is not None
        disagreements += found != min_parity_exists(g, lower).exists
    criterion("C2 unbounded-mode equivalence, 2000 graphs n<=6", disagreements == 0,
              f"{disagreements} disagreements")


def _cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize("m", [2, 4])
def test_c3_remark1(m, criterion, capsys, tmp_path):
    inst = remark1_family(m)
    g = inst.graph
    lam = edge_connectivity(g)[0]
    criterion.soft(f"C3 m={m}: lambda = delta_min = m+1", lam == g.min_degree == m + 1,
                   f"lambda={lam}, min degree={g.min_degree}")
    value = theorem4_delta(g, inst.hubs, [m + 2] * g.n)
    criterion.soft(f"C3 m={m}: delta(hubs) with g=m+2 equals 2(m+1)", value == 2 * (m + 1), f"value={value}")

    path = tmp_path / f"rem{m}.txt"
    path.write_text(g.to_text())
    code, out = _cli(capsys, "check", str(path), "--even", str(m + 2), "--json")
    cert = json.loads(out)["certificate"]
    criterion.soft(f"C3 m={m}: check --even {m + 2} exits 4", code == 4, f"exit={code}")
    criterion.soft(f"C3 m={m}: check certificate is the hub set",
                   cert is not None and set(cert["T"]) == set(inst.hubs),
                   f"certificate T={cert and cert['T']}, value={cert and cert['value']}")
    code, out = _cli(capsys, "find", str(path), "--even", str(m), "--json")
    data = json.loads(out)
    ok = code == 0 and verify_factor(g, data["edges"], cap_f(g, [m] * g.n)) == []
    criterion.soft(f"C3 m={m}: find --even {m} succeeds", ok, f"exit={code}, {len(data['edges'])} edges")

    if m == 4:
        pool = candidate_pool(g, [6] * g.n, 20)
        best, t = max_delta(g, [6] * g.n, universe=pool)
        criterion.soft("C3 m=4: restricted enumeration around the hubs finds delta > 0",
                       best > 0 and inst.hubs <= set_of(pool),
                       f"|pool|={pool.bit_count()}, best delta={best} at {sorted(set_of(t))}")
    criterion.finish()


def _campaign(cfg):
    s = run_campaign(cfg)
    proof = sum(len(r.proof_step_violations) for r in s.reports)
    return s, proof


def test_c4_even_campaign(criterion):
    for m, count in ((2, 200), (4, 50)):
        s, _ = _campaign(CampaignConfig(mode="even", m_values=(m,), count=count, n_min=m + 2, n_max=12, seed=40 + m))
        criterion(f"C4 even m={m}: {count} instances, zero defects",
                  len(s.reports) == count and s.defects == 0 and s.passed == count,
                  f"passed={s.passed}, defects={s.defects}")


def test_c5_odd_campaign(criterion):
    for m, count in ((1, 200), (3, 50)):
        s, _ = _campaign(CampaignConfig(mode="odd", m_values=(m,), count=count, n_min=m + 3, n_max=12, seed=50 + m))
        criterion(f"C5 odd m={m}: {count} even-order instances, zero defects",
                  len(s.reports) == count and s.defects == 0 and s.passed == count,
                  f"passed={s.passed}, defects={s.defects}")


def test_c6_proof_step_inequalities(criterion):
    total = 0
    for mode, m, count in (("even", 2, 200), ("even", 4, 50), ("odd", 1, 200), ("odd", 3, 50)):
        s, proof = _campaign(CampaignConfig(mode=mode, m_values=(m,), count=count, n_min=m + 3, n_max=12, seed=60 + m))
        total += proof
        assert all(r.hypotheses_hold for r in s.reports)
    criterion("C6 Case-1/Case-2 (even) and max-bound (odd) on every campaign T, exhaustive n<=12",
              total == 0, f"{total} violations")


def _minimality_triples(g, rng):
    delta_max = g.max_degree
    f = [delta_max + 1 + rng.randint(0, 1) for _ in range(g.n)]
    lo = [rng.choice(range(x % 2, x + 1, 2)) for x in f]
    spec = DegreeSpec(tuple(lo), tuple(f))
    for labels in range(3 ** g.n):
        S, T, x = set(), set(), labels
        for v in range(g.n):
            x, r = divmod(x, 3)
            (S if r == 1 else T if r == 2 else set()).add(v)
        for v in S:
            yield spec, S, T, v


def test_c6_minimality_inequality(criterion):
    """eta(S-v, T) - eta(S, T) >= f(v) + 2 e(v, T) - d(v) - 1, f >= max degree + 1."""
    rng = random.Random(6)
    graphs = [g for n in range(1, 5) for g in enumerate_small_graphs(n)]
    graphs += [random_graph(rng, rng.randint(5, 8)) for _ in range(12)]
    checked = violations = 0
    example = None
    for g in graphs:
        for spec, S, T, v in _minimality_triples(g, rng):
            checked += 1
            gap = eta(g, S - {v}, T, spec) - eta(g, S, T, spec)
            e_vt = sum(1 for w in g.adjacency[v] if w in T)
            bound = spec.f[v] + 2 * e_vt - g.degrees[v] - 1
            if not gap >= bound >= 0:
                violations += 1
                example = example or (g.edges, sorted(S), sorted(T), v, gap, bound)
    criterion("C6 minimality inequality on exhaustive (S,T,v), n<=4 all graphs + 12 random n<=8",
              violations == 0, f"{violations}/{checked} violations; first: edges={example and example[0]} "
              f"S={example and example[1]} T={example and example[2]} v={example and example[3]} "
              f"gap={example and example[4]} bound={example and example[5]}")


def test_c7_matching_engine(criterion):
    rng = random.Random(7)
    disagreements = graphs = 0
    for n in range(1, 7):
        for g in enumerate_small_graphs(n):
            graphs += 1
            m = max_matching(g)
            disagreements += not (is_matching(g, m) and len(m) == brute_force_matching(g))
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 10))
        while g.m > 24:
            g = Graph(g.n, g.edges[: rng.randint(0, 24)])
        graphs += 1
        m = max_matching(g)
        disagreements += not (is_matching(g, m) and len(m) == brute_force_matching(g))
    pm = max_matching(petersen())
    criterion("C7 matching = brute force (all n<=6, 500 random n<=10)", disagreements == 0,
              f"{graphs} graphs, {disagreements} disagreements")
    criterion("C7 Petersen perfect matching", len(pm) == 5 and is_matching(petersen(), pm), f"size={len(pm)}")


def test_c8_regression_fixtures(criterion):
    p = petersen()
    f = find_parity_factor(p, DegreeSpec.constant(10, 2))
    criterion("C8 Petersen 2-factor", f is not None and f.degrees == (2,) * 10 and len(f.edges) == 10)
    rng = random.Random(8)
    ok = 0
    for i in range(20):
        g = random_k_edge_connected(rng.randint(6, 14), 2, rng.getrandbits(32), min_degree=3)
        assert not has_bridge(g) and g.min_degree >= 3
        fac = find_min_parity_factor(g, [2] * g.n)
        ok += fac is not None and all(d >= 2 and d % 2 == 0 for d in fac.degrees)
    criterion("C8 20 bridgeless graphs with min degree >= 3 have even factors", ok == 20, f"{ok}/20")
