import pytest
from hypothesis import given

from pfk.criteria import DegreeSpec
from pfk.factor import build_gadget
from pfk.generators import complete, cycle, enumerate_small_graphs, star
from pfk.graph import Graph
from pfk.matching import brute_force_matching, has_perfect_matching, is_matching, max_matching

from strategies import multigraphs


def augmenting_path_exists(g, matching):
    """Exhaustive DFS over simple alternating paths between two exposed vertices."""
    mate = {}
    for u, v in matching:
        mate[u], mate[v] = v, u
    adj = {v: set() for v in range(g.n)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)

    def extend(v, visited):
        # at v having arrived over a matched edge (or v is the exposed start)
        for w in adj[v]:
            if w in visited or mate.get(v) == w:
                continue
            if w not in mate:
                return True
            x = mate[w]
            if x not in visited and extend(x, visited | {w, x}):
                return True
        return False

    return any(extend(s, {s}) for s in range(g.n) if s not in mate)


def test_examples(pet):
    assert len(max_matching(complete(4))) == 2
    assert len(max_matching(cycle(5))) == 2
    assert brute_force_matching(pet) == 5
    m = max_matching(pet)
    assert len(m) == 5 and is_matching(pet, m)


def test_perfect_examples():
    assert has_perfect_matching(complete(2))
    assert not has_perfect_matching(star(3))
    assert has_perfect_matching(build_gadget(complete(4), DegreeSpec.constant(4, 2)).h)


def test_brute_force_examples():
    assert brute_force_matching(cycle(6)) == 3
    assert brute_force_matching(cycle(5)) == 2
    k4_minus = Graph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3)))
    assert brute_force_matching(k4_minus) == 2
    with pytest.raises(ValueError):
        brute_force_matching(complete(8))


def test_parallel_edges_collapsed():
    g = Graph(3, ((0, 1), (0, 1), (1, 2)))
    assert max_matching(g) == [(0, 1)]


def test_deterministic(pet):
    assert max_matching(pet) == max_matching(pet)


def test_exhaustive_small():
    for n in range(1, 7):
        for g in enumerate_small_graphs(n):
            m = max_matching(g)
            assert is_matching(g, m)
            assert len(m) == brute_force_matching(g)


@given(multigraphs(max_n=10, max_m=20))
def test_random_matches_oracle(g):
    m = max_matching(g)
    assert is_matching(g, m)
    assert len(m) == brute_force_matching(g)
    assert not augmenting_path_exists(g, m)
